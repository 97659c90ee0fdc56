//! The `mstab` command line: workspaces of named contexts, modules and maps,
//! and one verb per operation.
//!
//! Exit codes: 0 on success, 2 when the mathematical answer is negative
//! (not relatively projective, no isomorphism found, audit failures, ...),
//! 1 on errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::adjoint::{adjunction_check, AdjointContext, AdjointTriple, ContextKind};
use crate::algebra::{is_frobenius_algebra, AlgebraData};
use crate::builtin;
use crate::error::{Error, Result};
use crate::exact::axiom_audit;
use crate::json::{AlgebraSpec, ContextSpec, EntitySpec, MapSpec, ModuleSpec};
use crate::module::{ModuleMap, ModuleRep};
use crate::stable::{
    happel_triangle, is_relatively_projective, is_stably_isomorphic, relative_cosyzygy, relative_syzygy,
    schanuel_compare, stable_hom, StableHomSummary, StableIsoVerdict, DEFAULT_BUDGET,
};

#[derive(Debug, Parser)]
#[command(name = "mstab", version, about = "Relative stable categories of modules over prime fields")]
pub struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Enumeration budget for stable isomorphism searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report (for `define`: the workspace) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Workspace file produced by `define`.
    #[arg(long, short = 'w', global = true)]
    pub workspace: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate a context and entity files; with --out, save them as a workspace.
    Define { context: String, entities: Vec<PathBuf> },
    /// Higman's criterion: does the counit split?
    Relproj { context: String, module: String },
    /// Stable Hom between two modules.
    Stablehom { context: String, source: String, target: String },
    /// Kernel of the counit.
    Syzygy { context: String, module: String },
    /// Cokernel of the unit.
    Cosyzygy { context: String, module: String },
    /// Triangle on a map (`id:X`, `zero:X:Y`, `unit:X`, `counit:X` or a workspace map).
    Triangle { context: String, map: String },
    /// Compare the cokernels of two embeddings into relatively projective modules.
    Schanuel { context: String, first: String, second: String },
    /// Search for a stable isomorphism.
    #[command(name = "stable-iso")]
    StableIso { context: String, source: String, target: String },
    /// Sampled audit of the exact-category axioms.
    Audit {
        context: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Sampled triangle identities, naturality and reciprocity checks.
    #[command(name = "adjunction-check")]
    AdjunctionCheck {
        context: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Search for a Frobenius form (algebra JSON file or built-in name such as `upper2:p2`).
    #[command(name = "frobenius-algebra")]
    FrobeniusAlgebra { algebra: String },
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
}

/// Serialized workspace: custom contexts plus modules and maps by name.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct WorkspaceFile {
    #[serde(default)]
    pub contexts: BTreeMap<String, ContextSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapSpec>,
}

/// Validated named contexts, modules and maps. Contexts not defined here
/// resolve to built-ins (`C3:1:p3`, ...).
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    file: WorkspaceFile,
    contexts: BTreeMap<String, AdjointContext>,
    modules: BTreeMap<String, (String, ModuleRep)>,
    maps: BTreeMap<String, (String, ModuleMap)>,
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Self> {
        let text = read(path)?;
        let file: WorkspaceFile = parse(&text, path)?;
        Self::from_file(file)
    }

    pub fn from_file(file: WorkspaceFile) -> Result<Self> {
        let mut ws = Workspace::default();
        for (name, spec) in &file.contexts {
            ws.contexts.insert(name.clone(), spec.build(name)?);
        }
        for (name, spec) in &file.modules {
            ws.add_module(name, spec)?;
        }
        for (name, spec) in &file.maps {
            ws.add_map(name, spec)?;
        }
        ws.file = file;
        Ok(ws)
    }

    pub fn file(&self) -> &WorkspaceFile {
        &self.file
    }

    pub fn context(&self, name: &str) -> Result<AdjointContext> {
        match self.contexts.get(name) {
            Some(c) => Ok(c.clone()),
            None => builtin::context(name),
        }
    }

    fn add_module(&mut self, name: &str, spec: &ModuleSpec) -> Result<()> {
        let ctx_name = spec
            .context
            .clone()
            .ok_or_else(|| Error::Precondition(format!("module {name:?} names no context")))?;
        let ctx = self.context(&ctx_name)?;
        let m = spec.build(&ctx)?;
        self.modules.insert(name.to_string(), (ctx_name, m));
        Ok(())
    }

    fn add_map(&mut self, name: &str, spec: &MapSpec) -> Result<()> {
        let ctx_name = spec
            .context
            .clone()
            .ok_or_else(|| Error::Precondition(format!("map {name:?} names no context")))?;
        let ctx = self.context(&ctx_name)?;
        let source = self.module(&ctx, &spec.source)?;
        let target = self.module(&ctx, &spec.target)?;
        let m = spec.build(&source, &target)?;
        self.maps.insert(name.to_string(), (ctx_name, m));
        Ok(())
    }

    /// Workspace module, else `syz:X`, `cosyz:X`, else a built-in name.
    pub fn module(&self, ctx: &AdjointContext, name: &str) -> Result<ModuleRep> {
        if let Some((c, m)) = self.modules.get(name) {
            if c != ctx.name() {
                return Err(Error::ContextMismatch(format!("module {name:?} belongs to context {c:?}")));
            }
            return Ok(m.clone());
        }
        if let Some(inner) = name.strip_prefix("syz:") {
            return Ok(relative_syzygy(ctx, &self.module(ctx, inner)?)?.module);
        }
        if let Some(inner) = name.strip_prefix("cosyz:") {
            return Ok(relative_cosyzygy(ctx, &self.module(ctx, inner)?)?.module);
        }
        builtin::module(ctx, name)
    }

    /// Workspace map, else `id:X`, `zero:X:Y`, `unit:X`, `counit:X`.
    pub fn map(&self, ctx: &AdjointContext, name: &str) -> Result<ModuleMap> {
        if let Some((c, m)) = self.maps.get(name) {
            if c != ctx.name() {
                return Err(Error::ContextMismatch(format!("map {name:?} belongs to context {c:?}")));
            }
            return Ok(m.clone());
        }
        let (kind, rest) = name
            .split_once(':')
            .ok_or_else(|| Error::Precondition(format!("unknown map {name:?}")))?;
        match kind {
            "id" => Ok(ModuleMap::identity(&self.module(ctx, rest)?)),
            "unit" => ctx.unit(&self.module(ctx, rest)?),
            "counit" => ctx.counit(&self.module(ctx, rest)?),
            "zero" => {
                let (x, y) = split_pair(rest)?;
                Ok(ModuleMap::zero(&self.module(ctx, x)?, &self.module(ctx, y)?))
            }
            _ => Err(Error::Precondition(format!("unknown map {name:?}"))),
        }
    }
}

/// Splits `X:Y` where either side may itself contain a `prefix:` (as in
/// `zero:cosyz:J1:J2`): the split is at the last colon.
fn split_pair(s: &str) -> Result<(&str, &str)> {
    s.rsplit_once(':').ok_or_else(|| Error::Precondition(format!("expected two module names in {s:?}")))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, path: &Path) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Precondition(format!("cannot parse {}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn rows(m: &crate::field::FpMatrix) -> Value {
    json!(m.to_rows())
}

fn module_json(m: &ModuleRep) -> Value {
    let spec = ModuleSpec::from_module(m);
    json!({ "dim": spec.dim, "action": spec.action })
}

fn render(value: &Value, text: String, as_json: bool) -> String {
    if as_json {
        let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

/// Parses arguments and runs; errors map to exit code 1.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) if !matches!(cli.command, Command::Define { .. }) => fs::write(path, &outcome.text),
                _ => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ws = match &cli.workspace {
        Some(path) => Workspace::load(path)?,
        None => Workspace::default(),
    };
    let j = cli.json;
    match &cli.command {
        Command::Define { context, entities } => cmd_define(context, entities, cli.out.as_deref(), j),
        Command::Relproj { context, module } => {
            let ctx = ws.context(context)?;
            let x = ws.module(&ctx, module)?;
            let section = is_relatively_projective(&ctx, &x)?;
            let value = json!({
                "context": ctx.name(),
                "module": module,
                "relatively_projective": section.is_some(),
                "section": section.as_ref().map(|s| rows(s.matrix())),
            });
            let text = match &section {
                Some(_) => format!("{module} is relatively projective in {}\n", ctx.name()),
                None => format!("{module} is not relatively projective in {}\n", ctx.name()),
            };
            Ok(Outcome { code: if section.is_some() { 0 } else { 2 }, text: render(&value, text, j) })
        }
        Command::Stablehom { context, source, target } => {
            let ctx = ws.context(context)?;
            let x = ws.module(&ctx, source)?;
            let y = ws.module(&ctx, target)?;
            let sh = stable_hom(&ctx, &x, &y)?;
            let summary = StableHomSummary::from(&sh);
            let value = serde_json::to_value(&summary).expect("serializable");
            let text = format!(
                "dim Hom = {}, factoring through relatively projectives = {}, stable = {}\n",
                summary.dim_hom, summary.dim_factoring, summary.dim_stable
            );
            Ok(Outcome { code: 0, text: render(&value, text, j) })
        }
        Command::Syzygy { context, module } => {
            let ctx = ws.context(context)?;
            let syz = relative_syzygy(&ctx, &ws.module(&ctx, module)?)?;
            let mut value = module_json(&syz.module);
            value["map"] = rows(syz.inclusion.matrix());
            let text = format!("syzygy of {module}: dimension {}\n", syz.module.dim());
            Ok(Outcome { code: 0, text: render(&value, text, j) })
        }
        Command::Cosyzygy { context, module } => {
            let ctx = ws.context(context)?;
            let cos = relative_cosyzygy(&ctx, &ws.module(&ctx, module)?)?;
            let mut value = module_json(&cos.module);
            value["map"] = rows(cos.projection.matrix());
            let text = format!("cosyzygy of {module}: dimension {}\n", cos.module.dim());
            Ok(Outcome { code: 0, text: render(&value, text, j) })
        }
        Command::Triangle { context, map } => {
            let ctx = ws.context(context)?;
            let f = ws.map(&ctx, map)?;
            let t = happel_triangle(&ctx, &f)?;
            let failures = t.failures(&ctx)?;
            let value = json!({
                "cone": module_json(&t.cone),
                "shift": module_json(&t.shift.module),
                "g": rows(t.g.matrix()),
                "h": rows(t.h.matrix()),
                "failures": failures,
            });
            let mut text = format!("cone of dimension {}, shift of dimension {}\n", t.cone.dim(), t.shift.module.dim());
            for fail in &failures {
                text.push_str(&format!("composite {fail} does not factor through a relatively projective\n"));
            }
            Ok(Outcome { code: if failures.is_empty() { 0 } else { 2 }, text: render(&value, text, j) })
        }
        Command::Schanuel { context, first, second } => {
            let ctx = ws.context(context)?;
            let i1 = ws.map(&ctx, first)?;
            let i2 = ws.map(&ctx, second)?;
            let iso = schanuel_compare(&ctx, &i1, &i2, cli.seed)?;
            let value = json!({
                "found": iso.is_some(),
                "dim": iso.as_ref().map(|m| m.source().dim()),
                "iso": iso.as_ref().map(|m| rows(m.matrix())),
            });
            let text = match &iso {
                Some(m) => format!("isomorphism of {}-dimensional modules found\n", m.source().dim()),
                None => "no isomorphism found\n".to_string(),
            };
            Ok(Outcome { code: if iso.is_some() { 0 } else { 2 }, text: render(&value, text, j) })
        }
        Command::StableIso { context, source, target } => {
            let ctx = ws.context(context)?;
            let x = ws.module(&ctx, source)?;
            let y = ws.module(&ctx, target)?;
            let verdict = is_stably_isomorphic(&ctx, &x, &y, cli.seed, cli.budget)?;
            let value = match &verdict {
                StableIsoVerdict::Yes { f, g } => {
                    json!({ "verdict": verdict.label(), "f": rows(f.matrix()), "g": rows(g.matrix()) })
                }
                _ => json!({ "verdict": verdict.label() }),
            };
            let code = if matches!(verdict, StableIsoVerdict::Yes { .. }) { 0 } else { 2 };
            let text = format!("{source} vs {target}: {}\n", verdict.label());
            Ok(Outcome { code, text: render(&value, text, j) })
        }
        Command::Audit { context, samples } => {
            let ctx = ws.context(context)?;
            let report = axiom_audit(&ctx, *samples, cli.seed)?;
            let value = serde_json::to_value(&report).expect("serializable");
            let mut text = String::new();
            for a in &report.axioms {
                text.push_str(&format!("{:<6} checked {:>4}  failed {}", a.axiom, a.checked, a.failed));
                if !a.failure_seeds.is_empty() {
                    text.push_str(&format!("  seeds {:?}", a.failure_seeds));
                }
                text.push('\n');
            }
            let code = if report.total_failures() == 0 { 0 } else { 2 };
            Ok(Outcome { code, text: render(&value, text, j) })
        }
        Command::AdjunctionCheck { context, samples } => {
            let ctx = ws.context(context)?;
            let report = adjunction_check(&ctx, *samples, cli.seed)?;
            let value = serde_json::to_value(&report).expect("serializable");
            let text = format!(
                "triangle identities: {} checks, {} violations\nnaturality: {} maps, {} failures\nreciprocity: {} checks, {} failures\n",
                report.triangle.checked,
                report.triangle.violations.len(),
                report.naturality_checked,
                report.naturality_failures.len(),
                report.reciprocity_checked,
                report.reciprocity_failures.len()
            );
            Ok(Outcome { code: if report.is_clean() { 0 } else { 2 }, text: render(&value, text, j) })
        }
        Command::FrobeniusAlgebra { algebra } => {
            let alg = load_algebra(algebra)?;
            let form = is_frobenius_algebra(&alg, cli.seed)?;
            let value = json!({ "frobenius": form.is_some(), "functional": form });
            let text = match &form {
                Some(l) => format!("Frobenius form {l:?}\n"),
                None => "no nondegenerate form found\n".to_string(),
            };
            Ok(Outcome { code: if form.is_some() { 0 } else { 2 }, text: render(&value, text, j) })
        }
    }
}

fn load_algebra(arg: &str) -> Result<AlgebraData> {
    let path = Path::new(arg);
    if !path.exists() {
        return builtin::algebra(arg);
    }
    let text = read(path)?;
    let value: Value = parse(&text, path)?;
    let spec: AlgebraSpec = match value.get("algebra") {
        Some(inner) => serde_json::from_value(inner.clone()),
        None => serde_json::from_value(value),
    }
    .map_err(|e| Error::Precondition(format!("cannot parse {arg}: {e}")))?;
    spec.build()
}

/// Loads a context (file or built-in name) and entity files, each holding
/// one module/map object or a list of them.
pub fn cmd_define(context: &str, entities: &[PathBuf], out: Option<&Path>, as_json: bool) -> Result<Outcome> {
    let mut file = WorkspaceFile::default();
    let path = Path::new(context);
    let ctx_name = if path.exists() {
        let spec: ContextSpec = parse(&read(path)?, path)?;
        let name = spec.name.clone().unwrap_or_else(|| stem(path));
        file.contexts.insert(name.clone(), spec);
        name
    } else {
        builtin::context(context)?;
        context.to_string()
    };
    for entity_path in entities {
        let text = read(entity_path)?;
        let value: Value = parse(&text, entity_path)?;
        let items = match value {
            Value::Array(items) => items,
            other => vec![other],
        };
        let single = items.len() == 1;
        for (k, item) in items.into_iter().enumerate() {
            let spec: EntitySpec = serde_json::from_value(item)
                .map_err(|e| Error::Precondition(format!("cannot parse {}: {e}", entity_path.display())))?;
            let fallback = if single { stem(entity_path) } else { format!("{}{k}", stem(entity_path)) };
            match spec {
                EntitySpec::Module(mut m) => {
                    let name = m.name.take().unwrap_or(fallback);
                    m.context.get_or_insert_with(|| ctx_name.clone());
                    insert_unique(&mut file.modules, name, m, &file.maps)?;
                }
                EntitySpec::Map(mut m) => {
                    let name = m.name.take().unwrap_or(fallback);
                    m.context.get_or_insert_with(|| ctx_name.clone());
                    insert_unique(&mut file.maps, name, m, &file.modules)?;
                }
            }
        }
    }
    let ws = Workspace::from_file(file)?;

    let mut contexts = Vec::new();
    let mut text = String::new();
    let ctx = ws.context(&ctx_name)?;
    let mut entry = json!({ "name": ctx.name(), "p": ctx.prime().get(), "index": ctx.index() });
    match ctx.kind() {
        ContextKind::GroupInduction { group, subgroup } => {
            entry["group_order"] = json!(group.order());
            entry["subgroup_order"] = json!(subgroup.order());
            entry["elements"] = json!((0..group.order()).map(|g| group.label(g)).collect::<Vec<_>>());
            text.push_str(&format!(
                "context {}: |G| = {}, |H| = {}, p = {}\n",
                ctx.name(),
                group.order(),
                subgroup.order(),
                ctx.prime()
            ));
        }
        ContextKind::FreeModule { algebra, functional, .. } => {
            entry["algebra_dim"] = json!(algebra.dim());
            entry["frobenius_form"] = json!(functional);
            text.push_str(&format!(
                "context {}: algebra of dimension {}, Frobenius form {:?}\n",
                ctx.name(),
                algebra.dim(),
                functional
            ));
        }
    }
    contexts.push(entry);
    let modules: Vec<Value> = ws
        .modules
        .iter()
        .map(|(name, (c, m))| {
            text.push_str(&format!("module {name} ({c}): dimension {}\n", m.dim()));
            json!({ "name": name, "context": c, "dim": m.dim(), "side": format!("{:?}", m.side()) })
        })
        .collect();
    let maps: Vec<Value> = ws
        .maps
        .iter()
        .map(|(name, (c, m))| {
            text.push_str(&format!("map {name} ({c}): {} -> {}\n", m.source().dim(), m.target().dim()));
            json!({ "name": name, "context": c, "rank": m.rank() })
        })
        .collect();
    if let Some(out) = out {
        let mut saved = serde_json::to_string_pretty(ws.file()).expect("serializable");
        saved.push('\n');
        fs::write(out, saved).map_err(|e| Error::Precondition(format!("cannot write {}: {e}", out.display())))?;
    }
    let value = json!({ "contexts": contexts, "modules": modules, "maps": maps });
    Ok(Outcome { code: 0, text: render(&value, text, as_json) })
}

fn insert_unique<T, U>(map: &mut BTreeMap<String, T>, name: String, item: T, other: &BTreeMap<String, U>) -> Result<()> {
    if map.contains_key(&name) || other.contains_key(&name) {
        return Err(Error::Precondition(format!("duplicate name {name:?}")));
    }
    map.insert(name, item);
    Ok(())
}

//! JSON file formats.
//!
//! * group: `{"generators": [[[1, 2]], [[1, 2, 3]]]}`, one list of 1-based
//!   cycles per generator;
//! * subgroup: `{"elements": [...]}` or `{"generators": [...]}`, entries are
//!   element indices of the group or cycle lists;
//! * algebra: `{"p": 2, "dim": 2, "structure": [[[..]]], "unit": [..]}`;
//! * module: `{"p": 3, "dim": 2, "action": {"0": [[..], ..]}}`, keyed by
//!   generator index (or algebra basis index), matrices row-major.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::adjoint::{AdjointContext, AdjointTriple};
use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::field::{FpMatrix, Prime};
use crate::group::{permutation_from_cycles, GroupData, SubgroupData};
use crate::module::{ModuleMap, ModuleRep, Side};

pub type MatrixRows = Vec<Vec<i64>>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupSpec {
    pub generators: Vec<Vec<Vec<usize>>>,
}

/// A group element by index or as a permutation in cycle notation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Cycles(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupSpec {
    Elements(Vec<ElementRef>),
    Generators(Vec<ElementRef>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub p: u64,
    pub dim: usize,
    pub structure: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
}

/// Either a group pair or an algebra.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ContextSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    /// Seed for the Frobenius form search of algebra contexts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub enum SideSpec {
    #[default]
    A,
    B,
}

impl From<SideSpec> for Side {
    fn from(s: SideSpec) -> Side {
        match s {
            SideSpec::A => Side::A,
            SideSpec::B => Side::B,
        }
    }
}

impl From<Side> for SideSpec {
    fn from(s: Side) -> SideSpec {
        match s {
            Side::A => SideSpec::A,
            Side::B => SideSpec::B,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    #[serde(default)]
    pub side: SideSpec,
    pub p: u64,
    pub dim: usize,
    #[serde(default)]
    pub action: BTreeMap<String, MatrixRows>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MapSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    pub source: String,
    pub target: String,
    pub matrix: MatrixRows,
}

/// Anything an entity file may hold.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum EntitySpec {
    Map(MapSpec),
    Module(ModuleSpec),
}

pub fn matrix_from_rows(p: Prime, rows: usize, cols: usize, data: &MatrixRows) -> Result<FpMatrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("expected a {rows}x{cols} matrix")));
    }
    if rows == 0 || cols == 0 {
        return Ok(FpMatrix::zeros(p, rows, cols));
    }
    FpMatrix::from_rows(p, data)
}

pub fn matrix_to_rows(m: &FpMatrix) -> Vec<Vec<u32>> {
    m.to_rows()
}

fn resolve_element(group: &GroupData, e: &ElementRef) -> Result<usize> {
    match e {
        ElementRef::Index(i) if *i < group.order() => Ok(*i),
        ElementRef::Index(i) => Err(Error::InvalidGroup(format!("element index {i} out of range"))),
        ElementRef::Cycles(c) => {
            let perm = permutation_from_cycles(group.degree(), c)?;
            group.find(&perm).ok_or_else(|| Error::InvalidGroup(format!("{c:?} is not in the group")))
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<GroupData> {
        GroupData::from_cycles(&self.generators)
    }
}

impl SubgroupSpec {
    pub fn build(&self, group: &Arc<GroupData>) -> Result<SubgroupData> {
        let (list, must_be_closed) = match self {
            SubgroupSpec::Elements(e) => (e, true),
            SubgroupSpec::Generators(g) => (g, false),
        };
        let idx = list.iter().map(|e| resolve_element(group, e)).collect::<Result<Vec<_>>>()?;
        let sub = SubgroupData::closure(group.clone(), &idx)?;
        if must_be_closed {
            let mut sorted = idx.clone();
            sorted.push(0);
            sorted.sort_unstable();
            sorted.dedup();
            if sorted != sub.elements() {
                return Err(Error::InvalidGroup("listed elements are not closed under multiplication".into()));
            }
        }
        Ok(sub)
    }
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<AlgebraData> {
        if self.structure.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!("structure has {} rows, dim is {}", self.structure.len(), self.dim)));
        }
        AlgebraData::new(Prime::new(self.p)?, &self.structure, &self.unit)
    }

    pub fn from_algebra(a: &AlgebraData) -> Self {
        let d = a.dim();
        AlgebraSpec {
            p: u64::from(a.prime().get()),
            dim: d,
            structure: (0..d)
                .map(|i| (0..d).map(|j| (0..d).map(|k| i64::from(a.coeff(i, j, k))).collect()).collect())
                .collect(),
            unit: a.unit().iter().map(|&u| i64::from(u)).collect(),
        }
    }
}

impl ContextSpec {
    pub fn build(&self, fallback_name: &str) -> Result<AdjointContext> {
        let name = self.name.clone().unwrap_or_else(|| fallback_name.to_string());
        match (&self.group, &self.algebra) {
            (Some(g), None) => {
                let p = Prime::new(self.p.ok_or_else(|| Error::Precondition("group context needs \"p\"".into()))?)?;
                let group = Arc::new(g.build()?);
                let sub = match &self.subgroup {
                    Some(s) => s.build(&group)?,
                    None => SubgroupData::trivial(group.clone()),
                };
                Ok(AdjointContext::group_induction(group, Arc::new(sub), p)?.with_name(name))
            }
            (None, Some(a)) => {
                let alg = a.build()?;
                if let Some(p) = self.p {
                    if p != u64::from(alg.prime().get()) {
                        return Err(Error::ModulusMismatch(p as u32, alg.prime().get()));
                    }
                }
                Ok(AdjointContext::free_module(Arc::new(alg), self.seed.unwrap_or(0))?.with_name(name))
            }
            _ => Err(Error::Precondition("a context needs exactly one of \"group\" and \"algebra\"".into())),
        }
    }
}

impl ModuleSpec {
    /// Validates against `ctx`: prime, generator count, and every relation.
    pub fn build(&self, ctx: &AdjointContext) -> Result<ModuleRep> {
        let p = Prime::new(self.p)?;
        if p != ctx.prime() {
            return Err(Error::ModulusMismatch(p.get(), ctx.prime().get()));
        }
        let side: Side = self.side.into();
        let acting = match side {
            Side::A => ctx.a_acting().clone(),
            Side::B => ctx.b_acting().clone(),
        };
        let count = acting.generator_count();
        if let Some(bad) = self.action.keys().find(|k| k.parse::<usize>().map_or(true, |i| i >= count)) {
            return Err(Error::DimensionMismatch(format!("action key {bad:?} is not a generator index below {count}")));
        }
        let actions = (0..count)
            .map(|i| match self.action.get(&i.to_string()) {
                Some(rows) => matrix_from_rows(p, self.dim, self.dim, rows),
                None => Err(Error::DimensionMismatch(format!("missing action of generator {i}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleRep::new(acting, side, p, self.dim, actions)
    }

    pub fn from_module(m: &ModuleRep) -> Self {
        ModuleSpec {
            name: None,
            context: None,
            side: m.side().into(),
            p: u64::from(m.prime().get()),
            dim: m.dim(),
            action: m
                .actions()
                .iter()
                .enumerate()
                .map(|(i, a)| (i.to_string(), a.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect()))
                .collect(),
        }
    }
}

impl MapSpec {
    pub fn build(&self, source: &ModuleRep, target: &ModuleRep) -> Result<ModuleMap> {
        let m = matrix_from_rows(source.prime(), target.dim(), source.dim(), &self.matrix)?;
        ModuleMap::new(source.clone(), target.clone(), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn group_context_round_trip() {
        let text = r#"{"p": 3, "group": {"generators": [[[1, 2]], [[1, 2, 3]]]}, "subgroup": {"generators": [[[1, 2, 3]]]}}"#;
        let spec: ContextSpec = serde_json::from_str(text).unwrap();
        let ctx = spec.build("s3a3").unwrap();
        assert_eq!(ctx.index(), 2);
        assert_eq!(ctx.name(), "s3a3");
        let again: ContextSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn subgroup_elements_must_close() {
        let g = builtin::symmetric_group(3);
        let gens = SubgroupSpec::Elements(vec![ElementRef::Cycles(vec![vec![1, 2, 3]])]);
        assert!(gens.build(&g).is_err());
        let closed = SubgroupSpec::Elements(vec![
            ElementRef::Cycles(vec![vec![1, 2, 3]]),
            ElementRef::Cycles(vec![vec![1, 3, 2]]),
        ]);
        assert_eq!(closed.build(&g).unwrap().order(), 3);
    }

    #[test]
    fn module_validation() {
        let ctx = builtin::context("S3:A3:p3").unwrap();
        let triv: ModuleSpec = serde_json::from_str(r#"{"p": 3, "dim": 1, "action": {"0": [[1]], "1": [[1]]}}"#).unwrap();
        let m = triv.build(&ctx).unwrap();
        assert_eq!(ModuleSpec::from_module(&m), triv);
        // the transposition must square to the identity
        let bad: ModuleSpec = serde_json::from_str(r#"{"p": 3, "dim": 1, "action": {"0": [[2]], "1": [[2]]}}"#).unwrap();
        assert!(matches!(bad.build(&ctx), Err(Error::RelationViolated { .. })));
        let wrong_p: ModuleSpec = serde_json::from_str(r#"{"p": 5, "dim": 1, "action": {"0": [[1]], "1": [[1]]}}"#).unwrap();
        assert!(matches!(wrong_p.build(&ctx), Err(Error::ModulusMismatch(5, 3))));
    }

    #[test]
    fn algebra_round_trip() {
        let a = AlgebraData::truncated_polynomial(3, Prime::new(3).unwrap());
        let spec = AlgebraSpec::from_algebra(&a);
        assert_eq!(spec.build().unwrap(), a);
    }
}

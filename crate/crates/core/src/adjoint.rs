//! The adjoint triple `(L, M, R)` in its two built-in forms.
//!
//! * group induction: `L = R = Res_H^G`, `M = Ind_H^G` for `H <= G`;
//! * free modules: `L = R = forget`, `M = A ⊗ -` for a Frobenius algebra `A`.
//!
//! Units and counits are explicit matrices. Their correctness is not assumed:
//! [`check_triangle_identities`] and [`check_naturality`] verify them by
//! multiplication.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{is_frobenius_algebra, AlgebraData};
use crate::error::{Error, Result};
use crate::field::{FpMatrix, Prime};
use crate::group::{GroupData, SubgroupData};
use crate::module::{hom_space, Acting, ModuleMap, ModuleRep, Side};
use crate::sample::Sampler;

/// An adjoint triple `L ⊣ M ⊣ R` between a category `A` of modules and a
/// category `B`, with `M : B -> A`.
pub trait AdjointTriple {
    fn prime(&self) -> Prime;
    fn a_acting(&self) -> &Acting;
    fn b_acting(&self) -> &Acting;

    /// `L` on objects.
    fn left_adjoint(&self, x: &ModuleRep) -> Result<ModuleRep>;
    fn left_adjoint_map(&self, f: &ModuleMap) -> Result<ModuleMap>;
    /// `R` on objects.
    fn right_adjoint(&self, x: &ModuleRep) -> Result<ModuleRep>;
    fn right_adjoint_map(&self, f: &ModuleMap) -> Result<ModuleMap>;
    /// `M` on objects.
    fn induce(&self, y: &ModuleRep) -> Result<ModuleRep>;
    fn induce_map(&self, f: &ModuleMap) -> Result<ModuleMap>;

    /// `eta_X : X -> M L X`, unit of `L ⊣ M`.
    fn unit(&self, x: &ModuleRep) -> Result<ModuleMap>;
    /// `delta_Y : L M Y -> Y`, counit of `L ⊣ M`.
    fn left_counit(&self, y: &ModuleRep) -> Result<ModuleMap>;
    /// `iota_Y : Y -> R M Y`, unit of `M ⊣ R`.
    fn right_unit(&self, y: &ModuleRep) -> Result<ModuleMap>;
    /// `epsilon_X : M R X -> X`, counit of `M ⊣ R`.
    fn counit(&self, x: &ModuleRep) -> Result<ModuleMap>;

    fn check_a(&self, x: &ModuleRep) -> Result<()> {
        if x.side() != Side::A || x.acting() != self.a_acting() || x.prime() != self.prime() {
            return Err(Error::ContextMismatch(format!("{x} is not an object of this context's A")));
        }
        Ok(())
    }

    fn check_b(&self, y: &ModuleRep) -> Result<()> {
        if y.side() != Side::B || y.acting() != self.b_acting() || y.prime() != self.prime() {
            return Err(Error::ContextMismatch(format!("{y} is not an object of this context's B")));
        }
        Ok(())
    }

    /// `M L X`, the target of the unit.
    fn induce_left(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.induce(&self.left_adjoint(x)?)
    }

    /// `M R X`, the source of the counit.
    fn induce_right(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.induce(&self.right_adjoint(x)?)
    }
}

#[derive(Clone, Debug)]
pub enum ContextKind {
    GroupInduction { group: Arc<GroupData>, subgroup: Arc<SubgroupData> },
    FreeModule {
        algebra: Arc<AlgebraData>,
        /// Frobenius form `lambda`.
        functional: Vec<u32>,
        /// `dual[i]` has `lambda(dual[i] e_j) = [i == j]`.
        dual: Vec<Vec<u32>>,
    },
}

/// One of the two built-in adjoint triples; `L = R` in both.
#[derive(Clone, Debug)]
pub struct AdjointContext {
    name: String,
    p: Prime,
    kind: ContextKind,
    a_acting: Acting,
    b_acting: Acting,
}

impl AdjointContext {
    /// Restriction/induction along `subgroup <= group` over GF(p).
    pub fn group_induction(group: Arc<GroupData>, subgroup: Arc<SubgroupData>, p: Prime) -> Result<Self> {
        if !(Arc::ptr_eq(&group, subgroup.group()) || *group == **subgroup.group()) {
            return Err(Error::ContextMismatch("subgroup belongs to a different group".into()));
        }
        let a_acting = Acting::Group { group: group.clone(), generators: group.generators().to_vec() };
        let b_acting = Acting::Group { group: group.clone(), generators: subgroup.generators().to_vec() };
        Ok(AdjointContext {
            name: format!("G{}:H{}:p{}", group.order(), subgroup.order(), p),
            p,
            kind: ContextKind::GroupInduction { group, subgroup },
            a_acting,
            b_acting,
        })
    }

    /// Free-module adjunctions for `algebra`, which must be Frobenius: the
    /// unit of `forget ⊣ A ⊗ -` is built from a nondegenerate form.
    pub fn free_module(algebra: Arc<AlgebraData>, seed: u64) -> Result<Self> {
        let functional = is_frobenius_algebra(&algebra, seed)?.ok_or(Error::NotFrobenius)?;
        Self::free_module_with_form(algebra, functional)
    }

    pub fn free_module_with_form(algebra: Arc<AlgebraData>, functional: Vec<u32>) -> Result<Self> {
        let p = algebra.prime();
        let d = algebra.dim();
        let gram = algebra.gram(&functional);
        // rows of Y with Y * G = I satisfy lambda(y_i e_j) = delta_ij
        let y = gram.solve_left(&FpMatrix::identity(p, d))?.ok_or(Error::NotFrobenius)?;
        let dual = y.to_rows();
        Ok(AdjointContext {
            name: format!("A{}:p{}", d, p),
            p,
            a_acting: Acting::Algebra(algebra.clone()),
            b_acting: Acting::Field,
            kind: ContextKind::FreeModule { algebra, functional, dual },
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &ContextKind {
        &self.kind
    }

    /// `[G:H]` for group contexts, `dim A` for free-module contexts.
    pub fn index(&self) -> usize {
        match &self.kind {
            ContextKind::GroupInduction { subgroup, .. } => subgroup.index(),
            ContextKind::FreeModule { algebra, .. } => algebra.dim(),
        }
    }

    /// Restriction `L = R`.
    pub fn restrict(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.check_a(x)?;
        Ok(match &self.kind {
            ContextKind::GroupInduction { subgroup, .. } => {
                let actions = subgroup
                    .generators()
                    .iter()
                    .map(|&h| x.element_matrix(h))
                    .collect::<Result<Vec<_>>>()?;
                ModuleRep::from_trusted(self.b_acting.clone(), Side::B, self.p, x.dim(), actions)
            }
            ContextKind::FreeModule { .. } => {
                ModuleRep::from_trusted(Acting::Field, Side::B, self.p, x.dim(), Vec::new())
            }
        })
    }

    pub fn restrict_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        let source = self.restrict(f.source())?;
        let target = self.restrict(f.target())?;
        Ok(ModuleMap::from_trusted(source, target, f.matrix().clone()))
    }

    fn group_parts(&self) -> Option<(&GroupData, &SubgroupData)> {
        match &self.kind {
            ContextKind::GroupInduction { group, subgroup } => Some((group, subgroup)),
            _ => None,
        }
    }
}

impl AdjointTriple for AdjointContext {
    fn prime(&self) -> Prime {
        self.p
    }

    fn a_acting(&self) -> &Acting {
        &self.a_acting
    }

    fn b_acting(&self) -> &Acting {
        &self.b_acting
    }

    fn left_adjoint(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.restrict(x)
    }

    fn left_adjoint_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.restrict_map(f)
    }

    fn right_adjoint(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.restrict(x)
    }

    fn right_adjoint_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.restrict_map(f)
    }

    /// Basis of the induced module is ordered by (coset or algebra basis
    /// index, inner basis index).
    fn induce(&self, y: &ModuleRep) -> Result<ModuleRep> {
        self.check_b(y)?;
        let n = y.dim();
        let p = self.p;
        let actions = match &self.kind {
            ContextKind::GroupInduction { group, subgroup } => {
                let reps = subgroup.coset_reps();
                let k = reps.len();
                group
                    .generators()
                    .iter()
                    .map(|&s| {
                        let mut m = FpMatrix::zeros(p, k * n, k * n);
                        for (c, &rep) in reps.iter().enumerate() {
                            // s * rep_c = rep_c' * h
                            let (c2, h) = subgroup.coset_lookup(group.mul(s, rep));
                            m.set_block(c2 * n, c * n, &y.element_matrix(h)?);
                        }
                        Ok(m)
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            ContextKind::FreeModule { algebra, .. } => {
                let id = FpMatrix::identity(p, n);
                (0..algebra.dim()).map(|a| algebra.left_mult(a).kron(&id)).collect::<Result<Vec<_>>>()?
            }
        };
        Ok(ModuleRep::from_trusted(self.a_acting.clone(), Side::A, p, self.index() * n, actions))
    }

    fn induce_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        let source = self.induce(f.source())?;
        let target = self.induce(f.target())?;
        let blocks = FpMatrix::identity(self.p, self.index()).kron(f.matrix())?;
        Ok(ModuleMap::from_trusted(source, target, blocks))
    }

    fn unit(&self, x: &ModuleRep) -> Result<ModuleMap> {
        let target = self.induce_left(x)?;
        let n = x.dim();
        let mut m = FpMatrix::zeros(self.p, target.dim(), n);
        match &self.kind {
            ContextKind::GroupInduction { group, subgroup } => {
                // x -> sum_c rep_c ⊗ rep_c^{-1} x
                for (c, &rep) in subgroup.coset_reps().iter().enumerate() {
                    m.set_block(c * n, 0, &x.element_matrix(group.inverse(rep))?);
                }
            }
            ContextKind::FreeModule { dual, .. } => {
                // x -> sum_i e_i ⊗ y_i x with lambda(y_i e_j) = delta_ij
                for (i, y) in dual.iter().enumerate() {
                    m.set_block(i * n, 0, &x.algebra_element_matrix(y)?);
                }
            }
        }
        Ok(ModuleMap::from_trusted(x.clone(), target, m))
    }

    fn left_counit(&self, y: &ModuleRep) -> Result<ModuleMap> {
        let source = self.left_adjoint(&self.induce(y)?)?;
        let n = y.dim();
        let mut m = FpMatrix::zeros(self.p, n, source.dim());
        match &self.kind {
            // rep_0 ⊗ y -> y, other cosets -> 0
            ContextKind::GroupInduction { .. } => m.set_block(0, 0, &FpMatrix::identity(self.p, n)),
            // a ⊗ y -> lambda(a) y
            ContextKind::FreeModule { functional, .. } => {
                for (i, &l) in functional.iter().enumerate() {
                    m.set_block(0, i * n, &FpMatrix::identity(self.p, n).scale(l));
                }
            }
        }
        Ok(ModuleMap::from_trusted(source, y.clone(), m))
    }

    fn right_unit(&self, y: &ModuleRep) -> Result<ModuleMap> {
        let target = self.right_adjoint(&self.induce(y)?)?;
        let n = y.dim();
        let mut m = FpMatrix::zeros(self.p, target.dim(), n);
        match &self.kind {
            // y -> rep_0 ⊗ y
            ContextKind::GroupInduction { .. } => m.set_block(0, 0, &FpMatrix::identity(self.p, n)),
            // y -> 1 ⊗ y
            ContextKind::FreeModule { algebra, .. } => {
                for (i, &u) in algebra.unit().iter().enumerate() {
                    m.set_block(i * n, 0, &FpMatrix::identity(self.p, n).scale(u));
                }
            }
        }
        Ok(ModuleMap::from_trusted(y.clone(), target, m))
    }

    fn counit(&self, x: &ModuleRep) -> Result<ModuleMap> {
        let source = self.induce_right(x)?;
        let n = x.dim();
        let mut m = FpMatrix::zeros(self.p, n, source.dim());
        match &self.kind {
            // rep_c ⊗ x -> rep_c x
            ContextKind::GroupInduction { subgroup, .. } => {
                for (c, &rep) in subgroup.coset_reps().iter().enumerate() {
                    m.set_block(0, c * n, &x.element_matrix(rep)?);
                }
            }
            // e_i ⊗ x -> e_i x
            ContextKind::FreeModule { .. } => {
                for (i, act) in x.actions().iter().enumerate() {
                    m.set_block(0, i * n, act);
                }
            }
        }
        Ok(ModuleMap::from_trusted(source, x.clone(), m))
    }
}

/// Relative trace `sum_c rep_c φ rep_c^{-1}` of an `H`-map between two
/// `G`-modules (group contexts only).
pub fn relative_trace(ctx: &AdjointContext, x: &ModuleRep, y: &ModuleRep, phi: &FpMatrix) -> Result<FpMatrix> {
    let (group, subgroup) = ctx
        .group_parts()
        .ok_or_else(|| Error::ContextMismatch("relative trace needs a group context".into()))?;
    let mut acc = FpMatrix::zeros(ctx.p, y.dim(), x.dim());
    for &rep in subgroup.coset_reps() {
        let term = &(&y.element_matrix(rep)? * phi) * &x.element_matrix(group.inverse(rep))?;
        acc = &acc + &term;
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TriangleViolation {
    pub identity: String,
    pub module: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TriangleReport {
    pub checked: usize,
    pub violations: Vec<TriangleViolation>,
}

impl TriangleReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn expect_identity(report: &mut TriangleReport, identity: &str, module: &ModuleRep, composite: Result<ModuleMap>) {
    report.checked += 1;
    let ok = matches!(&composite, Ok(m) if m.matrix().is_identity());
    if !ok {
        report.violations.push(TriangleViolation { identity: identity.into(), module: module.to_string() });
    }
}

fn expect_intertwiner(report: &mut TriangleReport, identity: &str, module: &ModuleRep, map: &Result<ModuleMap>) {
    report.checked += 1;
    let ok = matches!(map, Ok(m) if ModuleMap::new(m.source().clone(), m.target().clone(), m.matrix().clone()).is_ok());
    if !ok {
        report.violations.push(TriangleViolation { identity: identity.into(), module: module.to_string() });
    }
}

/// Checks the four triangle identities of `L ⊣ M` and `M ⊣ R` on the given
/// objects of `A` (`xs`) and `B` (`ys`), plus equivariance of every unit and counit.
pub fn check_triangle_identities<C: AdjointTriple + ?Sized>(
    ctx: &C,
    xs: &[ModuleRep],
    ys: &[ModuleRep],
) -> Result<TriangleReport> {
    let mut report = TriangleReport::default();
    for x in xs {
        ctx.check_a(x)?;
        let eta = ctx.unit(x);
        let eps = ctx.counit(x);
        expect_intertwiner(&mut report, "unit is A-linear", x, &eta);
        expect_intertwiner(&mut report, "counit is A-linear", x, &eps);
        // delta_{LX} ∘ L(eta_X) = id_{LX}
        let lhs = eta.as_ref().map_err(clone_err).and_then(|eta| {
            let l_eta = ctx.left_adjoint_map(eta)?;
            ctx.left_counit(&ctx.left_adjoint(x)?)?.compose(&l_eta)
        });
        expect_identity(&mut report, "left counit after L(unit)", x, lhs);
        // R(eps_X) ∘ iota_{RX} = id_{RX}
        let rhs = eps.as_ref().map_err(clone_err).and_then(|eps| {
            let r_eps = ctx.right_adjoint_map(eps)?;
            r_eps.compose(&ctx.right_unit(&ctx.right_adjoint(x)?)?)
        });
        expect_identity(&mut report, "R(counit) after right unit", x, rhs);
    }
    for y in ys {
        ctx.check_b(y)?;
        let my = ctx.induce(y)?;
        // M(delta_Y) ∘ eta_{MY} = id_{MY}
        let lhs = ctx.unit(&my).and_then(|eta| ctx.induce_map(&ctx.left_counit(y)?)?.compose(&eta));
        expect_identity(&mut report, "M(left counit) after unit", y, lhs);
        // eps_{MY} ∘ M(iota_Y) = id_{MY}
        let rhs = ctx.counit(&my).and_then(|eps| eps.compose(&ctx.induce_map(&ctx.right_unit(y)?)?));
        expect_identity(&mut report, "counit after M(right unit)", y, rhs);
        expect_intertwiner(&mut report, "left counit is B-linear", y, &ctx.left_counit(y));
        expect_intertwiner(&mut report, "right unit is B-linear", y, &ctx.right_unit(y));
    }
    Ok(report)
}

fn clone_err(e: &Error) -> Error {
    Error::Precondition(e.to_string())
}

/// Naturality squares of `eta` and `epsilon` at a morphism `f : X -> X'` of `A`.
/// Returns the names of the squares that fail to commute.
pub fn check_naturality<C: AdjointTriple + ?Sized>(ctx: &C, f: &ModuleMap) -> Result<Vec<&'static str>> {
    let (x, x2) = (f.source(), f.target());
    let mut failed = Vec::new();
    let ml_f = ctx.induce_map(&ctx.left_adjoint_map(f)?)?;
    if ml_f.compose(&ctx.unit(x)?)? != ctx.unit(x2)?.compose(f)? {
        failed.push("unit");
    }
    let mr_f = ctx.induce_map(&ctx.right_adjoint_map(f)?)?;
    if f.compose(&ctx.counit(x)?)? != ctx.counit(x2)?.compose(&mr_f)? {
        failed.push("counit");
    }
    Ok(failed)
}

/// Result of [`adjunction_check`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct AdjunctionReport {
    pub triangle: TriangleReport,
    pub naturality_checked: usize,
    pub naturality_failures: Vec<String>,
    pub reciprocity_checked: usize,
    pub reciprocity_failures: Vec<String>,
}

impl AdjunctionReport {
    pub fn is_clean(&self) -> bool {
        self.triangle.is_clean() && self.naturality_failures.is_empty() && self.reciprocity_failures.is_empty()
    }
}

/// Triangle identities, naturality of `eta` and `epsilon` on a random
/// morphism, and both reciprocity dimension equalities, on `samples`
/// sampled modules (sample `k` seeded with `seed + k`).
pub fn adjunction_check(ctx: &AdjointContext, samples: usize, seed: u64) -> Result<AdjunctionReport> {
    let mut report = AdjunctionReport::default();
    for k in 0..samples as u64 {
        let s = seed.wrapping_add(k);
        let mut sampler = Sampler::new(ctx, s);
        let x = sampler.module_a()?;
        let y = sampler.module_b()?;
        let part = check_triangle_identities(ctx, std::slice::from_ref(&x), std::slice::from_ref(&y))?;
        report.triangle.checked += part.checked;
        report.triangle.violations.extend(part.violations);

        let x2 = sampler.module_a_near(&x)?;
        let f = sampler.map(&x, &x2)?;
        report.naturality_checked += 1;
        for square in check_naturality(ctx, &f)? {
            report.naturality_failures.push(format!("{square} square at seed {s}"));
        }

        let my = ctx.induce(&y)?;
        report.reciprocity_checked += 2;
        if hom_space(&my, &x)?.len() != hom_space(&y, &ctx.right_adjoint(&x)?)?.len() {
            report.reciprocity_failures.push(format!("Hom(MY, X) at seed {s}"));
        }
        if hom_space(&x, &my)?.len() != hom_space(&ctx.left_adjoint(&x)?, &y)?.len() {
            report.reciprocity_failures.push(format!("Hom(X, MY) at seed {s}"));
        }
    }
    Ok(report)
}

//! Finite-dimensional modules given by action matrices, and their morphisms.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::field::{invertible_combination, EchelonBasis, FpMatrix, Prime, EXHAUSTIVE_THRESHOLD};
use crate::group::GroupData;

/// Random trials spent by [`is_isomorphic`] before any exhaustive fallback.
pub const ISO_TRIALS: usize = 2048;

/// What acts on a module.
#[derive(Clone, Debug)]
pub enum Acting {
    /// A group (or subgroup) acting through the listed generators, given as
    /// element indices of `group`.
    Group { group: Arc<GroupData>, generators: Vec<usize> },
    /// An algebra acting through its basis elements.
    Algebra(Arc<AlgebraData>),
    /// Bare vector spaces.
    Field,
}

impl PartialEq for Acting {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Acting::Group { group: a, generators: ga }, Acting::Group { group: b, generators: gb }) => {
                ga == gb && (Arc::ptr_eq(a, b) || a == b)
            }
            (Acting::Algebra(a), Acting::Algebra(b)) => Arc::ptr_eq(a, b) || a == b,
            (Acting::Field, Acting::Field) => true,
            _ => false,
        }
    }
}

impl Eq for Acting {}

impl Acting {
    pub fn generator_count(&self) -> usize {
        match self {
            Acting::Group { generators, .. } => generators.len(),
            Acting::Algebra(a) => a.dim(),
            Acting::Field => 0,
        }
    }

    fn describe(&self) -> String {
        match self {
            Acting::Group { group, generators } => {
                format!("group of order {} via {} generators", group.order(), generators.len())
            }
            Acting::Algebra(a) => format!("algebra of dimension {}", a.dim()),
            Acting::Field => "vector spaces".into(),
        }
    }
}

/// Which category of the adjoint triple a module lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// The big category (modules over G, or over A).
    A,
    /// The small category (modules over H, or vector spaces).
    B,
}

#[derive(Debug)]
struct ModuleInner {
    acting: Acting,
    side: Side,
    p: Prime,
    dim: usize,
    actions: Vec<FpMatrix>,
    // for group actions: matrix of every element reachable from the generators
    elements: OnceLock<Vec<Option<FpMatrix>>>,
}

/// A finite-dimensional module. Cheap to clone.
///
/// Equality is structural: same acting object, side, and action matrices.
#[derive(Clone)]
pub struct ModuleRep(Arc<ModuleInner>);

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.side == other.0.side
                && self.0.p == other.0.p
                && self.0.dim == other.0.dim
                && self.0.actions == other.0.actions
                && self.0.acting == other.0.acting)
    }
}

impl Eq for ModuleRep {}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("side", &self.0.side)
            .field("p", &self.0.p.get())
            .field("dim", &self.0.dim)
            .field("actions", &self.0.actions)
            .finish()
    }
}

impl fmt::Display for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-side module of dim {} over GF({}) ({})", self.0.side, self.0.dim, self.0.p, self.0.acting.describe())
    }
}

/// BFS over the acting group from the identity, multiplying on the right by
/// generators. Every Cayley-graph edge is checked, which forces the action to
/// be a homomorphism.
fn group_element_matrices(
    group: &GroupData,
    generators: &[usize],
    actions: &[FpMatrix],
    p: Prime,
    dim: usize,
) -> Result<Vec<Option<FpMatrix>>> {
    let mut mats: Vec<Option<FpMatrix>> = vec![None; group.order()];
    mats[0] = Some(FpMatrix::identity(p, dim));
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let mx = mats[x].clone().expect("visited");
        for (s, (&gen, act)) in generators.iter().zip(actions).enumerate() {
            let y = group.mul(x, gen);
            let my = &mx * act;
            match &mats[y] {
                Some(existing) => {
                    if *existing != my {
                        return Err(Error::RelationViolated {
                            relation: format!("rho({}) * rho(gen {s}) = rho({})", group.label(x), group.label(y)),
                        });
                    }
                }
                None => {
                    mats[y] = Some(my);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(mats)
}

fn check_algebra_relations(alg: &AlgebraData, actions: &[FpMatrix], p: Prime, dim: usize) -> Result<()> {
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            let lhs = &actions[i] * &actions[j];
            let mut rhs = FpMatrix::zeros(p, dim, dim);
            for (k, act) in actions.iter().enumerate() {
                let c = alg.coeff(i, j, k);
                if c != 0 {
                    rhs = &rhs + &act.scale(c);
                }
            }
            if lhs != rhs {
                return Err(Error::RelationViolated { relation: format!("rho(e{i}) rho(e{j}) = rho(e{i} e{j})") });
            }
        }
    }
    let mut unit = FpMatrix::zeros(p, dim, dim);
    for (k, act) in actions.iter().enumerate() {
        unit = &unit + &act.scale(alg.unit()[k]);
    }
    if !unit.is_identity() {
        return Err(Error::RelationViolated { relation: "rho(1) = id".into() });
    }
    Ok(())
}

impl ModuleRep {
    /// Validates the action matrices against the defining relations of `acting`.
    pub fn new(acting: Acting, side: Side, p: Prime, dim: usize, actions: Vec<FpMatrix>) -> Result<Self> {
        if actions.len() != acting.generator_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for {} generators",
                actions.len(),
                acting.generator_count()
            )));
        }
        for (i, a) in actions.iter().enumerate() {
            if a.prime() != p {
                return Err(Error::ModulusMismatch(a.prime().get(), p.get()));
            }
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action {i} is {}x{}, module dimension is {dim}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        if let Acting::Algebra(alg) = &acting {
            if alg.prime() != p {
                return Err(Error::ModulusMismatch(alg.prime().get(), p.get()));
            }
        }
        let module = Self::from_trusted(acting, side, p, dim, actions);
        match &module.0.acting {
            Acting::Group { group, generators } => {
                let mats = group_element_matrices(group, generators, &module.0.actions, p, dim)?;
                let _ = module.0.elements.set(mats);
            }
            Acting::Algebra(alg) => check_algebra_relations(alg, &module.0.actions, p, dim)?,
            Acting::Field => {}
        }
        Ok(module)
    }

    pub(crate) fn from_trusted(acting: Acting, side: Side, p: Prime, dim: usize, actions: Vec<FpMatrix>) -> Self {
        ModuleRep(Arc::new(ModuleInner { acting, side, p, dim, actions, elements: OnceLock::new() }))
    }

    pub fn zero(acting: Acting, side: Side, p: Prime) -> Self {
        let actions = vec![FpMatrix::zeros(p, 0, 0); acting.generator_count()];
        Self::from_trusted(acting, side, p, 0, actions)
    }

    /// Same acting object and side, with new action matrices (no validation).
    pub(crate) fn with_actions(&self, dim: usize, actions: Vec<FpMatrix>) -> Self {
        Self::from_trusted(self.0.acting.clone(), self.0.side, self.0.p, dim, actions)
    }

    pub fn acting(&self) -> &Acting {
        &self.0.acting
    }

    pub fn side(&self) -> Side {
        self.0.side
    }

    pub fn prime(&self) -> Prime {
        self.0.p
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn actions(&self) -> &[FpMatrix] {
        &self.0.actions
    }

    pub fn same_category(&self, other: &ModuleRep) -> Result<()> {
        if self.0.p != other.0.p {
            return Err(Error::ModulusMismatch(self.0.p.get(), other.0.p.get()));
        }
        if self.0.side != other.0.side || self.0.acting != other.0.acting {
            return Err(Error::ContextMismatch(format!(
                "{:?}-side {} vs {:?}-side {}",
                self.0.side,
                self.0.acting.describe(),
                other.0.side,
                other.0.acting.describe()
            )));
        }
        Ok(())
    }

    /// Action of a group element (an index of the acting group's table).
    pub fn element_matrix(&self, g: usize) -> Result<FpMatrix> {
        let Acting::Group { group, generators } = &self.0.acting else {
            return Err(Error::ContextMismatch("element_matrix needs a group action".into()));
        };
        let mats = match self.0.elements.get() {
            Some(m) => m,
            None => {
                let m = group_element_matrices(group, generators, &self.0.actions, self.0.p, self.0.dim)?;
                self.0.elements.get_or_init(|| m)
            }
        };
        mats.get(g)
            .and_then(|m| m.clone())
            .ok_or_else(|| Error::ContextMismatch(format!("element {g} does not act on this module")))
    }

    /// Action of an algebra element given in basis coordinates.
    pub fn algebra_element_matrix(&self, coeffs: &[u32]) -> Result<FpMatrix> {
        let Acting::Algebra(alg) = &self.0.acting else {
            return Err(Error::ContextMismatch("algebra_element_matrix needs an algebra action".into()));
        };
        if coeffs.len() != alg.dim() {
            return Err(Error::DimensionMismatch("coefficient vector length".into()));
        }
        let mut out = FpMatrix::zeros(self.0.p, self.0.dim, self.0.dim);
        for (c, act) in coeffs.iter().zip(&self.0.actions) {
            if *c != 0 {
                out = &out + &act.scale(*c);
            }
        }
        Ok(out)
    }

    /// Basis (as columns) of the smallest submodule containing `vectors`.
    pub fn spin(&self, vectors: &[Vec<u32>]) -> FpMatrix {
        let mut ech = EchelonBasis::new(self.0.p, self.0.dim);
        let mut found: Vec<Vec<u32>> = Vec::new();
        let mut queue: Vec<Vec<u32>> = vectors.to_vec();
        while let Some(v) = queue.pop() {
            if ech.insert(&v) {
                let col = FpMatrix::column_vector(self.0.p, &v);
                for act in &self.0.actions {
                    queue.push((act * &col).column(0));
                }
                found.push(v);
            }
        }
        FpMatrix::from_fn(self.0.p, self.0.dim, found.len(), |r, c| found[c][r])
    }

    /// Submodule spanned by the columns of `basis`, which must be independent
    /// and invariant under the action.
    pub fn submodule(&self, basis: &FpMatrix) -> Result<(ModuleRep, ModuleMap)> {
        if basis.rows() != self.0.dim {
            return Err(Error::DimensionMismatch("submodule basis has wrong length".into()));
        }
        if basis.rank() != basis.cols() {
            return Err(Error::Precondition("submodule basis is not independent".into()));
        }
        let mut actions = Vec::with_capacity(self.0.actions.len());
        for act in &self.0.actions {
            let image = act * basis;
            let restricted = basis
                .solve_right(&image)?
                .ok_or_else(|| Error::Precondition("subspace is not invariant".into()))?;
            actions.push(restricted);
        }
        let sub = self.with_actions(basis.cols(), actions);
        let inclusion = ModuleMap::from_trusted(sub.clone(), self.clone(), basis.clone());
        Ok((sub, inclusion))
    }

    /// Quotient by the invariant subspace spanned by the columns of `span`.
    pub fn quotient(&self, span: &FpMatrix) -> Result<Quotient> {
        if span.rows() != self.0.dim {
            return Err(Error::DimensionMismatch("quotient span has wrong length".into()));
        }
        let p = self.0.p;
        let n = self.0.dim;
        let reduced = span.transpose().rref();
        let rank = reduced.rank();
        let mut is_pivot = vec![false; n];
        for &c in &reduced.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        // projection kills the pivot coordinates using the reduced rows
        let mut proj = FpMatrix::zeros(p, free.len(), n);
        for (jj, &j) in free.iter().enumerate() {
            proj.set(jj, j, 1);
            for (r, &pc) in reduced.pivots.iter().enumerate().take(rank) {
                proj.set(jj, pc, p.neg(reduced.matrix.get(r, j)));
            }
        }
        let lift = FpMatrix::from_fn(p, n, free.len(), |r, c| u32::from(free[c] == r));
        let mut actions = Vec::with_capacity(self.0.actions.len());
        for act in &self.0.actions {
            let moved = act * span;
            if !(&proj * &moved).is_zero() {
                return Err(Error::Precondition("subspace is not invariant".into()));
            }
            actions.push(&(&proj * act) * &lift);
        }
        let module = self.with_actions(free.len(), actions);
        let projection = ModuleMap::from_trusted(self.clone(), module.clone(), proj);
        Ok(Quotient { module, projection, lift })
    }
}

/// A quotient module with its projection and a linear (not necessarily
/// equivariant) section of the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: ModuleRep,
    pub projection: ModuleMap,
    pub lift: FpMatrix,
}

/// A module homomorphism `source -> target`, stored as a
/// `target.dim x source.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: ModuleRep,
    target: ModuleRep,
    matrix: FpMatrix,
}

impl ModuleMap {
    /// Validates shape and that the matrix intertwines every generator action.
    pub fn new(source: ModuleRep, target: ModuleRep, matrix: FpMatrix) -> Result<Self> {
        source.same_category(&target)?;
        if matrix.prime() != source.prime() {
            return Err(Error::ModulusMismatch(matrix.prime().get(), source.prime().get()));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if let Some(g) = first_non_intertwined(&source, &target, &matrix) {
            return Err(Error::NotIntertwiner { generator: g });
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub(crate) fn from_trusted(source: ModuleRep, target: ModuleRep, matrix: FpMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        debug_assert!(first_non_intertwined(&source, &target, &matrix).is_none(), "trusted map does not intertwine");
        ModuleMap { source, target, matrix }
    }

    pub fn identity(x: &ModuleRep) -> Self {
        ModuleMap { source: x.clone(), target: x.clone(), matrix: FpMatrix::identity(x.prime(), x.dim()) }
    }

    pub fn zero(source: &ModuleRep, target: &ModuleRep) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: FpMatrix::zeros(source.prime(), target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> FpMatrix {
        self.matrix
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMap) -> Result<ModuleMap> {
        if inner.target != self.source {
            return Err(Error::DimensionMismatch("composition of non-composable maps".into()));
        }
        Ok(ModuleMap { source: inner.source.clone(), target: self.target.clone(), matrix: &self.matrix * &inner.matrix })
    }

    fn same_ends(&self, other: &ModuleMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch("maps have different source or target".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.same_ends(other)?;
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: &self.matrix + &other.matrix })
    }

    pub fn sub(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.same_ends(other)?;
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: &self.matrix - &other.matrix })
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(s) }
    }

    /// Same matrix viewed between other modules; checked.
    pub fn retarget(&self, source: &ModuleRep, target: &ModuleRep) -> Result<ModuleMap> {
        ModuleMap::new(source.clone(), target.clone(), self.matrix.clone())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn kernel(&self) -> Result<(ModuleRep, ModuleMap)> {
        self.source.submodule(&self.matrix.kernel_basis())
    }

    pub fn image(&self) -> Result<(ModuleRep, ModuleMap)> {
        self.target.submodule(&self.matrix.column_space_basis())
    }

    pub fn cokernel(&self) -> Result<Quotient> {
        self.target.quotient(&self.matrix)
    }
}

fn first_non_intertwined(source: &ModuleRep, target: &ModuleRep, matrix: &FpMatrix) -> Option<usize> {
    source
        .actions()
        .iter()
        .zip(target.actions())
        .position(|(a, b)| (b * matrix) != (matrix * a))
}

/// Basis of `Hom(x, y)`: the kernel of `F -> rho_y(g) F - F rho_x(g)` over all
/// generators, read off the rref of the stacked system.
pub fn hom_space(x: &ModuleRep, y: &ModuleRep) -> Result<Vec<ModuleMap>> {
    x.same_category(y)?;
    let p = x.prime();
    let (n, m) = (x.dim(), y.dim());
    let unknowns = m * n;
    let active: Vec<(&FpMatrix, &FpMatrix)> = x
        .actions()
        .iter()
        .zip(y.actions())
        .filter(|(a, b)| !(a.is_identity() && b.is_identity()))
        .collect();
    let mut system = FpMatrix::zeros(p, active.len() * unknowns, unknowns);
    for (g, (ax, by)) in active.iter().enumerate() {
        let base = g * unknowns;
        // equation (r, c): sum_k by[r][k] F[k][c] - sum_k F[r][k] ax[k][c]
        for r in 0..m {
            for c in 0..n {
                let row = base + r * n + c;
                for k in 0..m {
                    let v = by.get(r, k);
                    if v != 0 {
                        let col = k * n + c;
                        system.set(row, col, p.add(system.get(row, col), v));
                    }
                }
                for k in 0..n {
                    let v = ax.get(k, c);
                    if v != 0 {
                        let col = r * n + k;
                        system.set(row, col, p.sub(system.get(row, col), v));
                    }
                }
            }
        }
    }
    let kernel = system.kernel_basis();
    Ok((0..kernel.cols())
        .map(|j| {
            let entries = kernel.column(j);
            ModuleMap::from_trusted(x.clone(), y.clone(), FpMatrix::from_residues(p, m, n, entries))
        })
        .collect())
}

/// Coefficients `a` with `sum_k a_k basis[k] = target`, if any.
pub fn solve_in_span(basis: &[FpMatrix], target: &FpMatrix) -> Result<Option<Vec<u32>>> {
    let p = target.prime();
    let len = target.rows() * target.cols();
    let system = FpMatrix::from_fn(p, len, basis.len(), |r, c| basis[c].data()[r]);
    let rhs = FpMatrix::from_residues(p, len, 1, target.data().to_vec());
    Ok(system.solve_right(&rhs)?.map(|x| x.column(0)))
}

/// `sum_k coeffs[k] maps[k]`.
pub fn combine(maps: &[ModuleMap], coeffs: &[u32]) -> Result<ModuleMap> {
    let first = maps.first().ok_or_else(|| Error::Precondition("empty combination".into()))?;
    let mut acc = FpMatrix::zeros(first.matrix.prime(), first.matrix.rows(), first.matrix.cols());
    for (m, &c) in maps.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &m.matrix.scale(c);
        }
    }
    Ok(ModuleMap { source: first.source.clone(), target: first.target.clone(), matrix: acc })
}

/// Biproduct `x ⊕ y` with its structural maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: ModuleRep,
    pub inclusions: [ModuleMap; 2],
    pub projections: [ModuleMap; 2],
}

pub fn direct_sum(x: &ModuleRep, y: &ModuleRep) -> Result<DirectSum> {
    x.same_category(y)?;
    let p = x.prime();
    let (a, b) = (x.dim(), y.dim());
    let actions = x
        .actions()
        .iter()
        .zip(y.actions())
        .map(|(u, v)| u.block_diag(v))
        .collect::<Result<Vec<_>>>()?;
    let sum = x.with_actions(a + b, actions);
    let incl = |offset: usize, d: usize| FpMatrix::from_fn(p, a + b, d, |r, c| u32::from(r == c + offset));
    let proj = |offset: usize, d: usize| FpMatrix::from_fn(p, d, a + b, |r, c| u32::from(c == r + offset));
    Ok(DirectSum {
        inclusions: [
            ModuleMap::from_trusted(x.clone(), sum.clone(), incl(0, a)),
            ModuleMap::from_trusted(y.clone(), sum.clone(), incl(a, b)),
        ],
        projections: [
            ModuleMap::from_trusted(sum.clone(), x.clone(), proj(0, a)),
            ModuleMap::from_trusted(sum.clone(), y.clone(), proj(a, b)),
        ],
        module: sum,
    })
}

/// A direct summand cut out by an idempotent.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

/// Splits an idempotent endomorphism `e` of `x` through its image.
pub fn split_idempotent(x: &ModuleRep, e: &FpMatrix) -> Result<Summand> {
    let e_map = ModuleMap::new(x.clone(), x.clone(), e.clone())?;
    if &(e * e) != e {
        return Err(Error::NotIdempotent);
    }
    let basis = e.column_space_basis();
    let (module, inclusion) = x.submodule(&basis)?;
    let proj = basis
        .solve_right(e)?
        .ok_or_else(|| Error::Precondition("idempotent image basis does not reproduce e".into()))?;
    let projection = ModuleMap::from_trusted(x.clone(), module.clone(), proj);
    debug_assert_eq!(inclusion.compose(&projection)?, e_map);
    Ok(Summand { module, inclusion, projection })
}

/// Searches `Hom(x, y)` for an isomorphism; in the exhaustive regime `None`
/// certifies non-isomorphism.
pub fn is_isomorphic(x: &ModuleRep, y: &ModuleRep, seed: u64) -> Result<Option<ModuleMap>> {
    x.same_category(y)?;
    if x.dim() != y.dim() {
        return Ok(None);
    }
    if x == y {
        return Ok(Some(ModuleMap::identity(x)));
    }
    if x.dim() == 0 {
        return Ok(Some(ModuleMap::zero(x, y)));
    }
    let basis = hom_space(x, y)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let matrices: Vec<FpMatrix> = basis.iter().map(|m| m.matrix.clone()).collect();
    match invertible_combination(&matrices, seed, ISO_TRIALS, EXHAUSTIVE_THRESHOLD)? {
        Some(coeffs) => Ok(Some(combine(&basis, &coeffs)?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn gf(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn hom_space_examples() {
        let c3 = builtin::cyclic_group(3);
        let triv = builtin::trivial_module(&c3, gf(3));
        assert_eq!(hom_space(&triv, &triv).unwrap().len(), 1);

        let c2 = builtin::cyclic_group(2);
        let reg = builtin::regular_module(&c2, gf(2));
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 2);

        let j2 = builtin::jordan_block(&c3, gf(3), 2).unwrap();
        let j3 = builtin::jordan_block(&c3, gf(3), 3).unwrap();
        let homs = hom_space(&j2, &j3).unwrap();
        assert_eq!(homs.len(), 2);
        for h in &homs {
            ModuleMap::new(j2.clone(), j3.clone(), h.matrix().clone()).unwrap();
        }
    }

    #[test]
    fn hom_space_context_mismatch() {
        let c2 = builtin::cyclic_group(2);
        let c3 = builtin::cyclic_group(3);
        let a = builtin::trivial_module(&c2, gf(3));
        let b = builtin::trivial_module(&c3, gf(3));
        assert!(matches!(hom_space(&a, &b), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn rejects_non_representations() {
        let c3 = builtin::cyclic_group(3);
        let acting = Acting::Group { group: c3.clone(), generators: c3.generators().to_vec() };
        // order-2 matrix cannot represent a generator of order 3
        let swap = FpMatrix::from_rows(gf(3), &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(
            ModuleRep::new(acting, Side::A, gf(3), 2, vec![swap]),
            Err(Error::RelationViolated { .. })
        ));
    }

    #[test]
    fn direct_sum_examples() {
        let c2 = builtin::cyclic_group(2);
        let j1 = builtin::jordan_block(&c2, gf(2), 1).unwrap();
        let zero = ModuleRep::zero(j1.acting().clone(), Side::A, gf(2));
        assert_eq!(direct_sum(&j1, &zero).unwrap().module.actions(), j1.actions());

        let s = direct_sum(&j1, &j1).unwrap();
        assert_eq!(s.module.dim(), 2);
        assert!(s.module.actions()[0].is_identity());

        let c3 = builtin::cyclic_group(3);
        let a = builtin::jordan_block(&c3, gf(3), 1).unwrap();
        let b = builtin::jordan_block(&c3, gf(3), 2).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.module.dim(), 3);
        let expected = a.actions()[0].block_diag(&b.actions()[0]).unwrap();
        assert_eq!(s.module.actions()[0], expected);
        // biproduct identities
        for k in 0..2 {
            assert!(s.projections[k].compose(&s.inclusions[k]).unwrap().matrix().is_identity());
        }
        assert!(s.projections[0].compose(&s.inclusions[1]).unwrap().matrix().is_zero());
        let total = s.inclusions[0]
            .compose(&s.projections[0])
            .unwrap()
            .add(&s.inclusions[1].compose(&s.projections[1]).unwrap())
            .unwrap();
        assert!(total.matrix().is_identity());
    }

    #[test]
    fn split_idempotent_examples() {
        let p = gf(3);
        let c3 = builtin::cyclic_group(3);
        let a = builtin::jordan_block(&c3, p, 1).unwrap();
        let b = builtin::jordan_block(&c3, p, 2).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        let x = s.module.clone();

        let whole = split_idempotent(&x, &FpMatrix::identity(p, 3)).unwrap();
        assert_eq!(whole.module.dim(), 3);
        let none = split_idempotent(&x, &FpMatrix::zeros(p, 3, 3)).unwrap();
        assert_eq!(none.module.dim(), 0);

        let e = s.inclusions[0].compose(&s.projections[0]).unwrap();
        let first = split_idempotent(&x, e.matrix()).unwrap();
        assert_eq!(first.module.dim(), 1);
        assert!(first.module.actions()[0].is_identity());
        assert!(first.projection.compose(&first.inclusion).unwrap().matrix().is_identity());
        assert_eq!(first.inclusion.compose(&first.projection).unwrap(), e);

        let not_idem = FpMatrix::identity(p, 3).scale(2);
        assert!(matches!(split_idempotent(&x, &not_idem), Err(Error::NotIdempotent)));
        let mut not_equivariant = FpMatrix::zeros(p, 3, 3);
        not_equivariant.set(1, 1, 1);
        assert!(matches!(split_idempotent(&x, &not_equivariant), Err(Error::NotIntertwiner { .. })));
    }

    #[test]
    fn isomorphism_examples() {
        let p = gf(2);
        let c2 = builtin::cyclic_group(2);
        let j1 = builtin::jordan_block(&c2, p, 1).unwrap();
        let j2 = builtin::jordan_block(&c2, p, 2).unwrap();
        let reg = builtin::regular_module(&c2, p);
        assert!(is_isomorphic(&j2, &j2, 0).unwrap().unwrap().matrix().is_identity());
        assert!(is_isomorphic(&j1, &j2, 0).unwrap().is_none());
        let iso = is_isomorphic(&j2, &reg, 0).unwrap().unwrap();
        assert!(iso.is_isomorphism());
        // J1 + J1 and J2 share dimension but are not isomorphic
        let jj = direct_sum(&j1, &j1).unwrap().module;
        assert!(is_isomorphic(&jj, &j2, 3).unwrap().is_none());
    }

    #[test]
    fn submodule_and_quotient() {
        let p = gf(3);
        let c3 = builtin::cyclic_group(3);
        let j3 = builtin::jordan_block(&c3, p, 3).unwrap();
        let socle = j3.spin(&[vec![1, 0, 0]]);
        assert_eq!(socle.cols(), 1);
        let q = j3.quotient(&socle).unwrap();
        assert_eq!(q.module.dim(), 2);
        assert!(q.projection.is_surjective());
        assert!(q.projection.matrix().mul(&q.lift).unwrap().is_identity());
        let j2 = builtin::jordan_block(&c3, p, 2).unwrap();
        assert!(is_isomorphic(&q.module, &j2, 0).unwrap().is_some());
        let (sub, incl) = j3.submodule(&socle).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(incl.is_injective());
    }
}

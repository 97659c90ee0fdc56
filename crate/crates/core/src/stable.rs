//! Relative projectivity, stable Hom, relative (co)syzygies, triangles and
//! stable isomorphism.
//!
//! Maps `X -> M R Y` are parametrized through the adjunction as
//! `M(phi) ∘ eta_X` for `phi ∈ Hom_B(L X, R Y)`, which keeps every solve on
//! the small side.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjoint::AdjointTriple;
use crate::error::{Error, Result};
use crate::exact::{is_split_mono, ShortExactSeq};
use crate::field::{increment, EchelonBasis, FpMatrix};
use crate::module::{direct_sum, hom_space, is_isomorphic, solve_in_span, ModuleMap, ModuleRep};

/// Default enumeration budget of [`is_stably_isomorphic`].
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Maps `X -> M R Y` of the form `M(phi) ∘ eta_X`, one per basis element
/// of `Hom_B(L X, R Y)`.
fn maps_into_induced<C: AdjointTriple + ?Sized>(ctx: &C, x: &ModuleRep, y: &ModuleRep) -> Result<Vec<ModuleMap>> {
    let eta = ctx.unit(x)?;
    let lx = ctx.left_adjoint(x)?;
    let ry = ctx.right_adjoint(y)?;
    hom_space(&lx, &ry)?
        .into_iter()
        .map(|phi| {
            let m_phi = ctx.induce_map(&phi)?;
            m_phi.compose(&eta)
        })
        .collect()
}

/// The composites `eps_Y ∘ h` over a basis of `Hom(X, M R Y)`, paired with `h`.
fn factoring_generators<C: AdjointTriple + ?Sized>(
    ctx: &C,
    x: &ModuleRep,
    y: &ModuleRep,
) -> Result<(Vec<ModuleMap>, Vec<ModuleMap>)> {
    let eps = ctx.counit(y)?;
    let hs = maps_into_induced(ctx, x, y)?;
    let composites = hs.iter().map(|h| eps.compose(h)).collect::<Result<Vec<_>>>()?;
    Ok((hs, composites))
}

/// Higman's criterion: a section of `eps_X`, if one exists. The solve is
/// exact, so `None` is definitive.
pub fn is_relatively_projective<C: AdjointTriple + ?Sized>(ctx: &C, x: &ModuleRep) -> Result<Option<ModuleMap>> {
    factors_through_relproj(ctx, &ModuleMap::identity(x))
}

/// `h : X -> M R Y` with `eps_Y ∘ h = f`, if `f` factors through a
/// relatively projective module.
pub fn factors_through_relproj<C: AdjointTriple + ?Sized>(ctx: &C, f: &ModuleMap) -> Result<Option<ModuleMap>> {
    let (x, y) = (f.source(), f.target());
    ctx.check_a(x)?;
    ctx.check_a(y)?;
    let (hs, composites) = factoring_generators(ctx, x, y)?;
    let target = ctx.induce_right(y)?;
    if hs.is_empty() {
        return Ok(f.matrix().is_zero().then(|| ModuleMap::zero(x, &target)));
    }
    let mats: Vec<FpMatrix> = composites.iter().map(|m| m.matrix().clone()).collect();
    Ok(solve_in_span(&mats, f.matrix())?.map(|c| linear_combination(&hs, &c, x, &target)))
}

/// `h' : M L X -> Y` with `h' ∘ eta_X = f`, searched over the full hom space
/// (independently of [`factors_through_relproj`]).
pub fn factors_through_unit<C: AdjointTriple + ?Sized>(ctx: &C, f: &ModuleMap) -> Result<Option<ModuleMap>> {
    let (x, y) = (f.source(), f.target());
    let eta = ctx.unit(x)?;
    let basis = hom_space(eta.target(), y)?;
    if basis.is_empty() {
        return Ok(f.matrix().is_zero().then(|| ModuleMap::zero(eta.target(), y)));
    }
    let mats: Vec<FpMatrix> = basis.iter().map(|h| h.matrix() * eta.matrix()).collect();
    Ok(solve_in_span(&mats, f.matrix())?.map(|c| linear_combination(&basis, &c, eta.target(), y)))
}

fn linear_combination(maps: &[ModuleMap], coeffs: &[u32], source: &ModuleRep, target: &ModuleRep) -> ModuleMap {
    let mut acc = FpMatrix::zeros(source.prime(), target.dim(), source.dim());
    for (m, &c) in maps.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &m.matrix().scale(c);
        }
    }
    ModuleMap::from_trusted(source.clone(), target.clone(), acc)
}

/// `Hom(X, Y)` modulo maps factoring through relatively projective modules,
/// represented by a deterministic complement basis.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub source: ModuleRep,
    pub target: ModuleRep,
    pub full_hom_basis: Vec<ModuleMap>,
    pub factoring_subspace_basis: Vec<ModuleMap>,
    pub quotient_representatives: Vec<ModuleMap>,
}

impl StableHom {
    pub fn stable_dimension(&self) -> usize {
        self.quotient_representatives.len()
    }

    pub fn dim_hom(&self) -> usize {
        self.full_hom_basis.len()
    }

    pub fn dim_factoring(&self) -> usize {
        self.factoring_subspace_basis.len()
    }

    /// Coordinates of `f` on the quotient representatives, and whether the
    /// remainder lies in the factoring subspace (always true for maps in
    /// `Hom(X, Y)`).
    pub fn stable_coordinates(&self, f: &FpMatrix) -> Result<Option<Vec<u32>>> {
        let mats: Vec<FpMatrix> = self
            .quotient_representatives
            .iter()
            .chain(&self.factoring_subspace_basis)
            .map(|m| m.matrix().clone())
            .collect();
        if mats.is_empty() {
            return Ok(f.is_zero().then(Vec::new));
        }
        let s = self.stable_dimension();
        Ok(solve_in_span(&mats, f)?.map(|c| c[..s].to_vec()))
    }

    /// Whether `f` is zero in the stable category.
    pub fn is_stably_zero(&self, f: &FpMatrix) -> Result<bool> {
        Ok(self.stable_coordinates(f)?.is_some_and(|c| c.iter().all(|&v| v == 0)))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StableHomSummary {
    pub dim_hom: usize,
    pub dim_factoring: usize,
    pub dim_stable: usize,
    pub representatives: Vec<Vec<Vec<u32>>>,
}

impl From<&StableHom> for StableHomSummary {
    fn from(s: &StableHom) -> Self {
        StableHomSummary {
            dim_hom: s.dim_hom(),
            dim_factoring: s.dim_factoring(),
            dim_stable: s.stable_dimension(),
            representatives: s.quotient_representatives.iter().map(|m| m.matrix().to_rows()).collect(),
        }
    }
}

pub fn stable_hom<C: AdjointTriple + ?Sized>(ctx: &C, x: &ModuleRep, y: &ModuleRep) -> Result<StableHom> {
    ctx.check_a(x)?;
    ctx.check_a(y)?;
    let full = hom_space(x, y)?;
    let (_, composites) = factoring_generators(ctx, x, y)?;
    let mut ech = EchelonBasis::new(x.prime(), x.dim() * y.dim());
    let mut factoring = Vec::new();
    for c in composites {
        if ech.insert(c.matrix().data()) {
            factoring.push(c);
        }
    }
    let mut reps = Vec::new();
    for f in &full {
        if ech.insert(f.matrix().data()) {
            reps.push(f.clone());
        }
    }
    debug_assert_eq!(factoring.len() + reps.len(), full.len());
    Ok(StableHom {
        source: x.clone(),
        target: y.clone(),
        full_hom_basis: full,
        factoring_subspace_basis: factoring,
        quotient_representatives: reps,
    })
}

/// `Omega^{-1} X = coker eta_X`.
#[derive(Clone, Debug)]
pub struct Cosyzygy {
    pub module: ModuleRep,
    pub unit: ModuleMap,
    /// `q : M L X -> Omega^{-1} X`
    pub projection: ModuleMap,
    lift: FpMatrix,
}

impl Cosyzygy {
    pub fn sequence(&self) -> Result<ShortExactSeq> {
        ShortExactSeq::new(self.unit.clone(), self.projection.clone())
    }
}

/// `Omega X = ker eps_X`.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub module: ModuleRep,
    /// `j : Omega X -> M R X`
    pub inclusion: ModuleMap,
    pub counit: ModuleMap,
}

impl Syzygy {
    pub fn sequence(&self) -> Result<ShortExactSeq> {
        ShortExactSeq::new(self.inclusion.clone(), self.counit.clone())
    }
}

pub fn relative_cosyzygy<C: AdjointTriple + ?Sized>(ctx: &C, x: &ModuleRep) -> Result<Cosyzygy> {
    let unit = ctx.unit(x)?;
    let q = unit.cokernel()?;
    Ok(Cosyzygy { module: q.module, unit, projection: q.projection, lift: q.lift })
}

pub fn relative_syzygy<C: AdjointTriple + ?Sized>(ctx: &C, x: &ModuleRep) -> Result<Syzygy> {
    let counit = ctx.counit(x)?;
    let (module, inclusion) = counit.kernel()?;
    Ok(Syzygy { module, inclusion, counit })
}

/// `Omega^{-1}(f) : Omega^{-1} X -> Omega^{-1} Y`, induced by `M L f` on cokernels.
pub fn cosyzygy_map<C: AdjointTriple + ?Sized>(
    ctx: &C,
    f: &ModuleMap,
    cx: &Cosyzygy,
    cy: &Cosyzygy,
) -> Result<ModuleMap> {
    let mlf = ctx.induce_map(&ctx.left_adjoint_map(f)?)?;
    let m = &(cy.projection.matrix() * mlf.matrix()) * &cx.lift;
    ModuleMap::new(cx.module.clone(), cy.module.clone(), m)
}

/// `X --f--> Y --g--> C --h--> Omega^{-1} X`.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub f: ModuleMap,
    pub g: ModuleMap,
    pub h: ModuleMap,
    pub cone: ModuleRep,
    pub shift: Cosyzygy,
}

impl Triangle {
    /// Names of the consecutive composites that do not factor through a
    /// relatively projective module (`g f`, `h g`, and `Omega^{-1}(f) h`).
    pub fn failures<C: AdjointTriple + ?Sized>(&self, ctx: &C) -> Result<Vec<&'static str>> {
        let mut out = Vec::new();
        if factors_through_relproj(ctx, &self.g.compose(&self.f)?)?.is_none() {
            out.push("g∘f");
        }
        if factors_through_relproj(ctx, &self.h.compose(&self.g)?)?.is_none() {
            out.push("h∘g");
        }
        let cy = relative_cosyzygy(ctx, self.f.target())?;
        let shifted = cosyzygy_map(ctx, &self.f, &self.shift, &cy)?;
        if factors_through_relproj(ctx, &shifted.compose(&self.h)?)?.is_none() {
            out.push("Ω⁻¹(f)∘h");
        }
        Ok(out)
    }
}

/// Cone of `f` as the cokernel of `x -> (eta_X x, -f x)`.
pub fn happel_triangle<C: AdjointTriple + ?Sized>(ctx: &C, f: &ModuleMap) -> Result<Triangle> {
    let (x, y) = (f.source(), f.target());
    ctx.check_a(x)?;
    let shift = relative_cosyzygy(ctx, x)?;
    let eta = &shift.unit;
    let sum = direct_sum(eta.target(), y)?;
    let alpha = eta.matrix().vstack(&f.matrix().scale(x.prime().neg(1)))?;
    let alpha = ModuleMap::from_trusted(x.clone(), sum.module.clone(), alpha);
    let q = alpha.cokernel()?;
    let g = q.projection.compose(&sum.inclusions[1])?;
    // (u, y) -> pi_X(u), which kills the image of alpha
    let h = &(shift.projection.matrix() * sum.projections[0].matrix()) * &q.lift;
    let h = ModuleMap::new(q.module.clone(), shift.module.clone(), h)?;
    Ok(Triangle { f: f.clone(), g, h, cone: q.module, shift })
}

/// An isomorphism `coker(i1) ⊕ P2 -> coker(i2) ⊕ P1`.
///
/// Both `P_k` must be relatively projective and both `i_k` injective with
/// split restriction; the lemma guarantees that the isomorphism exists, so
/// `None` can only come from an inconclusive random search.
pub fn schanuel_compare<C: AdjointTriple + ?Sized>(
    ctx: &C,
    i1: &ModuleMap,
    i2: &ModuleMap,
    seed: u64,
) -> Result<Option<ModuleMap>> {
    if i1.source() != i2.source() {
        return Err(Error::Precondition("both embeddings must start at the same module".into()));
    }
    for (k, i) in [i1, i2].into_iter().enumerate() {
        if is_relatively_projective(ctx, i.target())?.is_none() {
            return Err(Error::Precondition(format!("P{} is not relatively projective", k + 1)));
        }
        if !i.is_injective() || is_split_mono(&ctx.left_adjoint_map(i)?)?.is_none() {
            return Err(Error::Precondition(format!("i{} is not injective with split restriction", k + 1)));
        }
    }
    let q1 = i1.cokernel()?.module;
    let q2 = i2.cokernel()?.module;
    let lhs = direct_sum(&q1, i2.target())?.module;
    let rhs = direct_sum(&q2, i1.target())?.module;
    is_isomorphic(&lhs, &rhs, seed)
}

#[derive(Clone, Debug)]
pub enum StableIsoVerdict {
    /// `id - g f` and `id - f g` factor through relatively projectives.
    Yes { f: ModuleMap, g: ModuleMap },
    NoCertified,
    Inconclusive,
}

impl StableIsoVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            StableIsoVerdict::Yes { .. } => "yes",
            StableIsoVerdict::NoCertified => "no-certified",
            StableIsoVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// Searches for a stable isomorphism `X -> Y`.
///
/// Candidates `f` range over the stable quotient of `Hom(X, Y)` (exhaustively
/// when `p^dim` is within `budget`, otherwise `budget` seeded random draws).
/// For each `f` the inverse `g` is found by one linear solve, since the
/// conditions on `g` are affine-linear modulo the factoring subspaces.
pub fn is_stably_isomorphic<C: AdjointTriple + ?Sized>(
    ctx: &C,
    x: &ModuleRep,
    y: &ModuleRep,
    seed: u64,
    budget: u64,
) -> Result<StableIsoVerdict> {
    if x == y {
        return Ok(StableIsoVerdict::Yes { f: ModuleMap::identity(x), g: ModuleMap::identity(x) });
    }
    let xy = stable_hom(ctx, x, y)?;
    let yx = stable_hom(ctx, y, x)?;
    let xx = stable_hom(ctx, x, x)?;
    let yy = stable_hom(ctx, y, y)?;
    let x_zero = xx.stable_dimension() == 0;
    let y_zero = yy.stable_dimension() == 0;
    if x_zero && y_zero {
        return Ok(StableIsoVerdict::Yes { f: ModuleMap::zero(x, y), g: ModuleMap::zero(y, x) });
    }
    if x_zero != y_zero || xy.stable_dimension() == 0 || yx.stable_dimension() == 0 {
        return Ok(StableIsoVerdict::NoCertified);
    }

    let p = x.prime();
    let s = xy.stable_dimension();
    let total = (p.get() as f64).powi(s as i32);
    let exhaustive = total <= budget as f64;
    let try_candidate = |coeffs: &[u32]| -> Result<Option<StableIsoVerdict>> {
        let f = linear_combination(&xy.quotient_representatives, coeffs, x, y);
        Ok(solve_inverse(&f, &yx, &xx, &yy)?.map(|g| StableIsoVerdict::Yes { f, g }))
    };
    if exhaustive {
        let mut digits = vec![0u32; s];
        while increment(&mut digits, p.get()) {
            if let Some(v) = try_candidate(&digits)? {
                return Ok(v);
            }
        }
        Ok(StableIsoVerdict::NoCertified)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..budget {
            let digits: Vec<u32> = (0..s).map(|_| rng.random_range(0..p.get())).collect();
            if digits.iter().all(|&d| d == 0) {
                continue;
            }
            if let Some(v) = try_candidate(&digits)? {
                return Ok(v);
            }
        }
        Ok(StableIsoVerdict::Inconclusive)
    }
}

/// `g` in the span of the stable representatives of `Hom(Y, X)` with
/// `id_X - g f ∈ F(X, X)` and `id_Y - f g ∈ F(Y, Y)`.
fn solve_inverse(f: &ModuleMap, yx: &StableHom, xx: &StableHom, yy: &StableHom) -> Result<Option<ModuleMap>> {
    let (x, y) = (f.source(), f.target());
    let p = x.prime();
    let (n, m) = (x.dim(), y.dim());
    let gs = &yx.quotient_representatives;
    let fx = &xx.factoring_subspace_basis;
    let fy = &yy.factoring_subspace_basis;
    let unknowns = gs.len() + fx.len() + fy.len();
    let rows = n * n + m * m;
    let mut system = FpMatrix::zeros(p, rows, unknowns);
    for (j, g) in gs.iter().enumerate() {
        let gf = g.matrix() * f.matrix();
        let fg = f.matrix() * g.matrix();
        for (r, &v) in gf.data().iter().chain(fg.data()).enumerate() {
            system.set(r, j, v);
        }
    }
    for (k, h) in fx.iter().enumerate() {
        for (r, &v) in h.matrix().data().iter().enumerate() {
            system.set(r, gs.len() + k, v);
        }
    }
    for (k, h) in fy.iter().enumerate() {
        for (r, &v) in h.matrix().data().iter().enumerate() {
            system.set(n * n + r, gs.len() + fx.len() + k, v);
        }
    }
    let ix = FpMatrix::identity(p, n);
    let iy = FpMatrix::identity(p, m);
    let rhs: Vec<u32> = ix.data().iter().chain(iy.data()).copied().collect();
    let rhs = FpMatrix::column_vector(p, &rhs);
    Ok(system.solve_right(&rhs)?.map(|sol| {
        let coeffs = sol.column(0);
        linear_combination(gs, &coeffs[..gs.len()], y, x)
    }))
}

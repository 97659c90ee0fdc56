//! Short exact sequences, split detection, the relative exact structure of
//! sequences that split after restriction, and an instance-level audit of
//! the exact-category axioms.

use serde::{Deserialize, Serialize};

use crate::adjoint::{AdjointContext, AdjointTriple};
use crate::error::{Error, Result};
use crate::field::FpMatrix;
use crate::module::{direct_sum, hom_space, solve_in_span, ModuleMap, ModuleRep};
use crate::sample::Sampler;

/// `0 -> X -> Y -> Z -> 0`, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactSeq {
    inflation: ModuleMap,
    deflation: ModuleMap,
}

impl ShortExactSeq {
    pub fn new(inflation: ModuleMap, deflation: ModuleMap) -> Result<Self> {
        if inflation.target() != deflation.source() {
            return Err(Error::NotExact("inflation target differs from deflation source".into()));
        }
        if !inflation.is_injective() {
            return Err(Error::NotExact("inflation is not injective".into()));
        }
        if !deflation.is_surjective() {
            return Err(Error::NotExact("deflation is not surjective".into()));
        }
        if !(deflation.matrix() * inflation.matrix()).is_zero() {
            return Err(Error::NotExact("composite is nonzero".into()));
        }
        if inflation.rank() + deflation.rank() != inflation.target().dim() {
            return Err(Error::NotExact("image of the inflation is smaller than the kernel".into()));
        }
        Ok(ShortExactSeq { inflation, deflation })
    }

    /// Completes an injective map by its cokernel.
    pub fn from_inflation(inflation: ModuleMap) -> Result<Self> {
        if !inflation.is_injective() {
            return Err(Error::NotInjective);
        }
        let q = inflation.cokernel()?;
        Ok(ShortExactSeq { inflation, deflation: q.projection })
    }

    /// Completes a surjective map by its kernel.
    pub fn from_deflation(deflation: ModuleMap) -> Result<Self> {
        if !deflation.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let (_, inclusion) = deflation.kernel()?;
        Ok(ShortExactSeq { inflation: inclusion, deflation })
    }

    /// `0 -> X -> X ⊕ Z -> Z -> 0`.
    pub fn split(x: &ModuleRep, z: &ModuleRep) -> Result<Self> {
        let s = direct_sum(x, z)?;
        let [i, _] = s.inclusions;
        let [_, d] = s.projections;
        Ok(ShortExactSeq { inflation: i, deflation: d })
    }

    pub fn inflation(&self) -> &ModuleMap {
        &self.inflation
    }

    pub fn deflation(&self) -> &ModuleMap {
        &self.deflation
    }

    pub fn left(&self) -> &ModuleRep {
        self.inflation.source()
    }

    pub fn middle(&self) -> &ModuleRep {
        self.inflation.target()
    }

    pub fn right(&self) -> &ModuleRep {
        self.deflation.target()
    }
}

/// A module-map section `s` of `f` (`f ∘ s = id`), if one exists.
pub fn is_split_epi(f: &ModuleMap) -> Result<Option<ModuleMap>> {
    if !f.is_surjective() {
        return Ok(None);
    }
    let (y, z) = (f.source(), f.target());
    if z.dim() == 0 {
        return Ok(Some(ModuleMap::zero(z, y)));
    }
    let id = FpMatrix::identity(z.prime(), z.dim());
    if z.actions().is_empty() {
        let s = f.matrix().solve_right(&id)?.expect("surjective map has a right inverse");
        return Ok(Some(ModuleMap::from_trusted(z.clone(), y.clone(), s)));
    }
    let basis = hom_space(z, y)?;
    let images: Vec<FpMatrix> = basis.iter().map(|s| f.matrix() * s.matrix()).collect();
    Ok(solve_in_span(&images, &id)?.map(|c| combine_or_zero(&basis, &c, z, y)))
}

/// A module-map retraction `r` of `f` (`r ∘ f = id`), if one exists.
pub fn is_split_mono(f: &ModuleMap) -> Result<Option<ModuleMap>> {
    if !f.is_injective() {
        return Ok(None);
    }
    let (x, y) = (f.source(), f.target());
    if x.dim() == 0 {
        return Ok(Some(ModuleMap::zero(y, x)));
    }
    let id = FpMatrix::identity(x.prime(), x.dim());
    if x.actions().is_empty() {
        let r = f.matrix().solve_left(&id)?.expect("injective map has a left inverse");
        return Ok(Some(ModuleMap::from_trusted(y.clone(), x.clone(), r)));
    }
    let basis = hom_space(y, x)?;
    let images: Vec<FpMatrix> = basis.iter().map(|r| r.matrix() * f.matrix()).collect();
    Ok(solve_in_span(&images, &id)?.map(|c| combine_or_zero(&basis, &c, y, x)))
}

fn combine_or_zero(basis: &[ModuleMap], coeffs: &[u32], source: &ModuleRep, target: &ModuleRep) -> ModuleMap {
    let mut acc = FpMatrix::zeros(source.prime(), target.dim(), source.dim());
    for (m, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &m.matrix().scale(c);
        }
    }
    ModuleMap::from_trusted(source.clone(), target.clone(), acc)
}

/// Verdict of [`in_relative_structure`] with the `B`-side section of the
/// restricted deflation when it splits.
#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub section: Option<ModuleMap>,
}

/// Whether `L` of the surjection `d` splits; checks `R` as well and reports
/// [`Error::InconsistentSplitting`] if the two disagree.
pub fn relative_deflation_section<C: AdjointTriple + ?Sized>(ctx: &C, d: &ModuleMap) -> Result<Option<ModuleMap>> {
    ctx.check_a(d.source())?;
    let left = is_split_epi(&ctx.left_adjoint_map(d)?)?;
    let right = is_split_epi(&ctx.right_adjoint_map(d)?)?;
    if left.is_some() != right.is_some() {
        return Err(Error::InconsistentSplitting);
    }
    Ok(left)
}

/// Whether `L` of the injection `i` splits; dual of [`relative_deflation_section`].
pub fn relative_inflation_retraction<C: AdjointTriple + ?Sized>(ctx: &C, i: &ModuleMap) -> Result<Option<ModuleMap>> {
    ctx.check_a(i.source())?;
    let left = is_split_mono(&ctx.left_adjoint_map(i)?)?;
    let right = is_split_mono(&ctx.right_adjoint_map(i)?)?;
    if left.is_some() != right.is_some() {
        return Err(Error::InconsistentSplitting);
    }
    Ok(left)
}

/// Membership of `s` in the class of sequences whose restriction splits.
pub fn in_relative_structure<C: AdjointTriple + ?Sized>(ctx: &C, s: &ShortExactSeq) -> Result<Membership> {
    let section = relative_deflation_section(ctx, s.deflation())?;
    Ok(Membership { member: section.is_some(), section })
}

/// Surjective with split restriction.
pub fn is_relative_deflation<C: AdjointTriple + ?Sized>(ctx: &C, d: &ModuleMap) -> Result<bool> {
    Ok(d.is_surjective() && relative_deflation_section(ctx, d)?.is_some())
}

/// Injective with split restriction.
pub fn is_relative_inflation<C: AdjointTriple + ?Sized>(ctx: &C, i: &ModuleMap) -> Result<bool> {
    Ok(i.is_injective() && relative_inflation_retraction(ctx, i)?.is_some())
}

/// `Y' = Y ×_Z Z'` with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub module: ModuleRep,
    /// `d' : Y' -> Z'`
    pub deflation: ModuleMap,
    /// `f' : Y' -> Y`
    pub map: ModuleMap,
}

/// Pullback of the surjection `d : Y -> Z` along `f : Z' -> Z`.
pub fn pullback_deflation(d: &ModuleMap, f: &ModuleMap) -> Result<Pullback> {
    if d.target() != f.target() {
        return Err(Error::ContextMismatch("pullback needs a shared target".into()));
    }
    if !d.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (y, z2) = (d.source(), f.source());
    let sum = direct_sum(y, z2)?;
    // (y, z') -> d(y) - f(z')
    let diff = d.matrix().hstack(&f.matrix().scale(f.source().prime().neg(1)))?;
    let diff = ModuleMap::from_trusted(sum.module.clone(), d.target().clone(), diff);
    let (module, inclusion) = diff.kernel()?;
    let deflation = sum.projections[1].compose(&inclusion)?;
    let map = sum.projections[0].compose(&inclusion)?;
    Ok(Pullback { module, deflation, map })
}

/// `Y' = X' ⊔_X Y` with its two coprojections.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: ModuleRep,
    /// `i' : X' -> Y'`
    pub inflation: ModuleMap,
    /// `f' : Y -> Y'`
    pub map: ModuleMap,
}

/// Pushout of the injection `i : X -> Y` along `f : X -> X'`.
pub fn pushout_inflation(i: &ModuleMap, f: &ModuleMap) -> Result<Pushout> {
    if i.source() != f.source() {
        return Err(Error::ContextMismatch("pushout needs a shared source".into()));
    }
    if !i.is_injective() {
        return Err(Error::NotInjective);
    }
    let (x2, y) = (f.target(), i.target());
    let sum = direct_sum(x2, y)?;
    // x -> (f(x), -i(x))
    let anti = f.matrix().vstack(&i.matrix().scale(i.source().prime().neg(1)))?;
    let anti = ModuleMap::from_trusted(i.source().clone(), sum.module.clone(), anti);
    let q = anti.cokernel()?;
    let inflation = q.projection.compose(&sum.inclusions[0])?;
    let map = q.projection.compose(&sum.inclusions[1])?;
    Ok(Pushout { module: q.module, inflation, map })
}

/// Signature of the pullback used by [`axiom_audit_with`]; tests substitute
/// a corrupted one.
pub type PullbackFn = fn(&ModuleMap, &ModuleMap) -> Result<Pullback>;

/// One line of an audit report.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: String,
    pub checked: usize,
    pub failed: usize,
    pub failure_seeds: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(transparent)]
pub struct AuditReport {
    pub axioms: Vec<AxiomReport>,
}

impl AuditReport {
    pub fn total_failures(&self) -> usize {
        self.axioms.iter().map(|a| a.failed).sum()
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomReport> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }
}

pub const AXIOMS: [&str; 6] = ["Ex0", "Ex1", "Ex2", "Ex2op", "hyp-iv", "hyp-v"];

/// Audits the axioms on `samples` sampled instances each; sample `k` uses
/// seed `seed + k`, which is what `failure_seeds` lists.
pub fn axiom_audit(ctx: &AdjointContext, samples: usize, seed: u64) -> Result<AuditReport> {
    axiom_audit_with(ctx, samples, seed, pullback_deflation)
}

pub fn axiom_audit_with(ctx: &AdjointContext, samples: usize, seed: u64, pullback: PullbackFn) -> Result<AuditReport> {
    let mut axioms: Vec<AxiomReport> = AXIOMS
        .iter()
        .map(|a| AxiomReport { axiom: (*a).into(), checked: 0, failed: 0, failure_seeds: Vec::new() })
        .collect();
    for k in 0..samples as u64 {
        let s = seed.wrapping_add(k);
        let verdicts = [
            audit_ex0(ctx, s),
            audit_ex1(ctx, s),
            audit_ex2(ctx, s, pullback),
            audit_ex2op(ctx, s),
            audit_hyp_iv(ctx, s),
            audit_hyp_v(ctx, s),
        ];
        for (report, verdict) in axioms.iter_mut().zip(verdicts) {
            report.checked += 1;
            // an error while checking counts as a failure of that instance
            if !matches!(verdict, Ok(true)) {
                report.failed += 1;
                report.failure_seeds.push(s);
            }
        }
    }
    Ok(AuditReport { axioms })
}

/// The zero sequence and `0 -> 0 -> X -> X` belong to the structure.
fn audit_ex0(ctx: &AdjointContext, seed: u64) -> Result<bool> {
    let mut sampler = Sampler::new(ctx, seed);
    let x = sampler.module_a()?;
    let zero = ModuleRep::zero(x.acting().clone(), x.side(), x.prime());
    let z = ModuleMap::identity(&zero);
    let zero_seq = ShortExactSeq::new(z.clone(), z)?;
    let id_seq = ShortExactSeq::new(ModuleMap::zero(&zero, &x), ModuleMap::identity(&x))?;
    Ok(in_relative_structure(ctx, &zero_seq)?.member && in_relative_structure(ctx, &id_seq)?.member)
}

/// Composites of two deflations are deflations.
fn audit_ex1(ctx: &AdjointContext, seed: u64) -> Result<bool> {
    let mut sampler = Sampler::new(ctx, seed);
    let second = sampler.relative_sequence()?;
    let first = sampler.relative_deflation_onto(second.middle())?;
    if !is_relative_deflation(ctx, &first)? || !is_relative_deflation(ctx, second.deflation())? {
        return Ok(false);
    }
    is_relative_deflation(ctx, &second.deflation().compose(&first)?)
}

fn audit_ex2(ctx: &AdjointContext, seed: u64, pullback: PullbackFn) -> Result<bool> {
    let mut sampler = Sampler::new(ctx, seed);
    let seq = sampler.relative_sequence()?;
    let d = seq.deflation();
    let z = d.target();
    let z2 = sampler.module_a_near(z)?;
    let f = sampler.map(&z2, z)?;
    let pb = pullback(d, &f)?;
    let commutes = d.compose(&pb.map)? == f.compose(&pb.deflation)?;
    let dims = pb.module.dim() + z.dim() == d.source().dim() + z2.dim();
    Ok(commutes && dims && is_relative_deflation(ctx, &pb.deflation)?)
}

fn audit_ex2op(ctx: &AdjointContext, seed: u64) -> Result<bool> {
    let mut sampler = Sampler::new(ctx, seed);
    let seq = sampler.relative_sequence()?;
    let i = seq.inflation();
    let x = i.source();
    let x2 = sampler.module_a_near(x)?;
    let f = sampler.map(x, &x2)?;
    let po = pushout_inflation(i, &f)?;
    let commutes = po.map.compose(i)? == po.inflation.compose(&f)?;
    let dims = po.module.dim() + x.dim() == i.target().dim() + x2.dim();
    Ok(commutes && dims && is_relative_inflation(ctx, &po.inflation)?)
}

/// A map whose restriction is a split mono is a mono.
fn audit_hyp_iv(ctx: &AdjointContext, seed: u64) -> Result<bool> {
    let mut sampler = Sampler::new(ctx, seed);
    let f = sampler.mono_candidate()?;
    if is_split_mono(&ctx.left_adjoint_map(&f)?)?.is_some() {
        return Ok(f.is_injective());
    }
    Ok(true)
}

/// A map whose restriction is a split epi is an epi.
fn audit_hyp_v(ctx: &AdjointContext, seed: u64) -> Result<bool> {
    let mut sampler = Sampler::new(ctx, seed);
    let f = sampler.epi_candidate()?;
    if is_split_epi(&ctx.right_adjoint_map(&f)?)?.is_some() {
        return Ok(f.is_surjective());
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::module::is_isomorphic;

    fn map(x: &ModuleRep, y: &ModuleRep, rows: &[Vec<i64>]) -> ModuleMap {
        ModuleMap::new(x.clone(), y.clone(), FpMatrix::from_rows(x.prime(), rows).unwrap()).unwrap()
    }

    #[test]
    fn split_detection_examples() {
        let ctx = builtin::context("C2:1:p2").unwrap();
        let j1 = builtin::module(&ctx, "J1").unwrap();
        let j2 = builtin::module(&ctx, "J2").unwrap();
        let id = ModuleMap::identity(&j2);
        assert_eq!(is_split_epi(&id).unwrap().unwrap(), id);
        assert_eq!(is_split_mono(&id).unwrap().unwrap(), id);

        let top = map(&j2, &j1, &[vec![0, 1]]);
        assert!(is_split_epi(&top).unwrap().is_none());
        let socle = map(&j1, &j2, &[vec![1], vec![0]]);
        assert!(is_split_mono(&socle).unwrap().is_none());

        let s = direct_sum(&j1, &j2).unwrap();
        let sec = is_split_epi(&s.projections[0]).unwrap().unwrap();
        assert!(s.projections[0].compose(&sec).unwrap().matrix().is_identity());
        let ret = is_split_mono(&s.inclusions[1]).unwrap().unwrap();
        assert!(ret.compose(&s.inclusions[1]).unwrap().matrix().is_identity());
    }

    #[test]
    fn sequence_validation() {
        let ctx = builtin::context("C2:1:p2").unwrap();
        let j1 = builtin::module(&ctx, "J1").unwrap();
        let j2 = builtin::module(&ctx, "J2").unwrap();
        let socle = map(&j1, &j2, &[vec![1], vec![0]]);
        let top = map(&j2, &j1, &[vec![0, 1]]);
        ShortExactSeq::new(socle.clone(), top.clone()).unwrap();
        let zero = ModuleMap::zero(&j2, &j1);
        assert!(matches!(ShortExactSeq::new(socle.clone(), zero), Err(Error::NotExact(_))));
        let j3 = builtin::context("C3:1:p3").unwrap();
        let a = builtin::module(&j3, "J1").unwrap();
        let b = builtin::module(&j3, "J3").unwrap();
        let c = builtin::module(&j3, "J1").unwrap();
        // socle then top of J3 composes to zero but misses the middle
        let i = map(&a, &b, &[vec![1], vec![0], vec![0]]);
        let d = map(&b, &c, &[vec![0, 0, 1]]);
        assert!(matches!(ShortExactSeq::new(i, d), Err(Error::NotExact(_))));
    }

    #[test]
    fn membership_examples() {
        let ctx = builtin::context("C2:1:p2").unwrap();
        let j1 = builtin::module(&ctx, "J1").unwrap();
        let j2 = builtin::module(&ctx, "J2").unwrap();
        let seq = ShortExactSeq::new(map(&j1, &j2, &[vec![1], vec![0]]), map(&j2, &j1, &[vec![0, 1]])).unwrap();
        let m = in_relative_structure(&ctx, &seq).unwrap();
        assert!(m.member);
        let s = m.section.unwrap();
        assert!((seq.deflation().matrix() * s.matrix()).is_identity());

        // H = G: membership is plain splitting
        let whole = builtin::context("C2:C2:p2").unwrap();
        let j1 = builtin::module(&whole, "J1").unwrap();
        let j2 = builtin::module(&whole, "J2").unwrap();
        let seq = ShortExactSeq::new(map(&j1, &j2, &[vec![1], vec![0]]), map(&j2, &j1, &[vec![0, 1]])).unwrap();
        assert!(!in_relative_structure(&whole, &seq).unwrap().member);
        let split = ShortExactSeq::split(&j1, &j2).unwrap();
        assert!(in_relative_structure(&whole, &split).unwrap().member);
    }

    /// Oracle: every linear map `Z -> Y` over GF(3), filtered by
    /// `A3`-equivariance and being a section.
    fn brute_force_section(ctx: &AdjointContext, d: &ModuleMap) -> bool {
        let ld = ctx.restrict_map(d).unwrap();
        let (y, z) = (ld.source(), ld.target());
        let n = y.dim() * z.dim();
        let p = 3u32;
        (0..p.pow(n as u32)).any(|code| {
            let entries: Vec<i64> = (0..n).map(|k| i64::from(code / p.pow(k as u32) % p)).collect();
            let s = FpMatrix::from_vec(y.prime(), y.dim(), z.dim(), entries).unwrap();
            (ld.matrix() * &s).is_identity()
                && y.actions().iter().zip(z.actions()).all(|(a, b)| (a * &s) == (&s * b))
        })
    }

    #[test]
    fn membership_matches_brute_force_for_a3() {
        let ctx = builtin::context("S3:A3:p3").unwrap();
        // permutation module on three points, uniserial in characteristic 3
        let perm = builtin::context("S3:C2:p3").unwrap();
        let m3 = builtin::module(&perm, "perm").unwrap();
        let m = ModuleRep::new(builtin::group_acting(&builtin::symmetric_group(3)), crate::module::Side::A, m3.prime(), 3, m3.actions().to_vec()).unwrap();
        let fixed = m.spin(&[vec![1, 1, 1]]);
        let (_, incl) = m.submodule(&fixed).unwrap();
        let seq = ShortExactSeq::from_inflation(incl).unwrap();
        let verdict = in_relative_structure(&ctx, &seq).unwrap().member;
        assert_eq!(verdict, brute_force_section(&ctx, seq.deflation()));
        assert!(!verdict);

        let triv = builtin::trivial_a(&ctx).unwrap();
        let split = ShortExactSeq::split(&triv, &m).unwrap();
        assert_eq!(in_relative_structure(&ctx, &split).unwrap().member, brute_force_section(&ctx, split.deflation()));
    }

    #[test]
    fn pullback_examples() {
        let ctx = builtin::context("C3:1:p3").unwrap();
        let j1 = builtin::module(&ctx, "J1").unwrap();
        let j2 = builtin::module(&ctx, "J2").unwrap();
        let j3 = builtin::module(&ctx, "J3").unwrap();
        let d = map(&j3, &j1, &[vec![0, 0, 1]]);
        let f = map(&j2, &j1, &[vec![0, 1]]);
        let pb = pullback_deflation(&d, &f).unwrap();
        assert_eq!(pb.module.dim(), 4);
        assert!(pb.deflation.is_surjective());
        assert_eq!(pb.deflation.target(), &j2);
        assert_eq!(d.compose(&pb.map).unwrap(), f.compose(&pb.deflation).unwrap());

        let same = pullback_deflation(&d, &ModuleMap::identity(&j1)).unwrap();
        assert!(is_isomorphic(&same.module, &j3, 0).unwrap().is_some());
        let along = pullback_deflation(&ModuleMap::identity(&j1), &ModuleMap::zero(&j2, &j1)).unwrap();
        assert!(is_isomorphic(&along.module, &j2, 0).unwrap().is_some());

        assert!(matches!(pullback_deflation(&ModuleMap::zero(&j3, &j1), &f), Err(Error::NotSurjective)));
    }

    #[test]
    fn pushout_examples() {
        let ctx = builtin::context("C2:1:p2").unwrap();
        let j1 = builtin::module(&ctx, "J1").unwrap();
        let j2 = builtin::module(&ctx, "J2").unwrap();
        let socle = map(&j1, &j2, &[vec![1], vec![0]]);
        let po = pushout_inflation(&socle, &socle).unwrap();
        assert_eq!(po.module.dim(), 3);
        assert!(po.inflation.is_injective());
        assert_eq!(po.map.compose(&socle).unwrap(), po.inflation.compose(&socle).unwrap());

        let same = pushout_inflation(&socle, &ModuleMap::identity(&j1)).unwrap();
        assert!(is_isomorphic(&same.module, &j2, 0).unwrap().is_some());
        let triv = pushout_inflation(&ModuleMap::identity(&j1), &socle).unwrap();
        assert!(is_isomorphic(&triv.module, &j2, 0).unwrap().is_some());

        assert!(matches!(pushout_inflation(&ModuleMap::zero(&j1, &j2), &socle), Err(Error::NotInjective)));
    }

    #[test]
    fn small_audits_pass() {
        for name in ["C2:1:p2", "S3:A3:p3", "kC2:p2"] {
            let ctx = builtin::context(name).unwrap();
            let report = axiom_audit(&ctx, 12, 3).unwrap();
            assert_eq!(report.total_failures(), 0, "{name}: {report:?}");
            assert!(report.axioms.iter().all(|a| a.checked == 12));
        }
    }

    fn corrupted(d: &ModuleMap, f: &ModuleMap) -> Result<Pullback> {
        let mut pb = pullback_deflation(d, f)?;
        pb.deflation = ModuleMap::zero(pb.deflation.source(), pb.deflation.target());
        Ok(pb)
    }

    #[test]
    fn corrupted_pullback_is_caught() {
        let ctx = builtin::context("C2:1:p2").unwrap();
        let report = axiom_audit_with(&ctx, 10, 40, corrupted).unwrap();
        let ex2 = report.get("Ex2").unwrap();
        assert!(ex2.failed > 0);
        assert!(ex2.failure_seeds.iter().all(|s| (40..50).contains(s)));
        assert_eq!(report.total_failures(), ex2.failed);
    }
}

//! Named groups, contexts and modules used by the CLI and the test suites.
//!
//! Context names are `G:H:pP` for group pairs (`C3:1:p3`, `S3:A3:p3`,
//! `S3:C2:p3`) and `A:pP` for algebras (`kC2:p2`, `trunc3:p3`, `upper2:p2`).

use std::sync::Arc;

use crate::adjoint::{AdjointContext, AdjointTriple, ContextKind};
use crate::algebra::AlgebraData;
use crate::error::{Error, Result};
use crate::field::{FpMatrix, Prime};
use crate::group::{permutation_from_cycles, GroupData, SubgroupData};
use crate::module::{Acting, ModuleRep, Side};

/// The contexts exercised by the acceptance suite.
pub const ACCEPTANCE_CONTEXTS: &[&str] =
    &["C2:1:p2", "C3:1:p3", "C5:1:p5", "S3:A3:p3", "S3:C2:p3", "S3:1:p5", "kC2:p2", "trunc3:p3"];

/// Cyclic group of order `n` generated by the `n`-cycle; element `i` is `g^i`.
pub fn cyclic_group(n: usize) -> Arc<GroupData> {
    let gens = if n <= 1 { vec![] } else { vec![vec![(1..=n).collect::<Vec<_>>()]] };
    Arc::new(GroupData::from_cycles(&gens).expect("cyclic group"))
}

/// Symmetric group on `n` points generated by `(1 2)` and `(1 2 .. n)`.
pub fn symmetric_group(n: usize) -> Arc<GroupData> {
    let gens = match n {
        0 | 1 => vec![],
        2 => vec![vec![vec![1, 2]]],
        _ => vec![vec![vec![1, 2]], vec![(1..=n).collect::<Vec<_>>()]],
    };
    Arc::new(GroupData::from_cycles(&gens).expect("symmetric group"))
}

pub fn group_acting(group: &Arc<GroupData>) -> Acting {
    Acting::Group { group: group.clone(), generators: group.generators().to_vec() }
}

pub fn trivial_module(group: &Arc<GroupData>, p: Prime) -> ModuleRep {
    let actions = vec![FpMatrix::identity(p, 1); group.generators().len()];
    ModuleRep::from_trusted(group_acting(group), Side::A, p, 1, actions)
}

/// Left regular module on the element basis.
pub fn regular_module(group: &Arc<GroupData>, p: Prime) -> ModuleRep {
    let n = group.order();
    let actions = group
        .generators()
        .iter()
        .map(|&s| FpMatrix::from_fn(p, n, n, |r, c| u32::from(group.mul(s, c) == r)))
        .collect();
    ModuleRep::from_trusted(group_acting(group), Side::A, p, n, actions)
}

fn parity(perm: &[u32]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Sign character of a permutation group.
pub fn sign_module(group: &Arc<GroupData>, p: Prime) -> ModuleRep {
    let actions = group
        .generators()
        .iter()
        .map(|&s| {
            let v = if parity(group.permutation(s)) { p.neg(1) } else { 1 };
            FpMatrix::from_fn(p, 1, 1, |_, _| v)
        })
        .collect();
    ModuleRep::from_trusted(group_acting(group), Side::A, p, 1, actions)
}

/// Nilpotent shift `N` with `N e_j = e_{j-1}`; the socle is `e_0`.
fn shift(p: Prime, n: usize) -> FpMatrix {
    FpMatrix::from_fn(p, n, n, |r, c| u32::from(c == r + 1))
}

/// Jordan block `J_n` of a cyclic group: the generator acts as `I + N`.
pub fn jordan_block(group: &Arc<GroupData>, p: Prime, n: usize) -> Result<ModuleRep> {
    if group.generators().len() > 1 {
        return Err(Error::Precondition("Jordan blocks need a cyclic group with one generator".into()));
    }
    let unipotent = &FpMatrix::identity(p, n) + &shift(p, n);
    let actions = vec![unipotent; group.generators().len()];
    ModuleRep::new(group_acting(group), Side::A, p, n, actions)
}

fn matrix_power(m: &FpMatrix, k: usize) -> FpMatrix {
    (0..k).fold(FpMatrix::identity(m.prime(), m.rows()), |acc, _| &acc * m)
}

/// `J_n` over `GF(p)[x]/x^d` or `GF(p)C_d`, where basis element `e_i` is the
/// `i`-th power of `x` or of the group generator.
pub fn algebra_jordan_block(alg: &Arc<AlgebraData>, n: usize) -> Result<ModuleRep> {
    let p = alg.prime();
    let d = alg.dim();
    let step = if **alg == AlgebraData::truncated_polynomial(d, p) {
        shift(p, n)
    } else if **alg == AlgebraData::group_algebra(&cyclic_group(d), p) {
        &FpMatrix::identity(p, n) + &shift(p, n)
    } else {
        return Err(Error::Precondition("Jordan blocks need a truncated polynomial or cyclic group algebra".into()));
    };
    let actions = (0..d).map(|i| matrix_power(&step, i)).collect();
    ModuleRep::new(Acting::Algebra(alg.clone()), Side::A, p, n, actions)
}

/// The algebra acting on itself by left multiplication.
pub fn regular_algebra_module(alg: &Arc<AlgebraData>) -> ModuleRep {
    let actions = (0..alg.dim()).map(|a| alg.left_mult(a)).collect();
    ModuleRep::from_trusted(Acting::Algebra(alg.clone()), Side::A, alg.prime(), alg.dim(), actions)
}

fn parse_prime(s: &str) -> Result<Prime> {
    let digits = s.strip_prefix('p').ok_or_else(|| Error::Precondition(format!("expected pN, got {s:?}")))?;
    let v: u64 = digits.parse().map_err(|_| Error::Precondition(format!("bad prime {s:?}")))?;
    Prime::new(v)
}

fn parse_suffix(s: &str, prefix: &str) -> Option<usize> {
    s.strip_prefix(prefix)?.parse().ok()
}

fn parse_group(s: &str) -> Result<Arc<GroupData>> {
    if let Some(n) = parse_suffix(s, "C") {
        Ok(cyclic_group(n))
    } else if let Some(n) = parse_suffix(s, "S") {
        Ok(symmetric_group(n))
    } else {
        Err(Error::Precondition(format!("unknown group {s:?}; expected Cn or Sn")))
    }
}

fn element(group: &GroupData, cycles: &[Vec<usize>]) -> Result<usize> {
    let perm = permutation_from_cycles(group.degree(), cycles)?;
    group.find(&perm).ok_or_else(|| Error::InvalidGroup(format!("{cycles:?} is not in the group")))
}

fn parse_subgroup(group: &Arc<GroupData>, gname: &str, s: &str) -> Result<SubgroupData> {
    if s == "1" {
        return Ok(SubgroupData::trivial(group.clone()));
    }
    if s == gname {
        return Ok(SubgroupData::whole(group.clone()));
    }
    let n = group.degree();
    let unknown = || Error::Precondition(format!("unknown subgroup {s:?} of {gname}"));
    let gens = if gname.starts_with('C') {
        // C_k inside C_n is generated by g^(n/k)
        let k = parse_suffix(s, "C").filter(|&k| k > 0 && n.is_multiple_of(k)).ok_or_else(unknown)?;
        let g = group.generators().first().copied().unwrap_or(0);
        vec![(0..n / k).fold(0, |acc, _| group.mul(acc, g))]
    } else if let Some(k) = parse_suffix(s, "A").filter(|&k| k == n) {
        (3..=k).map(|j| element(group, &[vec![1, 2, j]])).collect::<Result<Vec<_>>>()?
    } else if s == "C2" && n >= 2 {
        vec![element(group, &[vec![1, 2]])?]
    } else if let Some(k) = parse_suffix(s, "C").filter(|&k| k >= 2 && k <= n) {
        vec![element(group, &[(1..=k).collect()])?]
    } else {
        return Err(unknown());
    };
    SubgroupData::closure(group.clone(), &gens)
}

fn parse_algebra(s: &str, p: Prime) -> Result<AlgebraData> {
    if let Some(n) = parse_suffix(s, "kC") {
        Ok(AlgebraData::group_algebra(&cyclic_group(n), p))
    } else if let Some(n) = parse_suffix(s, "kS") {
        Ok(AlgebraData::group_algebra(&symmetric_group(n), p))
    } else if let Some(n) = parse_suffix(s, "trunc") {
        Ok(AlgebraData::truncated_polynomial(n, p))
    } else if s == "upper2" {
        Ok(AlgebraData::upper_triangular_2(p))
    } else {
        Err(Error::Precondition(format!("unknown algebra {s:?}; expected kCn, kSn, truncN or upper2")))
    }
}

/// A named built-in algebra such as `kC2:p2` or `upper2:p3`.
pub fn algebra(name: &str) -> Result<AlgebraData> {
    match name.split(':').collect::<Vec<_>>().as_slice() {
        [a, p] => parse_algebra(a, parse_prime(p)?),
        _ => Err(Error::Precondition(format!("cannot parse algebra name {name:?}"))),
    }
}

/// Builds a named built-in context.
pub fn context(name: &str) -> Result<AdjointContext> {
    let parts: Vec<&str> = name.split(':').collect();
    let ctx = match parts.as_slice() {
        [g, h, p] => {
            let p = parse_prime(p)?;
            let group = parse_group(g)?;
            let sub = parse_subgroup(&group, g, h)?;
            AdjointContext::group_induction(group, Arc::new(sub), p)?
        }
        [_, _] => AdjointContext::free_module(Arc::new(algebra(name)?), 0)?,
        _ => return Err(Error::Precondition(format!("cannot parse context name {name:?}"))),
    };
    Ok(ctx.with_name(name))
}

/// Trivial module on the `A` side. Algebra contexts need a local algebra
/// with a Jordan-block description.
pub fn trivial_a(ctx: &AdjointContext) -> Result<ModuleRep> {
    match ctx.kind() {
        ContextKind::GroupInduction { group, .. } => Ok(trivial_module(group, ctx.prime())),
        ContextKind::FreeModule { algebra, .. } => algebra_jordan_block(algebra, 1),
    }
}

pub fn regular_a(ctx: &AdjointContext) -> Result<ModuleRep> {
    Ok(match ctx.kind() {
        ContextKind::GroupInduction { group, .. } => regular_module(group, ctx.prime()),
        ContextKind::FreeModule { algebra, .. } => regular_algebra_module(algebra),
    })
}

/// A vector space of dimension `n` on the `B` side of an algebra context.
pub fn bare_space(p: Prime, n: usize) -> ModuleRep {
    ModuleRep::from_trusted(Acting::Field, Side::B, p, n, Vec::new())
}

/// Trivial `H`-module, or the one-dimensional space.
pub fn trivial_b(ctx: &AdjointContext) -> Result<ModuleRep> {
    let p = ctx.prime();
    Ok(match ctx.kind() {
        ContextKind::GroupInduction { subgroup, .. } => {
            let actions = vec![FpMatrix::identity(p, 1); subgroup.generators().len()];
            ModuleRep::from_trusted(ctx.b_acting().clone(), Side::B, p, 1, actions)
        }
        ContextKind::FreeModule { .. } => bare_space(p, 1),
    })
}

/// Regular `kH`-module on the sorted element basis of `H`, or a
/// two-dimensional space.
pub fn regular_b(ctx: &AdjointContext) -> Result<ModuleRep> {
    let p = ctx.prime();
    Ok(match ctx.kind() {
        ContextKind::GroupInduction { group, subgroup } => {
            let elems = subgroup.elements();
            let n = elems.len();
            let pos = |g: usize| elems.binary_search(&g).expect("closed under multiplication");
            let actions = subgroup
                .generators()
                .iter()
                .map(|&s| FpMatrix::from_fn(p, n, n, |r, c| u32::from(pos(group.mul(s, elems[c])) == r)))
                .collect();
            ModuleRep::from_trusted(ctx.b_acting().clone(), Side::B, p, n, actions)
        }
        ContextKind::FreeModule { .. } => bare_space(p, 2),
    })
}

/// Resolves a built-in module name in a context.
///
/// `A` side: `triv`, `regular`, `sign`, `J<n>`, `perm` (induced trivial).
/// `B` side: `B:triv`, `B:regular`, `B:k<n>` (bare space).
/// `ind:<B-name>` induces a `B`-side module.
pub fn module(ctx: &AdjointContext, name: &str) -> Result<ModuleRep> {
    if let Some(inner) = name.strip_prefix("ind:") {
        let y = module(ctx, &format!("B:{}", inner.strip_prefix("B:").unwrap_or(inner)))?;
        return ctx.induce(&y);
    }
    if let Some(b) = name.strip_prefix("B:") {
        return match b {
            "triv" => trivial_b(ctx),
            "regular" => regular_b(ctx),
            _ => match (ctx.kind(), parse_suffix(b, "k")) {
                (ContextKind::FreeModule { .. }, Some(n)) => Ok(bare_space(ctx.prime(), n)),
                _ => Err(Error::Precondition(format!("unknown B-side module {name:?}"))),
            },
        };
    }
    match name {
        "triv" => trivial_a(ctx),
        "regular" => regular_a(ctx),
        "perm" => ctx.induce(&trivial_b(ctx)?),
        "sign" => match ctx.kind() {
            ContextKind::GroupInduction { group, .. } => Ok(sign_module(group, ctx.prime())),
            _ => Err(Error::Precondition("sign needs a group context".into())),
        },
        _ => {
            let n = parse_suffix(name, "J").ok_or_else(|| Error::Precondition(format!("unknown module {name:?}")))?;
            match ctx.kind() {
                ContextKind::GroupInduction { group, .. } => jordan_block(group, ctx.prime(), n),
                ContextKind::FreeModule { algebra, .. } => algebra_jordan_block(algebra, n),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_contexts() {
        for name in ACCEPTANCE_CONTEXTS {
            let ctx = context(name).unwrap();
            assert_eq!(ctx.name(), *name);
        }
        assert_eq!(context("S3:A3:p3").unwrap().index(), 2);
        assert_eq!(context("S3:C2:p3").unwrap().index(), 3);
        assert_eq!(context("C6:C3:p2").unwrap().index(), 2);
        assert_eq!(context("S4:A4:p2").unwrap().index(), 2);
        assert_eq!(context("trunc3:p3").unwrap().index(), 3);
        assert!(matches!(context("upper2:p2"), Err(Error::NotFrobenius)));
        assert!(matches!(context("C3:1:p4"), Err(Error::NotPrime(4))));
        assert!(context("C3:C2:p3").is_err());
        assert!(context("Q8:1:p2").is_err());
    }

    #[test]
    fn sign_is_a_character() {
        let s3 = symmetric_group(3);
        let sign = sign_module(&s3, Prime::new(5).unwrap());
        ModuleRep::new(sign.acting().clone(), Side::A, sign.prime(), 1, sign.actions().to_vec()).unwrap();
        assert_eq!(sign.actions()[0].get(0, 0), 4);
        assert_eq!(sign.actions()[1].get(0, 0), 1);
    }

    #[test]
    fn jordan_blocks_validate() {
        let ctx = context("C3:1:p3").unwrap();
        for n in 1..=3 {
            assert_eq!(module(&ctx, &format!("J{n}")).unwrap().dim(), n);
        }
        // (I + N)^3 = I fails for n = 4 over GF(3)
        assert!(module(&ctx, "J4").is_err());
        let alg = context("trunc3:p3").unwrap();
        let j3 = module(&alg, "J3").unwrap();
        assert!(crate::module::is_isomorphic(&j3, &regular_a(&alg).unwrap(), 0).unwrap().is_some());
        let kc2 = context("kC2:p2").unwrap();
        assert_eq!(module(&kc2, "J2").unwrap().dim(), 2);
        assert!(module(&kc2, "J3").is_err());
    }

    #[test]
    fn named_modules() {
        let ctx = context("S3:C2:p3").unwrap();
        assert_eq!(module(&ctx, "perm").unwrap().dim(), 3);
        assert_eq!(module(&ctx, "ind:regular").unwrap().dim(), 6);
        assert_eq!(module(&ctx, "B:regular").unwrap().dim(), 2);
        assert!(module(&ctx, "J2").is_err());
        let alg = context("kC2:p2").unwrap();
        assert_eq!(module(&alg, "B:k3").unwrap().dim(), 3);
        assert_eq!(module(&alg, "ind:k2").unwrap().dim(), 4);
    }
}

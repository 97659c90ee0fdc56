//! Seeded pseudo-random modules, maps and relative sequences for audits and
//! property checks.
//!
//! Modules are subquotients (and small direct sums) of a fixed list of base
//! modules of the context, so every sample is a genuine representation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjoint::{AdjointContext, AdjointTriple, ContextKind};
use crate::builtin;
use crate::error::Result;
use crate::exact::{is_relative_deflation, ShortExactSeq};
use crate::field::FpMatrix;
use crate::module::{direct_sum, hom_space, ModuleMap, ModuleRep};

/// Default dimension cap for sampled modules.
pub const MAX_DIM: usize = 8;

/// Largest base module the sampler will cut subquotients from.
const MAX_BASE_DIM: usize = 18;

pub struct Sampler<'a> {
    ctx: &'a AdjointContext,
    rng: ChaCha8Rng,
    max_dim: usize,
    bases_a: Vec<ModuleRep>,
    bases_b: Vec<ModuleRep>,
}

fn base_modules_a(ctx: &AdjointContext) -> Vec<ModuleRep> {
    let mut out = Vec::new();
    let p = ctx.prime();
    match ctx.kind() {
        ContextKind::GroupInduction { group, .. } => {
            out.push(builtin::trivial_module(group, p));
            out.push(builtin::sign_module(group, p));
            out.push(builtin::regular_module(group, p));
            if group.generators().len() == 1 {
                out.extend((2..=group.order()).filter_map(|n| builtin::jordan_block(group, p, n).ok()));
            }
        }
        ContextKind::FreeModule { algebra, .. } => {
            out.push(builtin::regular_algebra_module(algebra));
            out.extend((1..algebra.dim()).filter_map(|n| builtin::algebra_jordan_block(algebra, n).ok()));
        }
    }
    for y in base_modules_b(ctx) {
        if let Ok(m) = ctx.induce(&y) {
            out.push(m);
        }
    }
    out.retain(|m| m.dim() <= MAX_BASE_DIM);
    out
}

fn base_modules_b(ctx: &AdjointContext) -> Vec<ModuleRep> {
    match ctx.kind() {
        ContextKind::GroupInduction { .. } => {
            [builtin::trivial_b(ctx), builtin::regular_b(ctx)].into_iter().filter_map(Result::ok).collect()
        }
        ContextKind::FreeModule { .. } => (1..=3).map(|n| builtin::bare_space(ctx.prime(), n)).collect(),
    }
}

impl<'a> Sampler<'a> {
    pub fn new(ctx: &'a AdjointContext, seed: u64) -> Self {
        Sampler {
            ctx,
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_dim: MAX_DIM,
            bases_a: base_modules_a(ctx),
            bases_b: base_modules_b(ctx),
        }
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim.max(1);
        self
    }

    pub fn context(&self) -> &AdjointContext {
        self.ctx
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn random_vector(&mut self, n: usize) -> Vec<u32> {
        let p = self.ctx.prime().get();
        (0..n).map(|_| self.rng.random_range(0..p)).collect()
    }

    fn pick<'b>(&mut self, items: &'b [ModuleRep]) -> &'b ModuleRep {
        &items[self.rng.random_range(0..items.len())]
    }

    /// A random subquotient of `base`: a cyclic (or two-generated) submodule,
    /// optionally divided by a cyclic submodule of itself.
    fn subquotient(&mut self, base: &ModuleRep) -> Result<ModuleRep> {
        let n = base.dim();
        if n == 0 {
            return Ok(base.clone());
        }
        let mode = self.rng.random_range(0..4);
        let sub = if mode == 0 {
            base.clone()
        } else {
            let gens = (0..self.rng.random_range(1..=2)).map(|_| self.random_vector(n)).collect::<Vec<_>>();
            let span = base.spin(&gens);
            base.submodule(&span)?.0
        };
        if mode >= 2 && sub.dim() > 0 {
            let v = self.random_vector(sub.dim());
            let span = sub.spin(&[v]);
            if span.cols() < sub.dim() {
                return Ok(sub.quotient(&span)?.module);
            }
        }
        Ok(sub)
    }

    fn sample_from(&mut self, bases: &[ModuleRep], max_dim: usize) -> Result<ModuleRep> {
        for _ in 0..24 {
            let base = self.pick(bases).clone();
            let m = self.subquotient(&base)?;
            if m.dim() == 0 || m.dim() > max_dim {
                continue;
            }
            // occasionally add a second summand
            if self.rng.random_range(0..4) == 0 {
                let second = self.pick(bases).clone();
                let other = self.subquotient(&second)?;
                if other.dim() > 0 && m.dim() + other.dim() <= max_dim {
                    return Ok(direct_sum(&m, &other)?.module);
                }
            }
            return Ok(m);
        }
        let smallest = bases.iter().min_by_key(|m| m.dim()).expect("at least one base module");
        Ok(smallest.clone())
    }

    /// A random nonzero `A`-side module of dimension at most the cap.
    pub fn module_a(&mut self) -> Result<ModuleRep> {
        let bases = self.bases_a.clone();
        self.sample_from(&bases, self.max_dim)
    }

    pub fn module_a_capped(&mut self, max_dim: usize) -> Result<ModuleRep> {
        let bases = self.bases_a.clone();
        self.sample_from(&bases, max_dim.max(1))
    }

    /// A random nonzero `B`-side module.
    pub fn module_b(&mut self) -> Result<ModuleRep> {
        let bases = self.bases_b.clone();
        self.sample_from(&bases, self.max_dim)
    }

    /// Either `x` itself, a fresh module, or `x` plus a summand; biased
    /// towards modules with nonzero maps to and from `x`.
    pub fn module_a_near(&mut self, x: &ModuleRep) -> Result<ModuleRep> {
        match self.rng.random_range(0..3) {
            0 => Ok(x.clone()),
            1 => self.module_a(),
            _ => {
                let extra = self.module_a_capped(3)?;
                Ok(direct_sum(x, &extra)?.module)
            }
        }
    }

    /// A uniformly random element of `Hom(x, y)`.
    pub fn map(&mut self, x: &ModuleRep, y: &ModuleRep) -> Result<ModuleMap> {
        let basis = hom_space(x, y)?;
        let coeffs = self.random_vector(basis.len());
        let mut acc = FpMatrix::zeros(x.prime(), y.dim(), x.dim());
        for (b, c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc = &acc + &b.matrix().scale(c);
            }
        }
        Ok(ModuleMap::from_trusted(x.clone(), y.clone(), acc))
    }

    /// Largest `X` whose induced module stays below the base-module cap.
    fn unit_source_cap(&self) -> usize {
        (MAX_BASE_DIM / self.ctx.index().max(1)).clamp(1, self.max_dim)
    }

    /// A sequence in the relative structure: the unit or counit sequence of
    /// a random module, a split sequence, or a random submodule sequence
    /// that happens to restrict to a split one.
    pub fn relative_sequence(&mut self) -> Result<ShortExactSeq> {
        match self.rng.random_range(0..4) {
            0 => {
                let x = self.module_a_capped(self.unit_source_cap())?;
                ShortExactSeq::from_inflation(self.ctx.unit(&x)?)
            }
            1 => {
                let x = self.module_a_capped(self.unit_source_cap())?;
                ShortExactSeq::from_deflation(self.ctx.counit(&x)?)
            }
            2 => {
                let x = self.module_a_capped(self.max_dim / 2)?;
                let z = self.module_a_capped(self.max_dim / 2)?;
                ShortExactSeq::split(&x, &z)
            }
            _ => {
                for _ in 0..8 {
                    let y = self.module_a()?;
                    let v = self.random_vector(y.dim());
                    let span = y.spin(&[v]);
                    let (_, incl) = y.submodule(&span)?;
                    let seq = ShortExactSeq::from_inflation(incl)?;
                    if is_relative_deflation(self.ctx, seq.deflation())? {
                        return Ok(seq);
                    }
                }
                let x = self.module_a_capped(self.unit_source_cap())?;
                ShortExactSeq::from_inflation(self.ctx.unit(&x)?)
            }
        }
    }

    /// A relative deflation with target `z`: the counit, a projection
    /// `z ⊕ V -> z`, or `[counit, g] : IndRes z ⊕ V -> z`.
    pub fn relative_deflation_onto(&mut self, z: &ModuleRep) -> Result<ModuleMap> {
        match self.rng.random_range(0..3) {
            0 => self.ctx.counit(z),
            1 => {
                let v = self.module_a_capped(3)?;
                Ok(direct_sum(z, &v)?.projections[0].clone())
            }
            _ => {
                let eps = self.ctx.counit(z)?;
                let v = self.module_a_capped(3)?;
                let g = self.map(&v, z)?;
                let sum = direct_sum(eps.source(), &v)?;
                let m = eps.matrix().hstack(g.matrix())?;
                Ok(ModuleMap::from_trusted(sum.module, z.clone(), m))
            }
        }
    }

    /// Maps likely (not certain) to be injective: units, unit plus a random
    /// map, inclusions of summands and random maps.
    pub fn mono_candidate(&mut self) -> Result<ModuleMap> {
        let x = self.module_a_capped(self.unit_source_cap())?;
        match self.rng.random_range(0..3) {
            0 => self.ctx.unit(&x),
            1 => {
                let eta = self.ctx.unit(&x)?;
                let r = self.map(&x, eta.target())?;
                eta.add(&r)
            }
            _ => {
                let y = self.module_a_near(&x)?;
                self.map(&x, &y)
            }
        }
    }

    /// Dual of [`Sampler::mono_candidate`].
    pub fn epi_candidate(&mut self) -> Result<ModuleMap> {
        let x = self.module_a_capped(self.unit_source_cap())?;
        match self.rng.random_range(0..3) {
            0 => self.ctx.counit(&x),
            1 => {
                let eps = self.ctx.counit(&x)?;
                let r = self.map(eps.source(), &x)?;
                eps.add(&r)
            }
            _ => {
                let y = self.module_a_near(&x)?;
                self.map(&y, &x)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::in_relative_structure;

    #[test]
    fn samples_are_valid_and_reproducible() {
        for name in builtin::ACCEPTANCE_CONTEXTS {
            let ctx = builtin::context(name).unwrap();
            let mut a = Sampler::new(&ctx, 11);
            let mut b = Sampler::new(&ctx, 11);
            for _ in 0..5 {
                let x = a.module_a().unwrap();
                assert_eq!(x, b.module_a().unwrap());
                assert!(x.dim() >= 1 && x.dim() <= MAX_DIM, "{name}");
                ModuleRep::new(x.acting().clone(), x.side(), x.prime(), x.dim(), x.actions().to_vec()).unwrap();
                let y = a.module_b().unwrap();
                b.module_b().unwrap();
                ctx.check_b(&y).unwrap();
            }
        }
    }

    #[test]
    fn relative_sequences_are_members() {
        for name in ["C3:1:p3", "S3:C2:p3", "trunc3:p3"] {
            let ctx = builtin::context(name).unwrap();
            let mut s = Sampler::new(&ctx, 5);
            for _ in 0..10 {
                let seq = s.relative_sequence().unwrap();
                assert!(in_relative_structure(&ctx, &seq).unwrap().member, "{name}");
                let z = seq.right().clone();
                let d = s.relative_deflation_onto(&z).unwrap();
                assert!(is_relative_deflation(&ctx, &d).unwrap());
            }
        }
    }
}

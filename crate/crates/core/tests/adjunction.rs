use mstab_core::adjoint::{check_naturality, check_triangle_identities, AdjointContext, AdjointTriple};
use mstab_core::builtin;
use mstab_core::module::{Acting, ModuleMap, ModuleRep};
use mstab_core::sample::Sampler;
use mstab_core::stable::stable_hom;
use mstab_core::{Prime, Result};

/// Delegates everything but scales the unit of `L ⊣ M` by 2.
struct ScaledUnit(AdjointContext);

impl AdjointTriple for ScaledUnit {
    fn prime(&self) -> Prime {
        self.0.prime()
    }
    fn a_acting(&self) -> &Acting {
        self.0.a_acting()
    }
    fn b_acting(&self) -> &Acting {
        self.0.b_acting()
    }
    fn left_adjoint(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.0.left_adjoint(x)
    }
    fn left_adjoint_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.0.left_adjoint_map(f)
    }
    fn right_adjoint(&self, x: &ModuleRep) -> Result<ModuleRep> {
        self.0.right_adjoint(x)
    }
    fn right_adjoint_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.0.right_adjoint_map(f)
    }
    fn induce(&self, y: &ModuleRep) -> Result<ModuleRep> {
        self.0.induce(y)
    }
    fn induce_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.0.induce_map(f)
    }
    fn unit(&self, x: &ModuleRep) -> Result<ModuleMap> {
        Ok(self.0.unit(x)?.scale(2))
    }
    fn left_counit(&self, y: &ModuleRep) -> Result<ModuleMap> {
        self.0.left_counit(y)
    }
    fn right_unit(&self, y: &ModuleRep) -> Result<ModuleMap> {
        self.0.right_unit(y)
    }
    fn counit(&self, x: &ModuleRep) -> Result<ModuleMap> {
        self.0.counit(x)
    }
}

#[test]
fn corrupted_unit_breaks_exactly_one_identity() {
    let ctx = builtin::context("C3:1:p3").unwrap();
    let x = builtin::module(&ctx, "J2").unwrap();
    let clean = check_triangle_identities(&ctx, std::slice::from_ref(&x), &[]).unwrap();
    assert!(clean.is_clean());
    let bad = ScaledUnit(ctx);
    let report = check_triangle_identities(&bad, std::slice::from_ref(&x), &[]).unwrap();
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].identity, "left counit after L(unit)");
    // a scaled unit is still natural
    let f = ModuleMap::identity(&x).scale(2);
    assert!(check_naturality(&bad, &f).unwrap().is_empty());
}

#[test]
fn corrupted_unit_on_b_side_objects() {
    let ctx = builtin::context("S3:C2:p3").unwrap();
    let y = builtin::trivial_b(&ctx).unwrap();
    let report = check_triangle_identities(&ScaledUnit(ctx), &[], &[y]).unwrap();
    let names: Vec<_> = report.violations.iter().map(|v| v.identity.as_str()).collect();
    assert_eq!(names, ["M(left counit) after unit"]);
}

#[test]
fn stable_hom_through_the_trait_object() {
    let ctx = builtin::context("C5:1:p5").unwrap();
    let dynamic: &dyn AdjointTriple = &ctx;
    let j2 = builtin::module(&ctx, "J2").unwrap();
    let j4 = builtin::module(&ctx, "J4").unwrap();
    // composites J2 -> J5 -> J4 land in x^3 k[x]/x^4: one dimension out of two
    assert_eq!(stable_hom(dynamic, &j2, &j4).unwrap().stable_dimension(), 1);
}

#[test]
fn naturality_on_sampled_maps() {
    for name in builtin::ACCEPTANCE_CONTEXTS {
        let ctx = builtin::context(name).unwrap();
        let mut s = Sampler::new(&ctx, 42);
        for _ in 0..10 {
            let x = s.module_a().unwrap();
            let y = s.module_a_near(&x).unwrap();
            let f = s.map(&x, &y).unwrap();
            assert!(check_naturality(&ctx, &f).unwrap().is_empty(), "{name}");
        }
    }
}

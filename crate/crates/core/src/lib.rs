//! Relative exact structures and relative stable categories for
//! finite-dimensional modules over prime fields.
//!
//! The crate works with an adjoint triple `L ⊣ M ⊣ R` between two module
//! categories (restriction/induction along a subgroup, or forget/free for a
//! Frobenius algebra), the exact structure of sequences that split after
//! restriction, and the stable category obtained by killing maps that factor
//! through relatively projective modules.

pub mod adjoint;
pub mod algebra;
pub mod builtin;
pub mod cli;
pub mod error;
pub mod exact;
pub mod field;
pub mod group;
pub mod json;
pub mod module;
pub mod sample;
pub mod stable;

pub use adjoint::{AdjointContext, AdjointTriple};
pub use algebra::{is_frobenius_algebra, AlgebraData};
pub use error::{Error, Result};
pub use field::{FpMatrix, Prime};
pub use group::{GroupData, SubgroupData};
pub use module::{hom_space, Acting, ModuleMap, ModuleRep, Side};
pub use exact::ShortExactSeq;
pub use stable::{StableHom, StableIsoVerdict};

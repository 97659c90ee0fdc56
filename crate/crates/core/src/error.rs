use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("modulus mismatch: GF({0}) vs GF({1})")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate permutation input: {0}")]
    DegeneratePermutation(String),
    #[error("group order exceeds the bound {0}")]
    OrderBoundExceeded(usize),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("algebra is not Frobenius: no nondegenerate trace form found")]
    NotFrobenius,
    #[error("representation relation {relation} violated")]
    RelationViolated { relation: String },
    #[error("matrix does not intertwine generator {generator}")]
    NotIntertwiner { generator: usize },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("endomorphism is not idempotent")]
    NotIdempotent,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map is not injective")]
    NotInjective,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistent splitting verdicts for L and R")]
    InconsistentSplitting,
}

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("{0} is not a prime in the supported range 2..=251")]
    InvalidPrime(u64),

    #[error("operation is only available over a prime field")]
    PrimeFieldRequired,

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("dimension {dim} exceeds the guard {guard}")]
    GuardExceeded { dim: usize, guard: usize },

    #[error("the given set does not generate the algebra")]
    NonGenerating,

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("not a long basis: {0}")]
    NotLongBasis(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

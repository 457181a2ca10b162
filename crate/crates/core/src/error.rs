use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("at most {max} variables are supported, got {k}")]
    TooManyVariables { k: usize, max: usize },

    #[error("weights must be coprime (gcd is {gcd}); normalize them first")]
    NotCoprime { gcd: u64 },

    #[error("period {0} exceeds the supported range")]
    PeriodTooLarge(String),

    #[error("closed formula for x^{slot} needs delta <= {bound}, but delta = {delta}")]
    DeltaPrecondition { slot: usize, bound: i64, delta: usize },

    #[error("monomial has {got} exponents, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("verification failed at n = {n}: expected {expected}, quasi-polynomial gives {actual}")]
    Verification {
        n: u64,
        expected: String,
        actual: String,
    },

    #[error("structural violation: {0}")]
    StructuralViolation(String),

    #[error("singular linear system")]
    SingularSystem,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

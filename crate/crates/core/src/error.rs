use thiserror::Error;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different semirings ({left} vs {right})")]
    DomainMismatch { left: String, right: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("value `{value}` is not an element of {semiring}")]
    NotInCarrier { value: String, semiring: String },

    #[error("gf({0}) requires a prime modulus")]
    NotPrime(u64),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("semiring {0} is not finite")]
    NotFinite(String),

    #[error("duplicate key `{0}`")]
    DuplicateKey(String),

    #[error("key `{key}` is outside 1..={dim}")]
    KeyOutOfRange { key: String, dim: usize },

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid basis: element `{element}` has {representations} representations")]
    InvalidBasis {
        element: String,
        representations: usize,
    },

    #[error("budget of {budget} exceeded (would need {needed})")]
    BudgetExceeded { budget: u64, needed: String },

    #[error("cannot parse `{input}`: {reason}")]
    Literal { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

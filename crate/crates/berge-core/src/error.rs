use thiserror::Error;

/// Errors shared across the crate. Every verdict-carrying operation is exact;
/// anything that cannot be answered exactly is an error, never a wrong number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("vertex {vertex} out of range for a structure on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("wrong regime: {0}")]
    WrongRegime(String),

    #[error("divisibility violation: {modulus} does not divide {n}")]
    DivisibilityViolation { n: u64, modulus: u64 },

    #[error("outside theorem range: {0}")]
    OutOfTheoremRange(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("convexity violation in value table at index {index}")]
    ConvexityViolation { index: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two operands carry different variable counts.
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    /// A weight vector does not have the degree the operation requires.
    #[error("weight vector has degree {actual}, expected {expected}")]
    WeightDegreeMismatch { expected: u64, actual: u64 },

    /// A degree context would exceed the configured column cap.
    #[error("degree context for t={vars}, n={degree} has {columns} monomials, over the cap {cap}")]
    ResourceLimit {
        vars: usize,
        degree: u64,
        columns: u64,
        cap: u64,
    },

    /// An operation that requires a homogeneous polynomial got a mixed one.
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    /// No spike of the requested degree exists in the given variable count.
    #[error("no spike of degree {degree} exists in {vars} variables (mu = {mu})")]
    NoSpike { vars: usize, degree: u64, mu: u64 },

    /// A variable index is outside `1..=t`.
    #[error("index {index} out of range for {vars} variables")]
    IndexOutOfRange { index: usize, vars: usize },

    /// A substituted term left the weight filtration of its source class.
    #[error("filtration violation: image term has weight above the component weight")]
    FiltrationViolation,
}

pub type Result<T> = std::result::Result<T, Error>;

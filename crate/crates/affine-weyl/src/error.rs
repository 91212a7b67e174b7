//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AwgError {
    /// The rank is outside the supported range for the type.
    #[error("invalid rank {n} for type {ty}")]
    InvalidRank { ty: char, n: usize },
    /// Malformed input: bad permutation, lattice, shape mismatch and so on.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Two elements of different types or ranks were combined.
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    /// The operation only makes sense for integral elements.
    #[error("element is not integral")]
    NonIntegral,
    /// A mathematical precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The operation is not defined for this type.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A search exceeded its node budget.
    #[error("budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: usize },
    /// JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, AwgError>;

impl From<serde_json::Error> for AwgError {
    fn from(e: serde_json::Error) -> Self {
        AwgError::Parse(e.to_string())
    }
}

//! The error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by constructors and operations.
///
/// None of these are recoverable mid-computation: they indicate that an input
/// is malformed, inconsistent, or outside the documented domain, and the
/// caller is expected to fix the input and retry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is malformed or violates a documented precondition.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A coordinate vector has the wrong length for the group at hand.
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A polygon or inequality was evaluated outside its domain.
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    /// The operation requires a dominant point and the given one is not.
    #[error("point is not dominant: {0}")]
    NotDominant(String),

    /// An enumeration would exceed the documented soft limit.
    #[error("enumeration too large: {0}")]
    TooLarge(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

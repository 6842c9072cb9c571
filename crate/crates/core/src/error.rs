use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A function violates its representation invariants.
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The requested composition has no exact rational evaluation.
    #[error("unsupported composition: {0}")]
    Unsupported(String),
    /// No scale within the search ceiling brings the modular down to 1.
    #[error("norm search diverged: {0}")]
    Divergence(String),
    /// The tail-decay hypothesis needed for a majorant on the half-line fails.
    #[error("tail condition violated: {0}")]
    ConditionViolated(String),
    /// A constructed object failed its own post-construction check.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Error type shared across the crate.

/// Everything that can go wrong when building models or running the solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input data (non-positive value, dimension mismatch, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An index argument fell outside its documented range.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A bid profile no auction can resolve (two infinite bids on one query).
    #[error("ill-formed bid profile: {0}")]
    IllFormedProfile(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The instance exceeds the exhaustive-enumeration cap.
    #[error("query count {queries} exceeds enumeration cap {cap}")]
    CapExceeded { queries: usize, cap: usize },

    /// The operation is not defined for this input shape (e.g. >2 bidders).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal consistency guarantee failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Text could not be parsed as a rational, profile, or document.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures raised by algebraic operations, parsers and law harnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tag mismatch: expected {expected}, found {found}")]
    TagMismatch { expected: String, found: String },
    #[error("semiring {0} has no involution")]
    NoInvolution(String),
    #[error("element {0} lies outside the carrier of the map")]
    ElementOutsideCarrier(String),
    #[error("key {0} is not a multiset over the expected semiring")]
    KeyNotMultiset(String),
    #[error("monad {0} is not additive")]
    NotAdditive(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("monad {0} is not commutative")]
    NotCommutative(String),
    #[error("monoid mismatch: {0}")]
    MonoidMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for bound {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("malformed term: {0}")]
    MalformedTerm(String),
    #[error("monad mismatch: {0}")]
    MonadMismatch(String),
    #[error("not a monoid map: {0}")]
    NotAMonoidMap(String),
    #[error("not a semiring map: {0}")]
    NotASemiringMap(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("unknown semiring: {0}")]
    UnknownSemiring(String),
    #[error("unknown monoid: {0}")]
    UnknownMonoid(String),
    #[error("invalid scalar {text:?}: {reason}")]
    InvalidScalar { text: String, reason: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid_scalar(text: &str, reason: impl Into<String>) -> Self {
        Error::InvalidScalar {
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}

//! Error type shared by the whole crate.

use std::fmt;

/// Errors produced by construction, evaluation and serialization routines.
///
/// `NotRational` and `Inconsistency` signal that an exact identity the
/// mathematics guarantees has failed to hold; they always indicate a bug
/// (or a corrupted input spec), never a recoverable user condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed user input (empty part list, zero part, unknown group name, ...).
    InvalidInput(String),
    /// Inversion of zero in a cyclotomic field.
    DivisionByZero,
    /// Projection of a cyclotomic element with nonzero higher coordinates.
    NotRational(String),
    /// Operation applied outside its mathematical domain.
    Domain(String),
    /// An exact identity failed (non-integer count, oracle mismatch, negative count).
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::DivisionByZero => write!(f, "division by zero in cyclotomic field"),
            Error::NotRational(msg) => write!(f, "element is not rational: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Inconsistency(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that indicate a broken exact identity rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NotRational(_) | Error::Inconsistency(_))
    }
}

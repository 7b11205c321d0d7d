//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by exact arithmetic and by the classification layers.
///
/// `NonExactDivision` deserves a note: every quotient taken in this crate is
/// exact by theory, so a nonzero remainder always signals either a wrong
/// formula or malformed input data, never a rounding situation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("order violation: {0}")]
    OrderViolation(String),

    #[error("stable-range violation: {0}")]
    RangeViolation(String),

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("group has no dual: {0}")]
    NoDual(String),

    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;

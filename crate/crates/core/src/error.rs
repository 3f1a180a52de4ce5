use thiserror::Error;

/// Errors raised by the exact-arithmetic and checker layers.
///
/// Mathematical outcomes (a pair is not condensed, an element is not an atom)
/// are never errors; they are carried by [`crate::Verdict`]. These variants
/// describe invalid input or a broken internal invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("operands live in different domains: {0}")]
    DomainMismatch(String),
    #[error("zero input where a nonzero value is required: {0}")]
    ZeroInput(&'static str),
    #[error("invalid number field: {0}")]
    InvalidField(String),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal cross-check disagreed. This signals a bug, never a
    /// mathematical outcome.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

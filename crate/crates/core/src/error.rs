use thiserror::Error;

/// Errors raised by the library. Every variant describes an input problem
/// or an unsupported request; arithmetic itself never fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("empty summand list")]
    EmptyRepresentation,
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("representation is degenerate: {0}")]
    Degenerate(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::DimensionMismatch(msg.into()))
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

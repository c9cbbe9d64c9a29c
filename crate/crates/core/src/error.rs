use thiserror::Error;

/// Errors raised by the algebraic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Truncation or Hilbert-function window failed to stabilize.
    #[error("no stabilization: {0}")]
    Divergence(String),

    /// The ideal is not zero-dimensional where it has to be.
    #[error("{0}")]
    NotZeroDimensional(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}

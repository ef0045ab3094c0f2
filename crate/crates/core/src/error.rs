use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exact quantity does not fit the 128-bit working range.
    #[error("value out of range: {0}")]
    RangeExceeded(String),

    /// The instance is larger than the configured exhaustive-search ceiling.
    #[error("instance refused: {0}")]
    RangeRefused(String),

    /// A construction that must succeed did not. Never swallowed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

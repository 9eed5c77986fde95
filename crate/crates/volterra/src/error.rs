use thiserror::Error;

/// Errors for model construction, covariance assembly and estimation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("unstable filter: pole magnitude {0} is not strictly inside the unit circle")]
    UnstableFilter(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

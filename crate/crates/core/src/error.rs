use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("singular element: {0}")]
    Singular(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("numeric failure: {message} (best residuals {residuals:?})")]
    NumericFailure { message: String, residuals: Vec<f64> },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn singular(msg: impl Into<String>) -> Error {
    Error::Singular(msg.into())
}

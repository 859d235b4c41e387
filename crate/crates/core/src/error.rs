use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A string or word failed validation (empty block, element above `n`, ...).
    #[error("invalid string: {0}")]
    InvalidString(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A presentation or relation failed validation.
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

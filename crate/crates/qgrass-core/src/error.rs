//! Library error type.

use alloc::string::String;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("invalid atom for this space: {0}")]
    InvalidAtom(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

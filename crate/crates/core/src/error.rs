use thiserror::Error;

/// Errors raised by library operations.
///
/// `Usage` covers malformed inputs and violated preconditions, `Resource`
/// covers configured caps (slice dimension, universe size, search budget).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

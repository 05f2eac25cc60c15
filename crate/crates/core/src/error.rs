use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe mismatch: expected a set over {expected} elements, got {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("element {element} is outside the ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    /// An exhaustive operation was asked to sweep a ground set above its cap.
    #[error("{what}: size {size} exceeds the exhaustive cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn certificate(msg: impl Into<String>) -> Self {
        Error::InvalidCertificate(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

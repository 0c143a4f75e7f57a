use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("not a projection: {0}")]
    NotAProjection(String),

    #[error("fusion product leaves the truncated label set: {0}")]
    TruncationOverflow(String),

    #[error("bad fixture at {path}: {message}")]
    BadFixture { path: String, message: String },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn fixture(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::BadFixture { path: path.into(), message: message.into() }
    }
}

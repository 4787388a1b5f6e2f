use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller supplied a value outside an operation's domain.
    #[error("input error: {0}")]
    Input(String),

    /// A path could not be turned into a drilled complex.
    #[error("construction error: {0}")]
    Construction(String),

    /// Octahedra could not be glued consistently.
    #[error("assembly error: {0}")]
    Assembly(String),

    /// A bounded search gave up before finishing.
    #[error("search cap of {cap} exceeded: {what}")]
    CapExceeded { cap: usize, what: String },

    /// A swap move does not apply to the given surface.
    #[error("swap not applicable: {0}")]
    SwapInapplicable(String),

    /// A serialized artifact could not be read back.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Filesystem failure, carried as text so the type stays `Clone`.
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub(crate) fn assembly(msg: impl Into<String>) -> Self {
        Error::Assembly(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Problems with the input; all of them map to exit status 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("value error at {path}: {message}")]
    Value { path: String, message: String },
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qta_core::Error),
}

impl CliError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema { path: path.into(), message: message.into() }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

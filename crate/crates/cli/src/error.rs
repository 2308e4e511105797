use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent input document (exit status 2).
    #[error("schema error: {0}")]
    Schema(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    /// Bad command-line arguments (exit status 2).
    #[error("usage error: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub(crate) fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

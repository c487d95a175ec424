use std::path::PathBuf;

use thiserror::Error;

/// Failures that map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] maxwell_core::Error),
}

pub type CliResult<T> = Result<T, CliError>;

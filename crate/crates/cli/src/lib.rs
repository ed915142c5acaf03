//! File formats, SVG rendering and the `diskstab` command line.
//!
//! Exit codes: 0 success, 1 negative verdict (verification failed, no
//! piercing set, construction check failed), 2 bad input or invalid
//! instance, 3 internal verification failure, 4 size limit exceeded.

pub mod commands;
pub mod format;
pub mod svg;

use std::path::PathBuf;

pub use commands::{run, Cli};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
    #[error("size limit: {0}")]
    TooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Invalid(_) => 2,
            CliError::Internal(_) => 3,
            CliError::TooLarge(_) => 4,
        }
    }
}

use std::process::ExitCode;

use hoc7_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{0}")]
    Deviation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("output error: {0}")]
    Csv(#[from] csv::Error),
    #[error("output error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Self::Config(_) => 2,
            Self::Numerical(_) => 3,
            Self::Deviation(_) => 4,
            Self::Io(_) | Self::Csv(_) | Self::Json(_) => 1,
        })
    }

    /// Wraps a solver error, classifying input validation as a configuration error.
    pub fn from_core(err: CoreError, context: &str) -> Self {
        match err {
            CoreError::Domain(_) | CoreError::Dimension { .. } => {
                Self::Config(format!("{context}: {err}"))
            }
            _ => Self::Numerical(format!("{context}: {err}")),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

use std::io;

use flagcoh_core::Error as CoreError;

/// Failures of a job, each mapped onto a distinct process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("gate violation: {0}")]
    Gate(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub const EXIT_CHECK_FAILED: u8 = 1;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Gate(_) => 3,
            CliError::Io(_) => 4,
            CliError::Internal(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::SizeGate { .. } | CoreError::DimensionGate { .. } => {
                CliError::Gate(e.to_string())
            }
            CoreError::InvalidType { .. }
            | CoreError::RankMismatch { .. }
            | CoreError::IndexOutOfRange { .. }
            | CoreError::DimensionMismatch { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Internal(format!("csv: {other:?}")),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            CliError::Io(e.into())
        } else {
            CliError::Internal(format!("json: {e}"))
        }
    }
}

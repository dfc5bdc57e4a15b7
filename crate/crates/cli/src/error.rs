use orthowatch_core::{GenError, OracleError, PolygonError, SolveError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unsupported polygon class: {0}")]
    Unsupported(String),
    #[error("coverage failure: {0}")]
    Coverage(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    /// Process exit status for this failure class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Coverage(_) => 4,
            CliError::Internal(_) => 5,
        }
    }
}

impl From<PolygonError> for CliError {
    fn from(e: PolygonError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NotMonotone | SolveError::DualGraphNotPath | SolveError::NotOrthoconvex => {
                CliError::Unsupported(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::SegmentOutsidePolygon => CliError::Coverage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

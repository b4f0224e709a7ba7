use std::io;

use subtuple_core::{BudgetExceeded, IngestError, InstanceError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("{path}: {source}")]
    Ingest { path: String, source: IngestError },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("{0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("writing output: {0}")]
    Write(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Budget(_) => 3,
            CliError::Invalid(_)
            | CliError::Instance(_)
            | CliError::Ingest { .. }
            | CliError::Read { .. }
            | CliError::Write(_) => 2,
        }
    }
}

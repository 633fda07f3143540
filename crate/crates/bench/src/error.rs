use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("cannot parse {path}: {source}")]
    Parse { path: String, source: spcs_core::Error },

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("oracle refused: {0}")]
    Budget(spcs_core::Error),

    #[error("{0}")]
    Disconnected(spcs_core::Error),

    #[error("search failed: {0}")]
    Search(spcs_core::Error),
}

impl BenchError {
    /// Process exit status for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Search(_) => 1,
            BenchError::Config(_) => 2,
            BenchError::Parse { .. } => 3,
            BenchError::Io { .. } => 4,
            BenchError::Budget(_) => 5,
            BenchError::Disconnected(_) => 6,
        }
    }

    pub(crate) fn from_search(err: spcs_core::Error) -> Self {
        use spcs_core::Error;
        match err {
            Error::BudgetExceeded { .. } => BenchError::Budget(err),
            Error::Disconnected => BenchError::Disconnected(err),
            Error::SizeOutOfRange { .. } | Error::Contract(_) => BenchError::Config(err.to_string()),
            other => BenchError::Search(other),
        }
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("infeasible instance: {0}")]
    Infeasible(matroid_biopt::Error),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Solver(#[from] matroid_biopt::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    /// 2 for malformed input, 3 for instances without a feasible basis, 4
    /// for invalid requests, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Infeasible(_) => 3,
            CliError::Usage(_) => 4,
            CliError::Solver(_) | CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

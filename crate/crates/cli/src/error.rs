use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] permdeg::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for usage, parse and construction errors, 3 for i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(permdeg::Error::Io(_)) | CliError::Io(_) => 3,
            CliError::Csv(e) if e.is_io_error() => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

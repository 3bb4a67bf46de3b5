use thiserror::Error;

/// Process exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Bad arguments or a value outside a function's domain.
pub const EXIT_USAGE: i32 = 2;
/// A numeric routine failed to converge or overflowed.
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] ghl3::Error),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(e) if e.is_numeric() => EXIT_NUMERIC,
            CliError::Io(_) | CliError::Csv(_) => 1,
            _ => EXIT_USAGE,
        }
    }
}

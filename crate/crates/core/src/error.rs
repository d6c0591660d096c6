use thiserror::Error;

/// Errors raised by the hull library.
#[derive(Debug, Error, PartialEq)]
pub enum HullError {
    #[error("input point set is empty")]
    EmptyInput,
    #[error("non-finite coordinate at point {index}")]
    NonFinite { index: usize },
    #[error("oracle hull limited to {limit} points, got {got}")]
    OracleTooLarge { limit: usize, got: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("disk rejection sampling exceeded {cap} draws for point {index}")]
    RejectionCapExceeded { cap: u32, index: usize },
    #[error("invalid benchmark config: {0}")]
    InvalidConfig(String),
}

/// Errors raised while reading or writing point files.
#[derive(Debug, Error)]
pub enum PointIoError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

use thiserror::Error;

/// Errors raised by the exact linear algebra layer and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

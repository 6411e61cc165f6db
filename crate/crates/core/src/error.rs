use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("unsupported for this representation: {0}")]
    Unsupported(String),
    #[error("module is not tame: {0}")]
    NotTame(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("not a 2-cocycle: {0}")]
    NotCocycle(String),
    #[error("no stable answer: {0}")]
    NotStabilized(String),
}

pub type Result<T> = std::result::Result<T, Error>;

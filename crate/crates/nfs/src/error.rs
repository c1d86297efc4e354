//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("linear algebra: {0}")]
    LinAlg(String),
    #[error("square root: {0}")]
    Sqrt(String),
    #[error("descent: {0}")]
    Descent(String),
    #[error("smoothing budget exhausted: {0}")]
    SmoothingBudget(String),
    #[error("work unit protocol: {0}")]
    Protocol(String),
    #[error("phase `{phase}` failed: {msg}; resume with `nfs {phase}` after fixing")]
    Phase { phase: String, msg: String },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

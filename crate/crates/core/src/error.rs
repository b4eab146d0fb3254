use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("closure exceeded budget of {budget} elements")]
    ClosureOverflow { budget: usize },
    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Capacity and budget failures make a result inconclusive rather than wrong.
    pub fn is_inconclusive(&self) -> bool {
        matches!(
            self,
            Error::Capacity { .. } | Error::BudgetExhausted(_) | Error::ClosureOverflow { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

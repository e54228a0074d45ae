use thiserror::Error;

/// Errors produced by graph construction, parsing and index arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation (e.g. a cycle on two vertices).
    #[error("domain error: {0}")]
    Domain(String),

    /// Edge-list input could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Exact integer arithmetic overflowed.
    #[error("arithmetic overflow in {op}")]
    Overflow { op: String },

    /// An edge violates the simple-graph rules.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

impl Error {
    pub(crate) fn overflow(op: impl Into<String>) -> Self {
        Error::Overflow { op: op.into() }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared by parsing, construction and the solver front doors.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input; `line` is 1-based and counts every input line.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid depth: {0}")]
    InvalidDepth(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

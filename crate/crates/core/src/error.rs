use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("element {a} is not below element {b}")]
    NotComparable { a: usize, b: usize },

    #[error("element id {0} out of range")]
    UnknownElement(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search budget of {budget} nodes exceeded after {found} results")]
    BudgetExceeded { budget: u64, found: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `line` is 1-based.
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    /// A structural or problem invariant does not hold on otherwise well-formed input.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// Bad arguments to an operation.
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured size guard was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        Error::Invariant(message.into())
    }

    pub(crate) fn input(message: impl Into<String>) -> Self {
        Error::Input(message.into())
    }
}

//! Error type shared across the crate.

/// Errors produced by construction, preconditions and resource caps.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two objects built over different variable contexts were combined.
    #[error("variable context mismatch: {0}")]
    ContextMismatch(String),

    /// The input violates a structural requirement of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A mathematical precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An enumeration would exceed the configured cap.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// The caller asked for the wrong operation; the message names the right one.
    #[error("wrong operation: {0}")]
    WrongOperation(String),

    /// A cross-check that a theorem guarantees failed. Carries both sides.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// Text input could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A step of an iterated expansion failed; `index` is zero-based.
    #[error("expansion step {index} failed: {source}")]
    Step {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

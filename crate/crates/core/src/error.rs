use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("context mismatch: expected dimension {expected}, found {found}")]
    ContextMismatch { expected: usize, found: usize },
    #[error("structure axioms violated: failing {}", .failures.join(", "))]
    Def1Violation { failures: Vec<String> },
    #[error("almost para-contact axioms violated: failing {}", .failures.join(", "))]
    ApcViolation { failures: Vec<String> },
    #[error("degenerate structure: {0}")]
    DegenerateStructure(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::ContextMismatch { expected, found })
        }
    }
}

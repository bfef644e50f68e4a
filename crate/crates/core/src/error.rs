use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid JSON: {0}")]
    Json(String),

    #[error("operation undefined on the zero element")]
    ZeroElement,

    #[error("no dominant monomial: maximal terms {0} and {1} are incomparable")]
    NoDominantMonomial(String, String),

    #[error("integer coefficient overflow")]
    Overflow,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

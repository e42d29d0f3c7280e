use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("group order exceeds cap {cap}")]
    GroupTooLarge { cap: usize },

    #[error("{what} exceeds cap {cap} (needed {needed})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        needed: usize,
    },

    #[error("not an inclusion matrix: {0}")]
    NotInclusionMatrix(String),

    #[error("character table failure: {0}")]
    CharacterTable(String),

    #[error("Hopf algebra axiom violated: {0}")]
    HopfAxiom(String),

    #[error("consistency check failed: {0}")]
    Assertion(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub(crate) fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }
}

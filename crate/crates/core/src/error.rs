use thiserror::Error;

use crate::separation::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    /// A representation that was required to be (strongly) separating is not.
    #[error("verification failed: {0}")]
    Verification(Witness),

    /// A Las Vegas loop ran out of attempts.
    #[error("{stage}: gave up after {attempts} attempts ({detail})")]
    RetryLimit {
        stage: &'static str,
        attempts: usize,
        detail: String,
        witness: Option<Witness>,
    },

    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    SizeLimit { n: usize, limit: usize },

    /// A multi-stage pipeline emptied the graph.
    #[error("pipeline stage `{stage}`: {detail}")]
    Pipeline { stage: &'static str, detail: String },

    /// A search that must succeed on valid input came back empty.
    #[error("no witness found: {0}")]
    Contradiction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

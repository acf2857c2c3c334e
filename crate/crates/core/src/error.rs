use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the set where the formula or theorem applies.
    #[error("domain error: {0}")]
    Domain(String),

    /// An algorithmic precondition (sample counts, grid sizes) is violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A corpus map failed its own hypothesis audit at construction.
    #[error("hypothesis audit failed for `{map}`: {detail}")]
    Hypothesis { map: String, detail: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

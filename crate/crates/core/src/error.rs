use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("rows are not linearly independent")]
    NotIndependent,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("zero vector: {0}")]
    ZeroVector(String),

    #[error("complement empty: the vectors span the whole space")]
    ComplementEmpty,

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

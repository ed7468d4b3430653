use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("relation ideal is not admissible: {0}")]
    Admissibility(String),

    #[error("characteristic {0} is not a prime in 2..=251")]
    InvalidField(u32),

    #[error("resource cap exceeded: {0}")]
    Resource(String),

    #[error("universe is incomplete: {0}")]
    IncompleteUniverse(String),

    #[error("not cotilting: {0}")]
    NotCotilting(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("could not decide: {0}")]
    Undetermined(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

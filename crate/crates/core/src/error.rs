use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),

    #[error("Coxeter group is infinite: {0}")]
    InfiniteType(String),

    #[error("non-crystallographic Coxeter matrix is not supported: {0}")]
    NonCrystallographic(String),

    #[error("group {label} has more than {cap} elements; raise the element cap to enumerate it")]
    TooLarge { label: String, cap: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("cannot parse element word `{0}`")]
    BadWord(String),

    #[error(
        "element {element} is not a longest coset representative of the block; \
         its coset is represented by {representative}"
    )]
    NotInBlock {
        element: String,
        representative: String,
    },

    #[error("corrupt KL cache {}: {reason}", path.display())]
    CorruptCache { path: PathBuf, reason: String },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invariant violated ({invariant}): {detail}")]
    InvariantViolation {
        invariant: &'static str,
        detail: String,
    },

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            invariant,
            detail: detail.into(),
        }
    }
}

use thiserror::Error;

/// Errors raised by the monoid, tree, extremal and hash routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not an element of the monoid generated by L_{u} and R_{v}")]
    NotInMonoid { u: u64, v: u64 },

    #[error("enumeration of {requested} exceeds the configured limit of {limit}")]
    LimitExceeded { requested: String, limit: String },

    #[error("index {index} is out of range for depth {depth} (expected 1..=2^{depth})")]
    IndexOutOfRange { depth: u32, index: u64 },

    #[error("witness word {word} does not attain the depth-{depth} maximum {expected}")]
    WitnessMismatch {
        depth: u64,
        word: String,
        expected: String,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::ordinal::{Ordinal, ParseError};

#[derive(Debug, Error)]
pub enum Error {
    #[error("ordinal syntax error: {0}")]
    Parse(#[from] ParseError),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("point {point} is not in the space {space}")]
    OutOfSpace { point: Ordinal, space: Ordinal },

    #[error("point {0:?} is not in its own minimal open set")]
    Reflexivity(String),

    #[error("{member:?} lies in the minimal open set of {point:?}, but its own minimal open set is not contained in it")]
    Transitivity { point: String, member: String },

    #[error("duplicate point name {0:?}")]
    DuplicatePoint(String),

    #[error("unknown point {0:?}")]
    UnknownPoint(String),

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    SizeBound {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for malformed input (as opposed to well-formed input the domain rejects).
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Syntax { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

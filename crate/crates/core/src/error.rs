use thiserror::Error;

use crate::cochain::Cochain;
use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("malformed group element: {0}")]
    MalformedElement(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("cochain is not normalized: nonzero value at {0}")]
    NotNormalized(String),

    #[error("invalid shuffle block: p = {p} with arity {arity}")]
    InvalidBlock { p: usize, arity: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("size limit exceeded: {what} needs {size}, limit is {limit}")]
    SizeLimit { what: String, size: u128, limit: u128 },

    #[error("precondition failed: {0}")]
    Precondition(Box<Report>),

    #[error("obstruction: {kind} is nonzero")]
    Obstruction { kind: &'static str, witness: Box<Cochain> },
}

impl Error {
    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::GroupMismatch(msg.into())
    }
}

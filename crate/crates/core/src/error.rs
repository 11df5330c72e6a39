use thiserror::Error;

use crate::graphs::Family;

/// Errors produced by the counting, algebra and bijection routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid problem instance: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("no certified recurrence: {0}")]
    NoCertifiedRecurrence(String),

    #[error("no tabulated generating function for family {family} with ell = {ell}")]
    NotTabulated { family: Family, ell: usize },

    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

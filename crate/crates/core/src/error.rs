use thiserror::Error;

use crate::linalg::Ambient;
use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("ambient mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: Ambient, found: Ambient },

    #[error("{what} = {value} out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("operation requires a two-column shape, got {0}")]
    NotTwoColumn(Partition),

    #[error("operator is not square: {0}")]
    NotSquare(String),

    #[error("invalid bracket: {0}")]
    InvalidBracket(String),

    #[error("spectrum attribution failed: {0}")]
    Attribution(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange { what, value, lo, hi })
    } else {
        Ok(())
    }
}

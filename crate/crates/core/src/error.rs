use thiserror::Error;

use crate::rings::RingName;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("length {0} is outside the supported range 0..=64")]
    LengthOutOfRange(usize),

    #[error("ring {0} has no natural GC-content map")]
    NoGcMap(RingName),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingName, right: RingName },

    #[error("ring table for {0} is invalid: {1}")]
    InvalidRing(RingName, String),

    #[error("binary code is not self-orthogonal")]
    NotSelfOrthogonal,

    #[error("code is not quasi-self-dual over {0}")]
    NotQsd(RingName),

    #[error("code contains no word of weight 2")]
    NoWeightTwoWord,

    #[error("fixed GC-content subcode for m = {0} is empty")]
    EmptySubcode(usize),

    #[error("invalid residue shape: {0}")]
    InvalidShape(String),

    #[error("length {n} exceeds the configured census limit {limit}")]
    ResourceLimit { n: usize, limit: usize },

    #[error("search budget exhausted")]
    BudgetExceeded,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::system::Triple;

pub type Result<T, E = StsError> = std::result::Result<T, E>;

/// A search hit its configured work limit before reaching an answer.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("{what} exceeded its budget of {limit}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub limit: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StsError {
    #[error("order {0} is not admissible (need v = 1 or 3 mod 6 and v <= {max})", max = crate::MAX_ORDER)]
    InvalidOrder(usize),

    #[error("point {point} is out of range for order {v}")]
    PointOutOfRange { point: usize, v: usize },

    #[error("triple repeats point {0}")]
    DegenerateTriple(usize),

    #[error("pair {{{x},{y}}} occurs in both {first} and {second}")]
    DuplicatePair {
        x: usize,
        y: usize,
        first: Triple,
        second: Triple,
    },

    #[error("pair {{{x},{y}}} is not covered by any block")]
    MissingPair { x: usize, y: usize },

    #[error("malformed code at step {step}: {reason}")]
    MalformedCode { step: usize, reason: String },

    #[error("incomplete system: code ended after {symbols} symbols, step {step} needs a block for pair {{{x},{y}}}")]
    IncompleteSystem {
        symbols: usize,
        step: usize,
        x: usize,
        y: usize,
    },

    #[error("invalid base blocks: {0}")]
    InvalidBaseBlocks(String),

    #[error("blocks {blocks:?} are not a {kind} of this system")]
    NotAConfiguration {
        kind: &'static str,
        blocks: Vec<usize>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

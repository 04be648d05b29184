use thiserror::Error;

use crate::matrix::MinorIndex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A documented precondition of an operation was not met.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("element {0} is not a unit")]
    NonUnit(String),

    #[error("{op} is not available over {ring}")]
    CapabilityMissing { op: &'static str, ring: String },

    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("matrix is zero")]
    ZeroMatrix,

    #[error("matrix is not rank one: minor {witness} is nonzero")]
    NotRankOne { witness: MinorIndex },

    #[error("matrix is not zero-square")]
    NotZeroSquare,

    /// Raised when a result that the theory guarantees fails its own check.
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

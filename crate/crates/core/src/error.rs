use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input or violated precondition.
    Usage,
    /// A configured memory, point or search budget was exceeded.
    Resource,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(u64),

    #[error("sieve limit {limit} needs about {needed} bytes, over the budget of {budget} bytes")]
    MemoryBudget {
        limit: u64,
        needed: u64,
        budget: u64,
    },

    #[error("{what} {value} is out of range (maximum {max})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },

    #[error("residue {residue} is not coprime to modulus {modulus}")]
    NotCoprime { residue: i64, modulus: u64 },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error(
        "term `{term}` has a non-positive coefficient; only the constant term may be negative"
    )]
    Enumerability { term: String },

    #[error("polynomial must contain at least one non-constant term")]
    ConstantPolynomial,

    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("point coordinates must be positive integers")]
    NonPositivePoint,

    #[error("scan would evaluate more than {budget} points")]
    PointBudget { budget: u64 },

    #[error("sequence has {len} terms, need at least {needed}")]
    SequenceTooShort { len: usize, needed: usize },

    #[error("sequence is not strictly increasing or has a term below 2 at index {index}")]
    NotAscending { index: usize },

    #[error("terms at indices {first} and {second} ({a} and {b}) share a factor")]
    NotPairwiseCoprime {
        first: usize,
        second: usize,
        a: BigUint,
        b: BigUint,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("no prime found for term {term} within {max_search} multipliers")]
    SearchExhausted {
        term: usize,
        max_search: u64,
        partial: Vec<BigUint>,
    },

    #[error("cache file error: {0}")]
    Cache(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::MemoryBudget { .. }
            | Error::PointBudget { .. }
            | Error::SearchExhausted { .. } => ErrorClass::Resource,
            _ => ErrorClass::Usage,
        }
    }

    pub(crate) fn precondition(msg: impl fmt::Display) -> Self {
        Error::Precondition(msg.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

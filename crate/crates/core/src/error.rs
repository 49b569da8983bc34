//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Long division left a nonzero remainder.
    #[error("not divisible: {dividend} / {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    /// Fraction-free elimination hit an inexact division. Always a bug.
    #[error("internal division failure at elimination step {step}: {source}")]
    InternalDivision {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    /// A table lookup past the row count the table was built for.
    #[error("row {requested} is outside the table (built to row {max_n})")]
    OutOfRange { requested: i64, max_n: usize },

    /// Brute-force enumeration guard.
    #[error("path length {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },

    /// Reciprocal of a series whose constant term is not a unit.
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),

    /// Caller-side precondition or input syntax failure.
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

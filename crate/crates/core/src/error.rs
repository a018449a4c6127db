use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("series has zero constant term and is not invertible")]
    NotInvertible,

    #[error("eta quotient {spec} has non-integral or negative leading exponent {numerator}/24")]
    BadEtaExponent { spec: String, numerator: i64 },

    #[error("characters {chi} and {psi} violate the parity condition for weight {weight}")]
    ParityViolation {
        chi: String,
        psi: String,
        weight: u32,
    },

    #[error("invalid divisor pair ({a}, {b}): need a | b and b > a >= 1")]
    BadDivisorPair { a: u64, b: u64 },

    #[error("quadratic form {0} is not listed in the catalogue")]
    UnknownForm(String),

    #[error("precision {got} is below the minimum {min}")]
    PrecisionTooLow { got: usize, min: usize },

    #[error("target is not in the span of the basis (first failing coefficient at index {index})")]
    Inconsistent { index: usize },

    #[error("basis is rank deficient: {pivots} pivots for {unknowns} unknowns")]
    Underdetermined { pivots: usize, unknowns: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

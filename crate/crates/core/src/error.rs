use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field order {0} is not a prime power in 2..=256")]
    InvalidFieldOrder(u32),
    #[error("element {value} is not in F_{q}")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameter mismatch: expected {expected}, got {got}")]
    ParamMismatch { expected: String, got: String },
    #[error("index {index} out of range (total {total})")]
    IndexOutOfRange { index: BigUint, total: BigUint },
    #[error("sequence is not a member of the enumerated set")]
    NotInSet,
    #[error("identifying vector has weight {got}, expected {expected}")]
    WrongWeight { expected: usize, got: usize },
    #[error("invalid Ferrers diagram: {0}")]
    InvalidDiagram(String),
    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { expected: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
}

impl Error {
    /// Whether the error is about a value being out of its admissible range,
    /// as opposed to malformed input.
    pub fn is_range_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidFieldOrder(_)
                | Error::InvalidParams(_)
                | Error::IndexOutOfRange { .. }
                | Error::ParamMismatch { .. }
                | Error::Precondition(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

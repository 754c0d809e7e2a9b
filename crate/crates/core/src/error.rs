use thiserror::Error;

/// Errors raised by construction, arithmetic and the census harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field construction failed: {0}")]
    FieldConstruction(String),
    #[error("p = 2 unsupported (odd characteristic only)")]
    CharacteristicTwo,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to incompatible fields")]
    IncompatibleFields,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rank error: delta must be nonzero for a rank-2 module")]
    Rank,
    #[error("unsupported twist: {0}")]
    UnsupportedTwist(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("exhaustive sweep refused: {size} modules over a field of size {field_size} exceeds bound {bound}")]
    BoundExceeded {
        field_size: u64,
        size: u128,
        bound: u64,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("non-invertible series: constant term is not a unit")]
    NonInvertible,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("n = {n} is above the enumeration ceiling {ceiling}")]
    AboveOracleCeiling { n: u64, ceiling: u64 },

    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

use crate::ring::Polynomial;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("arity mismatch: {0} variables vs {1}")]
    ArityMismatch(usize, usize),

    #[error("the zero polynomial has no leading data")]
    ZeroPolynomial,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("the unit ideal is not supported")]
    UnitIdeal,

    #[error("degree cap {cap} exceeded")]
    DegreeCapExceeded { cap: u32, partial: Vec<Polynomial> },

    #[error("operation requires {0}")]
    PositionRequired(String),

    #[error("generic initial ideal inconclusive after {retries} retries")]
    GinInconclusive { retries: u32 },

    #[error("transformation to {target} position failed after {retries} retries; last obstruction: {obstruction}")]
    TransformFailed {
        target: String,
        retries: u32,
        obstruction: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

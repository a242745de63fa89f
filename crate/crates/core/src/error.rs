use thiserror::Error;

use crate::tgwdatum::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree of the zero element is undefined")]
    UndefinedDegree,

    #[error("element is not homogeneous; degrees present: {0:?}")]
    Inhomogeneous(Vec<Vec<i64>>),

    #[error("x{index}^{power} vanishes: index {index} is a Clifford direction")]
    Nilpotent { index: usize, power: i64 },

    #[error("matrix fails validation: {0}")]
    InvalidGamma(ValidationReport),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unsupported preset: {0}")]
    UnsupportedPreset(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("parse error: {0}")]
    Parse(String),
}

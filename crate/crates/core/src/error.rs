//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular configuration: {0}")]
    Singular(String),
    #[error("omega prefix too short: need {need}, have {have}")]
    OmegaPrefix { need: usize, have: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

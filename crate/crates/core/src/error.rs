use std::path::PathBuf;

use thiserror::Error;

/// An exact quotient was requested but the divisor does not divide the
/// dividend in `Z[q]`. This is an ordinary outcome (a non-polynomial
/// quotient), not a failure of the arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("quotient is not a polynomial with integer coefficients")]
pub struct NotDivisible;

/// Violated preconditions of the closed-form constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep parameters: {0}")]
    InvalidParameters(String),
    #[error("checkpoint I/O failed for {path}: {source}")]
    CheckpointIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("checkpoint {path} is malformed: {source}")]
    CheckpointFormat {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("checkpoint {path} does not match this sweep: {reason}")]
    CheckpointMismatch { path: PathBuf, reason: String },
}

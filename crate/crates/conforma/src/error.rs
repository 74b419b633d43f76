//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A pivot of the Cholesky factorization was not strictly positive.
    /// Callers working with regularized Gram matrices may retry with a
    /// larger diagonal shift.
    #[error("matrix is not positive definite (failed at pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("significance level {0} outside (0, 1]")]
    InvalidAlpha(f64),

    #[error("probability {0} outside (0, 1)")]
    InvalidProbability(f64),

    #[error("invalid value {value} for {name}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("region is empty")]
    EmptyRegion,

    #[error("no error rate recorded for level {0}")]
    MissingLevel(f64),

    #[error("every likelihood grid point failed to factorize")]
    AllPointsFailed,

    #[error("only {completed} of {total} replications succeeded; run is invalid")]
    TooManyFailures { completed: usize, total: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

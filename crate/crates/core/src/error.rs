use thiserror::Error;

use crate::geometry::SimilarityReport;
use crate::table::Mode;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("empty grid: the node count must be at least 1")]
    EmptyGrid,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("mode mismatch: operation requires a {expected} table, got a {found} table")]
    ModeMismatch { expected: Mode, found: Mode },

    #[error("unsupported grid: {0}")]
    UnsupportedGrid(String),

    #[error("degenerate step: denominator {denominator:e} for epsilon = {epsilon:e} rad is not a normal number")]
    DegenerateStep { epsilon: f64, denominator: f64 },

    #[error("unstable step: omega * h = {omega_h} must be below 2 for the explicit scheme")]
    Unstable { omega_h: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "verification failed: angle error {:e}, ratio discrepancy {:e}",
        .0.angle_error(),
        .0.max_ratio_discrepancy
    )]
    VerificationFailed(Box<SimilarityReport>),

    #[error("malformed table text: {0}")]
    Parse(String),
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

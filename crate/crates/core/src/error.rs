//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A simulation or update produced a non-finite value.
    #[error("numerical divergence in {context}: non-finite value encountered (state {values:?})")]
    Divergence { context: String, values: Vec<f64> },

    /// The 3-2-1 Euler kinematics are singular at |theta2| = pi/2.
    #[error("kinematic singularity: |cos(theta2)| = {cos_theta2:.3e} below margin {margin:.3e}")]
    Singularity { cos_theta2: f64, margin: f64 },

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// Weight trajectory does not span a 2-D subspace.
    #[error("rank-deficient trajectory: {detail}")]
    RankDeficient { detail: String },

    /// A surface or statistic degenerated (e.g. zero interquartile range).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("episode too short: {records} record(s), need at least {min}")]
    EpisodeTooShort { records: usize, min: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Stage cost left the [0, 1] contract range.
    #[error("cost {value} outside [0,1] at step {step}")]
    CostOutOfRange { value: f64, step: usize },

    /// Least-squares quadratic fit could not be solved.
    #[error("quadratic fit failed: {0}")]
    FitError(String),

    /// A probe radius left the sampled grid.
    #[error("radius {radius} exceeds grid extent {extent}")]
    OutOfBounds { radius: f64, extent: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

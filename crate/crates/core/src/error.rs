//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input vectors are unusable as a bivariate sample.
    #[error("invalid sample: {0}")]
    InvalidSample(String),

    /// Two equal values were found within one coordinate.
    #[error("ties detected in {coordinate} coordinate")]
    TiesDetected { coordinate: &'static str },

    /// Every drawn subsample contained a tie; the rank estimator cannot run.
    #[error("all {0} subsamples contained ties; data unusable for a rank method")]
    AllSubsamplesTied(u64),

    /// Subsample scheme violates its invariants.
    #[error("invalid subsample scheme: {0}")]
    InvalidScheme(String),

    /// Grid density failed validation.
    #[error("invalid density: {0}")]
    InvalidDensity(String),

    /// Two densities live on different grids.
    #[error("grid mismatch: {left}x{left} vs {right}x{right}")]
    GridMismatch { left: usize, right: usize },

    /// Kullback divergence p log(p/q) with p > 0 on a cell where q = 0.
    #[error("divergence undefined: p > 0 on a zero cell of q (smooth q first)")]
    DivergenceUndefined,

    /// C(N, n) exceeds the exhaustive-enumeration guard.
    #[error("C({n_total}, {n_sub}) exceeds the enumeration guard of {limit}")]
    CombinatorialExplosion {
        n_total: usize,
        n_sub: usize,
        limit: u64,
    },

    /// Parameter outside its admissible range.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// Likelihood maximization ran into the parameter bound.
    #[error("Frank MLE hit the search bound at theta = {theta}")]
    MleBoundHit { theta: f64 },

    /// A calibrated threshold was required but not supplied.
    #[error("missing threshold: {0}")]
    MissingThreshold(String),

    /// Test configuration violates its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Threshold cache file could not be read or written.
    #[error("threshold cache error: {0}")]
    ThresholdCache(String),
}

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid offspring distribution: {0}")]
    InvalidDistribution(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no critical point exists: free process is super-critical (mean = {mean})")]
    NoCriticalPoint { mean: f64 },

    #[error("series order {requested} exceeds the cap of {cap} terms")]
    SeriesOrder { requested: usize, cap: usize },

    #[error("critical-point expansion requires p2 > 0 (the expansion base changes when the quadratic coefficient vanishes)")]
    ExpansionRequiresP2,

    #[error("enumeration too large: estimated {estimate:.3e} trees exceeds the guard of {guard:.1e}")]
    EnumerationTooLarge { estimate: f64, guard: f64 },

    #[error("spin configuration violates the phantom rule at label {label}")]
    PhantomRule { label: String },

    #[error("orbit diverged at step {step}")]
    Diverged { step: usize },

    #[error("interaction does not satisfy the lattice condition; covariance inequality not guaranteed")]
    NonLatticePhi,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

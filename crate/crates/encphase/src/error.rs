//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown isotope `{symbol}`; registered nuclides: {available}")]
    UnknownIsotope { symbol: String, available: String },

    #[error("isotope `{symbol}` has no bunching factor; add `eta` via a registry override file")]
    MissingEta { symbol: String },

    #[error("contact density must be non-negative, got {0:.6e} 1/m^3")]
    NegativeDensity(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("lattice region implies about {estimated} sites, over the limit of {limit}")]
    LatticeTooLarge { estimated: u64, limit: u64 },

    #[error(
        "time step {dt:.3e} s is coarser than the resolution limit {max_dt:.3e} s; \
         raise step_count"
    )]
    StepResolution { dt: f64, max_dt: f64 },

    #[error("unitary is not diagonal: max off-diagonal magnitude {max_offdiag:.3e} exceeds {tol:.0e}")]
    NotDiagonal { max_offdiag: f64, tol: f64 },

    #[error("empty nuclear bath: T2* is infinite")]
    EmptyBath,

    #[error("degenerate site: |cos(theta(z))| = {cos_theta:.3e} is below 1e-8")]
    DegenerateSite { cos_theta: f64 },

    #[error("site fails the tan^2(theta(z)) <= 1 selectivity filter: tan^2 = {tan_sq:.4}")]
    SelectivityViolation { tan_sq: f64 },

    #[error(
        "sweet-spot iteration did not converge after {iterations} steps \
         (residual {residual:.3e} 1/m); qubit rejected"
    )]
    SweetSpotDiverged { iterations: usize, residual: f64 },

    #[error("quadratic fit undefined: all ordinates equal")]
    DegenerateFit,

    #[error("relativistic series invalid: alpha*Z = {alpha_z:.4} >= 1")]
    SeriesInvalid { alpha_z: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

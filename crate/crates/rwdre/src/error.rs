//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A lazy environment was asked to materialize more sites than its cap.
    #[error("environment extent exceeded: {requested} sites materialized, cap is {cap}")]
    ExtentExceeded { requested: usize, cap: usize },

    /// Window enumeration would be 2^(2*range+1) items; refuse absurd ranges.
    #[error("neighborhood range {range} exceeds enumeration cap {cap}")]
    RangeTooLarge { range: usize, cap: usize },

    /// All rates vanished while the horizon is unbounded.
    #[error("absorbing state: total flip rate is zero with an infinite horizon")]
    AbsorbingState,

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("quadrature did not reach tolerance {tol:e} within {max_intervals} subintervals")]
    QuadratureBudget { tol: f64, max_intervals: usize },

    #[error("exponent a = {a} outside the convergence range (0, {max_a})")]
    MomentExponentOutOfRange { a: f64, max_a: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Simulation and numerical analysis of one-dimensional nearest-neighbor
//! random walks in dynamic random environments.
//!
//! The environment is a spin-flip interacting particle system on the integer
//! lattice: each site holds a 0/1 state and flips at a configuration-dependent
//! rate. A walker moves through it with a drift to the right on occupied sites
//! and to the left on vacant sites, the total jump rate being independent of
//! the environment.
//!
//! The crate provides three independent routes to the walker's asymptotic
//! speed, which cross-validate each other:
//!
//! * direct event-driven Monte Carlo ([`walker`]),
//! * a regeneration-time estimator built on an auxiliary lapse-augmented walk
//!   ([`regeneration`]),
//! * a truncated perturbation series in the drift with coefficients computed
//!   from lattice Green's functions and space-time correlations
//!   ([`expansion`]).
//!
//! Supporting machinery lives in [`env`] (exact environment simulation,
//! equilibrium sampling, mixing constants), [`mixing`] (cone geometry,
//! coupling-decay diagnostics) and [`stats`] (batch means, KS tests, Wilson
//! intervals).
//!
//! All randomness flows through splittable counter-based streams ([`rng`]);
//! replicas and lattice sites get independent derived streams, so results are
//! bit-reproducible regardless of thread count. Replica ensembles run on
//! rayon when the default `parallel` feature is enabled and fall back to a
//! sequential loop otherwise; see [`parallel::run_replicas`].

pub mod env;
pub mod error;
pub mod expansion;
pub mod mixing;
pub mod parallel;
pub mod regeneration;
pub mod rng;
pub mod stats;
pub mod walker;

pub use error::{Error, Result};

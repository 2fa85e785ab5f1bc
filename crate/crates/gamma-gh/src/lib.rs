//! Simulation and verification workbench for the gamma generalized-hyperbolic
//! (variance-gamma-type) Levy process.
//!
//! The crate provides four layers:
//!
//! - [`distributions`]: exact primitives of the gamma-GH law - the GIG
//!   normalizing integral, the three mixture densities, the characteristic
//!   function and samplers that stay exact at tiny shapes;
//! - [`paths`]: the empirical process construction on `[0, T]`, exact
//!   increment sampling over arbitrary partitions, and the Brownian
//!   comparison process;
//! - [`variation`]: partitions with their mesh statistics, total and
//!   quadratic variation, and every closed-form moment the variation
//!   analysis rests on;
//! - [`experiments`]: seeded, schedule-independent Monte Carlo runs that
//!   confront each formula with simulation and report named pass/fail checks.
//!
//! All randomness flows through [`rng::RngStream`], keyed by
//! `(master_seed, stream_index)`; identical configurations reproduce
//! identical results bit for bit, whatever the worker count.

pub mod complex;
pub mod distributions;
pub mod error;
pub mod experiments;
pub mod paths;
pub mod quad;
pub mod rng;
pub mod special;
pub mod stats;
pub mod variation;

pub use complex::ComplexValue;
pub use distributions::{GammaGhParams, GigParams, IgParams};
pub use error::{Error, Result};
pub use rng::RngStream;

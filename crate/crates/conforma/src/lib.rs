//! Conformal confidence regions for kernel ridge regression.
//!
//! The crate fits kernel ridge regression (KRR) with an isotropic Gaussian
//! kernel and builds two kinds of prediction sets around it:
//!
//! * exact conformal regions, assembled combinatorially from the affine
//!   dependence of regression residuals on a hypothesised test target
//!   ([`conformal`]), and
//! * Bayesian credible intervals from the equivalent Gaussian process
//!   posterior ([`gpr`]).
//!
//! The [`experiment`] module runs seeded batch coverage studies comparing the
//! two on synthetic data, reporting empirical error rates, hull widths, and
//! the maximal absolute deviation of error rates from their nominal levels.
//!
//! Replication loops and grid searches are data parallel. With the default
//! `parallel` feature they run on rayon; without it the same code runs
//! sequentially. Results are deterministic for a given seed either way.

pub mod conformal;
pub mod error;
pub mod experiment;
pub mod gpr;
pub mod kernel;
pub mod krr;
pub mod linalg;
mod util;

pub use error::{Error, Result};

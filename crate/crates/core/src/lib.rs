//! Exact simulation of one-dimensional long-range diffusion-limited
//! aggregation for transient heavy-tailed walks.
//!
//! The library is organised around a discrete potential theory engine:
//!
//! * [`steplaw`] — the symmetric power-law step distribution, with exact
//!   sampling and analytic evaluation of its pmf, tail and characteristic
//!   function;
//! * [`green`] — the walk's Green function via Fourier quadrature, with an
//!   asymptotic extrapolation branch and a Monte Carlo cross-check;
//! * [`potential`] — capacities, escape probabilities, equilibrium charges,
//!   harmonic measure and the gluing measure of finite sets, with
//!   incremental (bordered) kernel updates;
//! * [`dla`] — the aggregation chain itself, in continuous time, with an
//!   append-only event log;
//! * [`sdla`] — the two-component split process and the coupling
//!   experiment measuring interaction probabilities;
//! * [`harness`] — ensemble experiments, exponent fits and tabular output.

pub mod cholesky;
pub mod dla;
pub mod error;
pub mod green;
pub mod harness;
pub mod numerics;
pub mod potential;
pub mod rng;
pub mod sdla;
pub mod stats;
pub mod steplaw;

pub use error::Error;
pub use steplaw::StepLaw;

/// Positions and step sizes live on the integer line and can reach
/// magnitudes far beyond `i64`; `i128` gives headroom up to `2^96`
/// (enforced by the sampler) plus slack for differences and walk sums.
pub type Site = i128;

pub type Result<T> = std::result::Result<T, Error>;

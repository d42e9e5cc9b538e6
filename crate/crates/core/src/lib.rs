// SPDX-License-Identifier: Apache-2.0

//! Analytic model of a pulsed two-oscillator quantum battery.
//!
//! A lossy charger oscillator receives a delta pulse of strength Ω at t = 0 and
//! passes the excitation to a lossless holder oscillator through a coupling g.
//! The charger decays at rate γ. Everything the crate computes follows from
//! the closed-form first moments, whose character changes at the exceptional
//! point g = γ/4:
//!
//! * [`model`]: regime classification, eigenvalues, branch-free evaluators.
//! * [`energetics`]: ⟨a⟩, ⟨b⟩, stored energy, instantaneous and average power.
//! * [`optima`]: optimal charging times, optimal values, asymptotics.
//! * [`oracle`]: independent numerical checks, namely an RK4 integrator for the first
//!   moments and a Lindblad density-matrix propagator on a truncated Fock space.

pub mod energetics;
pub mod error;
pub mod model;
pub mod optima;
pub mod oracle;
pub mod params;

pub use error::{Error, Result};
pub use params::BatteryParams;

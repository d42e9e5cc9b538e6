// SPDX-License-Identifier: Apache-2.0

//! Independent numerical checks of the closed forms.
//!
//! Neither oracle calls into [`crate::energetics`]: the first-moment integrator
//! works from the 2×2 dynamical matrix, and the Lindblad propagator works
//! from the master equation on a truncated two-mode Fock space.

mod ergotropy;
mod fock;
mod lindblad;
mod moments;

use num_complex::Complex64;

pub use ergotropy::{ergotropy_numeric, holder_ergotropy};
pub use fock::{pulse_initial_state, DensityMatrix, FockConfig, NORM_DEFICIT_LIMIT};
pub use lindblad::{evolve_lindblad, LindbladPropagator, LindbladRun};
pub use moments::integrate_first_moments;

/// Largest dt·max(ω_b, g, γ) either integrator accepts.
pub const MAX_STEP_PRODUCT: f64 = 1e-2;

/// Second-moment data available only from the density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Populations {
    /// ⟨a†a⟩
    pub n_a: f64,
    /// ⟨b†b⟩
    pub n_b: f64,
    /// Var(b†b)
    pub var_b: f64,
    /// Numerically computed ergotropy of the holder's reduced state.
    pub ergotropy: f64,
    pub trace: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSample {
    pub t: f64,
    pub a: Complex64,
    pub b: Complex64,
    /// `None` for traces from the first-moment integrator.
    pub populations: Option<Populations>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MomentTrace {
    pub samples: Vec<MomentSample>,
}

impl MomentTrace {
    pub fn last(&self) -> Option<&MomentSample> {
        self.samples.last()
    }
}

/// Worst-case violation of ⟨b†b⟩ = |⟨b⟩|² over a Lindblad trace.
pub fn factorization_residual(trace: &MomentTrace) -> f64 {
    trace.samples.iter().filter_map(|s| s.populations.map(|pop| (pop.n_b - s.b.norm_sqr()).abs())).fold(0.0, f64::max)
}

fn step_count(dt: f64, t_max: f64) -> usize {
    ((t_max / dt) * (1.0 - 1e-12)).ceil().max(1.0) as usize
}

fn check_step(dt: f64, rates: [f64; 3]) -> crate::Result<()> {
    let fastest = rates.into_iter().fold(0.0, f64::max);
    if dt.is_nan() || dt <= 0.0 || dt * fastest > MAX_STEP_PRODUCT * (1.0 + 1e-12) {
        return Err(crate::Error::InvalidConfig(format!(
            "dt = {dt} must be > 0 with dt * max(omega_b, g, gamma) <= {MAX_STEP_PRODUCT}"
        )));
    }
    Ok(())
}

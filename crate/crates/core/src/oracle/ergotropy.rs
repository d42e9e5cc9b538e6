// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::DensityMatrix;
use crate::params::BatteryParams;

/// Ergotropy of a holder state with H_b = ω_b b†b on a truncated ladder.
///
/// Subtracts the energy of the passive state, which puts the largest
/// eigenvalue of ρ_b on the ground level, the next on the first level, and so on.
pub fn holder_ergotropy(rho_b: &DMatrix<Complex64>, omega_b: f64) -> f64 {
    let energy: f64 = (0..rho_b.nrows()).map(|n| omega_b * n as f64 * rho_b[(n, n)].re).sum();
    let hermitian = (rho_b + rho_b.adjoint()) * Complex64::new(0.5, 0.0);
    let mut eigenvalues: Vec<f64> = hermitian.symmetric_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    let passive: f64 = eigenvalues.iter().enumerate().map(|(k, lambda)| omega_b * k as f64 * lambda).sum();
    // non-negative up to eigensolver rounding
    (energy - passive).max(0.0)
}

/// Ergotropy of the holder's reduced state Tr_a ρ.
pub fn ergotropy_numeric(rho: &DensityMatrix, p: &BatteryParams) -> f64 {
    holder_ergotropy(&rho.holder_state(), p.omega_b())
}

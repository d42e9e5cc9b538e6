// SPDX-License-Identifier: Apache-2.0

//! The two transcendental numbers governing the average-power optimum.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use super::roots::{bisect, find_root};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranscendentalConstants {
    /// ζ = 4x*, with x* the nonzero root of 2x = tanh(x)(1 + 2x): γ·t_P as g → 0.
    pub zeta: f64,
    /// Root of tan(Z) = 2Z in (0, π/2): g·t_P without dissipation.
    pub big_z: f64,
}

pub fn solve_transcendental_constants() -> TranscendentalConstants {
    static CONSTANTS: OnceLock<TranscendentalConstants> = OnceLock::new();
    *CONSTANTS.get_or_init(|| {
        let big_z = bisect(|y: f64| y.tan() - 2.0 * y, 1e-3, FRAC_PI_2 - 1e-9, 1e-14)
            .expect("tan(y) - 2y changes sign on (0, pi/2)");
        let x = find_root(|x: f64| 2.0 * x - x.tanh() * (1.0 + 2.0 * x), 1e-3, 5.0, 1e-14)
            .expect("2x - tanh(x)(1 + 2x) changes sign on (0, 5)");
        TranscendentalConstants { zeta: 4.0 * x, big_z }
    })
}

/// Peak of the dissipationless average power, g·t_P and P(t_P)/(ω_bΩ²g).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LosslessAvgPowerPeak {
    /// (2π + √(9π² − 60))/10, from expanding tan z = 2z to first order about π/2.
    pub z_approx: f64,
    pub power_approx: f64,
    /// Exact root Z of tan z = 2z.
    pub z_exact: f64,
    pub power_exact: f64,
}

pub fn dissipationless_avg_power_peak() -> LosslessAvgPowerPeak {
    let z_approx = (2.0 * PI + (9.0 * PI * PI - 60.0).sqrt()) / 10.0;
    let z_exact = solve_transcendental_constants().big_z;
    let peak = |z: f64| z.sin().powi(2) / z;
    LosslessAvgPowerPeak { z_approx, power_approx: peak(z_approx), z_exact, power_exact: peak(z_exact) }
}

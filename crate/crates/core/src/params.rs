// SPDX-License-Identifier: Apache-2.0

//! Physical inputs of one battery instance.

use crate::error::{Error, Result};

/// The four physical inputs of the pulsed battery (ℏ = 1).
///
/// * `omega_b`: level spacing of both oscillators.
/// * `g`: charger-holder coupling rate.
/// * `gamma`: dissipation rate of the charger.
/// * `pulse`: dimensionless strength Ω of the delta pulse acting on the charger at t = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatteryParams {
    omega_b: f64,
    g: f64,
    gamma: f64,
    pulse: f64,
}

impl BatteryParams {
    pub fn new(omega_b: f64, g: f64, gamma: f64, pulse: f64) -> Result<Self> {
        let all = [("omega_b", omega_b), ("g", g), ("gamma", gamma), ("Omega", pulse)];
        if let Some((name, v)) = all.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidParams(format!("{name} must be finite, got {v}")));
        }
        if omega_b <= 0.0 {
            return Err(Error::InvalidParams(format!("omega_b must be > 0, got {omega_b}")));
        }
        if let Some((name, v)) = all[1..].iter().find(|(_, v)| *v < 0.0) {
            return Err(Error::InvalidParams(format!("{name} must be >= 0, got {v}")));
        }
        Ok(Self { omega_b, g, gamma, pulse })
    }

    pub fn omega_b(&self) -> f64 {
        self.omega_b
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Pulse strength Ω.
    pub fn pulse(&self) -> f64 {
        self.pulse
    }

    pub fn with_g(self, g: f64) -> Result<Self> {
        Self::new(self.omega_b, g, self.gamma, self.pulse)
    }

    pub fn with_gamma(self, gamma: f64) -> Result<Self> {
        Self::new(self.omega_b, self.g, gamma, self.pulse)
    }

    pub fn with_pulse(self, pulse: f64) -> Result<Self> {
        Self::new(self.omega_b, self.g, self.gamma, pulse)
    }

    /// Energy scale ω_bΩ², the largest energy the holder can ever store.
    pub fn energy_scale(&self) -> f64 {
        self.omega_b * self.pulse * self.pulse
    }

    /// Coupling at the exceptional point, γ/4.
    pub fn g_ep(&self) -> f64 {
        self.gamma / 4.0
    }

    /// Regime discriminant w = g² − (γ/4)².
    pub fn discriminant(&self) -> f64 {
        let q = self.gamma / 4.0;
        (self.g - q) * (self.g + q)
    }
}

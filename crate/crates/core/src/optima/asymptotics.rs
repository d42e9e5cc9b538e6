// SPDX-License-Identifier: Apache-2.0

//! Weak- and strong-coupling limits of the optimal times and values.

use std::f64::consts::PI;

use super::constants::solve_transcendental_constants;
use crate::error::{Error, Result};
use crate::params::BatteryParams;

/// Which side of the exceptional point an estimate is meant for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// g ≪ γ/4
    Weak,
    /// g ≫ γ/4
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    EnergyTime,
    EnergyValue,
    InstPowerTime,
    InstPowerValue,
    AvgPowerTime,
    AvgPowerValue,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Asymptote {
    pub name: &'static str,
    pub quantity: Quantity,
    pub side: Side,
    pub value: f64,
}

/// Every limiting form of t_E, E(t_E), t_𝒫, 𝒫(t_𝒫), t_P and P(t_P), in the
/// caller's raw units. Requires g > 0 and γ > 0.
pub fn asymptotics(p: &BatteryParams) -> Result<Vec<Asymptote>> {
    let (g, gamma) = (p.g(), p.gamma());
    if g <= 0.0 || gamma <= 0.0 {
        return Err(Error::Domain { op: "asymptotics", reason: "needs g > 0 and gamma > 0".into() });
    }
    let scale = p.energy_scale();
    let c = solve_transcendental_constants();
    let (zeta, big_z) = (c.zeta, c.big_z);
    let ln2 = 2f64.ln();

    use Quantity::*;
    use Side::*;
    let row = |name, quantity, side, value| Asymptote { name, quantity, side, value };
    Ok(vec![
        row("t_E_weak", EnergyTime, Weak, 4.0 / gamma * (gamma / (2.0 * g)).ln()),
        row("t_E_strong", EnergyTime, Strong, PI / (2.0 * g) - gamma / (4.0 * g * g)),
        row("E_at_tE_weak", EnergyValue, Weak, scale * (2.0 * g / gamma).powi(2)),
        row("E_at_tE_strong", EnergyValue, Strong, scale * (1.0 - PI * gamma / (4.0 * g))),
        row("t_Pinst_weak", InstPowerTime, Weak, 4f64.ln() / gamma - 16.0 * (1.0 - ln2) * g * g / gamma.powi(3)),
        row("t_Pinst_strong", InstPowerTime, Strong, (PI - gamma / g) / (4.0 * g)),
        row("Pinst_max_weak", InstPowerValue, Weak, scale * g * g / gamma),
        row("Pinst_max_strong", InstPowerValue, Strong, scale * g * (1.0 - (PI + 2.0) / 8.0 * gamma / g)),
        row("t_Pavg_weak", AvgPowerTime, Weak, zeta / gamma),
        row("t_Pavg_strong", AvgPowerTime, Strong, big_z / g),
        row("Pavg_max_weak", AvgPowerValue, Weak, weak_avg_power_prefactor() * scale * (4.0 * g).powi(2) / gamma),
        row("Pavg_max_strong", AvgPowerValue, Strong, strong_avg_power_prefactor() * scale * g),
    ])
}

/// sinh²(ζ/4) e^{−ζ/2} / ζ
pub fn weak_avg_power_prefactor() -> f64 {
    let zeta = solve_transcendental_constants().zeta;
    (zeta / 4.0).sinh().powi(2) * (-zeta / 2.0).exp() / zeta
}

/// sin²(Z) / Z
pub fn strong_avg_power_prefactor() -> f64 {
    let z = solve_transcendental_constants().big_z;
    z.sin().powi(2) / z
}

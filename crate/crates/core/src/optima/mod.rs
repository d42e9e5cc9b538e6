// SPDX-License-Identifier: Apache-2.0

//! Optimal charging times and the optimal values of E, 𝒫 and P.
//!
//! The energy and instantaneous-power optima have closed forms; the
//! average-power optimum is the root of a transcendental turning-point equation.
//! Every optimum can be cross-checked with [`numeric_optima`], which only uses
//! the derivative-free maximizer.

pub mod asymptotics;
pub mod constants;
pub mod maximize;
pub mod roots;

use std::f64::consts::{FRAC_PI_2, PI};

pub use asymptotics::{asymptotics, strong_avg_power_prefactor, weak_avg_power_prefactor, Asymptote, Quantity, Side};
pub use constants::{dissipationless_avg_power_peak, solve_transcendental_constants, TranscendentalConstants};
pub use maximize::{maximize, Maximum};

use crate::energetics::{average_power, instantaneous_power, stored_energy};
use crate::error::{Error, Result};
use crate::model::{classify_regime, stable_c, stable_inverse_tan, stable_s, Regime, SERIES_SWITCH};
use crate::params::BatteryParams;

/// How an optimal time was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    RootFound,
    NumericMaximizer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Optimum {
    pub time: f64,
    pub value: f64,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimaResult {
    /// t_E and E(t_E).
    pub energy: Optimum,
    /// t_𝒫 and 𝒫(t_𝒫).
    pub inst_power: Optimum,
    /// t_P and P(t_P).
    pub avg_power: Optimum,
}

const SCAN_POINTS: usize = 400;

fn require_coupling(p: &BatteryParams, op: &'static str) -> Result<()> {
    if p.g() > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain { op, reason: "g = 0 leaves the holder empty; there is no optimum".into() })
    }
}

/// t_E: arctanh(4Γ/γ)/Γ, 4/γ or arctan(4G/γ)/G, and π/2g without dissipation.
pub fn optimal_energy_time(p: &BatteryParams) -> Result<f64> {
    require_coupling(p, "optimal_energy_time")?;
    let (g, gamma) = (p.g(), p.gamma());
    if gamma == 0.0 {
        return Ok(FRAC_PI_2 / g);
    }
    let w = p.discriminant();
    let k = 4.0 / gamma;
    if w < 0.0 && -w * k * k >= SERIES_SWITCH {
        // arctanh(x) = ln((1 + x)/√(1 − x²)) with √(1 − x²) = 4g/γ, which stays
        // accurate when 4Γ/γ rounds to 1 at very weak coupling
        let big_gamma = (-w).sqrt();
        return Ok(((gamma + 4.0 * big_gamma) / (4.0 * g)).ln() / big_gamma);
    }
    Ok(stable_inverse_tan(w, k).expect("only w < 0 can leave the arctanh domain"))
}

/// E(t_E) = ω_bΩ² e^{−γ t_E / 2}.
pub fn optimal_energy_value(p: &BatteryParams) -> Result<f64> {
    let t = optimal_energy_time(p)?;
    Ok(p.energy_scale() * (-p.gamma() * t / 2.0).exp())
}

/// t_𝒫 and 𝒫(t_𝒫).
///
/// The stationarity condition of 𝒫 is a quadratic in tan(Gt) (tanh(Γt) below
/// the exceptional point) whose first positive root is
/// `4√|w| / (2γ + √(γ² + 16g²))`. This is the textbook arctan/arctanh argument
/// with numerator and denominator rationalized, which removes the 0/0 at
/// g = √3γ/4 and at the exceptional point.
pub fn optimal_inst_power(p: &BatteryParams) -> Result<Optimum> {
    require_coupling(p, "optimal_inst_power")?;
    let (g, gamma) = (p.g(), p.gamma());
    let time = if gamma == 0.0 {
        Some(PI / (4.0 * g))
    } else {
        let k = 4.0 / (2.0 * gamma + (gamma * gamma + 16.0 * g * g).sqrt());
        stable_inverse_tan(p.discriminant(), k)
    };
    match time {
        Some(time) => Ok(Optimum { time, value: instantaneous_power(p, time), method: Method::ClosedForm }),
        None => {
            let m = maximize(|t| instantaneous_power(p, t), 0.0, search_window(p), SCAN_POINTS);
            Ok(Optimum { time: m.arg, value: m.value, method: Method::NumericMaximizer })
        }
    }
}

pub fn optimal_inst_power_time(p: &BatteryParams) -> Result<f64> {
    optimal_inst_power(p).map(|o| o.time)
}

pub fn optimal_inst_power_value(p: &BatteryParams) -> Result<f64> {
    optimal_inst_power(p).map(|o| o.value)
}

/// Turning point of E(t)/t: 2C(w,t) − (S(w,t)/t)(1 + γt/2).
///
/// This is the same condition as 2x = tanh(x)[1 + (γ/2Γ)x] (x = Γt) below the
/// exceptional point and 2y = tan(y)[1 + (γ/2G)y] (y = Gt) above it, written
/// so that it stays regular through w = 0. It is positive as t → 0⁺.
fn avg_power_turning(p: &BatteryParams, t: f64) -> f64 {
    let w = p.discriminant();
    2.0 * stable_c(w, t) - stable_s(w, t) / t * (1.0 + p.gamma() * t / 2.0)
}

/// t_P and P(t_P).
pub fn optimal_avg_power(p: &BatteryParams) -> Result<Optimum> {
    require_coupling(p, "optimal_avg_power")?;
    let (g, gamma) = (p.g(), p.gamma());
    let avg = |t: f64| average_power(p, t).expect("t > 0");
    if gamma == 0.0 {
        let time = solve_transcendental_constants().big_z / g;
        return Ok(Optimum { time, value: avg(time), method: Method::ClosedForm });
    }
    let regime = classify_regime(p);
    if regime.regime == Regime::AtEp {
        let time = 2.0 / gamma;
        return Ok(Optimum { time, value: avg(time), method: Method::ClosedForm });
    }

    // solve in u = r·t so the tolerance applies to a dimensionless variable
    let r = g.max(gamma / 4.0);
    let f = |u: f64| avg_power_turning(p, u / r);
    let u_max = regime.coupling.map(|big_g| r * (FRAC_PI_2 - 1e-9) / big_g);
    let lo = 1e-3;
    let mut hi = 2.0;
    for _ in 0..64 {
        if let Some(u_max) = u_max {
            if hi >= u_max {
                hi = u_max;
                break;
            }
        }
        if f(hi) < 0.0 {
            break;
        }
        hi *= 2.0;
    }
    let u = roots::find_root(f, lo, hi, 1e-12)?;
    let time = u / r;
    Ok(Optimum { time, value: avg(time), method: Method::RootFound })
}

pub fn optimal_avg_power_time(p: &BatteryParams) -> Result<f64> {
    optimal_avg_power(p).map(|o| o.time)
}

pub fn optimal_avg_power_value(p: &BatteryParams) -> Result<f64> {
    optimal_avg_power(p).map(|o| o.value)
}

/// Analytic approximation to t_P, interpolating between the weak- and
/// strong-coupling limits with (g/γ)^{3/2} and (γ/g)^{3/4} corrections.
///
/// Only an approximation; [`optimal_avg_power_time`] is exact.
pub fn approx_avg_power_time(p: &BatteryParams) -> Result<f64> {
    let (g, gamma) = (p.g(), p.gamma());
    if g <= 0.0 || gamma <= 0.0 {
        return Err(Error::Domain { op: "approx_avg_power_time", reason: "needs g > 0 and gamma > 0".into() });
    }
    let c = solve_transcendental_constants();
    Ok(match classify_regime(p).regime {
        Regime::BelowEp => (c.zeta - 8.0 * (c.zeta - 2.0) * (g / gamma).powf(1.5)) / gamma,
        Regime::AtEp => 2.0 / gamma,
        Regime::AboveEp => (c.big_z - (2.0 * c.big_z - 1.0) / (4.0 * 2f64.sqrt()) * (gamma / g).powf(0.75)) / g,
    })
}

/// All three optima from the closed forms and the turning-point solver.
pub fn optima(p: &BatteryParams) -> Result<OptimaResult> {
    let t_e = optimal_energy_time(p)?;
    Ok(OptimaResult {
        energy: Optimum { time: t_e, value: optimal_energy_value(p)?, method: Method::ClosedForm },
        inst_power: optimal_inst_power(p)?,
        avg_power: optimal_avg_power(p)?,
    })
}

/// A time window that contains the global maxima of E, 𝒫 and P.
///
/// Above the exceptional point all three peak inside the first hump of
/// sin²(Gt), i.e. before π/G. The decay bound covers the logarithmic growth
/// of t_E at weak coupling.
pub fn search_window(p: &BatteryParams) -> f64 {
    let (g, gamma) = (p.g(), p.gamma());
    let decay = if gamma > 0.0 { 4.0 / gamma * (3.0 + (1.0 + gamma / (2.0 * g)).ln()) } else { f64::INFINITY };
    match classify_regime(p).coupling {
        Some(big_g) => decay.min(PI / big_g),
        None => decay,
    }
}

/// All three optima located by the derivative-free maximizer alone.
pub fn numeric_optima(p: &BatteryParams) -> Result<OptimaResult> {
    require_coupling(p, "numeric_optima")?;
    let window = search_window(p);
    let numeric = |m: Maximum| Optimum { time: m.arg, value: m.value, method: Method::NumericMaximizer };
    Ok(OptimaResult {
        energy: numeric(maximize(|t| stored_energy(p, t), 0.0, window, SCAN_POINTS)),
        inst_power: numeric(maximize(|t| instantaneous_power(p, t), 0.0, window, SCAN_POINTS)),
        avg_power: numeric(maximize(|t| average_power(p, t).unwrap_or(0.0), 0.0, window, SCAN_POINTS)),
    })
}

#[cfg(test)]
mod tests;

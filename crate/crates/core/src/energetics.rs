// SPDX-License-Identifier: Apache-2.0

//! Closed-form first moments and battery figures of merit.
//!
//! After the pulse the charger holds the coherent amplitude −iΩ and the holder
//! is empty. With w = g² − (γ/4)² the moments are
//!
//! ```text
//! ⟨a⟩ = −iΩ [C(w,t) − (γ/4) S(w,t)] e^{−γt/4} e^{−iω_b t}
//! ⟨b⟩ = −Ω g S(w,t) e^{−γt/4} e^{−iω_b t}
//! ```
//!
//! and since the two modes stay in a product of coherent states,
//! E = ω_b⟨b†b⟩ = ω_b|⟨b⟩|². Times before the pulse (t < 0) give the vacuum.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{stable_c, stable_s};
use crate::params::BatteryParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstMoments {
    pub t: f64,
    /// ⟨a⟩, the charger amplitude.
    pub a: Complex64,
    /// ⟨b⟩, the holder amplitude.
    pub b: Complex64,
}

/// One time sample of the three figures of merit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyRecord {
    pub t: f64,
    pub energy: f64,
    pub inst_power: f64,
    pub avg_power: f64,
}

pub fn first_moments(p: &BatteryParams, t: f64) -> FirstMoments {
    if t < 0.0 {
        return FirstMoments { t, a: Complex64::new(0.0, 0.0), b: Complex64::new(0.0, 0.0) };
    }
    let w = p.discriminant();
    let s = stable_s(w, t);
    let c = stable_c(w, t);
    let envelope = (-p.gamma() * t / 4.0).exp();
    let phase = Complex64::from_polar(envelope, -p.omega_b() * t);
    let omega = p.pulse();
    FirstMoments {
        t,
        a: Complex64::new(0.0, -omega * (c - p.gamma() / 4.0 * s)) * phase,
        b: -omega * p.g() * s * phase,
    }
}

/// Energy stored in the holder, ω_bΩ² g² S(w,t)² e^{−γt/2}.
///
/// Reduces to ω_bΩ² sin²(gt) without dissipation.
pub fn stored_energy(p: &BatteryParams, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if p.gamma() == 0.0 {
        return p.energy_scale() * (p.g() * t).sin().powi(2);
    }
    let gs = p.g() * stable_s(p.discriminant(), t);
    p.energy_scale() * gs * gs * (-p.gamma() * t / 2.0).exp()
}

/// Instantaneous power dE/dt = ω_bΩ² g² [2SC − (γ/2)S²] e^{−γt/2}.
pub fn instantaneous_power(p: &BatteryParams, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let g = p.g();
    if p.gamma() == 0.0 {
        return p.energy_scale() * g * (2.0 * g * t).sin();
    }
    let w = p.discriminant();
    let s = stable_s(w, t);
    let c = stable_c(w, t);
    p.energy_scale() * g * g * s * (2.0 * c - p.gamma() / 2.0 * s) * (-p.gamma() * t / 2.0).exp()
}

/// Average power E(t)/t, with the limit 0 at t = 0.
pub fn average_power(p: &BatteryParams, t: f64) -> Result<f64> {
    if t < 0.0 || t.is_nan() {
        return Err(Error::Domain { op: "average_power", reason: format!("t must be >= 0, got {t}") });
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(stored_energy(p, t) / t)
}

pub fn energy_record(p: &BatteryParams, t: f64) -> Result<EnergyRecord> {
    Ok(EnergyRecord {
        t,
        energy: stored_energy(p, t),
        inst_power: instantaneous_power(p, t),
        avg_power: average_power(p, t)?,
    })
}

/// Ergotropy of the holder.
///
/// The holder is always in a pure coherent state, whose passive state is the
/// vacuum, so the extractable work equals the stored energy. The Lindblad
/// oracle checks this numerically.
pub fn ergotropy_analytic(p: &BatteryParams, t: f64) -> f64 {
    stored_energy(p, t)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn params(omega_b: f64, g: f64, gamma: f64) -> BatteryParams {
        BatteryParams::new(omega_b, g, gamma, 1.0).unwrap()
    }

    /// Fixed-step RK4 on iψ' = Hψ; test-local so it shares nothing with the
    /// closed forms or with the oracle module.
    fn rk4_holder_population(p: &BatteryParams, t_end: f64, steps: usize) -> f64 {
        let h = crate::model::dynamical_matrix(p);
        let rhs = |y: [Complex64; 2]| {
            let mi = Complex64::new(0.0, -1.0);
            [mi * (h[0][0] * y[0] + h[0][1] * y[1]), mi * (h[1][0] * y[0] + h[1][1] * y[1])]
        };
        let dt = t_end / steps as f64;
        let mut y = [Complex64::new(0.0, -p.pulse()), Complex64::new(0.0, 0.0)];
        for _ in 0..steps {
            let k1 = rhs(y);
            let k2 = rhs([y[0] + k1[0] * (dt / 2.0), y[1] + k1[1] * (dt / 2.0)]);
            let k3 = rhs([y[0] + k2[0] * (dt / 2.0), y[1] + k2[1] * (dt / 2.0)]);
            let k4 = rhs([y[0] + k3[0] * dt, y[1] + k3[1] * dt]);
            for i in 0..2 {
                y[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0);
            }
        }
        y[1].norm_sqr()
    }

    #[test]
    fn moments_at_pulse() {
        let m = first_moments(&params(5.0, 0.7, 1.3), 0.0);
        assert_eq!(m.a, Complex64::new(0.0, -1.0));
        assert_eq!(m.b, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn charger_empties_at_ep() {
        let p = params(5.0, 0.25, 1.0);
        assert!(first_moments(&p, 4.0).a.norm() < 1e-15);
    }

    #[test]
    fn before_pulse_is_vacuum() {
        let p = params(5.0, 1.0, 1.0);
        assert_eq!(first_moments(&p, -1.0).a.norm(), 0.0);
        assert_eq!(stored_energy(&p, -1.0), 0.0);
        assert_eq!(instantaneous_power(&p, -1.0), 0.0);
        assert!(average_power(&p, -1.0).is_err());
    }

    #[test]
    fn holder_population_matches_rk4() {
        let p = params(5.0, 1.0, 1.0);
        let closed = first_moments(&p, 1.0).b.norm_sqr();
        let rk4 = rk4_holder_population(&p, 1.0, 20_000);
        assert!((closed - rk4).abs() < 1e-12, "{closed} vs {rk4}");
        assert!((closed - 0.439160).abs() < 1e-6);
    }

    #[test]
    fn energy_examples() {
        let p = params(1.0, 0.25, 1.0);
        assert_relative_eq!(stored_energy(&p, 4.0), (-2.0f64).exp(), max_relative = 1e-14);

        let lossless = params(1.0, 0.8, 0.0);
        assert_relative_eq!(stored_energy(&lossless, PI / 1.6), 1.0, max_relative = 1e-14);

        let p = params(1.0, 1.0, 1.0);
        assert!((stored_energy(&p, 1.0) - 0.439160).abs() < 1e-6);
    }

    #[test]
    fn power_examples() {
        let p = params(5.0, 0.7, 1.0);
        assert_eq!(instantaneous_power(&p, 0.0), 0.0);

        let lossless = params(1.0, 2.0, 0.0);
        assert_relative_eq!(instantaneous_power(&lossless, PI / 8.0), 2.0, max_relative = 1e-14);

        // EP branch at t = 2(2 − √2)/γ: (γ/2)(γt/4)(1 − γt/4)e^{−γt/2}
        let ep = params(1.0, 0.25, 1.0);
        let t = 2.0 * (2.0 - 2f64.sqrt());
        let expected = 0.5 * (t / 4.0) * (1.0 - t / 4.0) * (-t / 2.0).exp();
        assert_relative_eq!(instantaneous_power(&ep, t), expected, max_relative = 1e-14);
        assert!((expected - 0.05765).abs() < 1e-5);
    }

    #[test]
    fn average_power_examples() {
        let p = params(1.0, 2.0, 1.0);
        assert_eq!(average_power(&p, 0.0).unwrap(), 0.0);
        assert!(average_power(&p, 1e-300).unwrap() < 1e-290);
        let big_g = (4.0f64 - 1.0 / 16.0).sqrt();
        for k in 1..4 {
            let node = k as f64 * PI / big_g;
            assert!(average_power(&p, node).unwrap() < 1e-28);
        }
        let lossless = params(1.0, 1.0, 0.0);
        let peak = average_power(&lossless, 1.17).unwrap();
        assert!((peak - 0.72).abs() < 5e-3, "{peak}");
    }

    #[test]
    fn ergotropy_equals_energy() {
        let p = params(1.0, 0.25, 1.0);
        assert_eq!(ergotropy_analytic(&p, 0.0), 0.0);
        assert_relative_eq!(ergotropy_analytic(&p, 4.0), (-2.0f64).exp(), max_relative = 1e-14);
        let lossless = params(1.0, 1.0, 0.0);
        assert_relative_eq!(ergotropy_analytic(&lossless, PI / 2.0), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn product_state_factorization() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let p = BatteryParams::new(
                rng.gen_range(0.5..10.0),
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..3.0),
                rng.gen_range(0.0..2.0),
            )
            .unwrap();
            let t = rng.gen_range(0.0..15.0);
            let e = stored_energy(&p, t);
            let m = first_moments(&p, t);
            let from_moment = p.omega_b() * m.b.norm_sqr();
            let cap = p.pulse().powi(2) * (1.0 + 1e-12);
            assert!(m.a.norm_sqr() <= cap && m.b.norm_sqr() <= cap);
            assert!((e - from_moment).abs() <= 1e-12 * e.max(1e-300), "{p:?} t={t}");
        }
    }

    #[test]
    fn power_is_energy_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut checked = 0;
        while checked < 200 {
            let gamma = rng.gen_range(0.1..3.0);
            let p = BatteryParams::new(1.0, rng.gen_range(0.01..3.0) * gamma, gamma, 1.0).unwrap();
            let t = rng.gen_range(0.05..10.0) / gamma;
            let h = 1e-6 / gamma;
            let fd = (stored_energy(&p, t + h) - stored_energy(&p, t - h)) / (2.0 * h);
            let exact = instantaneous_power(&p, t);
            // skip points next to a stationary point where the relative error is ill-posed
            let scale = p.energy_scale() * p.g().max(gamma);
            if exact.abs() < 1e-3 * scale {
                continue;
            }
            assert!((fd - exact).abs() <= 1e-6 * exact.abs(), "{p:?} t={t}: {fd} vs {exact}");
            checked += 1;
        }
    }

    #[test]
    fn continuous_through_ep() {
        for gamma in [0.5, 1.0, 4.0] {
            let at = params(1.0, gamma / 4.0, gamma);
            for side in [-1.0, 1.0] {
                let near = params(1.0, gamma / 4.0 + side * 1e-8 * gamma, gamma);
                for &tg in &[0.1, 1.0, 3.7, 7.0, 10.0] {
                    let t = tg / gamma;
                    assert_relative_eq!(stored_energy(&near, t), stored_energy(&at, t), max_relative = 1e-6);
                    assert_relative_eq!(
                        instantaneous_power(&near, t),
                        instantaneous_power(&at, t),
                        max_relative = 1e-6
                    );
                    assert_relative_eq!(
                        average_power(&near, t).unwrap(),
                        average_power(&at, t).unwrap(),
                        max_relative = 1e-6
                    );
                }
            }
        }
    }

    #[test]
    fn decay_envelope_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..500 {
            let gamma = rng.gen_range(0.1..2.0);
            let p = BatteryParams::new(1.0, rng.gen_range(0.0..3.0), gamma, 1.3).unwrap();
            let t = rng.gen_range(0.0..40.0);
            let e = stored_energy(&p, t);
            assert!(e >= 0.0);
            assert!(e <= p.energy_scale() * (1.0 + 1e-14));
            if let Some(big_g) = crate::model::classify_regime(&p).coupling {
                let bound = p.energy_scale() * (p.g() / big_g).powi(2) * (-gamma * t / 2.0).exp();
                assert!(e <= bound * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn dissipationless_limit() {
        for g in [0.1, 1.0, 3.0] {
            let lossless = params(2.0, g, 0.0);
            let tiny = params(2.0, g, 1e-6);
            for i in 0..=200 {
                let t = 10.0 / g * i as f64 / 200.0;
                let diff = (stored_energy(&tiny, t) - stored_energy(&lossless, t)).abs();
                assert!(diff <= 1e-4 * lossless.energy_scale());
            }
        }
    }

    #[test]
    fn record_is_consistent() {
        let p = params(3.0, 1.0, 1.0);
        let r = energy_record(&p, 2.0).unwrap();
        assert_relative_eq!(r.avg_power, r.energy / 2.0);
        assert!(r.energy <= p.energy_scale());
    }
}

// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use super::{check_step, step_count, MomentSample, MomentTrace};
use crate::error::{Error, Result};
use crate::model::dynamical_matrix;
use crate::params::BatteryParams;

/// Fixed-step RK4 on iψ' = ℋψ for ψ = (⟨a⟩, ⟨b⟩), starting from the
/// post-pulse value (−iΩ, 0). Every step is recorded.
///
/// The step is shrunk so that an integer number of steps lands on `t_max`.
pub fn integrate_first_moments(p: &BatteryParams, dt: f64, t_max: f64) -> Result<MomentTrace> {
    check_step(dt, [p.omega_b(), p.g(), p.gamma()])?;
    if !t_max.is_finite() || t_max <= 0.0 {
        return Err(Error::InvalidConfig(format!("t_max must be positive, got {t_max}")));
    }
    let steps = step_count(dt, t_max);
    let dt = t_max / steps as f64;

    // −iℋ
    let m = dynamical_matrix(p).map(|row| row.map(|h| Complex64::new(h.im, -h.re)));
    let rhs = |y: [Complex64; 2]| [m[0][0] * y[0] + m[0][1] * y[1], m[1][0] * y[0] + m[1][1] * y[1]];
    let axpy = |y: [Complex64; 2], k: [Complex64; 2], h: f64| [y[0] + k[0] * h, y[1] + k[1] * h];

    let mut y = [Complex64::new(0.0, -p.pulse()), Complex64::new(0.0, 0.0)];
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(MomentSample { t: 0.0, a: y[0], b: y[1], populations: None });
    for n in 1..=steps {
        let k1 = rhs(y);
        let k2 = rhs(axpy(y, k1, dt / 2.0));
        let k3 = rhs(axpy(y, k2, dt / 2.0));
        let k4 = rhs(axpy(y, k3, dt));
        for i in 0..2 {
            y[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (dt / 6.0);
        }
        samples.push(MomentSample { t: n as f64 * dt, a: y[0], b: y[1], populations: None });
    }
    Ok(MomentTrace { samples })
}

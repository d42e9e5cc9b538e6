// SPDX-License-Identifier: Apache-2.0

//! Fixed-step RK4 propagation of the master equation
//!
//! ```text
//! ∂ρ/∂t = i[ρ, H] + (γ/2)(2aρa† − a†aρ − ρa†a),
//! H = ω_b(a†a + b†b) + g(a†b + b†a)
//! ```
//!
//! The free part ω_b(a†a + b†b) commutes with the rest of the generator
//! (the coupling conserves the total excitation number and the dissipator is
//! phase covariant), so it is applied exactly as the phase
//! e^{−iω_b(n_i − n_j)t} on ρ_ij and RK4 only integrates the interaction
//! picture equation ∂ρ/∂t = K + K† + γ aρa†, with K = −i H_eff ρ and
//! H_eff = g(a†b + b†a) − i(γ/2)a†a. H_eff couples each basis row to at most
//! two others, so the right-hand side is applied row by row without forming
//! any superoperator.

use num_complex::Complex64;

use super::{ergotropy_numeric, step_count, DensityMatrix, FockConfig, MomentSample, MomentTrace, Populations};
use crate::error::{Error, Result};
use crate::params::BatteryParams;

const TRACE_DRIFT_LIMIT: f64 = 1e-6;
const HERMITICITY_LIMIT: f64 = 1e-9;

/// Row-coupling structure of H_eff and of the jump operator a.
#[derive(Debug, Clone)]
struct Generator {
    dim: usize,
    gamma: f64,
    /// −i × diagonal of H_eff.
    diag: Vec<Complex64>,
    /// (source row, −i × coefficient) for the a†b and b†a hops into each row.
    hops: Vec<[(usize, Complex64); 2]>,
    /// (row of (n_a + 1, n_b), √(n_a + 1)); coefficient 0 on the cutoff edge.
    lowered: Vec<(usize, f64)>,
}

impl Generator {
    fn new(p: &BatteryParams, n_cut: usize) -> Self {
        let levels = n_cut + 1;
        let dim = levels * levels;
        let idx = |na: usize, nb: usize| na * levels + nb;
        let (g, gamma) = (p.g(), p.gamma());
        let minus_i = Complex64::new(0.0, -1.0);
        let mut diag = Vec::with_capacity(dim);
        let mut hops = Vec::with_capacity(dim);
        let mut lowered = Vec::with_capacity(dim);
        for na in 0..levels {
            for nb in 0..levels {
                let h = Complex64::new(0.0, -gamma / 2.0 * na as f64);
                diag.push(minus_i * h);
                // ⟨na, nb| a†b |na − 1, nb + 1⟩ = √na √(nb + 1)
                let from_charger = if na >= 1 && nb < n_cut {
                    (idx(na - 1, nb + 1), minus_i * g * ((na * (nb + 1)) as f64).sqrt())
                } else {
                    (0, Complex64::new(0.0, 0.0))
                };
                // ⟨na, nb| b†a |na + 1, nb − 1⟩ = √(na + 1) √nb
                let from_holder = if nb >= 1 && na < n_cut {
                    (idx(na + 1, nb - 1), minus_i * g * (((na + 1) * nb) as f64).sqrt())
                } else {
                    (0, Complex64::new(0.0, 0.0))
                };
                hops.push([from_charger, from_holder]);
                lowered.push(if na < n_cut { (idx(na + 1, nb), ((na + 1) as f64).sqrt()) } else { (0, 0.0) });
            }
        }
        Self { dim, gamma, diag, hops, lowered }
    }

    /// out = L(rho); `k` is scratch space of the same size.
    fn apply(&self, rho: &[Complex64], k: &mut [Complex64], out: &mut [Complex64]) {
        let dim = self.dim;
        for i in 0..dim {
            let row = &mut k[i * dim..(i + 1) * dim];
            let d = self.diag[i];
            let [(s1, c1), (s2, c2)] = self.hops[i];
            let r0 = &rho[i * dim..(i + 1) * dim];
            let r1 = &rho[s1 * dim..(s1 + 1) * dim];
            let r2 = &rho[s2 * dim..(s2 + 1) * dim];
            for j in 0..dim {
                row[j] = d * r0[j] + c1 * r1[j] + c2 * r2[j];
            }
        }
        for i in 0..dim {
            let (li, ci) = self.lowered[i];
            let jump_row = &rho[li * dim..(li + 1) * dim];
            let gi = self.gamma * ci;
            for j in 0..dim {
                let (lj, cj) = self.lowered[j];
                out[i * dim + j] = k[i * dim + j] + k[j * dim + i].conj() + jump_row[lj] * (gi * cj);
            }
        }
    }
}

/// Steps a density matrix forward under the post-pulse master equation.
///
/// The state is held in the frame rotating at ω_b; [`Self::lab_state`] and
/// [`Self::sample`] report lab-frame quantities.
#[derive(Debug, Clone)]
pub struct LindbladPropagator {
    generator: Generator,
    omega_b: f64,
    state: DensityMatrix,
    t: f64,
    k1: Vec<Complex64>,
    k2: Vec<Complex64>,
    stage: Vec<Complex64>,
    scratch: Vec<Complex64>,
}

impl LindbladPropagator {
    pub fn new(rho0: DensityMatrix, p: &BatteryParams) -> Self {
        let generator = Generator::new(p, rho0.n_cut());
        let len = rho0.as_slice().len();
        let zero = Complex64::new(0.0, 0.0);
        Self {
            generator,
            omega_b: p.omega_b(),
            state: rho0,
            t: 0.0,
            k1: vec![zero; len],
            k2: vec![zero; len],
            stage: vec![zero; len],
            scratch: vec![zero; len],
        }
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    /// State in the frame rotating at ω_b.
    pub fn rotating_state(&self) -> &DensityMatrix {
        &self.state
    }

    /// State in the lab frame, ρ_ij e^{−iω_b(n_i − n_j)t}.
    pub fn lab_state(&self) -> DensityMatrix {
        let mut rho = self.state.clone();
        let levels = rho.n_cut() + 1;
        let dim = rho.dim();
        let quanta: Vec<f64> = (0..dim).map(|i| (i / levels + i % levels) as f64).collect();
        let theta = self.omega_b * self.t;
        for (k, z) in rho.as_mut_slice().iter_mut().enumerate() {
            let dn = quanta[k / dim] - quanta[k % dim];
            *z *= Complex64::from_polar(1.0, -theta * dn);
        }
        rho
    }

    /// One classical RK4 step. `k2` accumulates k1 + 2k2 + 2k3 + k4.
    pub fn step(&mut self, dt: f64) {
        let Self { generator, state, k1, k2, stage, scratch, .. } = self;
        let rho = state.as_mut_slice();

        generator.apply(rho, scratch, k1);
        for ((s, r), k) in stage.iter_mut().zip(rho.iter()).zip(k1.iter()) {
            *s = r + k * (dt / 2.0);
        }
        let acc = k1;
        // acc = k1; k2 holds the current stage slope
        generator.apply(stage, scratch, k2);
        for ((a, s), (r, k)) in acc.iter_mut().zip(stage.iter_mut()).zip(rho.iter().zip(k2.iter())) {
            *a += k * 2.0;
            *s = r + k * (dt / 2.0);
        }
        generator.apply(stage, scratch, k2);
        for ((a, s), (r, k)) in acc.iter_mut().zip(stage.iter_mut()).zip(rho.iter().zip(k2.iter())) {
            *a += k * 2.0;
            *s = r + k * dt;
        }
        generator.apply(stage, scratch, k2);
        for ((r, a), k) in rho.iter_mut().zip(acc.iter()).zip(k2.iter()) {
            *r += (a + k) * (dt / 6.0);
        }
        self.t += dt;
    }

    /// Lab-frame moments of the current state.
    pub fn sample(&self, p: &BatteryParams) -> MomentSample {
        let phase = Complex64::from_polar(1.0, -self.omega_b * self.t);
        let (a, b) = self.state.amplitudes();
        let (a, b) = (a * phase, b * phase);
        let (n_a, n_b, n_b2) = self.state.number_moments();
        MomentSample {
            t: self.t,
            a,
            b,
            populations: Some(Populations {
                n_a,
                n_b,
                var_b: n_b2 - n_b * n_b,
                ergotropy: ergotropy_numeric(&self.state, p),
                trace: self.state.trace(),
            }),
        }
    }
}

/// Result of a Lindblad run: the recorded moments and the final lab-frame state.
#[derive(Debug, Clone)]
pub struct LindbladRun {
    pub trace: MomentTrace,
    pub state: DensityMatrix,
}

/// Propagates `rho0` to `cfg.t_max`, recording moments at t = 0, every
/// `cfg.record_every` steps, and at the end. The step is shrunk so that an
/// integer number of steps lands on `t_max`.
///
/// Fails with [`Error::Instability`] if the trace drifts by more than 1e-6 or
/// the state loses Hermiticity by more than 1e-9 at any recorded step.
pub fn evolve_lindblad(rho0: DensityMatrix, p: &BatteryParams, cfg: &FockConfig) -> Result<LindbladRun> {
    cfg.validate(p)?;
    if rho0.n_cut() != cfg.n_cut {
        return Err(Error::InvalidConfig(format!(
            "state has cutoff {} but the configuration asks for {}",
            rho0.n_cut(),
            cfg.n_cut
        )));
    }
    let steps = step_count(cfg.dt, cfg.t_max);
    let dt = cfg.t_max / steps as f64;
    let initial_trace = rho0.trace();
    let mut prop = LindbladPropagator::new(rho0, p);
    let mut samples = vec![prop.sample(p)];
    for n in 1..=steps {
        prop.step(dt);
        if n % cfg.record_every == 0 || n == steps {
            let sample = prop.sample(p);
            let drift = (sample.populations.map_or(f64::NAN, |pop| pop.trace) - initial_trace).abs();
            if drift.is_nan() || drift > TRACE_DRIFT_LIMIT {
                return Err(Error::Instability { t: sample.t, reason: format!("trace drifted by {drift:e}") });
            }
            let herm = prop.rotating_state().hermiticity_error();
            if herm.is_nan() || herm > HERMITICITY_LIMIT {
                return Err(Error::Instability { t: sample.t, reason: format!("Hermiticity error {herm:e}") });
            }
            samples.push(sample);
        }
    }
    Ok(LindbladRun { trace: MomentTrace { samples }, state: prop.lab_state() })
}

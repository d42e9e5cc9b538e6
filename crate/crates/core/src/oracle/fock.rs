// SPDX-License-Identifier: Apache-2.0

//! Two-mode Fock space |n_a, n_b⟩ truncated at n_cut excitations per mode.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::check_step;
use crate::error::{Error, Result};
use crate::params::BatteryParams;

/// Largest probability the truncated pulse state may lose beyond the cutoff.
pub const NORM_DEFICIT_LIMIT: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockConfig {
    /// Largest photon number kept in each mode.
    pub n_cut: usize,
    pub dt: f64,
    pub t_max: f64,
    /// Record moments every this many steps (the final step is always recorded).
    pub record_every: usize,
}

impl FockConfig {
    /// Cutoff 12, dt = 1e-2/max(ω_b, g, γ), 100 recorded samples.
    pub fn for_params(p: &BatteryParams, t_max: f64) -> Self {
        let fastest = p.omega_b().max(p.g()).max(p.gamma());
        let dt = 1e-2 / fastest;
        let steps = super::step_count(dt, t_max);
        Self { n_cut: 12, dt, t_max, record_every: (steps / 100).max(1) }
    }

    pub fn validate(&self, p: &BatteryParams) -> Result<()> {
        if self.n_cut == 0 {
            return Err(Error::InvalidConfig("n_cut must be at least 1".into()));
        }
        if self.record_every == 0 {
            return Err(Error::InvalidConfig("record_every must be at least 1".into()));
        }
        if !self.t_max.is_finite() || self.t_max <= 0.0 {
            return Err(Error::InvalidConfig(format!("t_max must be positive, got {}", self.t_max)));
        }
        check_step(self.dt, [p.omega_b(), p.g(), p.gamma()])
    }

    /// Conservative cutoff ⌈Ω² + 6Ω + 10⌉ for a pulse of strength Ω.
    ///
    /// Validation only requires the truncated pulse state to lose at most
    /// [`NORM_DEFICIT_LIMIT`] of its norm, which smaller cutoffs can meet.
    pub fn recommended_cutoff(pulse: f64) -> usize {
        (pulse * pulse + 6.0 * pulse + 10.0).ceil() as usize
    }

    /// Levels per mode.
    pub fn levels(&self) -> usize {
        self.n_cut + 1
    }
}

/// A dense density matrix over the product basis, row-major, with basis index
/// `n_a * (n_cut + 1) + n_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_cut: usize,
    data: Vec<Complex64>,
}

impl DensityMatrix {
    pub fn zeros(n_cut: usize) -> Self {
        let dim = (n_cut + 1) * (n_cut + 1);
        Self { n_cut, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    /// |ψ⟩⟨ψ| for a state vector over the product basis.
    pub fn from_pure(n_cut: usize, psi: &[Complex64]) -> Self {
        let mut rho = Self::zeros(n_cut);
        let dim = rho.dim();
        assert_eq!(psi.len(), dim, "state vector has the wrong dimension");
        for (i, ci) in psi.iter().enumerate() {
            for (j, cj) in psi.iter().enumerate() {
                rho.data[i * dim + j] = ci * cj.conj();
            }
        }
        rho
    }

    pub fn n_cut(&self) -> usize {
        self.n_cut
    }

    pub fn dim(&self) -> usize {
        (self.n_cut + 1) * (self.n_cut + 1)
    }

    pub fn index(&self, n_a: usize, n_b: usize) -> usize {
        n_a * (self.n_cut + 1) + n_b
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn trace(&self) -> f64 {
        let dim = self.dim();
        (0..dim).map(|i| self.data[i * dim + i].re).sum()
    }

    /// max |ρ_ij − ρ_ji*|
    pub fn hermiticity_error(&self) -> f64 {
        let dim = self.dim();
        let mut worst = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                worst = worst.max((self.data[i * dim + j] - self.data[j * dim + i].conj()).norm());
            }
        }
        worst
    }

    /// Smallest eigenvalue of the (Hermitian part of the) full matrix.
    pub fn min_eigenvalue(&self) -> f64 {
        let dim = self.dim();
        let m = DMatrix::from_fn(dim, dim, |i, j| (self.data[i * dim + j] + self.data[j * dim + i].conj()) * 0.5);
        m.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Reduced state of the holder, Tr_a ρ.
    pub fn holder_state(&self) -> DMatrix<Complex64> {
        let levels = self.n_cut + 1;
        let dim = self.dim();
        DMatrix::from_fn(levels, levels, |nb, mb| {
            (0..levels).map(|na| self.data[self.index(na, nb) * dim + self.index(na, mb)]).sum()
        })
    }

    /// ⟨a⟩ and ⟨b⟩.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let levels = self.n_cut + 1;
        let dim = self.dim();
        let mut a = Complex64::new(0.0, 0.0);
        let mut b = Complex64::new(0.0, 0.0);
        for na in 0..levels {
            for nb in 0..levels {
                let i = self.index(na, nb);
                // Tr(aρ) = Σ_i ⟨i|a ρ|i⟩ = Σ √(n_a + 1) ρ_{(n_a+1, n_b), i}
                if na + 1 < levels {
                    a += ((na + 1) as f64).sqrt() * self.data[self.index(na + 1, nb) * dim + i];
                }
                if nb + 1 < levels {
                    b += ((nb + 1) as f64).sqrt() * self.data[self.index(na, nb + 1) * dim + i];
                }
            }
        }
        (a, b)
    }

    /// ⟨a†a⟩, ⟨b†b⟩ and ⟨(b†b)²⟩.
    pub fn number_moments(&self) -> (f64, f64, f64) {
        let levels = self.n_cut + 1;
        let dim = self.dim();
        let (mut n_a, mut n_b, mut n_b2) = (0.0, 0.0, 0.0);
        for na in 0..levels {
            for nb in 0..levels {
                let i = self.index(na, nb);
                let pop = self.data[i * dim + i].re;
                n_a += na as f64 * pop;
                n_b += nb as f64 * pop;
                n_b2 += (nb * nb) as f64 * pop;
            }
        }
        (n_a, n_b, n_b2)
    }
}

/// The state right after the pulse: a coherent state of amplitude −iΩ on the
/// charger and vacuum on the holder.
///
/// The pulse Hamiltonian Ωδ(t)(a† + a) integrates to the displacement
/// exp(−iΩ(a† + a)) = D(−iΩ), so the charger amplitudes are
/// c_n = e^{−Ω²/2} (−iΩ)ⁿ/√n!. The truncated state is not renormalized; a
/// norm deficit above [`NORM_DEFICIT_LIMIT`] is a cutoff error.
pub fn pulse_initial_state(p: &BatteryParams, cfg: &FockConfig) -> Result<DensityMatrix> {
    cfg.validate(p)?;
    let levels = cfg.levels();
    let alpha = Complex64::new(0.0, -p.pulse());
    let mut psi = vec![Complex64::new(0.0, 0.0); levels * levels];
    let mut c = Complex64::new((-p.pulse() * p.pulse() / 2.0).exp(), 0.0);
    let mut norm = 0.0;
    for n in 0..levels {
        if n > 0 {
            c = c * alpha / (n as f64).sqrt();
        }
        psi[n * levels] = c;
        norm += c.norm_sqr();
    }
    let deficit = 1.0 - norm;
    if deficit > NORM_DEFICIT_LIMIT {
        return Err(Error::Cutoff { n_cut: cfg.n_cut, deficit });
    }
    Ok(DensityMatrix::from_pure(cfg.n_cut, &psi))
}

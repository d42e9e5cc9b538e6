// SPDX-License-Identifier: Apache-2.0

//! Regime classification around the exceptional point, the eigenvalues of the
//! first-moment dynamical matrix, and branch-free evaluators for the
//! trigonometric/linear/hyperbolic functions that appear on either side of it.
//!
//! Every closed form in this crate is written in terms of
//!
//! ```text
//! S(w, t) = sin(√w t)/√w,   sinh(√−w t)/√−w,   or t        (w > 0, w < 0, w = 0)
//! C(w, t) = cos(√w t),      cosh(√−w t),       or 1
//! ```
//!
//! with w = g² − (γ/4)². Both are entire functions of w·t², so evaluating them
//! through a short Taylor series when |w|t² is small makes every formula
//! continuous through the exceptional point without special-casing it.

use num_complex::Complex64;

use crate::params::BatteryParams;

/// Relative width of the band around w = 0 labelled as the exceptional point.
pub const EP_TOLERANCE: f64 = 1e-9;

/// Below this value of |w|t² the evaluators switch to their Taylor series.
pub const SERIES_SWITCH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// g < γ/4: overdamped, non-oscillatory exchange.
    BelowEp,
    AtEp,
    /// g > γ/4: Rabi-like oscillations between charger and holder.
    AboveEp,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeData {
    pub regime: Regime,
    /// w = g² − (γ/4)².
    pub w: f64,
    /// Renormalized coupling G = √w, present when w > 0.
    pub coupling: Option<f64>,
    /// Renormalized dissipation Γ = √−w, present when w < 0.
    pub dissipation: Option<f64>,
    pub g_ep: f64,
}

/// Classifies `p` relative to the exceptional point g = γ/4.
///
/// The `AtEp` band is |w| ≤ 1e-9·(γ/4)². It only affects the label: all
/// values are computed from `w` through [`stable_s`]/[`stable_c`].
pub fn classify_regime(p: &BatteryParams) -> RegimeData {
    let w = p.discriminant();
    let g_ep = p.g_ep();
    let tau = EP_TOLERANCE * g_ep * g_ep;
    let regime = if w > tau {
        Regime::AboveEp
    } else if w < -tau {
        Regime::BelowEp
    } else {
        Regime::AtEp
    };
    RegimeData { regime, w, coupling: (w > 0.0).then(|| w.sqrt()), dissipation: (w < 0.0).then(|| (-w).sqrt()), g_ep }
}

/// The two complex eigenfrequencies of the first-moment dynamical matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub eps_plus: Complex64,
    pub eps_minus: Complex64,
}

impl EigenPair {
    pub fn trace(&self) -> Complex64 {
        self.eps_plus + self.eps_minus
    }

    pub fn determinant(&self) -> Complex64 {
        self.eps_plus * self.eps_minus
    }
}

/// ε± = ω_b − iγ/4 ± √w, with √w = i√−w below the exceptional point so that
/// ε+ → ω_b as g → 0.
pub fn eigenvalues(p: &BatteryParams) -> EigenPair {
    let w = p.discriminant();
    let split = if w >= 0.0 { Complex64::new(w.sqrt(), 0.0) } else { Complex64::new(0.0, (-w).sqrt()) };
    let centre = Complex64::new(p.omega_b(), -p.gamma() / 4.0);
    EigenPair { eps_plus: centre + split, eps_minus: centre - split }
}

/// The 2×2 dynamical matrix of the first moments, row-major.
pub fn dynamical_matrix(p: &BatteryParams) -> [[Complex64; 2]; 2] {
    let g = Complex64::new(p.g(), 0.0);
    [[Complex64::new(p.omega_b(), -p.gamma() / 2.0), g], [g, Complex64::new(p.omega_b(), 0.0)]]
}

/// S(w, t): sin(√w t)/√w, t, or sinh(√−w t)/√−w.
pub fn stable_s(w: f64, t: f64) -> f64 {
    let x = w * t * t;
    if x.abs() < SERIES_SWITCH {
        s_series(w, t)
    } else {
        s_direct(w, t)
    }
}

/// C(w, t): cos(√w t), 1, or cosh(√−w t).
pub fn stable_c(w: f64, t: f64) -> f64 {
    let x = w * t * t;
    if x.abs() < SERIES_SWITCH {
        c_series(w, t)
    } else {
        c_direct(w, t)
    }
}

/// Inverse of the tangent-like ratio S/C: the smallest t > 0 with
/// S(w, t)/C(w, t) = k, i.e. arctan(√w k)/√w, k, or arctanh(√−w k)/√−w.
///
/// Returns `None` when w < 0 and √−w·k falls outside (−1, 1).
pub fn stable_inverse_tan(w: f64, k: f64) -> Option<f64> {
    let y = w * k * k;
    if y.abs() < SERIES_SWITCH {
        // k·(1 − y/3 + y²/5 − y³/7 + y⁴/9)
        let poly = 1.0 - y * (1.0 / 3.0 - y * (1.0 / 5.0 - y * (1.0 / 7.0 - y / 9.0)));
        return Some(k * poly);
    }
    if w > 0.0 {
        let r = w.sqrt();
        Some((r * k).atan() / r)
    } else {
        let r = (-w).sqrt();
        let arg = r * k;
        (arg.abs() < 1.0).then(|| arg.atanh() / r)
    }
}

pub(crate) fn s_series(w: f64, t: f64) -> f64 {
    let x = w * t * t;
    t * (1.0 - x / 6.0 * (1.0 - x / 20.0 * (1.0 - x / 42.0)))
}

pub(crate) fn c_series(w: f64, t: f64) -> f64 {
    let x = w * t * t;
    1.0 - x / 2.0 * (1.0 - x / 12.0 * (1.0 - x / 30.0))
}

pub(crate) fn s_direct(w: f64, t: f64) -> f64 {
    if w > 0.0 {
        let r = w.sqrt();
        (r * t).sin() / r
    } else if w < 0.0 {
        let r = (-w).sqrt();
        (r * t).sinh() / r
    } else {
        t
    }
}

pub(crate) fn c_direct(w: f64, t: f64) -> f64 {
    if w > 0.0 {
        (w.sqrt() * t).cos()
    } else if w < 0.0 {
        ((-w).sqrt() * t).cosh()
    } else {
        1.0
    }
}

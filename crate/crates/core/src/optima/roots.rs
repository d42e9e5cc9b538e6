// SPDX-License-Identifier: Apache-2.0

//! Bracketed scalar root finding.

use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Finds a root of `f` in `[lo, hi]`, where `f(lo)` and `f(hi)` differ in sign.
///
/// Bisection safeguards secant (false-position) steps: a secant step is taken
/// only if it lands well inside the bracket, and the next step is forced to be
/// a bisection whenever the bracket failed to halve. Terminates when the bracket
/// is narrower than `tol` (absolute).
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoBracket { lo, hi, f_lo: fa, f_hi: fb });
    }
    let mut force_bisect = false;
    for _ in 0..MAX_ITER {
        let width = b - a;
        if width.abs() <= tol {
            break;
        }
        let mut c = a + 0.5 * width;
        if !force_bisect {
            let secant = b - fb * (b - a) / (fb - fa);
            let margin = 0.01 * width.abs();
            if secant.is_finite() && (secant - a).abs() > margin && (b - secant).abs() > margin {
                c = secant;
            }
        }
        let fc = f(c);
        if fc == 0.0 {
            return Ok(c);
        }
        if fc.signum() == fa.signum() {
            a = c;
            fa = fc;
        } else {
            b = c;
            fb = fc;
        }
        force_bisect = (b - a).abs() > 0.5 * width.abs();
    }
    Ok(a + 0.5 * (b - a))
}

/// Bisection only, for callers that want the guaranteed halving per step.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let fa0 = f(a);
    let fb0 = f(b);
    if fa0.signum() == fb0.signum() {
        return Err(Error::NoBracket { lo, hi, f_lo: fa0, f_hi: fb0 });
    }
    let mut fa = fa0;
    while (b - a).abs() > tol {
        let c = a + 0.5 * (b - a);
        if c == a || c == b {
            break;
        }
        let fc = f(c);
        if fc == 0.0 {
            return Ok(c);
        }
        if fc.signum() == fa.signum() {
            a = c;
            fa = fc;
        } else {
            b = c;
        }
    }
    Ok(a + 0.5 * (b - a))
}

// SPDX-License-Identifier: Apache-2.0

//! Derivative-free maximization of smooth functions of one variable.
//!
//! This is the independent oracle for every closed-form or root-found optimum
//! in the crate: it only ever compares function values.

/// Location and value of a maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub arg: f64,
    pub value: f64,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes `f` on `[lo, hi]`.
///
/// A coarse scan of `scan` intervals locates the best sample; golden-section
/// search then shrinks the neighbouring two intervals. Golden-section alone
/// stalls at ~√ε relative accuracy in the argument because neighbouring values
/// become indistinguishable, so the result is polished by bisecting on the sign
/// of the symmetric difference f(t + h) − f(t − h), which resolves the argument
/// to roughly ε/h.
pub fn maximize<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, scan: usize) -> Maximum {
    assert!(hi > lo && scan >= 2, "maximize needs lo < hi and at least two scan intervals");
    let spacing = (hi - lo) / scan as f64;
    let (best, _) = (0..=scan).map(|i| (i, f(lo + spacing * i as f64))).fold((0, f64::NEG_INFINITY), |acc, (i, v)| {
        if v > acc.1 {
            (i, v)
        } else {
            acc
        }
    });

    let mut a = lo + spacing * best.saturating_sub(1) as f64;
    let mut b = (lo + spacing * (best + 1) as f64).min(hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > 1e-6 * spacing {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
    }
    let golden = 0.5 * (a + b);

    let h = 1e-5 * spacing;
    let reach = 1e-4 * spacing;
    let slope = |t: f64| f(t + h) - f(t - h);
    let (mut left, mut right) = (golden - reach, golden + reach);
    let arg = if left - h >= lo && right + h <= hi && slope(left) > 0.0 && slope(right) < 0.0 {
        while right - left > 1e-14 * golden.abs().max(spacing) {
            let mid = 0.5 * (left + right);
            if mid == left || mid == right {
                break;
            }
            if slope(mid) > 0.0 {
                left = mid;
            } else {
                right = mid;
            }
        }
        0.5 * (left + right)
    } else {
        golden
    };
    Maximum { arg, value: f(arg) }
}

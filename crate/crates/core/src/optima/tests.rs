// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{FRAC_PI_2, PI};

use approx::assert_relative_eq;

use super::*;

fn params(g: f64, gamma: f64) -> BatteryParams {
    BatteryParams::new(1.0, g, gamma, 1.0).unwrap()
}

fn log_sweep(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| 10f64.powf(-2.0 + 4.0 * i as f64 / (n - 1) as f64))
}

#[test]
fn energy_time_examples() {
    assert_eq!(optimal_energy_time(&params(0.25, 1.0)).unwrap(), 4.0);
    // frozen from a bounded scalar maximization of the stored energy
    assert_relative_eq!(optimal_energy_time(&params(1.0, 1.0)).unwrap(), 1.361_344_425, max_relative = 1e-9);
    assert_relative_eq!(optimal_energy_time(&params(0.1, 1.0)).unwrap(), 6.838_072_478, max_relative = 1e-9);
    assert_relative_eq!(optimal_energy_time(&params(2.0, 0.0)).unwrap(), FRAC_PI_2 / 2.0);
    assert!(optimal_energy_time(&params(0.0, 1.0)).is_err());
}

#[test]
fn energy_value_examples() {
    assert_relative_eq!(optimal_energy_value(&params(0.25, 1.0)).unwrap(), (-2.0f64).exp(), max_relative = 1e-14);
    assert_eq!(optimal_energy_value(&params(0.7, 0.0)).unwrap(), 1.0);
    assert_relative_eq!(optimal_energy_value(&params(1.0, 1.0)).unwrap(), 0.506_276_552_5, max_relative = 1e-9);
}

#[test]
fn energy_value_at_very_weak_coupling() {
    let p = params(1e-9, 1.0);
    let t = optimal_energy_time(&p).unwrap();
    assert!(t.is_finite());
    assert_relative_eq!(t, 4.0 * (0.5e9f64).ln(), max_relative = 1e-6);
}

#[test]
fn inst_power_examples() {
    let ep = optimal_inst_power(&params(0.25, 1.0)).unwrap();
    assert_relative_eq!(ep.time, 2.0 * (2.0 - 2f64.sqrt()), max_relative = 1e-12);
    assert_eq!(ep.method, Method::ClosedForm);
    assert!((ep.value - 0.05765).abs() < 1e-5);

    let weak = optimal_inst_power_time(&params(1e-6, 1.0)).unwrap();
    assert_relative_eq!(weak, 4f64.ln(), max_relative = 1e-9);

    let lossless = optimal_inst_power(&params(2.0, 0.0)).unwrap();
    assert_relative_eq!(lossless.time, PI / 8.0);
    assert_relative_eq!(lossless.value, 2.0, max_relative = 1e-14);

    let p = params(1.0, 1.0);
    let closed = optimal_inst_power(&p).unwrap();
    let numeric = maximize(|t| instantaneous_power(&p, t), 0.0, search_window(&p), 400);
    assert_relative_eq!(closed.time, numeric.arg, max_relative = 1e-8);

    let strong = params(100.0, 1.0);
    let value = optimal_inst_power_value(&strong).unwrap();
    let asymptote = 100.0 * (1.0 - (PI + 2.0) / 800.0);
    assert_relative_eq!(value, asymptote, max_relative = 1e-4);
    assert!(optimal_inst_power(&params(0.0, 1.0)).is_err());
}

/// The arctan/arctanh arguments as printed in the textbook closed form.
fn printed_inst_power_argument(g: f64, gamma: f64) -> f64 {
    let w = g * g - gamma * gamma / 16.0;
    if w > 0.0 {
        let big_g = w.sqrt();
        ((256.0 * g.powi(4) - gamma.powi(4)).sqrt() - 8.0 * big_g * gamma) / (16.0 * g * g - 3.0 * gamma * gamma)
    } else {
        let big_gamma = (-w).sqrt();
        (8.0 * big_gamma * gamma - (gamma.powi(4) - 256.0 * g.powi(4)).sqrt()) / (3.0 * gamma * gamma - 16.0 * g * g)
    }
}

#[test]
fn rationalized_argument_matches_printed_form() {
    for g in log_sweep(101) {
        if (g - 0.25).abs() < 1e-3 || (g - 3f64.sqrt() / 4.0).abs() < 1e-3 {
            continue;
        }
        let w = g * g - 1.0 / 16.0;
        let ours = 4.0 * w.abs().sqrt() / (2.0 + (1.0 + 16.0 * g * g).sqrt());
        let printed = printed_inst_power_argument(g, 1.0);
        assert_relative_eq!(ours, printed, max_relative = 1e-9);
        if g > 0.25 {
            assert!(printed > 0.0);
        }
    }
}

#[test]
fn inst_power_time_continuous_at_sqrt3_quarter() {
    let g0 = 3f64.sqrt() / 4.0;
    let at = optimal_inst_power_time(&params(g0, 1.0)).unwrap();
    for d in [-1e-8, 1e-8] {
        let near = optimal_inst_power_time(&params(g0 + d, 1.0)).unwrap();
        assert_relative_eq!(near, at, max_relative = 1e-7);
    }
}

#[test]
fn avg_power_examples() {
    let ep = optimal_avg_power(&params(0.25, 1.0)).unwrap();
    assert_eq!(ep.time, 2.0);
    assert_eq!(ep.method, Method::ClosedForm);

    let c = solve_transcendental_constants();
    let weak = optimal_avg_power_time(&params(1e-6, 1.0)).unwrap();
    assert_relative_eq!(weak, c.zeta, max_relative = 1e-6);

    let p = params(1.0, 1.0);
    let root = optimal_avg_power(&p).unwrap();
    assert_eq!(root.method, Method::RootFound);
    let numeric = maximize(|t| average_power(&p, t).unwrap(), 0.0, search_window(&p), 400);
    assert_relative_eq!(root.time, numeric.arg, max_relative = 1e-8);
    // the root satisfies the dimensionless turning-point equation above the EP
    let big_g = (1.0f64 - 1.0 / 16.0).sqrt();
    let y = big_g * root.time;
    assert!((2.0 * y - y.tan() * (1.0 + y / (2.0 * big_g))).abs() < 1e-9);

    let lossless = optimal_avg_power(&params(2.0, 0.0)).unwrap();
    assert_relative_eq!(lossless.time, c.big_z / 2.0);
    assert!(optimal_avg_power(&params(0.0, 1.0)).is_err());
}

#[test]
fn avg_power_root_below_ep_satisfies_hyperbolic_equation() {
    let p = params(0.1, 1.0);
    let t = optimal_avg_power_time(&p).unwrap();
    let big_gamma = (1.0f64 / 16.0 - 0.01).sqrt();
    let x = big_gamma * t;
    assert!((2.0 * x - x.tanh() * (1.0 + x / (2.0 * big_gamma))).abs() < 1e-10);
}

#[test]
fn approx_avg_power_examples() {
    assert_eq!(approx_avg_power_time(&params(0.25, 1.0)).unwrap(), 2.0);
    let c = solve_transcendental_constants();
    let weak = approx_avg_power_time(&params(0.01, 1.0)).unwrap();
    assert_relative_eq!(weak, c.zeta - 8.0 * (c.zeta - 2.0) * 1e-3, max_relative = 1e-14);
    assert!((weak - 2.508760).abs() < 1e-5);
    let exact = optimal_avg_power_time(&params(0.01, 1.0)).unwrap();
    assert!((weak - exact).abs() / exact < 1e-2);

    let strong = approx_avg_power_time(&params(100.0, 1.0)).unwrap();
    let expected = (c.big_z - (2.0 * c.big_z - 1.0) / (4.0 * 2f64.sqrt()) * 1e-3f64.powf(0.5)) / 100.0;
    assert_relative_eq!(strong, expected, max_relative = 1e-14);
    let exact = optimal_avg_power_time(&params(100.0, 1.0)).unwrap();
    assert!((strong - exact).abs() / exact < 1e-2);
    assert!(approx_avg_power_time(&params(1.0, 0.0)).is_err());
}

#[test]
fn self_consistency() {
    for g in log_sweep(41) {
        let p = BatteryParams::new(3.0, g, 1.0, 1.7).unwrap();
        let o = optima(&p).unwrap();
        assert_relative_eq!(o.energy.value, stored_energy(&p, o.energy.time), max_relative = 1e-10);
        assert_relative_eq!(o.inst_power.value, instantaneous_power(&p, o.inst_power.time), max_relative = 1e-10);
        assert_relative_eq!(o.avg_power.value, average_power(&p, o.avg_power.time).unwrap(), max_relative = 1e-10);
        assert!(o.energy.time > 0.0 && o.inst_power.time > 0.0 && o.avg_power.time > 0.0);
    }
}

#[test]
fn closed_forms_match_numeric_maximizer() {
    for g in log_sweep(100) {
        let p = params(g, 1.0);
        let exact = optima(&p).unwrap();
        let numeric = numeric_optima(&p).unwrap();
        for (e, n) in [
            (exact.energy, numeric.energy),
            (exact.inst_power, numeric.inst_power),
            (exact.avg_power, numeric.avg_power),
        ] {
            assert_relative_eq!(e.time, n.time, max_relative = 1e-6);
            assert_relative_eq!(e.value, n.value, max_relative = 1e-10);
        }
    }
}

#[test]
fn monotone_in_coupling() {
    let rows: Vec<_> = log_sweep(100).map(|g| optima(&params(g, 1.0)).unwrap()).collect();
    for pair in rows.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        assert!(b.energy.time < a.energy.time);
        assert!(b.inst_power.time < a.inst_power.time);
        assert!(b.avg_power.time < a.avg_power.time);
        assert!(b.energy.value > a.energy.value);
        assert!(b.inst_power.value > a.inst_power.value);
        assert!(b.avg_power.value > a.avg_power.value);
    }
}

#[test]
fn continuous_through_ep() {
    let at = optima(&params(0.25, 1.0)).unwrap();
    for d in [-1e-8, 1e-8] {
        let near = optima(&params(0.25 + d, 1.0)).unwrap();
        for (x, y) in [
            (near.energy.time, at.energy.time),
            (near.energy.value, at.energy.value),
            (near.inst_power.time, at.inst_power.time),
            (near.inst_power.value, at.inst_power.value),
            (near.avg_power.time, at.avg_power.time),
            (near.avg_power.value, at.avg_power.value),
        ] {
            assert_relative_eq!(x, y, max_relative = 1e-6);
        }
    }
}

#[test]
fn asymptotes_converge() {
    for (g, side) in [(0.01, Side::Weak), (100.0, Side::Strong)] {
        let p = params(g, 1.0);
        let exact = optima(&p).unwrap();
        for a in asymptotics(&p).unwrap().into_iter().filter(|a| a.side == side) {
            let reference = match a.quantity {
                Quantity::EnergyTime => exact.energy.time,
                Quantity::EnergyValue => exact.energy.value,
                Quantity::InstPowerTime => exact.inst_power.time,
                Quantity::InstPowerValue => exact.inst_power.value,
                Quantity::AvgPowerTime => exact.avg_power.time,
                Quantity::AvgPowerValue => exact.avg_power.value,
            };
            let rel = (a.value - reference).abs() / reference.abs();
            assert!(rel <= 0.05, "{} at g = {g}: {} vs {reference} ({rel})", a.name, a.value);
        }
    }
    let strong = params(10.0, 1.0);
    let t_e = optimal_energy_time(&strong).unwrap();
    let asym = asymptotics(&strong).unwrap().into_iter().find(|a| a.name == "t_E_strong").unwrap();
    assert!((asym.value - t_e).abs() / t_e < 0.01);
}

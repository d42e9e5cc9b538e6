// SPDX-License-Identifier: Apache-2.0

//! Self-check report: known constants, limits, asymptotes and both oracles.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use anyhow::Result;
use clap::ValueEnum;
use qbattery::energetics::stored_energy;
use qbattery::optima::{
    asymptotics, maximize, numeric_optima, optima, optimal_inst_power_time, solve_transcendental_constants,
    strong_avg_power_prefactor, weak_avg_power_prefactor, Quantity,
};
use qbattery::oracle::{
    evolve_lindblad, factorization_residual, integrate_first_moments, pulse_initial_state, FockConfig,
};
use qbattery::BatteryParams;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// constants, limits, asymptotes and the first-moment oracle
    Quick,
    /// everything in quick plus density-matrix runs
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub reference: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub mode: Mode,
    pub checks: Vec<CheckRecord>,
    pub overall: bool,
}

const OMEGA_B: f64 = 5.0;
const ORACLE_COUPLINGS: [f64; 7] = [0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 10.0];

#[derive(Default)]
struct Checks(Vec<CheckRecord>);

impl Checks {
    fn abs(&mut self, name: impl Into<String>, reference: f64, computed: f64, tolerance: f64) {
        let passed = (computed - reference).abs() <= tolerance;
        self.0.push(CheckRecord { name: name.into(), reference, computed, tolerance, passed });
    }

    fn rel(&mut self, name: impl Into<String>, reference: f64, computed: f64, tolerance: f64) {
        self.abs(name, reference, computed, tolerance * reference.abs());
    }
}

fn params(g: f64, gamma: f64) -> BatteryParams {
    BatteryParams::new(OMEGA_B, g, gamma, 1.0).expect("valid verification parameters")
}

fn suffix(g: f64) -> String {
    if g == 1.0 {
        String::new()
    } else {
        format!("_g{g}")
    }
}

fn constants(c: &mut Checks) {
    let k = solve_transcendental_constants();
    c.abs("zeta", 2.512862, k.zeta, 1e-6);
    c.abs("Z", 1.165561, k.big_z, 1e-6);
    c.abs("tan_Z_minus_2Z", 0.0, k.big_z.tan() - 2.0 * k.big_z, 1e-10);
    c.abs("prefactor_weak", 0.051, weak_avg_power_prefactor(), 5e-4);
    c.abs("prefactor_strong", 0.72, strong_avg_power_prefactor(), 5e-3);
}

fn exceptional_point(c: &mut Checks) -> Result<()> {
    let p = params(0.25, 1.0);
    let o = optima(&p)?;
    let scale = p.energy_scale();
    c.abs("ep_E_at_tE", (-2.0f64).exp(), o.energy.value / scale, 1e-12);
    c.abs("ep_E_at_tE_numeric", (-2.0f64).exp(), numeric_optima(&p)?.energy.value / scale, 1e-8);
    c.abs("ep_t_E", 4.0, o.energy.time, 1e-12);
    c.abs("ep_t_Pinst", 2.0 * (2.0 - 2f64.sqrt()), o.inst_power.time, 1e-9);
    c.abs("ep_t_Pavg", 2.0, o.avg_power.time, 1e-9);
    Ok(())
}

fn dissipationless(c: &mut Checks) -> Result<()> {
    let g = 1.0;
    let p = params(g, 0.0);
    let scale = p.energy_scale();
    let o = optima(&p)?;
    c.abs("lossless_t_E", FRAC_PI_2 / g, o.energy.time, 1e-10);
    c.abs("lossless_E_max", 1.0, maximize(|t| stored_energy(&p, t), 0.0, 3.0, 400).value / scale, 1e-10);
    c.abs("lossless_t_Pinst", FRAC_PI_4 / g, o.inst_power.time, 1e-10);
    c.abs("lossless_Pinst_max", 1.0, o.inst_power.value / (scale * g), 1e-10);
    c.abs("lossless_Pavg_max_per_g", 0.72, o.avg_power.value / (scale * g), 5e-3);
    Ok(())
}

fn asymptotes(c: &mut Checks) -> Result<()> {
    for g in [1e-2, 1e2] {
        let p = params(g, 1.0);
        let o = optima(&p)?;
        let side = if g < 1.0 { "weak" } else { "strong" };
        for a in asymptotics(&p)?.into_iter().filter(|a| a.name.ends_with(side)) {
            let exact = match a.quantity {
                Quantity::EnergyTime => o.energy.time,
                Quantity::EnergyValue => o.energy.value,
                Quantity::InstPowerTime => o.inst_power.time,
                Quantity::InstPowerValue => o.inst_power.value,
                Quantity::AvgPowerTime => o.avg_power.time,
                Quantity::AvgPowerValue => o.avg_power.value,
            };
            c.rel(format!("asymptote_{}", a.name), exact, a.value, 0.05);
        }
    }
    c.rel("t_Pinst_weak_limit", 4f64.ln(), optimal_inst_power_time(&params(1e-3, 1.0))?, 1e-3);
    Ok(())
}

fn maximizer_agreement(c: &mut Checks) -> Result<()> {
    for g in [0.05, 0.25, 1.0, 10.0] {
        let p = params(g, 1.0);
        let (exact, numeric) = (optima(&p)?, numeric_optima(&p)?);
        let s = suffix(g);
        c.rel(format!("maximizer_t_E{s}"), numeric.energy.time, exact.energy.time, 1e-6);
        c.rel(format!("maximizer_t_Pinst{s}"), numeric.inst_power.time, exact.inst_power.time, 1e-6);
        c.rel(format!("maximizer_t_Pavg{s}"), numeric.avg_power.time, exact.avg_power.time, 1e-6);
    }
    Ok(())
}

fn first_moment_oracle(c: &mut Checks) -> Result<()> {
    for g in ORACLE_COUPLINGS {
        let p = params(g, 1.0);
        let trace = integrate_first_moments(&p, 1e-4, 10.0)?;
        let dev =
            trace.samples.iter().map(|s| (stored_energy(&p, s.t) - OMEGA_B * s.b.norm_sqr()).abs()).fold(0.0, f64::max);
        c.abs(format!("first_moment_E_match{}", suffix(g)), 0.0, dev / p.energy_scale(), 1e-7);
    }
    Ok(())
}

fn lindblad_oracle(c: &mut Checks) -> Result<()> {
    for g in ORACLE_COUPLINGS {
        let p = params(g, 1.0);
        let cfg = FockConfig::for_params(&p, 10.0);
        let run = evolve_lindblad(pulse_initial_state(&p, &cfg)?, &p, &cfg)?;
        let samples = &run.trace.samples;
        let max = |f: &dyn Fn(&qbattery::oracle::MomentSample) -> f64| samples.iter().map(f).fold(0.0, f64::max);
        let s = suffix(g);
        let energy = max(&|x| (x.populations.unwrap().n_b - stored_energy(&p, x.t) / OMEGA_B).abs());
        c.abs(format!("lindblad_E_match{s}"), 0.0, energy, 1e-4);
        c.abs(format!("lindblad_factorization{s}"), 0.0, factorization_residual(&run.trace), 1e-6);
        let var = max(&|x| {
            let q = x.populations.unwrap();
            (q.var_b - q.n_b).abs()
        });
        c.abs(format!("lindblad_variance{s}"), 0.0, var, 1e-5);
        let ergotropy = max(&|x| (x.populations.unwrap().ergotropy - stored_energy(&p, x.t)).abs());
        c.abs(format!("lindblad_ergotropy{s}"), 0.0, ergotropy / p.energy_scale(), 1e-4);
    }
    Ok(())
}

pub fn run(mode: Mode) -> Result<VerifyReport> {
    let mut c = Checks::default();
    constants(&mut c);
    exceptional_point(&mut c)?;
    dissipationless(&mut c)?;
    asymptotes(&mut c)?;
    maximizer_agreement(&mut c)?;
    first_moment_oracle(&mut c)?;
    if mode == Mode::Full {
        lindblad_oracle(&mut c)?;
    }
    let overall = c.0.iter().all(|r| r.passed);
    Ok(VerifyReport { mode, checks: c.0, overall })
}

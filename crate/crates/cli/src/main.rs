// SPDX-License-Identifier: Apache-2.0

//! `qbattery`: curves, optima, sweeps, figure data and a self-check for the
//! pulsed two-oscillator battery.
//!
//! Exit status is 0 on success, 1 on a usage error and 2 when `verify` finds
//! a failing check.

mod commands;
mod figure;
mod output;
mod sweep;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use qbattery::BatteryParams;

use crate::output::{emit, Units};
use crate::sweep::{Axis, Scale, SweepSpec};

#[derive(Parser)]
#[command(name = "qbattery", version, about = "Pulsed two-oscillator quantum battery")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// E, 𝒫 and P on a time grid, as CSV
    Simulate(SimulateArgs),
    /// Optimal times and values with their asymptotes, as JSON
    Optima(OptimaArgs),
    /// Optima over a g/γ grid, as CSV
    Sweep(SweepArgs),
    /// Write figure data as <id>.csv
    Figure(FigureArgs),
    /// Check the model against known values and both oracles
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// holder frequency ω_b
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    omega_b: f64,
    /// charger loss rate γ
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    gamma: f64,
    /// pulse strength Ω
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    omega: f64,
    /// report raw units instead of times·γ, E/ω_bΩ², P/ω_bΩ²γ
    #[arg(long)]
    raw: bool,
}

impl ModelArgs {
    fn params(&self, g: f64) -> Result<BatteryParams> {
        Ok(BatteryParams::new(self.omega_b, g, self.gamma, self.omega)?)
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// coupling g
    #[arg(long, allow_negative_numbers = true)]
    g: f64,
    /// first time, in output units
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t_min: f64,
    /// last time, in output units
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    t_max: f64,
    #[arg(long, default_value_t = 101)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Scale::Linear)]
    scale: Scale,
    /// write here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OptimaArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// coupling g (> 0)
    #[arg(long, allow_negative_numbers = true)]
    g: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// smallest g/γ
    #[arg(long, default_value_t = 1e-2, allow_negative_numbers = true)]
    start: f64,
    /// largest g/γ
    #[arg(long, default_value_t = 1e2, allow_negative_numbers = true)]
    stop: f64,
    #[arg(long, default_value_t = 101)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Scale::Log)]
    scale: Scale,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FigureArgs {
    /// fig2a..fig4c, or "all"
    #[arg(long)]
    figure: String,
    /// output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = verify::Mode::Quick)]
    mode: verify::Mode,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn json_text(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Simulate(a) => {
            let p = a.model.params(a.g)?;
            let units = Units::new(&p, a.model.raw);
            let grid = SweepSpec::new(Axis::Time, a.t_min, a.t_max, a.points, a.scale)?;
            emit(&commands::simulate_csv(&p, &units, &grid)?, a.out.as_deref())?;
        }
        Command::Optima(a) => {
            let p = a.model.params(a.g)?;
            let value = commands::optima_json(&p, &Units::new(&p, a.model.raw))?;
            emit(&json_text(&value)?, a.out.as_deref())?;
        }
        Command::Sweep(a) => {
            let p = a.model.params(1.0)?;
            let grid = SweepSpec::new(Axis::GOverGamma, a.start, a.stop, a.points, a.scale)?;
            emit(&commands::sweep_csv(&p, a.model.raw, &grid)?, a.out.as_deref())?;
        }
        Command::Figure(a) => {
            for path in figure::write_figures(&a.figure, &a.out)? {
                eprintln!("wrote {path}");
            }
        }
        Command::Verify(a) => {
            let report = verify::run(a.mode)?;
            for r in &report.checks {
                let status = if r.passed { "PASS" } else { "FAIL" };
                eprintln!(
                    "{status} {:<32} computed {:.12e} reference {:.12e} tolerance {:.1e}",
                    r.name, r.computed, r.reference, r.tolerance
                );
            }
            emit(&json_text(&report)?, a.out.as_deref())?;
            if !report.overall {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

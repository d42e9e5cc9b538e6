// SPDX-License-Identifier: Apache-2.0

//! Data behind the energy, instantaneous-power and average-power figures.
//!
//! Panel (a) of each figure is a time curve at four couplings, panel (b) the
//! optimal time and panel (c) the optimal value against g/γ, each with its
//! weak- and strong-coupling asymptotes.

use std::path::Path;

use anyhow::{bail, Result};
use qbattery::optima::{Quantity, Side};
use qbattery::BatteryParams;

use crate::commands::{asymptote_rows, curve, sweep_rows};
use crate::output::{emit, Csv, Units};
use crate::sweep::{Axis, Scale, SweepSpec};

pub const FIGURE_IDS: [&str; 9] = ["fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b", "fig4c"];

/// Couplings of the time-curve panels: below, at and above the exceptional point.
pub const CURVE_COUPLINGS: [f64; 4] = [0.1, 0.25, 0.5, 1.0];
const CURVE_POINTS: usize = 201;
const SWEEP_POINTS: usize = 101;

#[derive(Debug, Clone, Copy)]
enum Panel {
    Curve,
    OptimalTime,
    OptimalValue,
}

#[derive(Debug, Clone, Copy)]
enum Figure {
    Energy,
    InstPower,
    AvgPower,
}

impl Figure {
    fn label(self) -> &'static str {
        match self {
            Figure::Energy => "E",
            Figure::InstPower => "Pinst",
            Figure::AvgPower => "Pavg",
        }
    }

    /// Column of the (t, E, 𝒫, P) curve row.
    fn curve_column(self) -> usize {
        match self {
            Figure::Energy => 1,
            Figure::InstPower => 2,
            Figure::AvgPower => 3,
        }
    }

    fn key(self, panel: Panel) -> (usize, &'static str, Quantity) {
        match (self, panel) {
            (Figure::Energy, Panel::OptimalTime) => (0, "t_E", Quantity::EnergyTime),
            (Figure::Energy, _) => (1, "E_at_tE", Quantity::EnergyValue),
            (Figure::InstPower, Panel::OptimalTime) => (2, "t_Pinst", Quantity::InstPowerTime),
            (Figure::InstPower, _) => (3, "Pinst_max", Quantity::InstPowerValue),
            (Figure::AvgPower, Panel::OptimalTime) => (4, "t_Pavg", Quantity::AvgPowerTime),
            (Figure::AvgPower, _) => (5, "Pavg_max", Quantity::AvgPowerValue),
        }
    }
}

fn parse(id: &str) -> Result<(Figure, Panel)> {
    let figure = match id.get(..4) {
        Some("fig2") => Figure::Energy,
        Some("fig3") => Figure::InstPower,
        Some("fig4") => Figure::AvgPower,
        _ => bail!("unknown figure {id:?}; expected one of {}", FIGURE_IDS.join(", ")),
    };
    let panel = match &id[4..] {
        "a" => Panel::Curve,
        "b" => Panel::OptimalTime,
        "c" => Panel::OptimalValue,
        _ => bail!("unknown figure {id:?}; expected one of {}", FIGURE_IDS.join(", ")),
    };
    Ok((figure, panel))
}

/// ω_b, γ and Ω drop out of the normalized axes, so all are set to 1.
fn base_params(g: f64) -> BatteryParams {
    BatteryParams::new(1.0, g, 1.0, 1.0).expect("valid figure parameters")
}

/// g/γ grid of the (b)/(c) panels: log-spaced, with the exceptional point added.
pub fn coupling_grid() -> Vec<f64> {
    let mut xs = SweepSpec::new(Axis::GOverGamma, 1e-2, 1e2, SWEEP_POINTS, Scale::Log).unwrap().values();
    xs.push(0.25);
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|a, b| (*a / *b - 1.0).abs() < 1e-12);
    xs
}

pub fn figure_csv(id: &str) -> Result<String> {
    let (figure, panel) = parse(id)?;
    match panel {
        Panel::Curve => {
            let grid = SweepSpec::new(Axis::Time, 0.0, 10.0, CURVE_POINTS, Scale::Linear)?;
            let columns = CURVE_COUPLINGS
                .iter()
                .map(|&g| {
                    let p = base_params(g);
                    curve(&p, &Units::new(&p, false), &grid)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut header = vec!["t*gamma".to_string()];
            header.extend(CURVE_COUPLINGS.iter().map(|g| format!("{}_norm_g{g}", figure.label())));
            let mut csv = Csv::new(&header);
            for i in 0..grid.points {
                let mut cells = vec![columns[0][i][0]];
                cells.extend(columns.iter().map(|c| c[i][figure.curve_column()]));
                csv.row(&cells);
            }
            Ok(csv.into_string())
        }
        Panel::OptimalTime | Panel::OptimalValue => {
            let (index, key, quantity) = figure.key(panel);
            let per_g = matches!(panel, Panel::OptimalValue) && !matches!(figure, Figure::Energy);
            let mut header = vec![
                "g_over_gamma".to_string(),
                format!("{key}_exact"),
                format!("{key}_weak"),
                format!("{key}_strong"),
            ];
            if per_g {
                header.push(format!("{key}_exact_per_g"));
            }
            let mut csv = Csv::new(&header);
            for (x, row) in sweep_rows(&base_params(1.0), false, &coupling_grid())? {
                let p = base_params(x);
                let table = asymptote_rows(&p, &Units::new(&p, false));
                let limit = |side| table.iter().find(|a| a.quantity == quantity && a.side == side).map(|a| a.value);
                let exact = row.values[index];
                let mut cells = vec![x, exact, limit(Side::Weak).unwrap(), limit(Side::Strong).unwrap()];
                if per_g {
                    cells.push(exact / x);
                }
                csv.row(&cells);
            }
            Ok(csv.into_string())
        }
    }
}

/// Writes `<id>.csv` into `dir` for each id; "all" expands to every panel.
pub fn write_figures(id: &str, dir: &Path) -> Result<Vec<String>> {
    let ids: Vec<&str> = if id == "all" { FIGURE_IDS.to_vec() } else { vec![id] };
    // validate everything before touching the file system
    for id in &ids {
        parse(id)?;
    }
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for id in ids {
        let path = dir.join(format!("{id}.csv"));
        emit(&figure_csv(id)?, Some(&path))?;
        written.push(path.display().to_string());
    }
    Ok(written)
}

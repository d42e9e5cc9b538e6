// SPDX-License-Identifier: Apache-2.0

//! Curves, optima and coupling sweeps in output units.

use anyhow::{bail, Result};
use qbattery::energetics::energy_record;
use qbattery::optima::{asymptotics, optima, Method, Quantity, Side};
use qbattery::BatteryParams;
use serde_json::{json, Map, Value};

use crate::output::{Csv, Units};
use crate::sweep::{Axis, SweepSpec};

/// Rows of (t, E, 𝒫, P) over a time grid given in output units.
pub fn curve(p: &BatteryParams, units: &Units, grid: &SweepSpec) -> Result<Vec<[f64; 4]>> {
    debug_assert_eq!(grid.axis, Axis::Time);
    grid.values()
        .into_iter()
        .map(|tau| {
            let r = energy_record(p, units.raw_time(tau))?;
            Ok([tau, units.energy(r.energy), units.power(r.inst_power), units.power(r.avg_power)])
        })
        .collect()
}

pub fn simulate_csv(p: &BatteryParams, units: &Units, grid: &SweepSpec) -> Result<String> {
    let s = units.suffix();
    let mut csv = Csv::new(&[units.time_header(), format!("E{s}"), format!("Pinst{s}"), format!("Pavg{s}")]);
    for row in curve(p, units, grid)? {
        csv.row(&row);
    }
    Ok(csv.into_string())
}

pub const OPTIMA_KEYS: [&str; 6] = ["t_E", "E_at_tE", "t_Pinst", "Pinst_max", "t_Pavg", "Pavg_max"];

/// The three optima in output units, keyed as in [`OPTIMA_KEYS`].
#[derive(Debug, Clone, Copy)]
pub struct OptimaRow {
    pub values: [f64; 6],
    pub methods: [Method; 3],
}

pub fn optima_row(p: &BatteryParams, units: &Units) -> Result<OptimaRow> {
    if p.g() <= 0.0 {
        bail!("optima need g > 0");
    }
    let o = optima(p)?;
    Ok(OptimaRow {
        values: [
            units.time(o.energy.time),
            units.energy(o.energy.value),
            units.time(o.inst_power.time),
            units.power(o.inst_power.value),
            units.time(o.avg_power.time),
            units.power(o.avg_power.value),
        ],
        methods: [o.energy.method, o.inst_power.method, o.avg_power.method],
    })
}

pub struct AsymptoteRow {
    pub name: &'static str,
    pub quantity: Quantity,
    pub side: Side,
    pub value: f64,
}

/// Limiting forms in output units. Empty without dissipation.
pub fn asymptote_rows(p: &BatteryParams, units: &Units) -> Vec<AsymptoteRow> {
    let Ok(rows) = asymptotics(p) else {
        return Vec::new();
    };
    rows.into_iter()
        .map(|a| {
            let value = match a.quantity {
                Quantity::EnergyTime | Quantity::InstPowerTime | Quantity::AvgPowerTime => units.time(a.value),
                Quantity::EnergyValue => units.energy(a.value),
                Quantity::InstPowerValue | Quantity::AvgPowerValue => units.power(a.value),
            };
            AsymptoteRow { name: a.name, quantity: a.quantity, side: a.side, value }
        })
        .collect()
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosedForm => "closed_form",
        Method::RootFound => "root_found",
        Method::NumericMaximizer => "numeric_maximizer",
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Weak => "weak",
        Side::Strong => "strong",
    }
}

pub fn optima_json(p: &BatteryParams, units: &Units) -> Result<Value> {
    let row = optima_row(p, units)?;
    let mut out = Map::new();
    for (key, value) in OPTIMA_KEYS.iter().zip(row.values) {
        out.insert((*key).into(), json!(value));
    }
    out.insert(
        "methods".into(),
        json!({
            "t_E": method_name(row.methods[0]),
            "t_Pinst": method_name(row.methods[1]),
            "t_Pavg": method_name(row.methods[2]),
        }),
    );
    let mut table = Map::new();
    for a in asymptote_rows(p, units) {
        table.insert(a.name.into(), json!({ "value": a.value, "side": side_name(a.side) }));
    }
    out.insert("asymptotics".into(), Value::Object(table));
    out.insert("units".into(), json!(if units.is_raw() { "raw" } else { "normalized" }));
    out.insert("params".into(), json!({ "omega_b": p.omega_b(), "g": p.g(), "gamma": p.gamma(), "omega": p.pulse() }));
    Ok(Value::Object(out))
}

/// Optima over a g/γ grid, one row per coupling.
pub fn sweep_rows(base: &BatteryParams, raw: bool, g_over_gamma: &[f64]) -> Result<Vec<(f64, OptimaRow)>> {
    if base.gamma() <= 0.0 {
        bail!("a g/gamma sweep needs gamma > 0");
    }
    g_over_gamma
        .iter()
        .map(|&x| {
            let p = base.with_g(x * base.gamma())?;
            Ok((x, optima_row(&p, &Units::new(&p, raw))?))
        })
        .collect()
}

pub fn sweep_csv(base: &BatteryParams, raw: bool, grid: &SweepSpec) -> Result<String> {
    let mut csv = Csv::new(&["g_over_gamma"].into_iter().chain(OPTIMA_KEYS).collect::<Vec<_>>());
    debug_assert_eq!(grid.axis, Axis::GOverGamma);
    for (x, row) in sweep_rows(base, raw, &grid.values())? {
        let mut cells = vec![x];
        cells.extend(row.values);
        csv.row(&cells);
    }
    Ok(csv.into_string())
}

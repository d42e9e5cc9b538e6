// SPDX-License-Identifier: Apache-2.0

//! Number formatting, CSV assembly and unit normalization.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};
use qbattery::BatteryParams;

/// `%.12e` as C prints it: 12 mantissa decimals and an exponent of at least two digits.
pub fn sci(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        let names: Vec<&str> = header.iter().map(AsRef::as_ref).collect();
        Self { text: format!("{}\n", names.join(",")) }
    }

    pub fn row(&mut self, values: &[f64]) {
        let cells: Vec<String> = values.iter().map(|&v| sci(v)).collect();
        writeln!(self.text, "{}", cells.join(",")).unwrap();
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

/// Writes to `path`, or to standard output when there is none.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Conversion from raw model units to the normalized output units.
///
/// Times are scaled by γ (or by g when γ = 0), energies by ω_bΩ² and powers
/// by ω_bΩ² times the same rate.
#[derive(Debug, Clone, Copy)]
pub struct Units {
    raw: bool,
    rate: f64,
    rate_name: &'static str,
    energy_scale: f64,
}

impl Units {
    pub fn new(p: &BatteryParams, raw: bool) -> Self {
        let (rate, rate_name) = if p.gamma() > 0.0 {
            (p.gamma(), "gamma")
        } else if p.g() > 0.0 {
            (p.g(), "g")
        } else {
            (1.0, "")
        };
        Self { raw, rate, rate_name, energy_scale: p.energy_scale() }
    }

    pub fn is_raw(&self) -> bool {
        self.raw
    }

    pub fn time_header(&self) -> String {
        if self.raw || self.rate_name.is_empty() {
            "t".into()
        } else {
            format!("t*{}", self.rate_name)
        }
    }

    pub fn suffix(&self) -> &'static str {
        if self.raw {
            ""
        } else {
            "_norm"
        }
    }

    pub fn time(&self, t: f64) -> f64 {
        if self.raw {
            t
        } else {
            t * self.rate
        }
    }

    /// Inverse of [`Units::time`].
    pub fn raw_time(&self, t: f64) -> f64 {
        if self.raw {
            t
        } else {
            t / self.rate
        }
    }

    pub fn energy(&self, e: f64) -> f64 {
        if self.raw {
            e
        } else if self.energy_scale == 0.0 {
            0.0
        } else {
            e / self.energy_scale
        }
    }

    pub fn power(&self, p: f64) -> f64 {
        if self.raw {
            p
        } else if self.energy_scale == 0.0 {
            0.0
        } else {
            p / (self.energy_scale * self.rate)
        }
    }
}

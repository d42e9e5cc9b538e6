// SPDX-License-Identifier: Apache-2.0

//! One-dimensional grids for curves and coupling sweeps.

use anyhow::{bail, Result};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    GOverGamma,
    Time,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

impl SweepSpec {
    pub fn new(axis: Axis, start: f64, stop: f64, points: usize, scale: Scale) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite()) || start >= stop {
            bail!("sweep needs finite start < stop, got [{start}, {stop}]");
        }
        if points < 2 {
            bail!("sweep needs at least 2 points, got {points}");
        }
        if scale == Scale::Log && start <= 0.0 {
            bail!("log scale needs start > 0, got {start}");
        }
        if axis == Axis::Time && start < 0.0 {
            bail!("time grid cannot start before 0, got {start}");
        }
        Ok(Self { axis, start, stop, points, scale })
    }

    /// Grid values; the end points are exact.
    pub fn values(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == last {
                    return self.stop;
                }
                let f = i as f64 / last as f64;
                match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * f,
                    Scale::Log => {
                        let (a, b) = (self.start.log10(), self.stop.log10());
                        10f64.powf(a + (b - a) * f)
                    }
                }
            })
            .collect()
    }
}

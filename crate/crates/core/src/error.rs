// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the battery model and its numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid battery parameters: {0}")]
    InvalidParams(String),

    #[error("outside the domain of {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("no sign change in [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("Fock cutoff {n_cut} too small: truncated norm deficit {deficit:e} exceeds 1e-10")]
    Cutoff { n_cut: usize, deficit: f64 },

    #[error("invalid Fock configuration: {0}")]
    InvalidConfig(String),

    #[error("integration became unstable at t = {t}: {reason}")]
    Instability { t: f64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

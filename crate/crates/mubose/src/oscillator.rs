//! The μ-deformed oscillator: structure function and energy spectrum.
//!
//! The deformation is fixed by φ_μ(N) = N/(1 + μN), which interpolates
//! between the undeformed oscillator (μ = 0) and a saturating ladder: with
//! ħω = 1 the levels E_n = ½(φ_μ(n+1) + φ_μ(n)) climb from
//! E_0 = 1/(2(1+μ)) towards the accumulation point 1/μ.

use core::fmt;

use crate::error::{Error, Result};

/// μ values at or above this margin break the μ-power-series asymptotes
/// (their term ratio reaches 3μ), while exact closed forms stay valid.
pub const SERIES_CONVERGENCE_MARGIN: f64 = 1.0 / 3.0;

/// Validated deformation parameter, μ ≥ 0 and finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MuParameter(f64);

impl MuParameter {
    pub fn new(mu: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidMu("must be finite"));
        }
        if mu < 0.0 {
            return Err(Error::InvalidMu("must be non-negative"));
        }
        Ok(MuParameter(mu))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// True when truncated asymptote series can no longer converge in k.
    pub fn beyond_series_margin(&self) -> bool {
        self.0 >= SERIES_CONVERGENCE_MARGIN
    }
}

impl fmt::Display for MuParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// φ_μ(n) = n/(1 + μn).
pub fn structure_value(n: u64, mu: MuParameter) -> f64 {
    let nf = n as f64;
    nf / (1.0 + mu.value() * nf)
}

/// E_n = ½(φ_μ(n+1) + φ_μ(n)) with ħω = 1.
pub fn energy_level(n: u64, mu: MuParameter) -> f64 {
    0.5 * (structure_value(n + 1, mu) + structure_value(n, mu))
}

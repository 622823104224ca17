//! Error type shared by every fallible operation in the crate.

use alloc::boxed::Box;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The moment table does not reach the power of N the caller needs.
    TableTooSmall { required: usize, actual: usize },
    /// A denominator evaluated to exactly zero.
    DivisionByZero,
    /// Direct summation did not converge within the term ceiling.
    NonConvergence { terms: usize },
    /// λ⁽²⁾ ≤ 0, so the fractional power in r⁽³⁾ is undefined.
    InterceptDomain { lambda2: f64 },
    /// Thermal point with non-physical parameters.
    InvalidPoint(&'static str),
    /// Momentum grid rejected before evaluation.
    InvalidGrid(&'static str),
    /// Deformation parameter rejected.
    InvalidMu(&'static str),
    /// Correlation order other than 2 or 3.
    UnsupportedCorrelationOrder(u32),
    /// Non-positive or non-finite relative tolerance.
    InvalidRelTol(f64),
    /// Failure at one point of a grid scan, with the point identified.
    AtGridPoint {
        index: usize,
        k_mev: f64,
        source: Box<Error>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TableTooSmall { required, actual } => write!(
                f,
                "moment table reaches m = {actual} but m = {required} is required"
            ),
            Error::DivisionByZero => write!(f, "denominator evaluated to zero"),
            Error::NonConvergence { terms } => {
                write!(f, "direct sum did not converge within {terms} terms")
            }
            Error::InterceptDomain { lambda2 } => write!(
                f,
                "r3 undefined: lambda2 = {lambda2} is not strictly positive"
            ),
            Error::InvalidPoint(why) => write!(f, "invalid thermal point: {why}"),
            Error::InvalidGrid(why) => write!(f, "invalid momentum grid: {why}"),
            Error::InvalidMu(why) => write!(f, "invalid deformation parameter: {why}"),
            Error::UnsupportedCorrelationOrder(n) => {
                write!(f, "correlation order {n} not supported (use 2 or 3)")
            }
            Error::InvalidRelTol(t) => write!(f, "relative tolerance {t} must be finite and > 0"),
            Error::AtGridPoint { index, k_mev, source } => {
                write!(f, "at grid point {index} (k = {k_mev} MeV): {source}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::AtGridPoint { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}

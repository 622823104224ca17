//! μ-deformed Bose gas model: exact truncated-series engine for deformed
//! occupation brackets, the thermal moment triangle, momentum-correlation
//! intercepts and their large-momentum asymptotics.
//!
//! The deformation replaces the boson occupation number `N` by the bracket
//! `[N] = N/(1 + μN)`, the eigenvalue ladder of the μ-deformed oscillator.
//! Everything downstream rests on two exact computations:
//!
//! * truncated power-series expansion in μ of bracket products
//!   `[N][N−1]⋯[N−n+1]` ([`series`]),
//! * closed-form thermal averages `⟨N^m⟩ = Σ_r B_r^(m) x^(−r)` over the
//!   geometric occupation distribution, with `x = e^(βω) − 1`
//!   ([`triangle`], [`thermal`]).
//!
//! On top of those sit the two- and three-particle correlation intercepts
//! λ⁽²⁾(K), λ⁽³⁾(K) and the composite ratio r⁽³⁾(K) ([`intercepts`]), and
//! their βω → ∞ asymptotes in both exact closed form and order-k truncated
//! form ([`asymptotics`]).
//!
//! The crate is `no_std` + `alloc` when built without the default `std`
//! feature; float transcendentals always go through `libm` so results do
//! not depend on the platform libm.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod asymptotics;
pub mod error;
pub mod intercepts;
mod math;
pub mod oscillator;
pub mod rational;
pub mod series;
pub mod thermal;
pub mod triangle;

pub use asymptotics::{
    asymptote_from_polynomials, exact_asymptotes, lambda2_asymptote_exact,
    lambda2_asymptote_truncated, lambda3_asymptote_exact, lambda3_asymptote_truncated,
    r3_asymptote_exact, r3_asymptote_truncated, truncated_asymptotes, AsymptoteOrder,
    AsymptoteResult,
};
pub use error::{Error, Result};
pub use intercepts::{
    lambda2_series, lambda3_series, lambda_direct, r3, scan_curve, EvalMethod, InterceptCurve,
};
pub use num_bigint::BigInt;
pub use oscillator::{energy_level, structure_value, MuParameter, SERIES_CONVERGENCE_MARGIN};
pub use rational::Rational;
pub use series::{bracket_product, mu_bracket, series_ratio_eval, MuSeries, NPolynomial};
pub use thermal::{
    direct_sum_mean, mean_npoly, mean_npoly_exact, mean_power, ThermalPoint, DEFAULT_TERM_CEILING,
};
pub use triangle::TriangleTable;

/// Truncation order used by the command-line tool unless overridden.
pub const DEFAULT_ORDER: usize = 5;

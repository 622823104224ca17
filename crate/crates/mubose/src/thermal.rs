//! Thermal averages over the geometric occupation distribution
//! P(N = n) = (1 − t) tⁿ with t = e^(−βω).
//!
//! Closed-form moments go through the coefficient triangle,
//! `⟨N^m⟩ = Σ_r B_r^(m) x^(−r)` with `x = e^(βω) − 1 = 1/t − 1`; the
//! independent cross-check [`direct_sum_mean`] sums the distribution term
//! by term and knows nothing about the triangle.

use num_traits::Zero;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::rational::Rational;
use crate::series::{MuSeries, NPolynomial};
use crate::triangle::TriangleTable;

/// Term ceiling for [`direct_sum_mean`] before it reports non-convergence.
pub const DEFAULT_TERM_CEILING: usize = 1_000_000;

/// One (mass, momentum, temperature) sample with its derived relativistic
/// energy ω = √(m² + K²) and Boltzmann variable x = e^(ω/T) − 1.
///
/// Units are whatever the caller uses consistently for mass, momentum and
/// temperature (MeV with ħ = c = k_B = 1 in the CLI).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalPoint {
    mass: f64,
    k_momentum: f64,
    temperature: f64,
    omega: f64,
    x: f64,
}

impl ThermalPoint {
    /// Requires finite inputs, T > 0, mass ≥ 0, K ≥ 0, not both mass and K
    /// zero, and βω small enough that x = e^(βω) − 1 stays finite (βω
    /// below ~709).
    pub fn new(mass: f64, k_momentum: f64, temperature: f64) -> Result<Self> {
        if !(mass.is_finite() && k_momentum.is_finite() && temperature.is_finite()) {
            return Err(Error::InvalidPoint("non-finite input"));
        }
        if temperature <= 0.0 {
            return Err(Error::InvalidPoint("temperature must be positive"));
        }
        if mass < 0.0 || k_momentum < 0.0 {
            return Err(Error::InvalidPoint("mass and momentum must be non-negative"));
        }
        if mass == 0.0 && k_momentum == 0.0 {
            return Err(Error::InvalidPoint("mass and momentum cannot both vanish"));
        }
        let omega = math::sqrt(mass * mass + k_momentum * k_momentum);
        let x = math::expm1(omega / temperature);
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::InvalidPoint("beta*omega out of floating-point range"));
        }
        Ok(ThermalPoint { mass, k_momentum, temperature, omega, x })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn k_momentum(&self) -> f64 {
        self.k_momentum
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn beta_omega(&self) -> f64 {
        self.omega / self.temperature
    }

    /// Boltzmann weight t = e^(−βω) ∈ (0, 1).
    pub fn boltzmann_t(&self) -> f64 {
        math::exp(-self.beta_omega())
    }
}

fn big_to_f64(b: &num_bigint::BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::NAN)
}

/// ⟨N^m⟩ by Horner evaluation of the triangle row in u = 1/x; the integers
/// stay exact until this final substitution. m = 0 gives 1.
pub fn mean_power(m: usize, point: &ThermalPoint, table: &TriangleTable) -> Result<f64> {
    if m > table.max_m() {
        return Err(Error::TableTooSmall { required: m, actual: table.max_m() });
    }
    if m == 0 {
        return Ok(1.0);
    }
    let u = 1.0 / point.x();
    let mut acc = 0.0;
    for b in table.row(m).iter().rev() {
        acc = acc * u + big_to_f64(b);
    }
    Ok(acc * u)
}

/// ⟨P(N)⟩ by linearity over [`mean_power`], with P's coefficient series
/// evaluated at μ in floats.
pub fn mean_npoly(
    p: &NPolynomial,
    mu: f64,
    point: &ThermalPoint,
    table: &TriangleTable,
) -> Result<f64> {
    let deg = p.degree();
    if deg > table.max_m() {
        return Err(Error::TableTooSmall { required: deg, actual: table.max_m() });
    }
    let mut acc = p.coeff(0).eval_f64(mu);
    for r in 1..=deg {
        acc += p.coeff(r).eval_f64(mu) * mean_power(r, point, table)?;
    }
    Ok(acc)
}

/// Exact moments ⟨N^1⟩ ..= ⟨N^max_m⟩ at u = 1/x, each a Horner pass over
/// its integer triangle row.
pub(crate) fn moments_exact(
    max_m: usize,
    x: &Rational,
    table: &TriangleTable,
) -> Result<Vec<Rational>> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if max_m > table.max_m() {
        return Err(Error::TableTooSmall { required: max_m, actual: table.max_m() });
    }
    let u = x.recip();
    let mut out = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let mut moment = Rational::zero();
        for b in table.row(m).iter().rev() {
            moment = moment * &u + Rational::from_integer(b.clone());
        }
        out.push(moment * &u);
    }
    Ok(out)
}

/// ⟨P(N)⟩ with μ left symbolic: linearity turns the average into an
/// order-K series whose μ^s coefficient is Σ_r [μ^s](c_r) ⟨N^r⟩, all in
/// exact rationals. `moments[m−1]` must hold ⟨N^m⟩ up to P's degree.
pub(crate) fn mean_npoly_series_with(p: &NPolynomial, moments: &[Rational]) -> MuSeries {
    let order = p.order();
    let mut coeffs = alloc::vec![Rational::zero(); order + 1];
    for (r, c) in p.coeffs().iter().enumerate() {
        for (s, a) in c.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if r == 0 {
                coeffs[s] += a; // ⟨N⁰⟩ = 1
            } else {
                coeffs[s] += a * &moments[r - 1];
            }
        }
    }
    MuSeries::from_coeffs(coeffs)
}

/// ⟨P(N)⟩ as an order-K μ-series with exact rational coefficients; x
/// enters exactly and nothing rounds.
pub fn mean_npoly_series(
    p: &NPolynomial,
    x: &Rational,
    table: &TriangleTable,
) -> Result<MuSeries> {
    let moments = moments_exact(p.degree(), x, table)?;
    Ok(mean_npoly_series_with(p, &moments))
}

/// ⟨P(N)⟩ in exact rational arithmetic: μ and x enter as exact rationals
/// and no rounding happens anywhere. This is what keeps the Bose limits of
/// the intercepts exact at μ = 0.
pub fn mean_npoly_exact(
    p: &NPolynomial,
    mu: &Rational,
    x: &Rational,
    table: &TriangleTable,
) -> Result<Rational> {
    Ok(mean_npoly_series(p, x, table)?.eval_rational(mu))
}

/// ⟨f(N)⟩ = (1 − t) Σ_n f(n) tⁿ summed directly.
///
/// Stops once five consecutive terms fall below rel_tol × |partial sum|
/// and the index has passed 20/(−ln t), so a leading run of zero terms
/// (bracket integrands vanish at small n) cannot end the sum early.
/// Reports non-convergence beyond [`DEFAULT_TERM_CEILING`] terms.
pub fn direct_sum_mean<F>(f: F, point: &ThermalPoint, rel_tol: f64) -> Result<f64>
where
    F: Fn(u64) -> f64,
{
    direct_sum_mean_with_ceiling(f, point, rel_tol, DEFAULT_TERM_CEILING)
}

/// [`direct_sum_mean`] with an explicit term ceiling.
pub fn direct_sum_mean_with_ceiling<F>(
    f: F,
    point: &ThermalPoint,
    rel_tol: f64,
    ceiling: usize,
) -> Result<f64>
where
    F: Fn(u64) -> f64,
{
    if !(rel_tol.is_finite() && rel_tol > 0.0) {
        return Err(Error::InvalidRelTol(rel_tol));
    }
    let t = point.boltzmann_t();
    let n_min = 20.0 / -math::ln(t);
    let mut sum = 0.0f64;
    let mut t_pow = 1.0f64;
    let mut consecutive = 0u32;
    for n in 0..ceiling {
        let term = f(n as u64) * t_pow;
        sum += term;
        if math::abs(term) < rel_tol * math::abs(sum) {
            consecutive += 1;
            if consecutive >= 5 && (n as f64) > n_min {
                return Ok((1.0 - t) * sum);
            }
        } else {
            consecutive = 0;
        }
        t_pow *= t;
        if t_pow == 0.0 {
            // the remaining tail is exactly zero in floats
            return Ok((1.0 - t) * sum);
        }
    }
    Err(Error::NonConvergence { terms: ceiling })
}

//! Two- and three-particle momentum-correlation intercepts.
//!
//! With brackets written ⟨·⟩ for thermal averages at a point (mass, K, T),
//!
//! ```text
//! λ⁽²⁾ = ⟨[N][N−1]⟩ / ⟨[N]⟩² − 1
//! λ⁽³⁾ = ⟨[N][N−1][N−2]⟩ / ⟨[N]⟩³ − 1
//! r⁽³⁾ = ½ (λ⁽³⁾ − 3λ⁽²⁾) / (λ⁽²⁾)^(3/2)
//! ```
//!
//! At μ = 0 the brackets collapse to falling factorials, giving the pure
//! Bose–Einstein constants λ⁽²⁾ = 1, λ⁽³⁾ = 5 and r⁽³⁾ = 1 at every point.
//!
//! Two independent evaluation routes are kept deliberately separate.
//! The series route expands bracket products to order K in μ, takes exact
//! closed-form thermal averages with μ left symbolic, raises the
//! denominator average to its power inside the same order-K ring, then
//! substitutes μ and divides exactly once (numerator and denominator stay
//! separate; the ratio is never Taylor-expanded). Keeping the power in the
//! ring matters: squaring the evaluated number instead would leave an
//! O(μ^{K+1}) offset against the order-K asymptotes in the large-βω
//! limit. The direct route sums the un-truncated brackets over the
//! occupation distribution and never touches the series machinery.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::math;
use crate::oscillator::MuParameter;
use crate::rational::{rat_from_f64, rat_to_f64, Rational};
use crate::series::{bracket_product, mu_bracket, NPolynomial};
use crate::thermal::{direct_sum_mean, mean_npoly_series_with, moments_exact, ThermalPoint};
use crate::triangle::TriangleTable;

/// How intercept values are computed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalMethod {
    /// Order-K μ-series with exact closed-form thermal averages.
    Series,
    /// Direct summation of un-truncated brackets to the given tolerance.
    Direct { rel_tol: f64 },
}

/// λ⁽²⁾ and λ⁽³⁾ numerators plus the common denominator bracket, expanded
/// once per (order) and reused across grid points.
struct SeriesParts {
    num2: NPolynomial,
    num3: NPolynomial,
    den: NPolynomial,
}

impl SeriesParts {
    fn build(order: usize) -> Self {
        let den = mu_bracket(0, order);
        let num2 = bracket_product(2, order);
        let num3 = &num2 * &mu_bracket(2, order);
        SeriesParts { num2, num3, den }
    }

    /// (λ⁽²⁾, λ⁽³⁾) at one point, both exact until the final rounding.
    fn eval(
        &self,
        mu: &Rational,
        point: &ThermalPoint,
        table: &TriangleTable,
    ) -> Result<(f64, f64)> {
        let x = rat_from_f64(point.x()).expect("x is finite by construction");
        let moments = moments_exact(self.num3.degree(), &x, table)?;
        let den_series = mean_npoly_series_with(&self.den, &moments);
        let den2_series = &den_series * &den_series;
        let den3_series = &den2_series * &den_series;
        let num2 = mean_npoly_series_with(&self.num2, &moments).eval_rational(mu);
        let num3 = mean_npoly_series_with(&self.num3, &moments).eval_rational(mu);
        let l2 = ratio_minus_one(num2, den2_series.eval_rational(mu))?;
        let l3 = ratio_minus_one(num3, den3_series.eval_rational(mu))?;
        Ok((l2, l3))
    }
}

fn ratio_minus_one(num: Rational, den: Rational) -> Result<f64> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(rat_to_f64(&(num / den - Rational::from_integer(1.into()))))
}

fn table_guard(n_corr: usize, order: usize, table: &TriangleTable) -> Result<()> {
    let required = order + n_corr;
    if table.max_m() < required {
        return Err(Error::TableTooSmall { required, actual: table.max_m() });
    }
    Ok(())
}

/// λ⁽ⁿ⁾ by the series route: ⟨bracket_product(n, K)⟩ over the n-th ring
/// power of ⟨mu_bracket(0, K)⟩, minus one.
fn lambda_series(
    n: u32,
    mu: MuParameter,
    point: &ThermalPoint,
    order: usize,
    table: &TriangleTable,
) -> Result<f64> {
    table_guard(n as usize, order, table)?;
    let mu_rat = rat_from_f64(mu.value()).expect("mu is finite by construction");
    let x = rat_from_f64(point.x()).expect("x is finite by construction");
    let num_poly = bracket_product(n as u64, order);
    let moments = moments_exact(num_poly.degree(), &x, table)?;
    let den_series = mean_npoly_series_with(&mu_bracket(0, order), &moments).pow(n);
    let num = mean_npoly_series_with(&num_poly, &moments).eval_rational(&mu_rat);
    ratio_minus_one(num, den_series.eval_rational(&mu_rat))
}

/// λ⁽²⁾ from the order-K series route. Needs table rows up to K + 2.
pub fn lambda2_series(
    mu: MuParameter,
    point: &ThermalPoint,
    order: usize,
    table: &TriangleTable,
) -> Result<f64> {
    lambda_series(2, mu, point, order, table)
}

/// λ⁽³⁾ from the order-K series route. Needs table rows up to K + 3.
pub fn lambda3_series(
    mu: MuParameter,
    point: &ThermalPoint,
    order: usize,
    table: &TriangleTable,
) -> Result<f64> {
    lambda_series(3, mu, point, order, table)
}

/// λ⁽ⁿ⁾ for n ∈ {2, 3} by direct summation of the exact (un-truncated)
/// brackets [v] = v/(1 + μv); independent of every series code path.
pub fn lambda_direct(
    n: u32,
    mu: MuParameter,
    point: &ThermalPoint,
    rel_tol: f64,
) -> Result<f64> {
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedCorrelationOrder(n));
    }
    let m = mu.value();
    let bracket = move |v: f64| v / (1.0 + m * v);
    let num = direct_sum_mean(
        |j| {
            // below j = n the product carries a zero factor; returning 0
            // directly also avoids 0·∞ when 1 + μ(j−a) crosses zero
            if j < n as u64 {
                return 0.0;
            }
            let mut prod = 1.0;
            for a in 0..n as u64 {
                prod *= bracket((j - a) as f64);
            }
            prod
        },
        point,
        rel_tol,
    )?;
    let den = direct_sum_mean(|j| bracket(j as f64), point, rel_tol)?;
    if den == 0.0 {
        return Err(Error::DivisionByZero);
    }
    let mut den_pow = den;
    for _ in 1..n {
        den_pow *= den;
    }
    Ok(num / den_pow - 1.0)
}

/// Composite three-particle ratio r⁽³⁾ = ½(λ⁽³⁾ − 3λ⁽²⁾)/(λ⁽²⁾)^{3/2}.
/// Undefined for λ⁽²⁾ ≤ 0.
// negated comparison so a NaN lambda2 lands in the error arm too
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn r3(lambda2: f64, lambda3: f64) -> Result<f64> {
    if !(lambda2 > 0.0) {
        return Err(Error::InterceptDomain { lambda2 });
    }
    Ok(0.5 * (lambda3 - 3.0 * lambda2) / math::powf(lambda2, 1.5))
}

/// One scanned intercept curve over a momentum grid at fixed (μ, mass, T).
#[derive(Clone, Debug, PartialEq)]
pub struct InterceptCurve {
    pub mu: f64,
    pub mass: f64,
    pub temperature: f64,
    pub order: usize,
    pub method: EvalMethod,
    pub grid: Vec<f64>,
    pub lambda2: Vec<f64>,
    pub lambda3: Vec<f64>,
    pub r3: Vec<f64>,
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty"));
    }
    if grid.iter().any(|k| !k.is_finite() || *k < 0.0) {
        return Err(Error::InvalidGrid("grid points must be finite and non-negative"));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid("grid must be strictly increasing"));
    }
    Ok(())
}

fn at_point(index: usize, k_mev: f64, e: Error) -> Error {
    Error::AtGridPoint { index, k_mev, source: Box::new(e) }
}

/// Evaluate λ⁽²⁾, λ⁽³⁾ and r⁽³⁾ along a strictly increasing momentum grid.
///
/// The series route expands brackets and builds the moment table once per
/// scan; failures inside the scan are reported with the offending grid
/// point attached.
pub fn scan_curve(
    mu: MuParameter,
    mass: f64,
    temperature: f64,
    order: usize,
    grid: &[f64],
    method: EvalMethod,
) -> Result<InterceptCurve> {
    validate_grid(grid)?;
    let n = grid.len();
    let mut lambda2 = Vec::with_capacity(n);
    let mut lambda3 = Vec::with_capacity(n);
    let mut r3_vals = Vec::with_capacity(n);

    match method {
        EvalMethod::Series => {
            let table = TriangleTable::build(order + 3);
            let parts = SeriesParts::build(order);
            let mu_rat = rat_from_f64(mu.value()).expect("mu is finite by construction");
            for (i, &k) in grid.iter().enumerate() {
                let point =
                    ThermalPoint::new(mass, k, temperature).map_err(|e| at_point(i, k, e))?;
                let (l2, l3) =
                    parts.eval(&mu_rat, &point, &table).map_err(|e| at_point(i, k, e))?;
                let r = r3(l2, l3).map_err(|e| at_point(i, k, e))?;
                lambda2.push(l2);
                lambda3.push(l3);
                r3_vals.push(r);
            }
        }
        EvalMethod::Direct { rel_tol } => {
            for (i, &k) in grid.iter().enumerate() {
                let point =
                    ThermalPoint::new(mass, k, temperature).map_err(|e| at_point(i, k, e))?;
                let l2 = lambda_direct(2, mu, &point, rel_tol).map_err(|e| at_point(i, k, e))?;
                let l3 = lambda_direct(3, mu, &point, rel_tol).map_err(|e| at_point(i, k, e))?;
                let r = r3(l2, l3).map_err(|e| at_point(i, k, e))?;
                lambda2.push(l2);
                lambda3.push(l3);
                r3_vals.push(r);
            }
        }
    }

    Ok(InterceptCurve {
        mu: mu.value(),
        mass,
        temperature,
        order,
        method,
        grid: grid.to_vec(),
        lambda2,
        lambda3,
        r3: r3_vals,
    })
}

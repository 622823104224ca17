//! Truncated power series in the deformation parameter μ, and polynomials
//! in the occupation variable N with series coefficients.
//!
//! [`MuSeries`] is a polynomial in μ cut at a fixed truncation order K:
//! ring operations never produce terms beyond μ^K, so a product of
//! truncated series equals the truncation of the exact product.
//! [`NPolynomial`] is a polynomial in N whose coefficients are `MuSeries`;
//! it is the shape in which deformed brackets live.
//!
//! The bracket itself is the order-K expansion of `(N−a)/(1 + μ(N−a))`:
//!
//! ```text
//! [N−a]_μ = (N−a) · Σ_{s=0}^{K} (−μ(N−a))^s  =  Σ_{s=0}^{K} (−1)^s μ^s (N−a)^{s+1}
//! ```
//!
//! so `[N−a]_μ` has N-degree K+1, and the product `[N][N−1]⋯[N−n+1]`
//! ([`bracket_product`]) has N-degree n+K after truncation. The product
//! vanishes identically at N = 0, 1, …, n−1 because every term keeps the
//! factor (N)(N−1)⋯(N−n+1).

use alloc::{vec, vec::Vec};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_to_f64, Rational};

/// Power series in μ truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuSeries {
    coeffs: Vec<Rational>, // index s holds the coefficient of μ^s; len = order + 1
}

impl MuSeries {
    /// Series with the given coefficients; the order is `coeffs.len() − 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the μ^0 term");
        MuSeries { coeffs }
    }

    /// Integer coefficients, zero-padded up to `order`.
    pub fn from_integers(order: usize, ints: &[i64]) -> Self {
        assert!(ints.len() <= order + 1, "more coefficients than the order admits");
        let mut coeffs: Vec<Rational> = ints
            .iter()
            .map(|&n| Rational::from_integer(BigInt::from(n)))
            .collect();
        coeffs.resize(order + 1, Rational::zero());
        MuSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        MuSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, value: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = value;
        MuSeries { coeffs }
    }

    /// c·μ^power as a series of the given order.
    pub fn monomial(order: usize, power: usize, coeff: Rational) -> Self {
        assert!(power <= order, "monomial power exceeds the truncation order");
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[power] = coeff;
        MuSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of μ^s. Panics when s exceeds the order.
    pub fn coeff(&self, s: usize) -> &Rational {
        &self.coeffs[s]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Index of the lowest non-zero coefficient, or None for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The same series cut at a lower order.
    pub fn truncated(&self, order: usize) -> MuSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        MuSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> MuSeries {
        MuSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Repeated truncated multiplication.
    pub fn pow(&self, e: u32) -> MuSeries {
        let mut acc = MuSeries::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact Horner evaluation at a rational μ.
    pub fn eval_rational(&self, mu: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * mu + c;
        }
        acc
    }

    /// Float Horner evaluation; every coefficient is rounded once.
    pub fn eval_f64(&self, mu: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * mu + rat_to_f64(c);
        }
        acc
    }
}

fn assert_same_order(a: &MuSeries, b: &MuSeries) {
    assert_eq!(
        a.order(),
        b.order(),
        "series of different truncation orders cannot be combined"
    );
}

impl Add for &MuSeries {
    type Output = MuSeries;
    fn add(self, rhs: &MuSeries) -> MuSeries {
        assert_same_order(self, rhs);
        MuSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &MuSeries {
    type Output = MuSeries;
    fn sub(self, rhs: &MuSeries) -> MuSeries {
        assert_same_order(self, rhs);
        MuSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &MuSeries {
    type Output = MuSeries;
    fn neg(self) -> MuSeries {
        MuSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &MuSeries {
    type Output = MuSeries;
    fn mul(self, rhs: &MuSeries) -> MuSeries {
        assert_same_order(self, rhs);
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        MuSeries { coeffs: out }
    }
}

/// Polynomial in N with truncated-series coefficients, stored densely with
/// trailing zero coefficients trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NPolynomial {
    order: usize,          // shared μ-truncation order of every coefficient
    coeffs: Vec<MuSeries>, // index r holds the coefficient of N^r
}

impl NPolynomial {
    pub fn from_coeffs(order: usize, mut coeffs: Vec<MuSeries>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial stores at least the N^0 term");
        for c in &coeffs {
            assert_eq!(c.order(), order, "coefficient series must share one truncation order");
        }
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        NPolynomial { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        NPolynomial { order, coeffs: vec![MuSeries::zero(order)] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of the highest non-zero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Coefficient of N^r, zero beyond the degree.
    pub fn coeff(&self, r: usize) -> MuSeries {
        self.coeffs
            .get(r)
            .cloned()
            .unwrap_or_else(|| MuSeries::zero(self.order))
    }

    pub fn coeffs(&self) -> &[MuSeries] {
        &self.coeffs
    }

    /// Every coefficient series cut at a lower order.
    pub fn truncated(&self, order: usize) -> NPolynomial {
        NPolynomial::from_coeffs(
            order,
            self.coeffs.iter().map(|c| c.truncated(order)).collect(),
        )
    }

    /// Substitute the integer n for N; exact, and commutes with truncated
    /// ring operations because truncation only touches μ.
    pub fn eval_at_integer(&self, n: i64) -> MuSeries {
        let nr = Rational::from_integer(BigInt::from(n));
        let mut acc = MuSeries::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(&nr) + c;
        }
        acc
    }

    /// Float evaluation at (μ, n): Horner in n over float-evaluated
    /// coefficients.
    pub fn eval_f64(&self, mu: f64, n: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c.eval_f64(mu);
        }
        acc
    }
}

impl Add for &NPolynomial {
    type Output = NPolynomial;
    fn add(self, rhs: &NPolynomial) -> NPolynomial {
        assert_eq!(self.order, rhs.order);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = MuSeries::zero(self.order);
        let mut out = Vec::with_capacity(len);
        for r in 0..len {
            let a = self.coeffs.get(r).unwrap_or(&zero);
            let b = rhs.coeffs.get(r).unwrap_or(&zero);
            out.push(a + b);
        }
        NPolynomial::from_coeffs(self.order, out)
    }
}

impl Neg for &NPolynomial {
    type Output = NPolynomial;
    fn neg(self) -> NPolynomial {
        NPolynomial::from_coeffs(self.order, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &NPolynomial {
    type Output = NPolynomial;
    fn mul(self, rhs: &NPolynomial) -> NPolynomial {
        assert_eq!(self.order, rhs.order);
        let order = self.order;
        let deg = self.degree() + rhs.degree();
        let mut out = vec![MuSeries::zero(order); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            let va = match a.valuation() {
                Some(v) => v,
                None => continue,
            };
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let vb = match b.valuation() {
                    Some(v) => v,
                    None => continue,
                };
                // the product series would be truncated to zero anyway
                if va + vb > order {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        NPolynomial::from_coeffs(order, out)
    }
}

/// Order-K expansion of the shifted deformed bracket `[N−a]_μ`.
///
/// The coefficient of μ^s is (−1)^s (N−a)^{s+1}, assembled here from
/// incrementally computed integer powers of (N−a).
pub fn mu_bracket(shift: u64, order: usize) -> NPolynomial {
    let a = BigInt::from(shift);
    let mut cols: Vec<Vec<Rational>> = vec![vec![Rational::zero(); order + 1]; order + 2];
    let mut pow: Vec<BigInt> = vec![BigInt::one()]; // (N−a)^s, little-endian in N
    #[allow(clippy::needless_range_loop)] // s is the μ-power naming column s of every row
    for s in 0..=order {
        let mut next = vec![BigInt::zero(); pow.len() + 1];
        for (r, c) in pow.iter().enumerate() {
            next[r + 1] += c;
            next[r] -= c * &a;
        }
        pow = next;
        for (r, c) in pow.iter().enumerate() {
            let signed = if s % 2 == 1 { -c } else { c.clone() };
            cols[r][s] = Rational::from_integer(signed);
        }
    }
    NPolynomial::from_coeffs(order, cols.into_iter().map(MuSeries::from_coeffs).collect())
}

/// Truncated product `[N]_μ [N−1]_μ ⋯ [N−n+1]_μ`, N-degree n + order.
pub fn bracket_product(n: u64, order: usize) -> NPolynomial {
    assert!(n >= 1, "the bracket product needs at least one factor");
    let mut acc = mu_bracket(0, order);
    for a in 1..n {
        acc = &acc * &mu_bracket(a, order);
    }
    acc
}

/// num(mu)/den(mu) with both sides evaluated separately; exact-zero
/// denominators are reported, not propagated as ±∞.
pub fn series_ratio_eval(num: &MuSeries, den: &MuSeries, mu: f64) -> Result<f64> {
    let d = den.eval_f64(mu);
    if d == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(num.eval_f64(mu) / d)
}

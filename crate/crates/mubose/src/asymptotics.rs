//! Large-βω (large-momentum) asymptotes of the intercepts.
//!
//! As βω → ∞ the occupation variable u = 1/x vanishes and each thermal
//! average is dominated by its lowest occupation numbers; the intercepts
//! approach μ-dependent constants. Exact closed forms:
//!
//! ```text
//! λ⁽²⁾ → 1/(1 + 2μ)
//! λ⁽³⁾ → (5 + 7μ) / ((1 + 2μ)(1 + 3μ))
//! r⁽³⁾ → (1 − μ) √(1 + 2μ) / (1 + 3μ)
//! ```
//!
//! The order-k truncated series counterparts (what an order-k bracket
//! expansion actually converges to) are ratios of polynomials in μ:
//!
//! ```text
//! λ⁽²⁾|k = Σ_{s≤k} (−1)^s (2^{s+2} − s − 3) μ^s / Σ_{r≤k} (−1)^r (r+1) μ^r
//! λ⁽³⁾|k = 6 Σ_{s≤k} (−1)^s (½(3^{s+2}+1) − 2^{s+2}) μ^s
//!            / Σ_{r≤k} (−1)^r ½(r+1)(r+2) μ^r  −  1
//! ```
//!
//! Their coefficients fall straight out of the bracket polynomials: with
//! P = bracket_product(n, k) and Q = mu_bracket(0, k), the limit of the
//! average ratio is λ⁽ⁿ⁾ + 1 = P(n)/Q(1)^n ([`asymptote_from_polynomials`]),
//! because ⟨N^m⟩ = u + O(u²) makes every average pick out its polynomial's
//! value at the lowest non-root integer. Truncated series converge to the
//! exact forms only for μ < 1/3 (term ratio 3μ in the λ⁽³⁾ numerator).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::math;
use crate::oscillator::MuParameter;
use crate::rational::Rational;
use crate::series::{mu_bracket, series_ratio_eval, MuSeries};

/// Which asymptote family a result belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoteOrder {
    Exact,
    Truncated(usize),
}

/// The three intercept asymptotes at one μ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoteResult {
    pub mu: f64,
    pub order: AsymptoteOrder,
    pub lambda2: f64,
    pub lambda3: f64,
    pub r3: f64,
}

/// Exact λ⁽²⁾ asymptote 1/(1 + 2μ).
pub fn lambda2_asymptote_exact(mu: f64) -> f64 {
    1.0 / (1.0 + 2.0 * mu)
}

/// Exact λ⁽³⁾ asymptote (5 + 7μ)/((1 + 2μ)(1 + 3μ)).
pub fn lambda3_asymptote_exact(mu: f64) -> f64 {
    (5.0 + 7.0 * mu) / ((1.0 + 2.0 * mu) * (1.0 + 3.0 * mu))
}

/// Exact r⁽³⁾ asymptote (1 − μ)√(1 + 2μ)/(1 + 3μ).
pub fn r3_asymptote_exact(mu: f64) -> f64 {
    (1.0 - mu) * math::sqrt(1.0 + 2.0 * mu) / (1.0 + 3.0 * mu)
}

/// 1/(1 + 2μ) in exact rational arithmetic.
pub fn lambda2_asymptote_exact_rational(mu: &Rational) -> Rational {
    (Rational::one() + Rational::from_integer(BigInt::from(2)) * mu).recip()
}

/// (5 + 7μ)/((1 + 2μ)(1 + 3μ)) in exact rational arithmetic.
pub fn lambda3_asymptote_exact_rational(mu: &Rational) -> Rational {
    let one = Rational::one();
    let num = Rational::from_integer(BigInt::from(5))
        + Rational::from_integer(BigInt::from(7)) * mu;
    let den = (&one + Rational::from_integer(BigInt::from(2)) * mu)
        * (&one + Rational::from_integer(BigInt::from(3)) * mu);
    num / den
}

fn signed(value: BigInt, s: usize) -> Rational {
    Rational::from_integer(if s % 2 == 1 { -value } else { value })
}

/// Numerator and denominator series of λ⁽²⁾|k itself (not λ⁽²⁾|k + 1):
/// coefficients (−1)^s(2^{s+2} − s − 3) over (−1)^r(r + 1).
pub fn lambda2_truncated_parts(order: usize) -> (MuSeries, MuSeries) {
    let mut num = Vec::with_capacity(order + 1);
    let mut den = Vec::with_capacity(order + 1);
    for s in 0..=order {
        let pow2 = BigInt::from(2).pow(s as u32 + 2);
        num.push(signed(pow2 - BigInt::from(s as u64) - BigInt::from(3), s));
        den.push(signed(BigInt::from(s as u64 + 1), s));
    }
    (MuSeries::from_coeffs(num), MuSeries::from_coeffs(den))
}

/// Numerator (with the overall factor 6 folded in) and denominator series
/// of λ⁽³⁾|k + 1: coefficients 6(−1)^s(½(3^{s+2}+1) − 2^{s+2}) over
/// (−1)^r ½(r+1)(r+2).
pub fn lambda3_truncated_parts(order: usize) -> (MuSeries, MuSeries) {
    let mut num = Vec::with_capacity(order + 1);
    let mut den = Vec::with_capacity(order + 1);
    for s in 0..=order {
        let pow3 = BigInt::from(3).pow(s as u32 + 2);
        let pow2 = BigInt::from(2).pow(s as u32 + 2);
        let c = (pow3 + BigInt::one()) / BigInt::from(2) - pow2;
        num.push(signed(BigInt::from(6) * c, s));
        let d = BigInt::from(s as u64 + 1) * BigInt::from(s as u64 + 2) / BigInt::from(2);
        den.push(signed(d, s));
    }
    (MuSeries::from_coeffs(num), MuSeries::from_coeffs(den))
}

/// λ⁽²⁾|k at μ, numerator and denominator evaluated separately.
pub fn lambda2_asymptote_truncated(mu: f64, order: usize) -> Result<f64> {
    let (num, den) = lambda2_truncated_parts(order);
    series_ratio_eval(&num, &den, mu)
}

/// λ⁽³⁾|k at μ.
pub fn lambda3_asymptote_truncated(mu: f64, order: usize) -> Result<f64> {
    let (num, den) = lambda3_truncated_parts(order);
    Ok(series_ratio_eval(&num, &den, mu)? - 1.0)
}

/// r⁽³⁾|k composed from the truncated λ's through the same ½(λ³ − 3λ²)/λ²^{3/2}
/// used everywhere else.
pub fn r3_asymptote_truncated(mu: f64, order: usize) -> Result<f64> {
    let l2 = lambda2_asymptote_truncated(mu, order)?;
    let l3 = lambda3_asymptote_truncated(mu, order)?;
    crate::intercepts::r3(l2, l3)
}

/// (numerator, denominator) of λ⁽ⁿ⁾|k + 1 extracted from the bracket
/// polynomials themselves: P(n) and Q(1)^n for P = bracket_product(n, k),
/// Q = mu_bracket(0, k). The product is evaluated factor by factor, which
/// equals evaluating the truncated product because substituting an integer
/// for N commutes with μ-truncation.
pub fn asymptote_from_polynomials(n: u32, order: usize) -> (MuSeries, MuSeries) {
    assert!(n >= 1, "the intercept order starts at 1");
    let mut num = MuSeries::one(order);
    for a in 0..n as u64 {
        num = &num * &mu_bracket(a, order).eval_at_integer(n as i64);
    }
    let den = mu_bracket(0, order).eval_at_integer(1).pow(n);
    (num, den)
}

/// All three exact asymptotes at one μ.
pub fn exact_asymptotes(mu: MuParameter) -> AsymptoteResult {
    let m = mu.value();
    AsymptoteResult {
        mu: m,
        order: AsymptoteOrder::Exact,
        lambda2: lambda2_asymptote_exact(m),
        lambda3: lambda3_asymptote_exact(m),
        r3: r3_asymptote_exact(m),
    }
}

/// All three order-k truncated asymptotes at one μ.
pub fn truncated_asymptotes(mu: MuParameter, order: usize) -> Result<AsymptoteResult> {
    let m = mu.value();
    Ok(AsymptoteResult {
        mu: m,
        order: AsymptoteOrder::Truncated(order),
        lambda2: lambda2_asymptote_truncated(m, order)?,
        lambda3: lambda3_asymptote_truncated(m, order)?,
        r3: r3_asymptote_truncated(m, order)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn truncated_part_coefficients_at_order_five() {
        let (num, den) = lambda2_truncated_parts(5);
        assert_eq!(num, MuSeries::from_integers(5, &[1, -4, 11, -26, 57, -120]));
        assert_eq!(den, MuSeries::from_integers(5, &[1, -2, 3, -4, 5, -6]));

        let (num3, den3) = lambda3_truncated_parts(5);
        assert_eq!(
            num3,
            MuSeries::from_integers(5, &[6, -36, 150, -540, 1806, -5796])
        );
        assert_eq!(den3, MuSeries::from_integers(5, &[1, -3, 6, -10, 15, -21]));
    }

    #[test]
    fn polynomial_extraction_matches_formulas() {
        for k in 0..=12usize {
            let (pn2, q2) = asymptote_from_polynomials(2, k);
            let (num2, den2) = lambda2_truncated_parts(k);
            // λ⁽²⁾ + 1 = P(2)/Q(1)², and num2 lists λ⁽²⁾ alone
            assert_eq!(&pn2 - &q2, num2, "k = {k} numerator");
            assert_eq!(q2, den2, "k = {k} denominator");

            let (pn3, q3) = asymptote_from_polynomials(3, k);
            let (num3, den3) = lambda3_truncated_parts(k);
            assert_eq!(pn3, num3, "k = {k} numerator, n = 3");
            assert_eq!(q3, den3, "k = {k} denominator, n = 3");
        }
    }

    #[test]
    fn factor_evaluation_equals_full_product_evaluation() {
        use crate::series::bracket_product;
        for n in 1..=3u32 {
            for k in 0..=8usize {
                let (num, den) = asymptote_from_polynomials(n, k);
                let p = bracket_product(n as u64, k);
                assert_eq!(num, p.eval_at_integer(n as i64));
                let q1 = mu_bracket(0, k).eval_at_integer(1);
                assert_eq!(den, q1.pow(n));
            }
        }
    }

    #[test]
    fn reference_values_at_order_five() {
        // (μ, λ⁽²⁾|5, λ⁽³⁾|5, r⁽³⁾|5) frozen four-decimal reference values
        let cases = [
            (0.10, 0.8331, 3.6365, 0.7472),
            (0.15, 0.7664, 2.9964, 0.5194),
        ];
        for (mu, l2, l3, r) in cases {
            assert!((lambda2_asymptote_truncated(mu, 5).unwrap() - l2).abs() < 1e-3);
            assert!((lambda3_asymptote_truncated(mu, 5).unwrap() - l3).abs() < 1e-3);
            assert!((r3_asymptote_truncated(mu, 5).unwrap() - r).abs() < 1e-3);
        }
    }

    #[test]
    fn exact_forms_satisfy_their_identities() {
        for i in 0..=50 {
            let mu = 0.5 * (i as f64) / 50.0;
            let l2 = lambda2_asymptote_exact(mu);
            let l3 = lambda3_asymptote_exact(mu);
            let r = r3_asymptote_exact(mu);
            assert!((l2 * (1.0 + 2.0 * mu) - 1.0).abs() < 1e-12);
            assert!((l3 * (1.0 + 2.0 * mu) * (1.0 + 3.0 * mu) - (5.0 + 7.0 * mu)).abs() < 1e-12);
            let composed = crate::intercepts::r3(l2, l3).unwrap();
            assert!((composed - r).abs() < 1e-12, "mu = {mu}");
        }
    }

    #[test]
    fn rational_forms_are_exact() {
        for i in 0..=20i64 {
            let mu = rat(i, 40); // 0 ..= 1/2
            let one = Rational::one();
            let l2 = lambda2_asymptote_exact_rational(&mu);
            assert_eq!(l2 * (&one + rat(2, 1) * &mu), one);
            let l3 = lambda3_asymptote_exact_rational(&mu);
            let lhs = l3 * (&one + rat(2, 1) * &mu) * (&one + rat(3, 1) * &mu);
            assert_eq!(lhs, rat(5, 1) + rat(7, 1) * &mu);
        }
    }

    #[test]
    fn truncated_converges_to_exact_below_margin() {
        for mu in [0.05, 0.10, 0.15] {
            let mut prev = f64::INFINITY;
            for k in [5usize, 10, 20, 40] {
                let err = (lambda2_asymptote_truncated(mu, k).unwrap()
                    - lambda2_asymptote_exact(mu))
                .abs();
                assert!(err <= prev * (1.0 + 1e-12) + 1e-15, "mu = {mu}, k = {k}");
                prev = err;
            }
            assert!(prev < 1e-8, "mu = {mu}: final err = {prev:e}");
            assert!(
                (lambda3_asymptote_truncated(mu, 40).unwrap() - lambda3_asymptote_exact(mu))
                    .abs()
                    < 1e-8
            );
            assert!(
                (r3_asymptote_truncated(mu, 40).unwrap() - r3_asymptote_exact(mu)).abs() < 1e-8
            );
        }
    }

    #[test]
    fn truncated_gap_from_exact_is_visible_at_order_five() {
        // the order-5 reference values sit well away from the exact forms;
        // this gap is a real feature of the truncation, not an error
        let gap = (lambda3_asymptote_truncated(0.15, 5).unwrap()
            - lambda3_asymptote_exact(0.15))
        .abs();
        assert!(gap > 0.1, "gap = {gap}");
    }

    #[test]
    fn bose_point_is_exact() {
        assert_eq!(lambda2_asymptote_truncated(0.0, 5).unwrap(), 1.0);
        assert_eq!(lambda3_asymptote_truncated(0.0, 5).unwrap(), 5.0);
        assert_eq!(r3_asymptote_truncated(0.0, 5).unwrap(), 1.0);
        assert_eq!(lambda2_asymptote_exact(0.0), 1.0);
        assert_eq!(lambda3_asymptote_exact(0.0), 5.0);
        assert_eq!(r3_asymptote_exact(0.0), 1.0);
    }

    #[test]
    fn division_by_zero_is_reported() {
        // the order-1 denominator 1 − 2μ vanishes at μ = 1/2
        assert_eq!(
            lambda2_asymptote_truncated(0.5, 1),
            Err(crate::error::Error::DivisionByZero)
        );
    }

    #[test]
    fn result_records_carry_their_order() {
        let mu = MuParameter::new(0.1).unwrap();
        let ex = exact_asymptotes(mu);
        assert_eq!(ex.order, AsymptoteOrder::Exact);
        assert!((ex.lambda2 - 1.0 / 1.2).abs() < 1e-15);
        let tr = truncated_asymptotes(mu, 5).unwrap();
        assert_eq!(tr.order, AsymptoteOrder::Truncated(5));
        assert!((tr.lambda2 - 0.8331).abs() < 1e-3);
    }
}

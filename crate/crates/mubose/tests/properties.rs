//! Randomized structure checks: ring laws for the truncated-series
//! arithmetic, bracket-polynomial roots, commutation of truncation with
//! multiplication and integer substitution, and physical invariances of
//! the intercepts (scale independence, undeformed constancy).

use mubose::rational::{rat, Rational};
use mubose::{
    bracket_product, lambda2_series, lambda3_series, lambda_direct, mu_bracket, MuParameter,
    MuSeries, ThermalPoint, TriangleTable,
};
use proptest::prelude::*;

const ORDER: usize = 6;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn series() -> impl Strategy<Value = MuSeries> {
    proptest::collection::vec(small_rational(), ORDER + 1).prop_map(MuSeries::from_coeffs)
}

proptest! {
    #[test]
    fn addition_and_multiplication_commute(a in series(), b in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates_and_distributes(
        a in series(), b in series(), c in series(),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn subtraction_inverts_addition(a in series(), b in series()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn pow_matches_repeated_multiplication(a in series(), e in 0u32..5) {
        let mut acc = MuSeries::one(ORDER);
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }

    // dropping high orders first or last must not change the survivors
    #[test]
    fn truncation_commutes_with_multiplication(
        a in series(), b in series(), t in 0usize..=ORDER,
    ) {
        prop_assert_eq!((&a * &b).truncated(t), &a.truncated(t) * &b.truncated(t));
    }

    // the property behind evaluating bracket products factor by factor
    #[test]
    fn integer_substitution_commutes_with_truncation(
        shift in 0u64..4, n in -6i64..=6, t in 0usize..=ORDER,
    ) {
        let full = mu_bracket(shift, ORDER).eval_at_integer(n).truncated(t);
        let cut = mu_bracket(shift, t).eval_at_integer(n);
        prop_assert_eq!(full, cut);
    }
}

#[test]
fn bracket_products_vanish_below_their_window() {
    for n in 1..=5u64 {
        for order in 0..=8usize {
            let p = bracket_product(n, order);
            for j in 0..n as i64 {
                assert!(
                    p.eval_at_integer(j).is_zero(),
                    "bracket_product({n}, {order}) must vanish at N = {j}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // only the ratio omega/T enters, so exact power-of-two rescaling of
    // (mass, K, T) must reproduce every intercept bit for bit
    #[test]
    fn intercepts_depend_only_on_beta_omega(
        p in -3i32..=3,
        k in 1.0f64..2000.0,
        t in 60.0f64..250.0,
    ) {
        let scale = (2.0f64).powi(p);
        let mu = MuParameter::new(0.1).unwrap();
        let table = TriangleTable::build(8);
        let a = ThermalPoint::new(139.57, k, t).unwrap();
        let b = ThermalPoint::new(139.57 * scale, k * scale, t * scale).unwrap();
        prop_assert_eq!(
            lambda2_series(mu, &a, 5, &table).unwrap().to_bits(),
            lambda2_series(mu, &b, 5, &table).unwrap().to_bits()
        );
        prop_assert_eq!(
            lambda3_series(mu, &a, 5, &table).unwrap().to_bits(),
            lambda3_series(mu, &b, 5, &table).unwrap().to_bits()
        );
        prop_assert_eq!(
            lambda_direct(2, mu, &a, 1e-10).unwrap().to_bits(),
            lambda_direct(2, mu, &b, 1e-10).unwrap().to_bits()
        );
    }

    #[test]
    fn undeformed_intercepts_are_constant(
        mass in 10.0f64..600.0,
        k in 0.0f64..2500.0,
        t in 60.0f64..250.0,
    ) {
        let mu = MuParameter::new(0.0).unwrap();
        let point = ThermalPoint::new(mass, k, t).unwrap();
        prop_assume!(point.beta_omega() > 0.05);
        let table = TriangleTable::build(8);
        prop_assert_eq!(lambda2_series(mu, &point, 5, &table).unwrap(), 1.0);
        prop_assert_eq!(lambda3_series(mu, &point, 5, &table).unwrap(), 5.0);
        let l2 = lambda_direct(2, mu, &point, 1e-9).unwrap();
        let l3 = lambda_direct(3, mu, &point, 1e-9).unwrap();
        prop_assert!((l2 - 1.0).abs() < 1e-6);
        prop_assert!((l3 - 5.0).abs() < 1e-6);
    }
}

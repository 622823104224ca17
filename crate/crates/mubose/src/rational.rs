//! Exact rational scalars.
//!
//! Every symbolic coefficient in this crate is a `Rational`: arbitrary
//! precision, kept in lowest terms with a positive denominator (both
//! guaranteed by `num-rational`). Nothing here ever rounds; floats enter
//! only through [`rat_from_f64`], which maps a finite float to the dyadic
//! rational it denotes exactly, and leave through [`rat_to_f64`].

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub type Rational = num_rational::BigRational;

/// Integer as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n/d as an exact rational. Panics when d = 0.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact rational value of a finite float. None for NaN or ±∞.
pub fn rat_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Nearest float to an exact rational.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_round_trip_is_exact_for_dyadics() {
        for &x in &[0.5, -0.75, 3.0, 1557.25, 1583.375, 0.1] {
            let r = rat_from_f64(x).unwrap();
            assert_eq!(rat_to_f64(&r), x);
        }
        assert!(rat_from_f64(f64::NAN).is_none());
        assert!(rat_from_f64(f64::INFINITY).is_none());
    }

    #[test]
    fn reduction_happens_on_construction() {
        let r = rat(6, -8);
        assert_eq!(r, rat(-3, 4));
        assert_eq!(rat_to_f64(&r), -0.75);
    }

    #[test]
    fn huge_ratio_to_f64_is_accurate() {
        // 3·10^200 / 2·10^200 must convert through the bit-level path, not
        // via separate numerator/denominator floats (both overflow f64).
        let big = BigInt::from(10).pow(200u32);
        let r = Rational::new(BigInt::from(3) * &big, BigInt::from(2) * &big);
        assert_eq!(rat_to_f64(&r), 1.5);
    }
}

//! Fixed-point output formatting shared by every subcommand.

/// Nine fractional digits, locale-independent, with negative zero folded
/// into plain zero so byte-identical output never depends on the sign of
/// a rounding residue.
pub fn fmt9(v: f64) -> String {
    let s = format!("{v:.9}");
    if s == "-0.000000000" {
        "0.000000000".to_owned()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::fmt9;

    #[test]
    fn nine_fractional_digits() {
        assert_eq!(fmt9(1.0), "1.000000000");
        assert_eq!(fmt9(0.8330913314941193), "0.833091331");
        assert_eq!(fmt9(-2.5), "-2.500000000");
        assert_eq!(fmt9(600.0), "600.000000000");
    }

    #[test]
    fn negative_zero_is_normalized() {
        assert_eq!(fmt9(-0.0), "0.000000000");
        assert_eq!(fmt9(-4.0e-10), "0.000000000");
        assert_eq!(fmt9(-6.0e-10), "-0.000000001");
    }
}

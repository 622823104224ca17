//! Integer coefficient triangle B_r^(m) behind the closed-form thermal
//! moments of the geometric occupation distribution:
//!
//! ```text
//! ⟨N^m⟩ = Σ_{r=1}^{m} B_r^(m) x^(−r),   x = e^(βω) − 1.
//! ```
//!
//! Rows are built with the Pascal-like recurrence
//! `B_r^(m) = r · (B_{r−1}^(m−1) + B_r^(m−1))` from `B_1^(1) = 1`, with
//! `B_0 = 0` and `B_r^(m) = 0` for r > m. The entries count surjections
//! from an m-set onto an r-set, so row edges satisfy `B_1^(m) = 1`,
//! `B_2^(m) = 2^m − 2`, `B_{m−1}^(m) = (m−1)·m!/2`, `B_m^(m) = m!`, and a
//! row sums to the m-th ordered Bell number.

use alloc::{vec, vec::Vec};

use num_bigint::BigInt;
use num_traits::Zero;

/// Rows 1..=max_m of the triangle, exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    rows: Vec<Vec<BigInt>>, // rows[m−1] holds B_1^(m) ..= B_m^(m)
}

impl TriangleTable {
    pub fn build(max_m: usize) -> Self {
        assert!(max_m >= 1, "the triangle starts at m = 1");
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_m);
        rows.push(vec![BigInt::from(1)]);
        for m in 2..=max_m {
            let prev = &rows[m - 2];
            let at = |r: usize| -> BigInt {
                if r == 0 || r > m - 1 {
                    BigInt::zero()
                } else {
                    prev[r - 1].clone()
                }
            };
            let row = (1..=m)
                .map(|r| BigInt::from(r) * (at(r - 1) + at(r)))
                .collect();
            rows.push(row);
        }
        TriangleTable { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len()
    }

    /// B_r^(m); both indices are 1-based, 1 ≤ r ≤ m ≤ max_m.
    pub fn entry(&self, m: usize, r: usize) -> &BigInt {
        assert!(m >= 1 && m <= self.max_m(), "row {m} not built");
        assert!(r >= 1 && r <= m, "column {r} outside row {m}");
        &self.rows[m - 1][r - 1]
    }

    /// Row m as the slice [B_1^(m), …, B_m^(m)].
    pub fn row(&self, m: usize) -> &[BigInt] {
        assert!(m >= 1 && m <= self.max_m(), "row {m} not built");
        &self.rows[m - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Inclusion–exclusion oracle: B_r^(m) = Σ_{j=0}^{r} (−1)^{r−j} C(r,j) j^m
    /// counts surjections directly, with no recurrence involved.
    fn surjections(m: usize, r: usize) -> BigInt {
        let mut total = BigInt::zero();
        let mut binom = BigInt::one(); // C(r, j), updated multiplicatively
        for j in 0..=r {
            let term = &binom * BigInt::from(j).pow(m as u32);
            if (r - j).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
            binom = binom * BigInt::from(r - j) / BigInt::from(j + 1);
        }
        total
    }

    fn factorial(n: usize) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    #[test]
    fn matches_inclusion_exclusion_oracle_up_to_14() {
        let table = TriangleTable::build(14);
        for m in 1..=14 {
            for r in 1..=m {
                assert_eq!(table.entry(m, r), &surjections(m, r), "B_{r}^({m})");
            }
        }
    }

    #[test]
    fn first_seven_rows_frozen() {
        let table = TriangleTable::build(7);
        let want: [&[u64]; 7] = [
            &[1],
            &[1, 2],
            &[1, 6, 6],
            &[1, 14, 36, 24],
            &[1, 30, 150, 240, 120],
            &[1, 62, 540, 1560, 1800, 720],
            &[1, 126, 1806, 8400, 16800, 15120, 5040],
        ];
        for (m, row) in want.iter().enumerate() {
            let got: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(table.row(m + 1), got.as_slice());
        }
    }

    #[test]
    fn edge_identities_up_to_20() {
        let table = TriangleTable::build(20);
        for m in 1..=20 {
            assert!(table.entry(m, 1).is_one());
            if m >= 2 {
                let two_to_m = BigInt::from(2).pow(m as u32);
                assert_eq!(table.entry(m, 2), &(two_to_m - 2));
                assert_eq!(
                    table.entry(m, m - 1),
                    &(BigInt::from(m - 1) * factorial(m) / BigInt::from(2))
                );
            }
            assert_eq!(table.entry(m, m), &factorial(m));
        }
    }

    #[test]
    fn row_sums_are_ordered_bell_numbers() {
        let table = TriangleTable::build(7);
        let sums: Vec<BigInt> = (1..=7).map(|m| table.row(m).iter().sum()).collect();
        let want = [1u64, 3, 13, 75, 541, 4683, 47293];
        for (s, w) in sums.iter().zip(want) {
            assert_eq!(s, &BigInt::from(w));
        }
    }

    #[test]
    #[should_panic(expected = "row 8 not built")]
    fn out_of_range_row_panics() {
        let table = TriangleTable::build(7);
        table.entry(8, 1);
    }
}

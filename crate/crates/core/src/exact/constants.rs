use num_bigint::BigInt;
use num_traits::Signed;

use super::{euler_number, factorial, pow2};

/// The two integers in ψ^(2s)(3/4) = 2^(2s-1) (a π^(2s+1) - b ζ(2s+1)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoldConstants {
    /// |E_2s|
    pub a: BigInt,
    /// 2 (2^(2s+1) - 1) (2s)!
    pub b: BigInt,
}

/// Compute (|E_2s|, 2 (2^(2s+1) - 1) (2s)!) for s ≥ 1.
pub fn bold_constants(s: u32) -> BoldConstants {
    assert!(s >= 1, "bold constants start at s = 1");
    let two_s = 2 * s as usize;
    let a = euler_number(two_s).abs();
    let b = BigInt::from(2) * (pow2(2 * s + 1) - 1) * BigInt::from(factorial(two_s));
    BoldConstants { a, b }
}

/// Pairs (|E_2s|, b_s) exactly as printed for s = 1..5.
pub const PRINTED_BOLD: [(u64, u64); 5] =
    [(1, 28), (5, 1488), (61, 182_880), (1385, 41_207_040), (50521, 14_856_307_200)];

/// Expanded coefficients 2^(2s-1)|E_2s| and 2^(2s-1) b_s as printed for s = 1..5.
pub const PRINTED_EXPANDED: [(u64, u64); 5] =
    [(2, 56), (40, 11_904), (1952, 5_852_160), (177_280, 5_274_501_120), (25_866_752, 7_606_429_286_400)];

/// One row of the coefficient table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub s: u32,
    pub euler_abs: BigInt,
    pub b: BigInt,
    pub pi_coefficient: BigInt,
    pub zeta_coefficient: BigInt,
}

pub fn table_row(s: u32) -> TableRow {
    let BoldConstants { a, b } = bold_constants(s);
    let scale = pow2(2 * s - 1);
    TableRow { s, pi_coefficient: &scale * &a, zeta_coefficient: &scale * &b, euler_abs: a, b }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printed_pairs() {
        for (i, (&(a, b), &(pa, pz))) in PRINTED_BOLD.iter().zip(PRINTED_EXPANDED.iter()).enumerate() {
            let row = table_row(i as u32 + 1);
            assert_eq!(row.euler_abs, BigInt::from(a));
            assert_eq!(row.b, BigInt::from(b));
            assert_eq!(row.pi_coefficient, BigInt::from(pa));
            assert_eq!(row.zeta_coefficient, BigInt::from(pz));
        }
    }

    #[test]
    fn b_formula_through_s12() {
        for s in 1..=12u32 {
            let c = bold_constants(s);
            let expected = BigInt::from(2) * (pow2(2 * s + 1) - 1) * BigInt::from(factorial(2 * s as usize));
            assert_eq!(c.b, expected);
        }
        assert_eq!(bold_constants(1), BoldConstants { a: 1.into(), b: 28.into() });
        assert_eq!(bold_constants(3), BoldConstants { a: 61.into(), b: 182_880.into() });
    }
}

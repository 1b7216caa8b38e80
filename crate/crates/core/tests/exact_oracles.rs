use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use oddzeta::exact::{
    bernoulli_number, bold_constants, cot_derivative_at_quarter, cot_derivative_poly, euler_number, factorial, pow2,
    table_row, PRINTED_BOLD, PRINTED_EXPANDED,
};
use proptest::prelude::*;

/// E_0..E_n from Σ_k C(2m, 2k) E_2k = 0, odd entries zero.
fn secant_oracle(n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for m in (2..=n).step_by(2) {
        let mut acc = BigInt::zero();
        for k in (0..m).step_by(2) {
            acc += binomial(BigInt::from(m), BigInt::from(k)) * &e[k];
        }
        e[m] = -acc;
    }
    e
}

#[test]
fn euler_numbers_match_secant_recurrence() {
    let oracle = secant_oracle(30);
    for (n, expected) in oracle.iter().enumerate() {
        assert_eq!(&euler_number(n), expected, "E_{n}");
    }
    assert_eq!(euler_number(10), BigInt::from(-50521));
}

#[test]
fn bernoulli_frozen_values() {
    assert_eq!(bernoulli_number(1), BigRational::new((-1).into(), 2.into()));
    assert_eq!(bernoulli_number(12), BigRational::new((-691).into(), 2730.into()));
    assert_eq!(bernoulli_number(30), BigRational::new("8615841276005".parse().unwrap(), 14322.into()));
    assert!(bernoulli_number(31).is_zero());
}

#[test]
fn cot_bridge_to_euler_numbers() {
    for s in 1..=50u32 {
        let expected = pow2(2 * s) * euler_number(2 * s as usize).abs();
        assert_eq!(cot_derivative_at_quarter(2 * s as usize), expected, "s = {s}");
    }
}

#[test]
fn cot_low_orders() {
    // cot' = -(1 + u^2), cot'' = 2u + 2u^3
    assert_eq!(cot_derivative_poly(1).to_string(), "-1 - u^2");
    assert_eq!(cot_derivative_poly(2).to_string(), "2u + 2u^3");
    assert_eq!(cot_derivative_at_quarter(3), BigInt::from(-16));
}

#[test]
fn bold_constants_reproduce_printed_tables() {
    for s in 1..=12u32 {
        let c = bold_constants(s);
        let b = BigInt::from(2) * (pow2(2 * s + 1) - 1) * BigInt::from(factorial(2 * s as usize));
        assert_eq!(c.b, b);
        assert_eq!(c.a, euler_number(2 * s as usize).abs());
    }
    for s in 1..=5u32 {
        let c = bold_constants(s);
        let (a, b) = PRINTED_BOLD[s as usize - 1];
        assert_eq!((c.a, c.b), (BigInt::from(a), BigInt::from(b)));
        let row = table_row(s);
        let (p, z) = PRINTED_EXPANDED[s as usize - 1];
        assert_eq!((row.pi_coefficient, row.zeta_coefficient), (BigInt::from(p), BigInt::from(z)));
    }
}

proptest! {
    #[test]
    fn cot_poly_degree_and_parity(n in 0usize..100) {
        let q = cot_derivative_poly(n);
        prop_assert_eq!(q.degree(), n + 1);
        for (power, c) in q.coefficients().iter().enumerate() {
            if (power + n) % 2 == 0 {
                prop_assert!(c.is_zero(), "Q_{} has a term of power {}", n, power);
            }
        }
        // leading coefficient (-1)^n n!
        let lead = q.coefficient(n + 1);
        let n_fact = BigInt::from(factorial(n));
        prop_assert_eq!(lead, if n % 2 == 0 { n_fact } else { -n_fact });
    }

    #[test]
    fn euler_sign_alternates(k in 0usize..150) {
        let e = euler_number(2 * k);
        prop_assert_eq!(e.is_negative(), k % 2 == 1);
        prop_assert!(euler_number(2 * k + 1).is_zero());
    }

    #[test]
    fn bernoulli_from_zigzag_matches_recurrence(n in 2usize..60) {
        // Σ_{k<n+1} C(n+1, k) B_k = 0
        let mut acc = BigRational::zero();
        for k in 0..=n {
            acc += BigRational::from_integer(binomial(BigInt::from(n + 1), BigInt::from(k))) * bernoulli_number(k);
        }
        prop_assert!(acc.is_zero());
    }
}

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::HPReal;
use crate::par::{sum_bigint, Exec};

/// Integer weights of the Cohen–Rodriguez Villegas–Zagier acceleration.
///
/// With d_k = n Σ_{i≤k} (n+i-1)! 4^i / ((n-i)! (2i)!), the weighted sum
/// Σ_{k<n} (-1)^k (d_n - d_k) a_k / d_n approximates Σ_{k≥0} (-1)^k a_k.
/// When a_k are the moments of a positive measure on [0, 1] (true for
/// (k+1)^-m and (2k+1)^-m), the error is at most a_0 / d_n, and d_n equals
/// the Chebyshev value T_n(3) ≥ (3+√8)^n / 2.
#[derive(Debug, Clone)]
pub struct AlternatingAccelerator {
    n: usize,
    // d_0 ..= d_n
    partial: Vec<BigInt>,
}

static CACHE: LazyLock<RwLock<HashMap<usize, Arc<AlternatingAccelerator>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

impl AlternatingAccelerator {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "at least one term");
        let mut partial = Vec::with_capacity(n + 1);
        let mut term = BigInt::one();
        let mut acc = BigInt::zero();
        for i in 0..=n {
            acc += &term;
            partial.push(acc.clone());
            if i < n {
                // t_{i+1} = t_i · 4 (n+i)(n-i) / ((2i+1)(2i+2)), exact
                let num = &term * BigInt::from(4 * (n + i) as u64) * BigInt::from((n - i) as u64);
                let den = BigInt::from(((2 * i + 1) * (2 * i + 2)) as u64);
                let (q, r) = num.div_rem(&den);
                debug_assert!(r.is_zero(), "non-integral Chebyshev coefficient");
                term = q;
            }
        }
        AlternatingAccelerator { n, partial }
    }

    /// Shared instance for `n` terms.
    pub fn cached(n: usize) -> Arc<Self> {
        if let Some(a) = CACHE.read().expect("accelerator cache poisoned").get(&n) {
            return a.clone();
        }
        let built = Arc::new(Self::new(n));
        CACHE.write().expect("accelerator cache poisoned").entry(n).or_insert(built).clone()
    }

    /// Terms needed so that a_0 / d_n ≤ 2^-(bits+2) when a_0 ≤ 1.
    pub fn terms_for_bits(bits: u32) -> usize {
        let rate = (3.0 + 8f64.sqrt()).ln();
        ((bits as f64 + 3.0) * std::f64::consts::LN_2 / rate).ceil() as usize + 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// d_n
    pub fn denominator(&self) -> &BigInt {
        &self.partial[self.n]
    }

    /// Weight (d_n - d_k) of term k, without the alternating sign.
    pub fn weight(&self, k: usize) -> BigInt {
        &self.partial[self.n] - &self.partial[k]
    }

    /// Accelerated Σ (-1)^k a_k at `bits`, where `term(k)` returns a_k in
    /// fixed point rounded down (error < 1 unit) and `a0_upper` bounds a_0.
    pub fn sum<F>(&self, exec: Exec, bits: u32, a0_upper: &BigUint, term: F) -> HPReal
    where
        F: Fn(usize) -> BigInt + Sync + Send,
    {
        let weighted = sum_bigint(exec, 0, self.n, |k| {
            let w = self.weight(k) * term(k);
            if k % 2 == 0 {
                w
            } else {
                -w
            }
        });
        let d = self.denominator();
        let value = weighted / d;
        let truncation = Integer::div_ceil(a0_upper, d.magnitude());
        // n rounded terms of weight ≤ 1, one rounding in the division.
        let error = truncation + BigUint::from(self.n as u64 + 1);
        HPReal::from_parts(value, error, bits)
    }
}

/// Σ_{k≥0} (-1)^k a_k for a totally monotone sequence with a_0 ≤ 1, accurate
/// to about 2^-bits.
pub fn accelerated_alternating_sum<F>(exec: Exec, bits: u32, term: F) -> (HPReal, usize)
where
    F: Fn(usize) -> BigInt + Sync + Send,
{
    let n = AlternatingAccelerator::terms_for_bits(bits);
    let acc = AlternatingAccelerator::cached(n);
    let one = BigUint::one() << bits;
    (acc.sum(exec, bits, &one, term), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_denominators() {
        // T_n(3): 3, 17, 99, 577
        let d: Vec<i64> =
            (1..=4).map(|n| i64::try_from(AlternatingAccelerator::new(n).denominator().clone()).unwrap()).collect();
        assert_eq!(d, vec![3, 17, 99, 577]);
    }

    #[test]
    fn log_two() {
        // Σ (-1)^k / (k+1) = ln 2
        let bits = 200;
        let (x, _) = accelerated_alternating_sum(Exec::Sequential, bits, |k| (BigInt::one() << bits) / (k + 1));
        assert!(x.error_within(55));
        assert_eq!(x.to_sig_digits(50), "0.69314718055994530941723212145817656807550013436026");
    }

    #[test]
    fn parallel_is_bit_identical() {
        let bits = 300;
        let f = |k: usize| (BigInt::one() << bits) / BigInt::from(2 * k + 1).pow(3);
        let (a, _) = accelerated_alternating_sum(Exec::Sequential, bits, f);
        let (b, _) = accelerated_alternating_sum(Exec::Parallel, bits, f);
        assert_eq!(a, b);
        // β(3) = π³/32
        assert_eq!(a.to_sig_digits(20), "0.96894614625936938048");
    }
}

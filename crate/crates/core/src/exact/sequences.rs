use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Append-only cache of zigzag (up/down) numbers and factorials.
///
/// Zigzag numbers come from the Seidel boustrophedon triangle: even indices
/// give the secant numbers |E_2k|, odd indices the tangent numbers from which
/// the Bernoulli numbers are read off. Readers share the lock; a reader that
/// needs more entries upgrades to a write lock and extends the tables. Two
/// writers racing to the same length produce the same values, so fill is
/// idempotent.
#[derive(Debug, Default)]
pub struct SequenceCache {
    zigzag: RwLock<ZigzagTable>,
    factorials: RwLock<Vec<BigUint>>,
}

#[derive(Debug, Default)]
struct ZigzagTable {
    values: Vec<BigUint>,
    // Last completed row of the boustrophedon triangle.
    row: Vec<BigUint>,
}

impl ZigzagTable {
    fn extend_to(&mut self, n: usize) {
        if self.values.is_empty() {
            self.values.push(BigUint::one());
            self.row = vec![BigUint::one()];
        }
        while self.values.len() <= n {
            let prev = &self.row;
            let len = prev.len() + 1;
            let mut next = Vec::with_capacity(len);
            next.push(BigUint::zero());
            for k in 1..len {
                let v = &next[k - 1] + &prev[len - 1 - k];
                next.push(v);
            }
            self.values.push(next[len - 1].clone());
            self.row = next;
        }
    }
}

static GLOBAL: LazyLock<SequenceCache> = LazyLock::new(SequenceCache::default);

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions of this module.
    pub fn global() -> &'static SequenceCache {
        &GLOBAL
    }

    /// Number of cached zigzag entries.
    pub fn zigzag_len(&self) -> usize {
        self.zigzag.read().expect("zigzag cache poisoned").values.len()
    }

    pub fn zigzag(&self, n: usize) -> BigUint {
        {
            let table = self.zigzag.read().expect("zigzag cache poisoned");
            if let Some(v) = table.values.get(n) {
                return v.clone();
            }
        }
        let mut table = self.zigzag.write().expect("zigzag cache poisoned");
        table.extend_to(n);
        table.values[n].clone()
    }

    /// Signed secant Euler number: E_0 = 1, E_2 = -1, E_4 = 5, odd indices 0.
    pub fn euler(&self, n: usize) -> BigInt {
        if n % 2 == 1 {
            return BigInt::zero();
        }
        let magnitude = BigInt::from(self.zigzag(n));
        if (n / 2) % 2 == 1 {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Bernoulli number with B_1 = -1/2.
    pub fn bernoulli(&self, n: usize) -> BigRational {
        match n {
            0 => return BigRational::one(),
            1 => return BigRational::new((-1).into(), 2.into()),
            _ if n % 2 == 1 => return BigRational::zero(),
            _ => {}
        }
        // B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)), T_k the tangent number zigzag(2k-1).
        let k = n / 2;
        let tangent = BigInt::from(self.zigzag(n - 1));
        let four_k = BigInt::one() << (2 * k);
        let numer = tangent * BigInt::from(n);
        let denom = &four_k * (&four_k - 1u8);
        let b = BigRational::new(numer, denom);
        if k % 2 == 1 {
            b
        } else {
            -b
        }
    }

    pub fn factorial(&self, n: usize) -> BigUint {
        {
            let table = self.factorials.read().expect("factorial cache poisoned");
            if let Some(v) = table.get(n) {
                return v.clone();
            }
        }
        let mut table = self.factorials.write().expect("factorial cache poisoned");
        if table.is_empty() {
            table.push(BigUint::one());
        }
        while table.len() <= n {
            let i = table.len();
            let next = &table[i - 1] * BigUint::from(i);
            table.push(next);
        }
        table[n].clone()
    }
}

/// Zigzag number A_n (number of alternating permutations of n elements).
pub fn zigzag_number(n: usize) -> BigUint {
    SequenceCache::global().zigzag(n)
}

/// Signed Euler (secant) number E_n.
pub fn euler_number(n: usize) -> BigInt {
    SequenceCache::global().euler(n)
}

/// Bernoulli number B_n, B_1 = -1/2.
pub fn bernoulli_number(n: usize) -> BigRational {
    SequenceCache::global().bernoulli(n)
}

pub fn factorial(n: usize) -> BigUint {
    SequenceCache::global().factorial(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    // Secant recurrence: sum_k C(2n, 2k) E_2k = 0 for n >= 1.
    fn euler_oracle(max_n: usize) -> Vec<BigInt> {
        let mut e: Vec<BigInt> = vec![BigInt::one()];
        for n in 1..=max_n {
            let mut acc = BigInt::zero();
            for (k, ek) in e.iter().enumerate() {
                acc += BigInt::from(binomial(BigUint::from(2 * n), BigUint::from(2 * k))) * ek;
            }
            e.push(-acc);
        }
        e
    }

    // sum_{k=0}^{n} C(n+1, k) B_k = 0.
    fn bernoulli_oracle(max_n: usize) -> Vec<BigRational> {
        let mut b = vec![BigRational::one()];
        for n in 1..=max_n {
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from(BigInt::from(binomial(BigUint::from(n + 1), BigUint::from(k)))) * bk;
            }
            b.push(-acc / BigRational::from(BigInt::from(n + 1)));
        }
        b
    }

    #[test]
    fn euler_small_values() {
        assert_eq!(euler_number(0), BigInt::one());
        assert_eq!(euler_number(5), BigInt::zero());
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        assert_eq!(euler_number(8), BigInt::from(1385));
        assert_eq!(euler_number(10), BigInt::from(-50521));
    }

    #[test]
    fn euler_matches_secant_recurrence() {
        let oracle = euler_oracle(30);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(&euler_number(2 * n), expected, "E_{}", 2 * n);
            assert_eq!(euler_number(2 * n + 1), BigInt::zero());
        }
    }

    #[test]
    fn euler_sign_alternates() {
        for s in 0..60usize {
            let e = euler_number(2 * s);
            let expected = if s % 2 == 0 { num_bigint::Sign::Plus } else { num_bigint::Sign::Minus };
            assert_eq!(e.sign(), expected);
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(0), BigRational::one());
        assert_eq!(bernoulli_number(1), r(-1, 2));
        assert_eq!(bernoulli_number(3), BigRational::zero());
        assert_eq!(bernoulli_number(12), r(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_recurrence() {
        let oracle = bernoulli_oracle(40);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli_number(n), expected, "B_{n}");
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(10), BigUint::from(3_628_800u32));
        assert_eq!(factorial(20), BigUint::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn private_cache_is_append_only() {
        let cache = SequenceCache::new();
        let e10 = cache.euler(10);
        let len = cache.zigzag_len();
        let _ = cache.euler(40);
        assert!(cache.zigzag_len() > len);
        assert_eq!(cache.euler(10), e10);
    }

    #[test]
    fn concurrent_fill_is_consistent() {
        let cache = SequenceCache::new();
        let results: Vec<Vec<BigInt>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..8)
                .map(|t| {
                    let cache = &cache;
                    scope.spawn(move || (0..80).map(|i| cache.euler((i * 7 + t * 13) % 160)).collect())
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (t, row) in results.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                assert_eq!(v, &euler_number((i * 7 + t * 13) % 160));
            }
        }
    }
}

//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers fan out over rayon's
//! global pool when asked to; without it every call runs on the current
//! thread. Results are always returned in input order, and the reductions
//! used by the series kernels are exact big-integer sums, so both modes
//! produce bit-identical output.

use num_bigint::BigInt;
use num_traits::Zero;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for the data-parallel kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Below this many items the parallel path is not worth the scheduling cost.
#[cfg(feature = "parallel")]
const MIN_PARALLEL_LEN: usize = 64;

/// Order-preserving map over `0..len`.
pub fn map_indexed<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && len > 1 {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Order-preserving map over a slice.
pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() > 1 {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Exact sum of `f(k)` for `k` in `start..end`.
pub fn sum_bigint<F>(exec: Exec, start: usize, end: usize, f: F) -> BigInt
where
    F: Fn(usize) -> BigInt + Sync + Send,
{
    if end <= start {
        return BigInt::zero();
    }
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && end - start >= MIN_PARALLEL_LEN {
        return (start..end).into_par_iter().fold(BigInt::zero, |acc, k| acc + f(k)).reduce(BigInt::zero, |a, b| a + b);
    }
    let _ = exec;
    (start..end).fold(BigInt::zero(), |acc, k| acc + f(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |k: usize| BigInt::from(k * k) - BigInt::from(3 * k);
        assert_eq!(sum_bigint(Exec::Sequential, 0, 1000, f), sum_bigint(Exec::Parallel, 0, 1000, f));
        let a = map_indexed(Exec::Sequential, 200, |i| i * 2);
        let b = map_indexed(Exec::Parallel, 200, |i| i * 2);
        assert_eq!(a, b);
        assert_eq!(sum_bigint(Exec::Parallel, 5, 5, f), BigInt::zero());
    }
}

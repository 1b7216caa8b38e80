use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{HPReal, PrecisionContext};

static CACHE: LazyLock<RwLock<Option<HPReal>>> = LazyLock::new(|| RwLock::new(None));

/// arctan(1/x) at `bits` fractional bits.
fn arctan_inv(x: u32, bits: u32) -> HPReal {
    let x2 = BigInt::from(x) * x;
    let mut power = (BigInt::from(1u8) << bits) / x;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
        terms += 1;
    }
    // Each power carries < 2 units of accumulated truncation, each term < 3;
    // the omitted alternating tail is below the last (zero) power, i.e. < 2.
    HPReal::from_parts(sum, BigUint::from(3 * terms + 2), bits)
}

fn machin(bits: u32) -> HPReal {
    let inner = bits + 16;
    let a = arctan_inv(5, inner).mul_int(&BigInt::from(16));
    let b = arctan_inv(239, inner).mul_int(&BigInt::from(4));
    (&a - &b).rescale(bits)
}

/// π at `bits` fractional bits, from the widest cached value when possible.
pub(crate) fn pi_bits(bits: u32) -> HPReal {
    if let Some(cached) = CACHE.read().expect("pi cache poisoned").as_ref() {
        if cached.bits() >= bits {
            return cached.rescale(bits);
        }
    }
    let value = machin(bits);
    let mut slot = CACHE.write().expect("pi cache poisoned");
    if slot.as_ref().is_none_or(|c| c.bits() < bits) {
        *slot = Some(value.clone());
    }
    value
}

/// π to the context's precision.
pub fn hp_pi(ctx: &PrecisionContext) -> HPReal {
    pi_bits(ctx.working_bits())
}

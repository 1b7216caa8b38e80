use std::f64::consts::{LN_2, LOG10_2, PI};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::accel::accelerated_alternating_sum;
use super::pi::pi_bits;
use super::{HPReal, PrecisionContext};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, euler_number, factorial, pow2};
use crate::par::{sum_bigint, Exec};
use crate::symbolic::Site;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesMethod {
    DirectWithTail,
    AlternatingAccelerated,
    EulerMaclaurin,
}

/// A series value with its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    pub result: HPReal,
    pub terms_used: usize,
    pub method: SeriesMethod,
}

/// Run `f` at increasing guard precision until `error_of` fits 10^-P.
pub(crate) fn refine<T>(
    ctx: &PrecisionContext,
    f: impl Fn(&PrecisionContext) -> Result<T>,
    error_of: impl Fn(&T) -> &HPReal,
) -> Result<T> {
    let target = ctx.decimal_digits();
    let mut attempt = *ctx;
    for _ in 0..6 {
        let out = f(&attempt)?;
        let x = error_of(&out);
        if x.error_within(target) {
            return Ok(out);
        }
        let excess = x.error_log10().unwrap_or(0.0) + target as f64;
        attempt = attempt.boosted(excess.max(0.0).ceil() as u32 + 5);
    }
    Err(Error::Domain(format!("could not reach an error bound of 1e-{target}")))
}

/// ζ(m) for m ≥ 2 by the accelerated alternating η series.
pub fn zeta_value(m: u32, ctx: &PrecisionContext) -> Result<SeriesResult> {
    zeta_value_with(m, ctx, Exec::default())
}

pub fn zeta_value_with(m: u32, ctx: &PrecisionContext, exec: Exec) -> Result<SeriesResult> {
    if m < 2 {
        return Err(Error::Domain(format!("zeta({m}) needs m ≥ 2")));
    }
    refine(
        ctx,
        |c| {
            let bits = c.working_bits() + 2;
            let one = BigInt::one() << bits;
            let (eta, n) = accelerated_alternating_sum(exec, bits, |k| &one / BigInt::from(k + 1).pow(m));
            // ζ(m) = η(m) · 2^(m-1) / (2^(m-1) - 1)
            let factor = BigRational::new(pow2(m - 1), pow2(m - 1) - 1);
            Ok(SeriesResult {
                result: eta.mul_rational(&factor),
                terms_used: n,
                method: SeriesMethod::AlternatingAccelerated,
            })
        },
        |r| &r.result,
    )
}

/// β(m) = Σ (-1)^k (2k+1)^-m for m ≥ 1.
pub fn beta_value(m: u32, ctx: &PrecisionContext) -> Result<SeriesResult> {
    beta_value_with(m, ctx, Exec::default())
}

pub fn beta_value_with(m: u32, ctx: &PrecisionContext, exec: Exec) -> Result<SeriesResult> {
    if m < 1 {
        return Err(Error::Domain("beta(m) needs m ≥ 1".into()));
    }
    refine(
        ctx,
        |c| {
            let bits = c.working_bits();
            let one = BigInt::one() << bits;
            let (value, n) = accelerated_alternating_sum(exec, bits, |k| &one / BigInt::from(2 * k + 1).pow(m));
            Ok(SeriesResult { result: value, terms_used: n, method: SeriesMethod::AlternatingAccelerated })
        },
        |r| &r.result,
    )
}

/// Shift N and number of correction terms M for an Euler–Maclaurin tail
/// whose first omitted term is below 2^-(bits+3).
fn euler_maclaurin_plan(m: u32, bits: u32) -> (u64, usize) {
    let target = -((bits + 3) as f64) * LN_2;
    let mut n = ((bits as f64 * LOG10_2 * 0.6).ceil() as u64).max(8) + m as u64 / 2;
    loop {
        let x = n as f64 + 0.25;
        let ln_x = x.ln();
        let ln_2pi = (2.0 * PI).ln();
        // |C_j| ≈ 2 · rising(m, 2j-1) / ((2π)^(2j) x^(m+2j-1))
        let mut ln_rising = (m as f64).ln();
        let mut prev = f64::INFINITY;
        let mut j = 1usize;
        let plan = loop {
            let ln_c = LN_2 + ln_rising - 2.0 * j as f64 * ln_2pi - (m as f64 + 2.0 * j as f64 - 1.0) * ln_x;
            if ln_c < target {
                break Some(j - 1);
            }
            if ln_c >= prev || j > 4000 {
                break None;
            }
            prev = ln_c;
            ln_rising += ((m as f64) + 2.0 * j as f64 - 1.0).ln() + ((m as f64) + 2.0 * j as f64).ln();
            j += 1;
        };
        match plan {
            Some(count) => return (n, count.max(1)),
            None => n *= 2,
        }
    }
}

/// ζ(m, p/4) = Σ_{k≥0} (k + p/4)^-m by Euler–Maclaurin at fixed `bits`.
fn hurwitz_fixed(m: u32, site: Site, bits: u32, exec: Exec) -> SeriesResult {
    let p = site.numerator() as u64;
    let (n, corrections) = euler_maclaurin_plan(m, bits);
    let q = BigInt::from(4 * n + p);

    // Σ_{k<N} 4^m / (4k+p)^m
    let scaled_one = BigInt::one() << (bits + 2 * m);
    let direct = sum_bigint(exec, 0, n as usize, |k| &scaled_one / BigInt::from(4 * k as u64 + p).pow(m));
    let mut value = direct;
    let mut error = BigUint::from(n);

    // ∫_X^∞ t^-m dt + X^-m / 2 with X = q/4
    let q_pow_m1 = q.pow(m - 1);
    value += (BigInt::one() << (bits + 2 * (m - 1))) / (&q_pow_m1 * BigInt::from(m - 1));
    let q_pow_m = &q_pow_m1 * &q;
    value += (BigInt::one() << (bits + 2 * m - 1)) / &q_pow_m;
    error += 2u8;

    // C_j = B_2j / (2j)! · m (m+1) ... (m+2j-2) · X^-(m+2j-1)
    let q2 = &q * &q;
    let mut rising = BigInt::from(m);
    let mut q_pow = &q_pow_m * &q;
    // Integer quotients only: normalizing these rationals would cost a gcd each.
    let correction = |j: usize, rising: &BigInt, q_pow: &BigInt| -> (BigInt, BigInt) {
        let b = bernoulli_number(2 * j);
        let num = (b.numer() * rising) << (bits + 2 * (m + 2 * j as u32 - 1));
        let den = b.denom() * BigInt::from(factorial(2 * j)) * q_pow;
        (num, den)
    };
    for j in 1..=corrections + 1 {
        let (num, den) = correction(j, &rising, &q_pow);
        if j <= corrections {
            // truncating division: under one unit off
            value += &num / &den;
            error += 1u8;
        } else {
            // Enveloping remainder: bounded by the first omitted correction.
            error += Integer::div_ceil(num.magnitude(), den.magnitude()) + 1u8;
        }
        let r = m as u64 + 2 * j as u64;
        rising *= BigInt::from(r - 1) * BigInt::from(r);
        q_pow *= &q2;
    }
    SeriesResult {
        result: HPReal::from_parts(value, error, bits),
        terms_used: n as usize + corrections,
        method: SeriesMethod::EulerMaclaurin,
    }
}

/// ζ(m, a) for a ∈ {1/4, 3/4} and m ≥ 2.
pub fn hurwitz_zeta(m: u32, site: Site, ctx: &PrecisionContext) -> Result<SeriesResult> {
    hurwitz_zeta_with(m, site, ctx, Exec::default())
}

pub fn hurwitz_zeta_with(m: u32, site: Site, ctx: &PrecisionContext, exec: Exec) -> Result<SeriesResult> {
    if m < 2 {
        return Err(Error::Domain(format!("zeta({m}, {site}) needs m ≥ 2")));
    }
    refine(ctx, |c| Ok(hurwitz_fixed(m, site, c.working_bits(), exec)), |r| &r.result)
}

/// ψ^(n)(a) = (-1)^(n+1) n! ζ(n+1, a) for n ≥ 1.
pub fn polygamma_quarter(n: u32, site: Site, ctx: &PrecisionContext) -> Result<HPReal> {
    if n == 0 {
        return Err(Error::Domain("digamma (order 0) is not supported".into()));
    }
    let fact = BigInt::from(factorial(n as usize));
    let extra = (fact.bits() as f64 * LOG10_2).ceil() as u32 + 1;
    refine(
        ctx,
        |c| {
            let bits = c.boosted(extra).working_bits();
            let hz = hurwitz_fixed(n + 1, site, bits, Exec::default()).result;
            let value = hz.mul_int(&fact);
            Ok(if n.is_multiple_of(2) { -value } else { value })
        },
        |x| x,
    )
}

fn lattice(m: u32, site: Site, ctx: &PrecisionContext) -> Result<SeriesResult> {
    if m < 2 {
        return Err(Error::Domain(format!("lattice sum of order {m} needs m ≥ 2")));
    }
    let hz = hurwitz_zeta(m, site, ctx)?;
    // 4^-m ζ(m, a): reinterpret the scale, no rounding.
    let r = &hz.result;
    let scaled = HPReal::from_parts(r.mantissa().clone(), r.error_ulps().clone(), r.bits() + 2 * m);
    Ok(SeriesResult { result: scaled.rescale(ctx.working_bits()), ..hz })
}

/// S₊(m) = Σ_{k≥0} (4k+1)^-m
pub fn lattice_sum_plus(m: u32, ctx: &PrecisionContext) -> Result<SeriesResult> {
    lattice(m, Site::Quarter, ctx)
}

/// S₋(m) = Σ_{k≥1} (4k-1)^-m
pub fn lattice_sum_minus(m: u32, ctx: &PrecisionContext) -> Result<SeriesResult> {
    lattice(m, Site::ThreeQuarter, ctx)
}

/// The Euler bracket E_2s (πi)^(2s+1) i / (2 (2^(2s+1) - 1) (2s)!) as magnitude and sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTerm {
    /// T_s = |E_2s| π^(2s+1) / (2 (2^(2s+1) - 1) (2s)!)
    pub magnitude: HPReal,
    pub negative: bool,
}

impl EulerTerm {
    /// Signed value of the bracket.
    pub fn value(&self) -> HPReal {
        if self.negative {
            -&self.magnitude
        } else {
            self.magnitude.clone()
        }
    }
}

pub fn euler_term(s: u32, ctx: &PrecisionContext) -> Result<EulerTerm> {
    if s == 0 {
        return Err(Error::Domain("the Euler term needs s ≥ 1".into()));
    }
    let e = euler_number(2 * s as usize);
    // E_2s · i^(2s+2): sign(E_2s) = (-1)^s, i^(2s+2) = (-1)^(s+1).
    let i_sign = if (s + 1).is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
    let negative = (e.sign() == Sign::Minus) != (i_sign == Sign::Minus);
    let coefficient =
        BigRational::new(e.abs(), BigInt::from(2) * (pow2(2 * s + 1) - 1) * BigInt::from(factorial(2 * s as usize)));
    let magnitude = refine(ctx, |c| Ok(pi_bits(c.working_bits()).pow(2 * s + 1).mul_rational(&coefficient)), |x| x)?;
    Ok(EulerTerm { magnitude, negative })
}

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// Fixed-point real `mantissa · 2^-bits` with absolute error at most `error · 2^-bits`.
///
/// Binary operations between values of different scale work at the finer
/// scale. Error bounds combine conservatively: sums add bounds, products use
/// |x|·e_y + |y|·e_x + e_x·e_y, and every truncation adds one unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPReal {
    mantissa: BigInt,
    error: BigUint,
    bits: u32,
}

fn pow10(k: u32) -> BigUint {
    BigUint::from(10u8).pow(k)
}

fn ceil_shr(v: &BigUint, shift: u32) -> BigUint {
    let q = v >> shift;
    if (&q << shift) == *v {
        q
    } else {
        q + 1u8
    }
}

impl HPReal {
    pub fn zero(bits: u32) -> Self {
        HPReal { mantissa: BigInt::zero(), error: BigUint::zero(), bits }
    }

    pub fn from_parts(mantissa: BigInt, error: BigUint, bits: u32) -> Self {
        HPReal { mantissa, error, bits }
    }

    pub fn from_integer(v: &BigInt, bits: u32) -> Self {
        HPReal { mantissa: v << bits, error: BigUint::zero(), bits }
    }

    /// Nearest-below fixed-point value of `r`; exact when `r` is representable.
    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let (q, rem) = (r.numer() << bits).div_mod_floor(r.denom());
        HPReal { mantissa: q, error: if rem.is_zero() { BigUint::zero() } else { BigUint::one() }, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// Error bound in units of 2^-bits.
    pub fn error_ulps(&self) -> &BigUint {
        &self.error
    }

    /// The error bound as a value at the same scale.
    pub fn abs_error(&self) -> HPReal {
        HPReal::from_parts(BigInt::from(self.error.clone()), BigUint::zero(), self.bits)
    }

    /// Widen the error bound by `extra` units.
    pub fn with_extra_error(mut self, extra: &BigUint) -> Self {
        self.error += extra;
        self
    }

    pub fn rescale(&self, bits: u32) -> HPReal {
        match bits.cmp(&self.bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let d = bits - self.bits;
                HPReal { mantissa: &self.mantissa << d, error: &self.error << d, bits }
            }
            Ordering::Less => {
                let d = self.bits - bits;
                let mantissa = &self.mantissa >> d;
                let exact = (&mantissa << d) == self.mantissa;
                let mut error = ceil_shr(&self.error, d);
                if !exact {
                    error += 1u8;
                }
                HPReal { mantissa, error, bits }
            }
        }
    }

    fn aligned(&self, other: &HPReal) -> (HPReal, HPReal) {
        let bits = self.bits.max(other.bits);
        (self.rescale(bits), other.rescale(bits))
    }

    pub fn mul_int(&self, k: &BigInt) -> HPReal {
        HPReal { mantissa: &self.mantissa * k, error: &self.error * k.magnitude(), bits: self.bits }
    }

    /// Division by a non-zero integer.
    pub fn div_int(&self, d: &BigInt) -> HPReal {
        assert!(!d.is_zero(), "division by zero");
        let (q, r) = self.mantissa.div_rem(d);
        let (eq, er) = self.error.div_rem(d.magnitude());
        let mut error = eq;
        if !er.is_zero() {
            error += 1u8;
        }
        if !r.is_zero() {
            error += 1u8;
        }
        HPReal { mantissa: q, error, bits: self.bits }
    }

    pub fn mul_rational(&self, r: &BigRational) -> HPReal {
        self.mul_int(r.numer()).div_int(r.denom())
    }

    pub fn pow(&self, exp: u32) -> HPReal {
        let mut acc = HPReal::from_integer(&BigInt::one(), self.bits);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_exact(&self) -> bool {
        self.error.is_zero()
    }

    /// True when the error bound is at most 10^-digits.
    pub fn error_within(&self, digits: u32) -> bool {
        (&self.error * pow10(digits)) <= (BigUint::one() << self.bits)
    }

    /// True when |value| + error ≤ 10^exp, i.e. the value is certainly that small.
    pub fn certainly_below_pow10(&self, exp: i32) -> bool {
        let upper = self.mantissa.magnitude() + &self.error;
        if exp >= 0 {
            upper <= (pow10(exp as u32) << self.bits)
        } else {
            upper * pow10(exp.unsigned_abs()) <= (BigUint::one() << self.bits)
        }
    }

    /// Rough log10 of the error bound; `None` for an exact value.
    pub fn error_log10(&self) -> Option<f64> {
        if self.error.is_zero() {
            return None;
        }
        Some((self.error.bits() as f64 - self.bits as f64) * LOG10_2)
    }

    /// Upper bound |value| + error rendered in scientific notation.
    pub fn abs_upper_sci(&self, sig: usize) -> String {
        sci_upper(&(self.mantissa.magnitude() + &self.error), self.bits, sig)
    }

    pub fn error_sci(&self, sig: usize) -> String {
        sci_upper(&self.error, self.bits, sig)
    }

    /// Rounded to `decimals` places after the point.
    pub fn to_fixed(&self, decimals: u32) -> String {
        let q = scaled_round(self.mantissa.magnitude(), self.bits, decimals as i64);
        format_scaled(&q, decimals as i64, self.mantissa.is_negative())
    }

    /// Rounded to `digits` significant decimal digits.
    pub fn to_sig_digits(&self, digits: u32) -> String {
        let mag = self.mantissa.magnitude();
        if mag.is_zero() {
            return "0".to_string();
        }
        let n = digits.max(1) as usize;
        let mut e = ((mag.bits() as f64 - 1.0 - self.bits as f64) * LOG10_2).floor() as i64;
        for _ in 0..8 {
            let k = n as i64 - 1 - e;
            let q = scaled_round(mag, self.bits, k);
            let len = q.to_string().len();
            match len.cmp(&n) {
                Ordering::Equal => return format_scaled(&q, k, self.mantissa.is_negative()),
                Ordering::Greater => e += 1,
                Ordering::Less => e -= 1,
            }
        }
        unreachable!("digit count did not settle")
    }
}

/// round(mag · 10^k / 2^bits), halves away from zero.
fn scaled_round(mag: &BigUint, bits: u32, k: i64) -> BigUint {
    if k >= 0 {
        let num = mag * pow10(k as u32);
        if bits == 0 {
            return num;
        }
        (num + (BigUint::one() << (bits - 1))) >> bits
    } else {
        let den = (BigUint::one() << bits) * pow10((-k) as u32);
        (mag + (&den >> 1u32)) / den
    }
}

fn ceil_scaled(mag: &BigUint, bits: u32, k: i64) -> BigUint {
    if k >= 0 {
        ceil_shr(&(mag * pow10(k as u32)), bits)
    } else {
        let den = (BigUint::one() << bits) * pow10((-k) as u32);
        Integer::div_ceil(mag, &den)
    }
}

fn format_scaled(q: &BigUint, k: i64, negative: bool) -> String {
    let digits = q.to_string();
    let body = if k <= 0 {
        if q.is_zero() {
            "0".to_string()
        } else {
            format!("{digits}{}", "0".repeat((-k) as usize))
        }
    } else {
        let k = k as usize;
        let padded = if digits.len() <= k { format!("{}{digits}", "0".repeat(k + 1 - digits.len())) } else { digits };
        let (int, frac) = padded.split_at(padded.len() - k);
        format!("{int}.{frac}")
    };
    if negative && !q.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// `value · 2^-bits` rounded up to `sig` significant digits, as `d.ddde-N`.
pub(crate) fn sci_upper(value: &BigUint, bits: u32, sig: usize) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let n = sig.max(1);
    let mut e = ((value.bits() as f64 - 1.0 - bits as f64) * LOG10_2).floor() as i64;
    for _ in 0..8 {
        let k = n as i64 - 1 - e;
        let q = ceil_scaled(value, bits, k);
        let text = q.to_string();
        match text.len().cmp(&n) {
            Ordering::Equal => {
                let (lead, rest) = text.split_at(1);
                let rest = rest.trim_end_matches('0');
                return if rest.is_empty() { format!("{lead}e{e}") } else { format!("{lead}.{rest}e{e}") };
            }
            Ordering::Greater => e += 1,
            Ordering::Less => e -= 1,
        }
    }
    unreachable!("digit count did not settle")
}

impl Add for &HPReal {
    type Output = HPReal;
    fn add(self, rhs: &HPReal) -> HPReal {
        let (a, b) = self.aligned(rhs);
        HPReal { mantissa: a.mantissa + b.mantissa, error: a.error + b.error, bits: a.bits }
    }
}

impl Sub for &HPReal {
    type Output = HPReal;
    fn sub(self, rhs: &HPReal) -> HPReal {
        let (a, b) = self.aligned(rhs);
        HPReal { mantissa: a.mantissa - b.mantissa, error: a.error + b.error, bits: a.bits }
    }
}

impl Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal { mantissa: -&self.mantissa, error: self.error.clone(), bits: self.bits }
    }
}

impl Mul for &HPReal {
    type Output = HPReal;
    fn mul(self, rhs: &HPReal) -> HPReal {
        let (a, b) = self.aligned(rhs);
        let bits = a.bits;
        let product = &a.mantissa * &b.mantissa;
        let mantissa = &product >> bits;
        let exact = (&mantissa << bits) == product;
        let spread = a.mantissa.magnitude() * &b.error + b.mantissa.magnitude() * &a.error + &a.error * &b.error;
        let mut error = ceil_shr(&spread, bits);
        if !exact {
            error += 1u8;
        }
        HPReal { mantissa, error, bits }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for HPReal {
            type Output = HPReal;
            fn $m(self, rhs: HPReal) -> HPReal {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        -&self
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.bits as f64 * LOG10_2).floor() as u32).max(1);
        write!(f, "{} ± {}", self.to_sig_digits(digits), self.error_sci(2))
    }
}

use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Q_n(u) with d^n/dz^n cot(πz) = π^n Q_n(cot(πz)).
///
/// Built from Q_0(u) = u and Q_{n+1}(u) = -(1 + u²) Q_n'(u). The recurrence
/// never divides, so every coefficient is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotPoly {
    order: usize,
    // coefficients[k] multiplies u^k
    coefficients: Vec<BigInt>,
}

impl CotPoly {
    fn base() -> Self {
        CotPoly { order: 0, coefficients: vec![BigInt::zero(), BigInt::one()] }
    }

    fn next(&self) -> Self {
        // Q' has degree d-1; (1 + u²) Q' has degree d+1.
        let deg = self.degree();
        let mut out = vec![BigInt::zero(); deg + 2];
        for k in 1..=deg {
            let d = &self.coefficients[k] * BigInt::from(k);
            out[k - 1] -= &d;
            out[k + 1] -= d;
        }
        CotPoly { order: self.order + 1, coefficients: out }
    }

    /// Derivative order n this polynomial represents.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, power: usize) -> BigInt {
        self.coefficients.get(power).cloned().unwrap_or_default()
    }

    pub fn eval(&self, u: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * u + c)
    }
}

impl fmt::Display for CotPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

static POLYS: LazyLock<RwLock<Vec<CotPoly>>> = LazyLock::new(|| RwLock::new(vec![CotPoly::base()]));

/// Q_n from the cached recurrence.
pub fn cot_derivative_poly(n: usize) -> CotPoly {
    {
        let polys = POLYS.read().expect("cot cache poisoned");
        if let Some(p) = polys.get(n) {
            return p.clone();
        }
    }
    let mut polys = POLYS.write().expect("cot cache poisoned");
    while polys.len() <= n {
        let next = polys.last().expect("base entry").next();
        polys.push(next);
    }
    polys[n].clone()
}

/// Q_n(1): the value of π^{-n} d^n/dz^n cot(πz) at z = 1/4.
pub fn cot_derivative_at_quarter(n: usize) -> BigInt {
    cot_derivative_poly(n).eval(&BigInt::one())
}

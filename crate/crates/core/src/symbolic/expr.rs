use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Atom;

/// Shorthand for an exact rational n/d.
pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Rational linear combination of atoms. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinExpr {
    terms: BTreeMap<Atom, BigRational>,
}

impl LinExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn atom(atom: Atom) -> Self {
        Self::term(atom, BigRational::one())
    }

    pub fn term(atom: Atom, coefficient: BigRational) -> Self {
        let mut e = Self::zero();
        e.add_term(atom, coefficient);
        e
    }

    pub fn constant(value: BigRational) -> Self {
        Self::term(Atom::One, value)
    }

    pub fn add_term(&mut self, atom: Atom, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(atom).or_insert_with(BigRational::zero);
        *slot += coefficient;
        if slot.is_zero() {
            self.terms.remove(&atom);
        }
    }

    pub fn add_scaled(&mut self, other: &LinExpr, factor: &BigRational) {
        for (atom, c) in &other.terms {
            self.add_term(*atom, c * factor);
        }
    }

    pub fn scaled(&self, factor: &BigRational) -> LinExpr {
        let mut out = LinExpr::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, atom: &Atom) -> BigRational {
        self.terms.get(atom).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.terms.contains_key(atom)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Atom, &BigRational)> {
        self.terms.iter()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(Atom, BigRational)> for LinExpr {
    fn from_iter<I: IntoIterator<Item = (Atom, BigRational)>>(iter: I) -> Self {
        let mut e = LinExpr::zero();
        for (a, c) in iter {
            e.add_term(a, c);
        }
        e
    }
}

impl Add for LinExpr {
    type Output = LinExpr;
    fn add(mut self, rhs: LinExpr) -> LinExpr {
        self.add_scaled(&rhs, &BigRational::one());
        self
    }
}

impl Sub for LinExpr {
    type Output = LinExpr;
    fn sub(mut self, rhs: LinExpr) -> LinExpr {
        self.add_scaled(&rhs, &-BigRational::one());
        self
    }
}

impl Neg for LinExpr {
    type Output = LinExpr;
    fn neg(self) -> LinExpr {
        self.scaled(&-BigRational::one())
    }
}

impl Mul<BigRational> for LinExpr {
    type Output = LinExpr;
    fn mul(self, rhs: BigRational) -> LinExpr {
        self.scaled(&rhs)
    }
}

impl Mul<&BigRational> for LinExpr {
    type Output = LinExpr;
    fn mul(self, rhs: &BigRational) -> LinExpr {
        self.scaled(rhs)
    }
}

/// Canonical rendering, e.g. `2*pi^3 - 56*zeta(3)`; the zero expression renders as `0`.
impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (atom, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match atom {
                Atom::One => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "{atom}")?,
                _ => write!(f, "{mag}*{atom}")?,
            }
        }
        Ok(())
    }
}

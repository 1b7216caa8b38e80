use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{Atom, LinExpr, Site};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, cot_derivative_at_quarter, euler_number, factorial, pow2, MAX_INDEX};

/// Which rewrite rules [`reduce_with`] may apply.
///
/// * `beta_odd`: β(2s+1) → |E_2s| π^(2s+1) / (2^(2s+2) (2s)!)
/// * `polygamma_even`: ψ^(2s)(3/4), ψ^(2s)(1/4) → ±2^(2s-1)|E_2s| π^(2s+1) - 2^(2s)(2^(2s+1)-1)(2s)! ζ(2s+1)
/// * `cot`: cotd^(n)(1/4) → Q_n(1) π^(n+1)
/// * `even_zeta`: ζ(2s) → (-1)^(s+1) B_2s 2^(2s-1)/(2s)! π^(2s)
/// * `polygamma_odd`: ψ^(2s-1)(p/4) → (2s-1)! (2^(2s-1)(2^2s - 1) ζ(2s) ± 2^(4s-1) β(2s))
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleSet {
    pub beta_odd: bool,
    pub polygamma_even: bool,
    pub cot: bool,
    pub even_zeta: bool,
    pub polygamma_odd: bool,
}

impl RuleSet {
    /// Every rule; the even-zeta closure only on request.
    pub fn standard(enable_even_zeta: bool) -> Self {
        RuleSet { beta_odd: true, polygamma_even: true, cot: true, even_zeta: enable_even_zeta, polygamma_odd: true }
    }

    /// Only the rules whose right-hand sides contain no ζ value.
    pub fn zeta_free() -> Self {
        RuleSet { beta_odd: true, polygamma_even: false, cot: true, even_zeta: false, polygamma_odd: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub reduced: LinExpr,
    /// Atoms of `reduced` outside {1, π^m, ζ(m)}.
    pub irreducible_atoms: BTreeSet<Atom>,
}

impl ReductionOutcome {
    pub fn is_zero(&self) -> bool {
        self.reduced.is_zero()
    }
}

/// Reduce with [`RuleSet::standard`].
pub fn reduce(e: &LinExpr, enable_even_zeta: bool) -> Result<ReductionOutcome> {
    reduce_with(e, RuleSet::standard(enable_even_zeta))
}

/// Apply `rules` until no atom changes.
pub fn reduce_with(e: &LinExpr, rules: RuleSet) -> Result<ReductionOutcome> {
    for atom in e.atoms() {
        validate(atom)?;
    }
    let mut current = e.clone();
    loop {
        let mut next = LinExpr::zero();
        let mut changed = false;
        for (atom, c) in current.terms() {
            match rewrite(atom, rules) {
                Some(replacement) => {
                    changed = true;
                    next.add_scaled(&replacement, c);
                }
                None => next.add_term(*atom, c.clone()),
            }
        }
        current = next;
        if !changed {
            break;
        }
    }
    let irreducible_atoms =
        current.atoms().filter(|a| !matches!(a, Atom::One | Atom::PiPow(_) | Atom::ZetaAt(_))).copied().collect();
    Ok(ReductionOutcome { reduced: current, irreducible_atoms })
}

fn validate(atom: &Atom) -> Result<()> {
    let (what, value, min): (&'static str, u32, u32) = match *atom {
        Atom::One => return Ok(()),
        Atom::PiPow(m) => ("pi power", m, 0),
        Atom::ZetaAt(m) => ("zeta argument", m, 2),
        Atom::BetaAt(m) => ("beta argument", m, 1),
        Atom::PolyGammaQ(n, _) => ("polygamma order", n, 1),
        Atom::CotDerivQ(n) => ("cot derivative order", n, 0),
    };
    if value < min {
        return Err(Error::Domain(format!("{what} {value} is below {min} in {atom}")));
    }
    // Each rule needs an exact sequence value of index at most value + 1.
    if value >= MAX_INDEX {
        return Err(Error::Range { what, value: value as u64, max: MAX_INDEX as u64 - 1 });
    }
    Ok(())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn rewrite(atom: &Atom, rules: RuleSet) -> Option<LinExpr> {
    match *atom {
        Atom::BetaAt(m) if rules.beta_odd && m % 2 == 1 => Some(beta_odd(m)),
        Atom::PolyGammaQ(n, site) if rules.polygamma_even && n % 2 == 0 => Some(polygamma_even(n / 2, site)),
        Atom::PolyGammaQ(n, site) if rules.polygamma_odd && n % 2 == 1 => Some(polygamma_odd(n.div_ceil(2), site)),
        Atom::CotDerivQ(n) if rules.cot => {
            Some(LinExpr::term(Atom::PiPow(n + 1), int(cot_derivative_at_quarter(n as usize))))
        }
        Atom::ZetaAt(m) if rules.even_zeta && m % 2 == 0 => Some(even_zeta(m / 2)),
        Atom::PiPow(0) => Some(LinExpr::atom(Atom::One)),
        _ => None,
    }
}

fn beta_odd(m: u32) -> LinExpr {
    let s = (m - 1) / 2;
    let two_s = 2 * s as usize;
    let coefficient = BigRational::new(euler_number(two_s).abs(), pow2(2 * s + 2) * BigInt::from(factorial(two_s)));
    LinExpr::term(Atom::PiPow(m), coefficient)
}

fn polygamma_even(s: u32, site: Site) -> LinExpr {
    let two_s = 2 * s as usize;
    let pi_part = int(pow2(2 * s - 1) * euler_number(two_s).abs());
    let pi_part = match site {
        Site::ThreeQuarter => pi_part,
        Site::Quarter => -pi_part,
    };
    let zeta_part = int(pow2(2 * s) * (pow2(2 * s + 1) - 1) * BigInt::from(factorial(two_s)));
    let mut e = LinExpr::term(Atom::PiPow(2 * s + 1), pi_part);
    e.add_term(Atom::ZetaAt(2 * s + 1), -zeta_part);
    e
}

fn polygamma_odd(s: u32, site: Site) -> LinExpr {
    let fact = BigInt::from(factorial(2 * s as usize - 1));
    let zeta_part = int(&fact * pow2(2 * s - 1) * (pow2(2 * s) - 1));
    let beta_part = int(&fact * pow2(4 * s - 1));
    let beta_part = match site {
        Site::Quarter => beta_part,
        Site::ThreeQuarter => -beta_part,
    };
    let mut e = LinExpr::term(Atom::ZetaAt(2 * s), zeta_part);
    e.add_term(Atom::BetaAt(2 * s), beta_part);
    e
}

fn even_zeta(s: u32) -> LinExpr {
    let two_s = 2 * s as usize;
    let mut c = bernoulli_number(two_s) * int(pow2(2 * s - 1)) / int(factorial(two_s));
    if s.is_multiple_of(2) {
        c = -c;
    }
    LinExpr::term(Atom::PiPow(2 * s), c)
}

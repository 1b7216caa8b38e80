use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use super::pi::pi_bits;
use super::series::{beta_value, polygamma_quarter, refine, zeta_value};
use super::{HPReal, PrecisionContext};
use crate::error::{Error, Result};
use crate::exact::cot_derivative_at_quarter;
use crate::symbolic::{Atom, LinExpr};

type AtomKey = (Atom, u32, u32);

// Atom values are deterministic in (atom, P, guard), so sweeps share them.
static ATOM_CACHE: LazyLock<Mutex<HashMap<AtomKey, HPReal>>> = LazyLock::new(Default::default);

fn eval_atom_uncached(atom: &Atom, ctx: &PrecisionContext) -> Result<HPReal> {
    match *atom {
        Atom::One => Ok(HPReal::from_integer(&BigInt::one(), ctx.working_bits())),
        Atom::PiPow(k) => refine(ctx, |c| Ok(pi_bits(c.working_bits()).pow(k)), |x| x),
        Atom::ZetaAt(m) => Ok(zeta_value(m, ctx)?.result),
        Atom::BetaAt(m) => Ok(beta_value(m, ctx)?.result),
        Atom::PolyGammaQ(n, site) => polygamma_quarter(n, site, ctx),
        Atom::CotDerivQ(n) => {
            // cot^(n)(π/4) = Q_n(1) π^(n+1) after dividing by π^(n+1)
            let q = cot_derivative_at_quarter(n as usize);
            refine(ctx, |c| Ok(pi_bits(c.working_bits()).pow(n + 1).mul_int(&q)), |x| x)
        }
    }
}

/// Value of one atom with absolute error at most 10^-P.
pub fn eval_atom(atom: &Atom, ctx: &PrecisionContext) -> Result<HPReal> {
    let key = (*atom, ctx.decimal_digits(), ctx.guard_digits());
    if let Some(v) = ATOM_CACHE.lock().expect("atom cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let value = eval_atom_uncached(atom, ctx).map_err(|e| match e {
        Error::Domain(msg) => Error::UnsupportedAtom(format!("{atom}: {msg}")),
        other => other,
    })?;
    ATOM_CACHE.lock().expect("atom cache poisoned").insert(key, value.clone());
    Ok(value)
}

/// Value of a linear combination with absolute error at most 10^-P.
pub fn eval_expr(expr: &LinExpr, ctx: &PrecisionContext) -> Result<HPReal> {
    refine(
        ctx,
        |c| {
            let bits = c.working_bits() + 8;
            let mut total = HPReal::zero(bits);
            for (atom, coeff) in expr.terms() {
                let v = eval_atom(atom, c)?.rescale(bits);
                total = total + v.mul_rational(coeff);
            }
            Ok(total)
        },
        |x| x,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{rat, Site};

    #[test]
    fn atoms_evaluate() {
        let ctx = PrecisionContext::new(20).unwrap();
        assert_eq!(eval_atom(&Atom::PiPow(1), &ctx).unwrap().to_sig_digits(20), "3.1415926535897932385");
        assert_eq!(eval_atom(&Atom::CotDerivQ(0), &ctx).unwrap().to_sig_digits(5), "3.1416");
        // cot'(π/4) = -2 after the π^2 normalization gives -2π^2
        let d1 = eval_atom(&Atom::CotDerivQ(1), &ctx).unwrap();
        assert_eq!(d1.to_sig_digits(10), "-19.73920880");
        assert!(eval_atom(&Atom::ZetaAt(1), &ctx).is_err());
        assert!(eval_atom(&Atom::PolyGammaQ(0, Site::Quarter), &ctx).is_err());
    }

    #[test]
    fn expression_meets_target() {
        let ctx = PrecisionContext::new(30).unwrap();
        let e = LinExpr::term(Atom::ZetaAt(3), rat(1000, 1)) - LinExpr::term(Atom::BetaAt(3), rat(999, 1));
        let v = eval_expr(&e, &ctx).unwrap();
        assert!(v.error_within(30));
        assert!(eval_expr(&LinExpr::zero(), &ctx).unwrap().is_exact());
    }
}

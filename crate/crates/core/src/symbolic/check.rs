use num_rational::BigRational;
use num_traits::Zero;

use super::{find_identity, reduce_with, Atom, IdentityRecord, LinExpr, RuleSet};
use crate::error::Result;

/// Reduced residual of one form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormResidual {
    pub label: &'static str,
    pub residual: LinExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicCheck {
    pub holds: bool,
    pub forms: Vec<FormResidual>,
}

impl SymbolicCheck {
    /// The first non-zero residual, or zero when every form holds.
    pub fn residual(&self) -> LinExpr {
        self.forms.iter().find(|f| !f.residual.is_zero()).map(|f| f.residual.clone()).unwrap_or_default()
    }

    /// `0` when all forms hold, otherwise `label: residual` for each failing form.
    pub fn render_residual(&self) -> String {
        let failing: Vec<String> = self
            .forms
            .iter()
            .filter(|f| !f.residual.is_zero())
            .map(|f| format!("{}: {}", f.label, f.residual))
            .collect();
        if failing.is_empty() {
            "0".to_string()
        } else {
            failing.join("; ")
        }
    }
}

/// Reduce lhs - rhs for every form of `id` at `s`.
pub fn check_identity_symbolic(id: &str, s: u32, enable_even_zeta: bool) -> Result<SymbolicCheck> {
    check_record(find_identity(id)?, s, enable_even_zeta)
}

pub fn check_record(record: &IdentityRecord, s: u32, enable_even_zeta: bool) -> Result<SymbolicCheck> {
    record.check_domain(s)?;
    let mut forms = Vec::with_capacity(record.forms.len());
    for form in &record.forms {
        let rules = RuleSet::standard(enable_even_zeta || form.needs_even_zeta);
        let residual = reduce_with(&form.difference(s), rules)?.reduced;
        forms.push(FormResidual { label: form.label, residual });
    }
    Ok(SymbolicCheck { holds: forms.iter().all(|f| f.residual.is_zero()), forms })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormClassification {
    pub label: &'static str,
    /// ζ(target) occurs on either side as written.
    pub mentions_zeta: bool,
    pub zeta_coefficient: BigRational,
    pub tautological: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfRecursion {
    pub tautological: bool,
    pub zeta_coefficient: BigRational,
    pub forms: Vec<FormClassification>,
}

/// Decide whether the family at `s` can be solved for its ζ value.
///
/// For each form, lhs - rhs is reduced with the ζ-free rules only (β at odd
/// arguments and cotangent derivatives), so polygamma values stay as opaque
/// ingredients and the explicit ζ terms are left where they are. A form is
/// tautological when it mentions ζ, the net ζ coefficient is zero, and the
/// full reduction leaves nothing: the equation then says nothing about ζ.
/// A family is tautological when any of its forms is.
pub fn classify_self_recursive(id: &str, s: u32) -> Result<SelfRecursion> {
    classify_record(find_identity(id)?, s)
}

pub fn classify_record(record: &IdentityRecord, s: u32) -> Result<SelfRecursion> {
    let check = check_record(record, s, false)?;
    let target = Atom::ZetaAt(record.zeta_argument(s));
    let mut forms = Vec::with_capacity(record.forms.len());
    for (form, full) in record.forms.iter().zip(&check.forms) {
        let (lhs, rhs) = (form.lhs(s), form.rhs(s));
        let mentions_zeta = lhs.contains(&target) || rhs.contains(&target);
        let partial = reduce_with(&(lhs - rhs), RuleSet::zeta_free())?.reduced;
        let zeta_coefficient = partial.coefficient(&target);
        let tautological = mentions_zeta && zeta_coefficient.is_zero() && full.residual.is_zero();
        forms.push(FormClassification { label: form.label, mentions_zeta, zeta_coefficient, tautological });
    }
    let tautological = forms.iter().any(|f| f.tautological);
    let zeta_coefficient = if tautological {
        BigRational::zero()
    } else {
        forms.iter().find(|f| f.mentions_zeta).map(|f| f.zeta_coefficient.clone()).unwrap_or_else(BigRational::zero)
    };
    Ok(SelfRecursion { tautological, zeta_coefficient, forms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::symbolic::{identity_catalog, rat};

    #[test]
    fn examples() {
        let c = check_identity_symbolic("I6", 1, false).unwrap();
        assert!(c.holds);
        assert!(c.residual().is_zero());
        assert_eq!(c.render_residual(), "0");
        assert!(check_identity_symbolic("I4", 1, false).unwrap().holds);
        assert!(check_identity_symbolic("I5", 2, false).unwrap().holds);
    }

    #[test]
    fn every_family_holds() {
        for record in identity_catalog() {
            let (lo, hi) = record.param_domain.clamp(1, 20).unwrap();
            for s in lo..=hi {
                let c = check_record(record, s, false).unwrap();
                assert!(c.holds, "{} at s = {s}: {}", record.id, c.render_residual());
                assert!(check_record(record, s, true).unwrap().holds);
            }
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify_self_recursive("I5", 1).unwrap();
        assert!(c.tautological);
        assert_eq!(c.zeta_coefficient, rat(0, 1));
        let c = classify_self_recursive("I6", 1).unwrap();
        assert!(!c.tautological);
        assert!(c.forms.iter().all(|f| !f.mentions_zeta));
        let c = classify_self_recursive("I10", 1).unwrap();
        assert!(!c.tautological);
        assert_eq!(c.zeta_coefficient, rat(7, 8));
        assert!(classify_self_recursive("I7", 3).unwrap().tautological);
        assert!(!classify_self_recursive("I8", 2).unwrap().tautological);
        assert!(!classify_self_recursive("I9", 2).unwrap().tautological);
    }

    #[test]
    fn falsified_record_fails() {
        let record = crate::symbolic::find_identity("I16").unwrap().falsified();
        let c = check_record(&record, 2, false).unwrap();
        assert!(!c.holds);
        assert_eq!(c.residual(), LinExpr::constant(rat(-1, 1000)));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(check_identity_symbolic("I4", 6, false), Err(Error::OutsideDomain { .. })));
        assert!(matches!(check_identity_symbolic("I1", 1, false), Err(Error::OutsideDomain { .. })));
        assert!(matches!(classify_self_recursive("nope", 1), Err(Error::UnknownIdentity(_))));
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use oddzeta::exact::{factorial, pow2};
use oddzeta::numerics::{eval_expr, PrecisionContext};
use oddzeta::symbolic::{
    check_identity_symbolic, classify_self_recursive, identity_catalog, rat, reduce, Atom, LinExpr, Site,
};
use proptest::prelude::*;

#[test]
fn every_family_holds_over_its_domain() {
    for record in identity_catalog() {
        let (lo, hi) = record.param_domain.clamp(1, 20).expect("domain meets 1..20");
        for s in lo..=hi {
            let check = check_identity_symbolic(record.id, s, false).unwrap();
            assert!(check.holds, "{} at s = {s}: {}", record.id, check.render_residual());
        }
    }
}

#[test]
fn self_recursion_classification() {
    for s in 1..=10 {
        assert!(classify_self_recursive("I5", s).unwrap().tautological, "I5 s = {s}");
        assert!(classify_self_recursive("I7", s).unwrap().tautological, "I7 s = {s}");
        for id in ["I6", "I8", "I9", "I10"] {
            let c = classify_self_recursive(id, s).unwrap();
            assert!(!c.tautological, "{id} s = {s}");
            // I6 never mentions ζ; the lattice families keep a live ζ term.
            assert_eq!(c.zeta_coefficient.is_zero(), id == "I6", "{id} s = {s}");
        }
    }
    assert_eq!(classify_self_recursive("I10", 1).unwrap().zeta_coefficient, rat(7, 8));
}

#[test]
fn quarter_sites_sum_to_zeta() {
    for s in 1..=20u32 {
        let n = 2 * s;
        let e =
            LinExpr::atom(Atom::PolyGammaQ(n, Site::Quarter)) + LinExpr::atom(Atom::PolyGammaQ(n, Site::ThreeQuarter));
        let k = pow2(2 * s + 1) * (pow2(2 * s + 1) - 1) * BigInt::from(factorial(n as usize));
        let expected = LinExpr::term(Atom::ZetaAt(2 * s + 1), -BigRational::from_integer(k));
        assert_eq!(reduce(&e, false).unwrap().reduced, expected, "s = {s}");
    }
}

#[test]
fn reduction_preserves_numeric_value() {
    let ctx = PrecisionContext::new(40).unwrap();
    for record in identity_catalog() {
        let (lo, hi) = record.param_domain.clamp(1, 10).unwrap();
        for s in lo..=hi {
            for form in &record.forms {
                for side in [form.lhs(s), form.rhs(s), form.difference(s)] {
                    let reduced = reduce(&side, true).unwrap().reduced;
                    let a = eval_expr(&side, &ctx).unwrap();
                    let b = eval_expr(&reduced, &ctx).unwrap();
                    assert!(
                        (&a - &b).certainly_below_pow10(-35),
                        "{} s = {s} form {}: {side} vs {reduced}",
                        record.id,
                        form.label
                    );
                }
            }
        }
    }
}

#[test]
fn falsified_records_fail() {
    for record in identity_catalog() {
        let bad = record.falsified();
        let s = record.param_domain.min;
        let check = oddzeta::symbolic::check_record(&bad, s, false).unwrap();
        assert!(!check.holds, "{}", record.id);
    }
}

fn catalog_side() -> impl Strategy<Value = LinExpr> {
    let n = identity_catalog().len();
    (0..n, 1u32..=20, any::<bool>(), 0usize..4).prop_map(|(i, s, lhs, f)| {
        let r = &identity_catalog()[i];
        let s = r.param_domain.clamp(s, s).map_or(r.param_domain.min, |(a, _)| a);
        let form = &r.forms[f % r.forms.len()];
        if lhs {
            form.lhs(s)
        } else {
            form.rhs(s)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_is_idempotent_on_catalog(e in catalog_side(), even in any::<bool>()) {
        let once = reduce(&e, even).unwrap().reduced;
        prop_assert_eq!(reduce(&once, even).unwrap().reduced, once);
    }

    #[test]
    fn reduction_is_linear_on_catalog(a in catalog_side(), b in catalog_side(), p in -7i64..7, q in 1i64..7) {
        let (x, y) = (rat(p, 1), rat(1, q));
        let lhs = reduce(&(a.scaled(&x) + b.scaled(&y)), false).unwrap().reduced;
        let rhs = reduce(&a, false).unwrap().reduced.scaled(&x) + reduce(&b, false).unwrap().reduced.scaled(&y);
        prop_assert_eq!(lhs, rhs);
    }
}

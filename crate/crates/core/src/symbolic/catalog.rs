//! The seventeen identity families, each as one or more equations between
//! linear expressions in the parameter s.
//!
//! Factors of i are resolved while an expression is built: every product of
//! Euler numbers with powers of i that occurs below is real, and
//! [`real_i_power`] turns it into a rational sign. Lattice sums over 4k±1 are
//! written through the Hurwitz bridge S(m, p/4) = 4^-m ζ(m, p/4) and
//! ζ(m, a) = (-1)^m ψ^(m-1)(a) / (m-1)!.

use std::fmt;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{rat, Atom, LinExpr, Site};
use crate::error::{Error, Result};
use crate::exact::{euler_number, factorial, pow2, PRINTED_BOLD, PRINTED_EXPANDED};

type Builder = Arc<dyn Fn(u32) -> LinExpr + Send + Sync>;

/// Valid values of s for a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamDomain {
    pub min: u32,
    pub max: Option<u32>,
}

impl ParamDomain {
    pub fn contains(&self, s: u32) -> bool {
        s >= self.min && self.max.is_none_or(|m| s <= m)
    }

    /// Intersection with the inclusive range `lo..=hi`, if non-empty.
    pub fn clamp(&self, lo: u32, hi: u32) -> Option<(u32, u32)> {
        let lo = lo.max(self.min);
        let hi = self.max.map_or(hi, |m| hi.min(m));
        (lo <= hi).then_some((lo, hi))
    }
}

impl fmt::Display for ParamDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            None => write!(f, "s ≥ {}", self.min),
            Some(max) => write!(f, "{} ≤ s ≤ {}", self.min, max),
        }
    }
}

/// One equation `lhs(s) = rhs(s)` of a family.
#[derive(Clone)]
pub struct IdentityForm {
    pub label: &'static str,
    /// The equation equates ζ(2s) with a pure power of π, which only the
    /// Bernoulli closure can decide; checks always enable it for this form.
    pub needs_even_zeta: bool,
    lhs: Builder,
    rhs: Builder,
}

impl IdentityForm {
    fn new(
        label: &'static str,
        lhs: impl Fn(u32) -> LinExpr + Send + Sync + 'static,
        rhs: impl Fn(u32) -> LinExpr + Send + Sync + 'static,
    ) -> Self {
        IdentityForm { label, needs_even_zeta: false, lhs: Arc::new(lhs), rhs: Arc::new(rhs) }
    }

    fn with_even_zeta(mut self) -> Self {
        self.needs_even_zeta = true;
        self
    }

    pub fn lhs(&self, s: u32) -> LinExpr {
        (self.lhs)(s)
    }

    pub fn rhs(&self, s: u32) -> LinExpr {
        (self.rhs)(s)
    }

    /// lhs - rhs, unreduced.
    pub fn difference(&self, s: u32) -> LinExpr {
        self.lhs(s) - self.rhs(s)
    }
}

impl fmt::Debug for IdentityForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityForm")
            .field("label", &self.label)
            .field("needs_even_zeta", &self.needs_even_zeta)
            .finish_non_exhaustive()
    }
}

/// A catalog entry.
#[derive(Debug, Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub param_domain: ParamDomain,
    /// The displayed equation in plain notation.
    pub anchor: &'static str,
    pub notes: &'static str,
    pub forms: Vec<IdentityForm>,
    zeta_argument: fn(u32) -> u32,
}

impl IdentityRecord {
    /// The ζ argument the family is about: 2s+1 for the odd families.
    pub fn zeta_argument(&self, s: u32) -> u32 {
        (self.zeta_argument)(s)
    }

    pub fn check_domain(&self, s: u32) -> Result<()> {
        if self.param_domain.contains(s) {
            Ok(())
        } else {
            Err(Error::OutsideDomain { id: self.id.to_string(), s, domain: self.param_domain.to_string() })
        }
    }

    /// Copy of this record with every right-hand side shifted by 1/1000.
    /// Used to confirm that the verification pipeline rejects a wrong identity.
    pub fn falsified(&self) -> IdentityRecord {
        let mut out = self.clone();
        for form in &mut out.forms {
            let rhs = form.rhs.clone();
            form.rhs = Arc::new(move |s| rhs(s) + LinExpr::constant(rat(1, 1000)));
        }
        out
    }
}

/// Serializable description of a catalog entry, without the builders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityDescriptor {
    pub id: String,
    pub title: String,
    pub param_domain: ParamDomain,
    pub anchor: String,
    pub notes: String,
    pub forms: Vec<String>,
    /// Rendered lhs and rhs of each form at the smallest valid s.
    pub example: Vec<(String, String)>,
}

impl IdentityRecord {
    pub fn descriptor(&self) -> IdentityDescriptor {
        let s = self.param_domain.min;
        IdentityDescriptor {
            id: self.id.to_string(),
            title: self.title.to_string(),
            param_domain: self.param_domain,
            anchor: self.anchor.to_string(),
            notes: self.notes.to_string(),
            forms: self.forms.iter().map(|f| f.label.to_string()).collect(),
            example: self.forms.iter().map(|f| (f.lhs(s).to_string(), f.rhs(s).to_string())).collect(),
        }
    }
}

/// The whole catalog as a pretty-printed JSON array.
pub fn catalog_json() -> String {
    let all: Vec<IdentityDescriptor> = identity_catalog().iter().map(IdentityRecord::descriptor).collect();
    serde_json::to_string_pretty(&all).expect("catalog serializes")
}

static CATALOG: LazyLock<Vec<IdentityRecord>> = LazyLock::new(build_catalog);

/// All identity families, ordered I1..I17.
pub fn identity_catalog() -> &'static [IdentityRecord] {
    &CATALOG
}

pub fn find_identity(id: &str) -> Result<&'static IdentityRecord> {
    identity_catalog()
        .iter()
        .find(|r| r.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Real value of i^k; panics on an odd power, which would signal a
/// mis-canonicalized expression.
fn real_i_power(k: i64) -> i64 {
    match k.rem_euclid(4) {
        0 => 1,
        2 => -1,
        _ => panic!("i^{k} is imaginary"),
    }
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn fact(n: u32) -> BigInt {
    BigInt::from(factorial(n as usize))
}

fn atom(a: Atom) -> LinExpr {
    LinExpr::atom(a)
}

/// Hurwitz value ζ(m, p/4) through the polygamma atom of order m-1.
fn hurwitz(m: u32, site: Site) -> LinExpr {
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    LinExpr::term(Atom::PolyGammaQ(m - 1, site), BigRational::new(sign.into(), fact(m - 1)))
}

/// Σ_{k≥0} (4k+1)^-m
fn lattice_plus(m: u32) -> LinExpr {
    hurwitz(m, Site::Quarter).scaled(&rat(1, pow2(2 * m)))
}

/// Σ_{k≥1} (4k-1)^-m
fn lattice_minus(m: u32) -> LinExpr {
    hurwitz(m, Site::ThreeQuarter).scaled(&rat(1, pow2(2 * m)))
}

/// Quantities shared by the odd-argument families at a fixed s.
struct Odd {
    s: u32,
    /// 2s+1
    m: u32,
    /// 2^(2s+1)
    a: BigInt,
    /// (2s)!
    gamma: BigInt,
    /// signed E_2s
    euler: BigInt,
}

impl Odd {
    fn new(s: u32) -> Self {
        Odd { s, m: 2 * s + 1, a: pow2(2 * s + 1), gamma: fact(2 * s), euler: euler_number(2 * s as usize) }
    }

    fn zeta(&self) -> LinExpr {
        atom(Atom::ZetaAt(self.m))
    }

    fn beta(&self) -> LinExpr {
        atom(Atom::BetaAt(self.m))
    }

    fn euler_abs(&self) -> BigInt {
        num_traits::Signed::abs(&self.euler)
    }

    /// A / (A - 1)
    fn ratio(&self) -> BigRational {
        BigRational::new(self.a.clone(), &self.a - 1)
    }

    /// (A - 1) / A
    fn inv_ratio(&self) -> BigRational {
        BigRational::new(&self.a - 1, self.a.clone())
    }

    /// c · E_2s · π^(2s+1) · i^k with the i-power resolved to ±1.
    fn euler_pi(&self, c: BigRational, i_power: i64) -> LinExpr {
        LinExpr::term(Atom::PiPow(self.m), c * int(self.euler.clone()) * int(real_i_power(i_power)))
    }

    /// E_2s (πi)^(2s+1) / (2 (A-1) (2s)!) · i
    fn bracket(&self) -> LinExpr {
        let c = BigRational::new(BigInt::one(), BigInt::from(2) * (&self.a - 1) * &self.gamma);
        self.euler_pi(c, self.m as i64 + 1)
    }

    /// [E_2s (πi)^(2s+1) / (2 (A-1) (2s)!) - ζ(2s+1) i] · i
    fn bracket_minus_zeta_i(&self) -> LinExpr {
        self.bracket() - self.zeta().scaled(&int(real_i_power(2)))
    }

    /// ψ^(2s)(site)
    fn psi(&self, site: Site) -> LinExpr {
        atom(Atom::PolyGammaQ(2 * self.s, site))
    }

    fn cot(&self) -> LinExpr {
        atom(Atom::CotDerivQ(2 * self.s))
    }

    /// (-1)^(2s+1) evaluated.
    fn odd_sign(&self) -> BigRational {
        int(if self.m.is_multiple_of(2) { 1 } else { -1 })
    }
}

fn odd_argument(s: u32) -> u32 {
    2 * s + 1
}

fn same_argument(s: u32) -> u32 {
    s
}

fn even_argument(s: u32) -> u32 {
    2 * s
}

fn unbounded(min: u32) -> ParamDomain {
    ParamDomain { min, max: None }
}

fn build_catalog() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord {
            id: "I1",
            title: "beta as zeta minus the (4k-1) lattice sum",
            param_domain: unbounded(2),
            anchor: "beta(s) = (2^s-1)/2^s zeta(s) - 2 sum_{k>=1} 1/(4k-1)^s = (2^s-1)/2^s zeta(s) - 2/(2^s 2^s) sum_{k>=0} 1/(k+3/4)^s",
            notes: "s = 1 is excluded because zeta(1) diverges; the conditionally convergent rearrangement behind the split is not checked.",
            forms: vec![
                IdentityForm::new(
                    "lattice",
                    |s| atom(Atom::BetaAt(s)),
                    |s| {
                        atom(Atom::ZetaAt(s)).scaled(&rat(pow2(s) - 1, pow2(s)))
                            - lattice_minus(s).scaled(&int(2))
                    },
                ),
                IdentityForm::new(
                    "hurwitz",
                    |s| atom(Atom::BetaAt(s)),
                    |s| {
                        atom(Atom::ZetaAt(s)).scaled(&rat(pow2(s) - 1, pow2(s)))
                            - hurwitz(s, Site::ThreeQuarter).scaled(&rat(2, pow2(2 * s)))
                    },
                ),
            ],
            zeta_argument: same_argument,
        },
        IdentityRecord {
            id: "I2",
            title: "zeta(s) through beta(s) and psi^(s-1)(3/4)",
            param_domain: unbounded(2),
            anchor: "zeta(s) = 2^s/(2^s-1) beta(s) + (-1)^s 2/(2^s (2^s-1)) psi^(s-1)(3/4) / Gamma(s)",
            notes: "Integer s only; non-integer s would need fractional-order polygamma.",
            forms: vec![IdentityForm::new(
                "general",
                |s| atom(Atom::ZetaAt(s)),
                |s| {
                    let sign = if s % 2 == 0 { 1 } else { -1 };
                    let two_s = pow2(s);
                    atom(Atom::BetaAt(s)).scaled(&rat(two_s.clone(), &two_s - 1))
                        + atom(Atom::PolyGammaQ(s - 1, Site::ThreeQuarter))
                            .scaled(&rat(BigInt::from(2 * sign), &two_s * (&two_s - 1) * fact(s - 1)))
                },
            )],
            zeta_argument: same_argument,
        },
        IdentityRecord {
            id: "I3",
            title: "zeta(2s+1) through beta(2s+1) and psi^(2s)(3/4)",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) = A/(A-1) beta(2s+1) - 2/(A (A-1)) psi^(2s)(3/4) / Gamma(2s+1), A = 2^(2s+1)",
            notes: "",
            forms: vec![IdentityForm::new(
                "odd",
                |s| Odd::new(s).zeta(),
                |s| {
                    let o = Odd::new(s);
                    o.beta().scaled(&o.ratio())
                        - o.psi(Site::ThreeQuarter)
                            .scaled(&rat(2, &o.a * (&o.a - 1) * &o.gamma))
                },
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I4",
            title: "printed closed forms for zeta(3) .. zeta(11)",
            param_domain: ParamDomain { min: 1, max: Some(5) },
            anchor: "psi^(2s)(3/4) = 2^(2s-1) (a pi^(2s+1) - b zeta(2s+1)) with (a, b) = (1, 28), (5, 1488), (61, 182880), (1385, 41207040), (50521, 14856307200)",
            notes: "Built from the printed integer literals, not from the generators. The s = 3 intermediate line prints beta(5) where beta(7) is meant; beta(7) is used.",
            forms: vec![
                IdentityForm::new(
                    "polygamma",
                    |s| Odd::new(s).psi(Site::ThreeQuarter),
                    |s| printed_bracket(s, PRINTED_BOLD[s as usize - 1]).scaled(&int(pow2(2 * s - 1))),
                ),
                IdentityForm::new(
                    "bold",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        let inner = printed_bracket(s, PRINTED_BOLD[s as usize - 1]).scaled(&int(pow2(2 * s - 1)));
                        o.beta().scaled(&o.ratio()) - inner.scaled(&rat(2, &o.a * (&o.a - 1) * &o.gamma))
                    },
                ),
                IdentityForm::new(
                    "expanded",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        let inner = printed_bracket(s, PRINTED_EXPANDED[s as usize - 1]);
                        o.beta().scaled(&o.ratio()) - inner.scaled(&rat(2, &o.a * (&o.a - 1) * &o.gamma))
                    },
                ),
            ],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I5",
            title: "general closed form with |E_2s|",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) = A/(A-1) beta(2s+1) - 2 (2^(2s-1) |E_2s| pi^(2s+1) - 2^(2s-1) 2 (A-1) Gamma(2s+1) zeta(2s+1)) / (A (A-1) Gamma(2s+1))",
            notes: "zeta(2s+1) occurs on both sides and cancels exactly.",
            forms: vec![IdentityForm::new(
                "general",
                |s| Odd::new(s).zeta(),
                |s| {
                    let o = Odd::new(s);
                    let scale = int(pow2(2 * s - 1));
                    let inner = LinExpr::term(Atom::PiPow(o.m), &scale * int(o.euler_abs()))
                        - o.zeta().scaled(&(&scale * int(BigInt::from(2) * (&o.a - 1) * &o.gamma)));
                    o.beta().scaled(&o.ratio()) - inner.scaled(&rat(2, &o.a * (&o.a - 1) * &o.gamma))
                },
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I6",
            title: "beta(2s+1) in closed form",
            param_domain: unbounded(1),
            anchor: "2^(2s+1) 2^(2s+1) Gamma(2s+1) beta(2s+1) = 2^(2s) |E_2s| pi^(2s+1)",
            notes: "",
            forms: vec![IdentityForm::new(
                "closed",
                |s| {
                    let o = Odd::new(s);
                    o.beta().scaled(&int(&o.a * &o.a * &o.gamma))
                },
                |s| {
                    let o = Odd::new(s);
                    LinExpr::term(Atom::PiPow(o.m), int(pow2(2 * s) * o.euler_abs()))
                },
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I7",
            title: "rearrangements of the closed form with E_2s and powers of i",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) = A/(A-1) beta(2s+1) + [E_2s (pi i)^(2s+1) / (2 (A-1) Gamma(2s+1)) - zeta(2s+1) i] i, and the forms scaled by (A-1)/A",
            notes: "Every form is self-recursive: the zeta(2s+1) terms cancel.",
            forms: vec![
                IdentityForm::new(
                    "over-i",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        let scale = int(pow2(2 * s - 1));
                        // (E_2s / i) (πi)^(2s+1) = E_2s π^(2s+1) i^(2s)
                        let inner = o.euler_pi(scale.clone(), 2 * s as i64)
                            - o.zeta().scaled(&(&scale * int(BigInt::from(2) * (&o.a - 1) * &o.gamma)));
                        o.beta().scaled(&o.ratio()) - inner.scaled(&rat(2, &o.a * (&o.a - 1) * &o.gamma))
                    },
                ),
                IdentityForm::new(
                    "times-2i",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        let scale = int(pow2(2 * s - 1));
                        // (2^(2s-1) E (πi)^(2s+1) - 2^(2s-1) 2 (A-1) Γ ζ i) · 2i
                        let inner = o.euler_pi(&scale * int(2), o.m as i64 + 1)
                            - o.zeta().scaled(&(&scale * int(BigInt::from(4) * (&o.a - 1) * &o.gamma) * int(real_i_power(2))));
                        o.beta().scaled(&o.ratio()) + inner.scaled(&rat(1, &o.a * (&o.a - 1) * &o.gamma))
                    },
                ),
                IdentityForm::new(
                    "bracket",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        o.beta().scaled(&o.ratio()) + o.bracket_minus_zeta_i()
                    },
                ),
                IdentityForm::new(
                    "scaled-bracket",
                    |s| {
                        let o = Odd::new(s);
                        o.zeta().scaled(&o.inv_ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        o.beta() + o.bracket_minus_zeta_i().scaled(&o.inv_ratio())
                    },
                ),
                IdentityForm::new(
                    "scaled-sum",
                    |s| {
                        let o = Odd::new(s);
                        o.zeta().scaled(&o.inv_ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        o.beta() + (o.zeta() + o.bracket()).scaled(&o.inv_ratio())
                    },
                ),
            ],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I8",
            title: "zeta plus Euler bracket against the (4k-1) lattice sum",
            param_domain: unbounded(1),
            anchor: "(A-1)/A [zeta(2s+1) + E_2s (pi i)^(2s+1) i / (2 (A-1) Gamma(2s+1))] = 2 sum_{k>=1} 1/(4k-1)^(2s+1)",
            notes: "",
            forms: vec![IdentityForm::new(
                "minus-lattice",
                |s| {
                    let o = Odd::new(s);
                    (o.zeta() + o.bracket()).scaled(&o.inv_ratio())
                },
                |s| lattice_minus(2 * s + 1).scaled(&int(2)),
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I9",
            title: "zeta minus Euler bracket against the (4k+1) lattice sum",
            param_domain: unbounded(1),
            anchor: "(A-1)/A [zeta(2s+1) - E_2s (pi i)^(2s+1) i / (2 (A-1) Gamma(2s+1))] = 2 sum_{k>=0} 1/(4k+1)^(2s+1)",
            notes: "",
            forms: vec![IdentityForm::new(
                "plus-lattice",
                |s| {
                    let o = Odd::new(s);
                    (o.zeta() - o.bracket()).scaled(&o.inv_ratio())
                },
                |s| lattice_plus(2 * s + 1).scaled(&int(2)),
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I10",
            title: "odd zeta as the sum of both lattice halves",
            param_domain: unbounded(1),
            anchor: "(A-1)/A zeta(2s+1) = sum_{k>=0} 1/(4k+1)^(2s+1) + sum_{k>=1} 1/(4k-1)^(2s+1)",
            notes: "",
            forms: vec![IdentityForm::new(
                "split",
                |s| {
                    let o = Odd::new(s);
                    o.zeta().scaled(&o.inv_ratio())
                },
                |s| lattice_plus(2 * s + 1) + lattice_minus(2 * s + 1),
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I11",
            title: "beta as Euler bracket and as lattice difference",
            param_domain: unbounded(1),
            anchor: "beta(2s+1) = -(A-1)/A [E_2s (pi i)^(2s+1) i / (2 (A-1) Gamma(2s+1))] = sum 1/(4k+1)^(2s+1) - sum 1/(4k-1)^(2s+1), and the same scaled by A/(A-1)",
            notes: "",
            forms: vec![
                IdentityForm::new(
                    "bracket",
                    |s| Odd::new(s).beta(),
                    |s| {
                        let o = Odd::new(s);
                        -o.bracket().scaled(&o.inv_ratio())
                    },
                ),
                IdentityForm::new(
                    "lattice",
                    |s| Odd::new(s).beta(),
                    |s| lattice_plus(2 * s + 1) - lattice_minus(2 * s + 1),
                ),
                IdentityForm::new(
                    "scaled-bracket",
                    |s| {
                        let o = Odd::new(s);
                        o.beta().scaled(&o.ratio())
                    },
                    |s| -Odd::new(s).bracket(),
                ),
                IdentityForm::new(
                    "scaled-lattice",
                    |s| {
                        let o = Odd::new(s);
                        o.beta().scaled(&o.ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        (lattice_plus(o.m) - lattice_minus(o.m)).scaled(&o.ratio())
                    },
                ),
            ],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I12",
            title: "odd zeta from the lattice halves",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) = A/(A-1) (sum 1/(4k+1)^(2s+1) + sum 1/(4k-1)^(2s+1))",
            notes: "",
            forms: vec![IdentityForm::new(
                "lattice",
                |s| Odd::new(s).zeta(),
                |s| {
                    let o = Odd::new(s);
                    (lattice_plus(o.m) + lattice_minus(o.m)).scaled(&o.ratio())
                },
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I13",
            title: "zeta plus/minus scaled beta as single lattice halves",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) +- A/(A-1) beta(2s+1) = A/(A-1) sum 2/(4k+-1)^(2s+1)",
            notes: "",
            forms: vec![
                IdentityForm::new(
                    "sum",
                    |s| {
                        let o = Odd::new(s);
                        o.zeta() + o.beta().scaled(&o.ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        lattice_plus(o.m).scaled(&(o.ratio() * int(2)))
                    },
                ),
                IdentityForm::new(
                    "difference",
                    |s| {
                        let o = Odd::new(s);
                        o.zeta() - o.beta().scaled(&o.ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        lattice_minus(o.m).scaled(&(o.ratio() * int(2)))
                    },
                ),
            ],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I14",
            title: "even zeta from the quarter-site polygamma sum and the cotangent derivative",
            param_domain: unbounded(1),
            anchor: "zeta(2s) = (-1)^(2s) (psi^(2s-1)(1/4) + psi^(2s-1)(3/4)) / (2^(2s) (2^(2s)-1) Gamma(2s)) = pi d^(2s-1)/dz^(2s-1) cot(pi z)|_(z=1/4) / (2^(2s) (2^(2s)-1) Gamma(2s))",
            notes: "The cotangent form holds with an overall minus sign: d/dz cot(pi z) at 1/4 is -2 pi, so the printed right-hand side equals -zeta(2s). It is checked with the sign corrected.",
            forms: vec![
                IdentityForm::new(
                    "polygamma-sum",
                    |s| atom(Atom::ZetaAt(2 * s)),
                    |s| {
                        let psi_sum = atom(Atom::PolyGammaQ(2 * s - 1, Site::Quarter))
                            + atom(Atom::PolyGammaQ(2 * s - 1, Site::ThreeQuarter));
                        psi_sum.scaled(&rat(1, pow2(2 * s) * (pow2(2 * s) - 1) * fact(2 * s - 1)))
                    },
                ),
                IdentityForm::new(
                    "cotangent",
                    |s| atom(Atom::ZetaAt(2 * s)),
                    |s| {
                        atom(Atom::CotDerivQ(2 * s - 1))
                            .scaled(&rat(-1, pow2(2 * s) * (pow2(2 * s) - 1) * fact(2 * s - 1)))
                    },
                )
                .with_even_zeta(),
            ],
            zeta_argument: even_argument,
        },
        IdentityRecord {
            id: "I15",
            title: "beta(2s+1) and E_2s from the polygamma difference and the cotangent derivative",
            param_domain: unbounded(1),
            anchor: "A/(A-1) beta(2s+1) = (-1)^(2s+1) (psi^(2s)(1/4) - psi^(2s)(3/4)) / (A (A-1) Gamma(2s+1)) = pi d^(2s)/dz^(2s) cot(pi z)|_(z=1/4) / (A (A-1) Gamma(2s+1)); likewise for beta(2s+1) with A A and for E_2s with 2i / (2 pi i)^(2s+1)",
            notes: "The E_2s equations are multiplied through by pi^(2s+1) so that both sides stay linear in the atoms.",
            forms: vec![
                IdentityForm::new(
                    "scaled-beta-polygamma",
                    |s| {
                        let o = Odd::new(s);
                        o.beta().scaled(&o.ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        (o.psi(Site::Quarter) - o.psi(Site::ThreeQuarter))
                            .scaled(&(o.odd_sign() / int(&o.a * (&o.a - 1) * &o.gamma)))
                    },
                ),
                IdentityForm::new(
                    "scaled-beta-cot",
                    |s| {
                        let o = Odd::new(s);
                        o.beta().scaled(&o.ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        o.cot().scaled(&rat(1, &o.a * (&o.a - 1) * &o.gamma))
                    },
                ),
                IdentityForm::new(
                    "beta-polygamma",
                    |s| Odd::new(s).beta(),
                    |s| {
                        let o = Odd::new(s);
                        (o.psi(Site::Quarter) - o.psi(Site::ThreeQuarter))
                            .scaled(&(o.odd_sign() / int(&o.a * &o.a * &o.gamma)))
                    },
                ),
                IdentityForm::new(
                    "beta-cot",
                    |s| Odd::new(s).beta(),
                    |s| {
                        let o = Odd::new(s);
                        o.cot().scaled(&rat(1, &o.a * &o.a * &o.gamma))
                    },
                ),
                IdentityForm::new(
                    "euler-polygamma",
                    |s| {
                        let o = Odd::new(s);
                        LinExpr::term(Atom::PiPow(o.m), int(o.euler.clone()))
                    },
                    |s| {
                        // π^(2s+1) · 2i / (2πi)^(2s+1) = 2 i^(-2s) / 2^(2s+1)
                        let o = Odd::new(s);
                        let factor = o.odd_sign() * int(2 * real_i_power(-2 * s as i64)) / int(o.a.clone());
                        (o.psi(Site::Quarter) - o.psi(Site::ThreeQuarter)).scaled(&factor)
                    },
                ),
                IdentityForm::new(
                    "euler-cot",
                    |s| {
                        let o = Odd::new(s);
                        LinExpr::term(Atom::PiPow(o.m), int(o.euler.clone()))
                    },
                    |s| {
                        let o = Odd::new(s);
                        let factor = int(2 * real_i_power(-2 * s as i64)) / int(o.a.clone());
                        o.cot().scaled(&factor)
                    },
                ),
            ],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I16",
            title: "odd zeta from the quarter-site polygamma sum",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) = (-1)^(2s+1) (psi^(2s)(1/4) + psi^(2s)(3/4)) / (A (A-1) Gamma(2s+1))",
            notes: "",
            forms: vec![IdentityForm::new(
                "polygamma-sum",
                |s| Odd::new(s).zeta(),
                |s| {
                    let o = Odd::new(s);
                    (o.psi(Site::Quarter) + o.psi(Site::ThreeQuarter))
                        .scaled(&(o.odd_sign() / int(&o.a * (&o.a - 1) * &o.gamma)))
                },
            )],
            zeta_argument: odd_argument,
        },
        IdentityRecord {
            id: "I17",
            title: "concluding series forms and the final relation",
            param_domain: unbounded(1),
            anchor: "zeta(2s+1) = A/(A-1) sum 2/(4k+-1)^(2s+1) -+ [E_2s (pi i)^(2s+1) i / (2 (A-1) Gamma(2s+1))], with the relation (A-1)/A zeta(2s+1) = beta(2s+1) + (A-1)/A [zeta(2s+1) + E_2s (pi i)^(2s+1) i / (2 (A-1) Gamma(2s+1))]",
            notes: "The two series forms hold with the sign of the Euler bracket opposite to the printed pairing (equivalently, with the two lattice sums exchanged). The final relation's lattice sum is printed with exponent s; it is checked with exponent 2s+1, the exponent of every neighbouring relation.",
            forms: vec![
                IdentityForm::new(
                    "plus-series",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        lattice_plus(o.m).scaled(&(o.ratio() * int(2))) + o.bracket()
                    },
                ),
                IdentityForm::new(
                    "minus-series",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        lattice_minus(o.m).scaled(&(o.ratio() * int(2))) - o.bracket()
                    },
                ),
                IdentityForm::new(
                    "relation",
                    |s| {
                        let o = Odd::new(s);
                        o.zeta().scaled(&o.inv_ratio())
                    },
                    |s| {
                        let o = Odd::new(s);
                        o.beta() + (o.zeta() + o.bracket()).scaled(&o.inv_ratio())
                    },
                ),
                IdentityForm::new(
                    "beta",
                    |s| Odd::new(s).beta(),
                    |s| {
                        let o = Odd::new(s);
                        -o.bracket().scaled(&o.inv_ratio())
                    },
                ),
                IdentityForm::new(
                    "closed-form",
                    |s| Odd::new(s).zeta(),
                    |s| {
                        let o = Odd::new(s);
                        o.beta().scaled(&o.ratio()) + o.bracket_minus_zeta_i()
                    },
                ),
                IdentityForm::new(
                    "final",
                    |s| {
                        let o = Odd::new(s);
                        lattice_minus(o.m).scaled(&(o.ratio() * int(2)))
                    },
                    |s| Odd::new(s).bracket_minus_zeta_i(),
                ),
            ],
            zeta_argument: odd_argument,
        },
    ]
}

/// a π^(2s+1) - b ζ(2s+1) from a printed pair.
fn printed_bracket(s: u32, (a, b): (u64, u64)) -> LinExpr {
    let m = 2 * s + 1;
    let mut e = LinExpr::term(Atom::PiPow(m), int(a));
    e.add_term(Atom::ZetaAt(m), -int(b));
    e
}

use std::fmt;

use serde::{Deserialize, Serialize};

/// Evaluation point of a quarter-site polygamma value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Site {
    /// x = 1/4
    Quarter,
    /// x = 3/4
    ThreeQuarter,
}

impl Site {
    /// Numerator p of the site p/4.
    pub fn numerator(self) -> u32 {
        match self {
            Site::Quarter => 1,
            Site::ThreeQuarter => 3,
        }
    }

    pub fn parse(text: &str) -> Option<Site> {
        match text.trim() {
            "1/4" | "quarter" | "0.25" => Some(Site::Quarter),
            "3/4" | "three-quarter" | "0.75" => Some(Site::ThreeQuarter),
            _ => None,
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Site::Quarter => "1/4",
            Site::ThreeQuarter => "3/4",
        })
    }
}

/// A special value that appears as a basis element of [`LinExpr`](super::LinExpr).
///
/// Equality and ordering are structural; the derived order (by variant, then
/// parameters) is the canonical term order used when rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// The rational unit.
    One,
    /// π^m
    PiPow(u32),
    /// ζ(m), m ≥ 2
    ZetaAt(u32),
    /// β(m), m ≥ 1
    BetaAt(u32),
    /// ψ^(n)(site), n ≥ 1
    PolyGammaQ(u32, Site),
    /// π · d^n/dz^n cot(πz) at z = 1/4
    CotDerivQ(u32),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::One => write!(f, "1"),
            Atom::PiPow(1) => write!(f, "pi"),
            Atom::PiPow(m) => write!(f, "pi^{m}"),
            Atom::ZetaAt(m) => write!(f, "zeta({m})"),
            Atom::BetaAt(m) => write!(f, "beta({m})"),
            Atom::PolyGammaQ(n, site) => write!(f, "psi^({n})({site})"),
            Atom::CotDerivQ(n) => write!(f, "cotd^({n})(1/4)"),
        }
    }
}

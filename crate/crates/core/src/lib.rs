//! Exact and high-precision verification of closed forms for odd zeta values.
//!
//! The crate is split into four layers:
//!
//! * [`exact`]: Euler, Bernoulli and factorial sequences, the cotangent
//!   derivative polynomials, and the integer constants behind the
//!   ζ(2s+1) closed forms.
//! * [`symbolic`]: rational linear combinations of special values, the rewrite
//!   rules that reduce them, the identity catalog and the self-recursion
//!   classifier.
//! * [`numerics`]: fixed-point reals with error bounds, accelerated series for
//!   ζ and β, Euler–Maclaurin Hurwitz sums and quarter-site polygamma values.
//! * [`harness`]: run configuration, verification sweeps and report output
//!   used by the `oddzeta` binary.

pub mod error;
pub mod exact;
pub mod harness;
pub mod numerics;
pub mod par;
pub mod symbolic;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

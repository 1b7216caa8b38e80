//! High-precision evaluation with explicit absolute error bounds.
//!
//! Values are binary fixed-point numbers ([`HPReal`]) carrying an upper bound
//! on their absolute error in units of the last place. Every evaluator
//! targets an absolute error of at most 10^-P for the requested P and raises
//! its working precision until the bound it carries proves that.

mod accel;
mod eval;
mod hpreal;
mod pi;
mod precision;
mod series;

pub use accel::{accelerated_alternating_sum, AlternatingAccelerator};
pub use eval::{eval_atom, eval_expr};
pub use hpreal::HPReal;
pub use pi::hp_pi;
pub use precision::PrecisionContext;
pub use series::{
    beta_value, beta_value_with, euler_term, hurwitz_zeta, hurwitz_zeta_with, lattice_sum_minus, lattice_sum_plus,
    polygamma_quarter, zeta_value, zeta_value_with, EulerTerm, SeriesMethod, SeriesResult,
};

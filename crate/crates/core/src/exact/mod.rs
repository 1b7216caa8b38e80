//! Exact integer and rational machinery.

mod constants;
mod cotpoly;
mod sequences;

pub use constants::{bold_constants, table_row, BoldConstants, TableRow, PRINTED_BOLD, PRINTED_EXPANDED};
pub use cotpoly::{cot_derivative_at_quarter, cot_derivative_poly, CotPoly};
pub use sequences::{bernoulli_number, euler_number, factorial, zigzag_number, SequenceCache};

/// Largest sequence index the exact layer will expand on request.
pub const MAX_INDEX: u32 = 2000;

/// 2^k as a big integer.
pub fn pow2(k: u32) -> num_bigint::BigInt {
    num_bigint::BigInt::from(1u8) << k
}

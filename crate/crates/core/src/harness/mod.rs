//! Verification sweeps, value computation and report emission.
//!
//! This is the library side of the `oddzeta` binary: everything here is
//! deterministic given a [`RunConfig`] except the wall-clock field of the
//! report summary.

mod config;
mod report;
mod tools;
mod verify;

pub use config::{Mode, OutputFormat, RunConfig, SRange};
pub use report::{ReportDocument, ReportRow, Summary, CSV_HEADER};
pub use tools::{compute, euler_lines, table, ComputeOutput, ComputeRequest, Quantity, MAX_EULER, MAX_TABLE_S};
pub use verify::{run_verify, run_verify_with, tolerance_exponent};

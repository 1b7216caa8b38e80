use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::config::RunConfig;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "id,s,mode,abs_diff,tolerance,pass";

/// One (identity, s, mode) check. Numeric fields are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: String,
    pub s: u32,
    pub mode: String,
    pub lhs_value: Option<String>,
    pub rhs_value: Option<String>,
    pub abs_diff: Option<String>,
    pub tolerance: Option<String>,
    pub residual: Option<String>,
    pub tautological: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub version: String,
    pub config: RunConfig,
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(config: RunConfig, rows: Vec<ReportRow>, wall_time_ms: u64) -> Self {
        let passed = rows.iter().filter(|r| r.pass).count();
        let summary = Summary { total: rows.len(), passed, failed: rows.len() - passed, wall_time_ms };
        ReportDocument { version: env!("CARGO_PKG_VERSION").to_string(), config, rows, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Process exit code: 0 when every row passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("bad report: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.id,
                r.s,
                r.mode,
                r.abs_diff.as_deref().unwrap_or(""),
                r.tolerance.as_deref().unwrap_or(""),
                r.pass
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{:<4} s={:<3} {:<8} {verdict}", r.id, r.s, r.mode);
            if let Some(res) = &r.residual {
                let _ = write!(out, "  residual={res}");
            }
            if let (Some(d), Some(t)) = (&r.abs_diff, &r.tolerance) {
                let _ = write!(out, "  |lhs-rhs|<={d}  tol={t}");
            }
            if r.tautological {
                out.push_str("  [tautological]");
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ =
            writeln!(out, "total={} passed={} failed={} wall_time_ms={}", s.total, s.passed, s.failed, s.wall_time_ms);
        out
    }

    pub fn render(&self) -> String {
        use super::config::OutputFormat::*;
        match self.config.output_format {
            Text => self.to_text(),
            Json => self.to_json() + "\n",
            Csv => self.to_csv(),
        }
    }
}

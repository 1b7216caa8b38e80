use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::MAX_INDEX;
use crate::symbolic::{find_identity, identity_catalog, IdentityRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
    #[default]
    Both,
}

impl Mode {
    pub fn symbolic(self) -> bool {
        matches!(self, Mode::Symbolic | Mode::Both)
    }

    pub fn numeric(self) -> bool {
        matches!(self, Mode::Numeric | Mode::Both)
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "numeric" => Ok(Mode::Numeric),
            "both" => Ok(Mode::Both),
            other => Err(Error::Config(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// Inclusive range of the parameter s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRange {
    pub start: u32,
    pub end: u32,
}

impl SRange {
    pub fn new(start: u32, end: u32) -> Result<Self> {
        if start == 0 || start > end {
            return Err(Error::Config(format!("bad s range {start}..{end}")));
        }
        Ok(SRange { start, end })
    }
}

impl fmt::Display for SRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// Accepts `a..b`, `a..=b` (both inclusive) or a single `a`.
impl FromStr for SRange {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot parse s range `{text}`, expected a..b"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        match text.split_once("..") {
            Some((a, b)) => SRange::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let a = num(text)?;
                SRange::new(a, a)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Identity ids, or the single entry `all`.
    pub ids: Vec<String>,
    pub s_range: SRange,
    pub digits: u32,
    pub mode: Mode,
    pub enable_even_zeta: bool,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    /// Perturb this identity so that it fails; used to exercise exit codes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub falsify: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ids: vec!["all".to_string()],
            s_range: SRange { start: 1, end: 10 },
            digits: 100,
            mode: Mode::Both,
            enable_even_zeta: false,
            output_format: OutputFormat::Text,
            output_path: None,
            falsify: None,
        }
    }
}

impl RunConfig {
    fn selects_all(&self) -> bool {
        self.ids.iter().any(|id| id.eq_ignore_ascii_case("all"))
    }

    /// Check the config and resolve it into (record, s_lo, s_hi) work items,
    /// in catalog order with each range intersected with the record's domain.
    pub fn resolve(&self) -> Result<Vec<(&'static IdentityRecord, u32, u32)>> {
        if self.digits < 10 {
            return Err(Error::Config(format!("digits must be at least 10, got {}", self.digits)));
        }
        if self.s_range.start == 0 || self.s_range.start > self.s_range.end {
            return Err(Error::Config(format!("bad s range {}", self.s_range)));
        }
        if 2 * self.s_range.end + 2 >= MAX_INDEX {
            return Err(Error::Config(format!("s range {} is too large", self.s_range)));
        }
        if self.ids.is_empty() {
            return Err(Error::Config("no identity ids given".into()));
        }
        if let Some(id) = &self.falsify {
            find_identity(id)?;
        }
        let (lo, hi) = (self.s_range.start, self.s_range.end);
        if self.selects_all() {
            return Ok(identity_catalog()
                .iter()
                .filter_map(|r| r.param_domain.clamp(lo, hi).map(|(a, b)| (r, a, b)))
                .collect());
        }
        let mut wanted = Vec::new();
        for id in &self.ids {
            let record = find_identity(id)?;
            let (a, b) = record.param_domain.clamp(lo, hi).ok_or_else(|| {
                Error::Config(format!(
                    "{} is defined for {}, which misses s range {}",
                    record.id, record.param_domain, self.s_range
                ))
            })?;
            if !wanted.iter().any(|(r, _, _): &(&IdentityRecord, u32, u32)| r.id == record.id) {
                wanted.push((record, a, b));
            }
        }
        // Catalog order regardless of flag order.
        let position = |id: &str| identity_catalog().iter().position(|r| r.id == id);
        wanted.sort_by_key(|(r, _, _)| position(r.id));
        Ok(wanted)
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{euler_number, table_row, TableRow};
use crate::numerics::{
    beta_value, euler_term, lattice_sum_minus, lattice_sum_plus, polygamma_quarter, zeta_value, HPReal,
    PrecisionContext,
};
use crate::symbolic::Site;

pub const MAX_TABLE_S: u32 = 12;
pub const MAX_EULER: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Zeta,
    Beta,
    Polygamma,
    EulerTerm,
    LatticePlus,
    LatticeMinus,
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "zeta" => Quantity::Zeta,
            "beta" => Quantity::Beta,
            "polygamma" => Quantity::Polygamma,
            "euler-term" => Quantity::EulerTerm,
            "lattice-plus" => Quantity::LatticePlus,
            "lattice-minus" => Quantity::LatticeMinus,
            other => return Err(Error::Config(format!("unknown quantity `{other}`"))),
        })
    }
}

/// Parameters for a single value; which fields are needed depends on the quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputeRequest {
    pub quantity: Quantity,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub site: Option<String>,
    pub s: Option<u32>,
    pub digits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputeOutput {
    pub value: HPReal,
    pub digits: u32,
    /// Sign of the quantity when `value` holds a magnitude.
    pub sign_note: Option<&'static str>,
}

impl fmt::Display for ComputeOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.value.to_sig_digits(self.digits))?;
        write!(f, "error <= {}", self.value.error_sci(2))?;
        if let Some(note) = self.sign_note {
            write!(f, "\nsign: {note}")?;
        }
        Ok(())
    }
}

fn need(value: Option<u32>, flag: &str) -> Result<u32> {
    value.ok_or_else(|| Error::Config(format!("--{flag} is required for this quantity")))
}

pub fn compute(req: &ComputeRequest) -> Result<ComputeOutput> {
    let ctx = PrecisionContext::new(req.digits)?;
    let mut sign_note = None;
    let value = match req.quantity {
        Quantity::Zeta => zeta_value(need(req.m, "m")?, &ctx)?.result,
        Quantity::Beta => beta_value(need(req.m, "m")?, &ctx)?.result,
        Quantity::LatticePlus => lattice_sum_plus(need(req.m, "m")?, &ctx)?.result,
        Quantity::LatticeMinus => lattice_sum_minus(need(req.m, "m")?, &ctx)?.result,
        Quantity::Polygamma => {
            let text = req.site.as_deref().ok_or_else(|| Error::Config("--site is required".into()))?;
            let site =
                Site::parse(text).ok_or_else(|| Error::Config(format!("site must be 1/4 or 3/4, got `{text}`")))?;
            polygamma_quarter(need(req.n, "n")?, site, &ctx)?
        }
        Quantity::EulerTerm => {
            let term = euler_term(need(req.s, "s")?, &ctx)?;
            sign_note = Some(if term.negative {
                "negative (bracket E_2s (pi i)^(2s+1) i / (2(2^(2s+1)-1)(2s)!))"
            } else {
                "positive"
            });
            term.magnitude
        }
    };
    Ok(ComputeOutput { value, digits: req.digits, sign_note })
}

/// Coefficient table rows for s in lo..=hi, which must lie in 1..=12.
pub fn table(lo: u32, hi: u32) -> Result<Vec<TableRow>> {
    if lo == 0 || hi > MAX_TABLE_S || lo > hi {
        return Err(Error::Range { what: "table s", value: hi.max(lo) as u64, max: MAX_TABLE_S as u64 });
    }
    Ok((lo..=hi).map(table_row).collect())
}

/// `E_n = value` for n = 0..=max.
pub fn euler_lines(max: usize) -> Result<Vec<String>> {
    if max > MAX_EULER {
        return Err(Error::Range { what: "euler index", value: max as u64, max: MAX_EULER as u64 });
    }
    Ok((0..=max).map(|n| format!("E_{n} = {}", euler_number(n))).collect())
}

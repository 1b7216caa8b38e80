use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigUint;

use super::config::{Mode, RunConfig};
use super::report::{ReportDocument, ReportRow};
use crate::error::Result;
use crate::numerics::{eval_expr, HPReal, PrecisionContext};
use crate::par::{map_slice, Exec};
use crate::symbolic::{check_record, classify_record, IdentityRecord};

/// Numeric rows pass when |lhs - rhs| ≤ 10^-(P - 5).
pub fn tolerance_exponent(digits: u32) -> u32 {
    digits.saturating_sub(5)
}

struct Task<'a> {
    record: &'a IdentityRecord,
    s: u32,
}

/// |x| + err at a common scale, for picking the worst form.
fn upper(x: &HPReal, bits: u32) -> BigUint {
    let y = x.rescale(bits);
    y.mantissa().magnitude() + y.error_ulps()
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Symbolic => "symbolic",
        Mode::Numeric => "numeric",
        Mode::Both => "both",
    }
}

struct NumericOutcome {
    lhs: String,
    rhs: String,
    abs_diff: String,
    tolerance: String,
    pass: bool,
}

/// Evaluate every form at P digits and report the one with the largest |lhs - rhs|.
fn numeric_check(record: &IdentityRecord, s: u32, digits: u32) -> Result<NumericOutcome> {
    let ctx = PrecisionContext::new(digits)?;
    let tol = tolerance_exponent(digits);
    let mut worst: Option<(HPReal, HPReal, HPReal)> = None;
    for form in &record.forms {
        let lhs = eval_expr(&form.lhs(s), &ctx)?;
        let rhs = eval_expr(&form.rhs(s), &ctx)?;
        let diff = &lhs - &rhs;
        let replace = match &worst {
            None => true,
            Some((_, _, w)) => {
                let bits = w.bits().max(diff.bits());
                upper(&diff, bits).cmp(&upper(w, bits)) == Ordering::Greater
            }
        };
        if replace {
            worst = Some((lhs, rhs, diff));
        }
    }
    let (lhs, rhs, diff) = worst.expect("every identity has at least one form");
    Ok(NumericOutcome {
        lhs: lhs.to_sig_digits(digits),
        rhs: rhs.to_sig_digits(digits),
        abs_diff: diff.abs_upper_sci(3),
        tolerance: format!("1e-{tol}"),
        pass: diff.certainly_below_pow10(-(tol as i32)),
    })
}

fn evaluate(task: &Task<'_>, config: &RunConfig) -> Result<ReportRow> {
    let class = classify_record(task.record, task.s)?;
    let mut row = ReportRow {
        id: task.record.id.to_string(),
        s: task.s,
        mode: mode_name(config.mode).to_string(),
        lhs_value: None,
        rhs_value: None,
        abs_diff: None,
        tolerance: None,
        residual: None,
        tautological: class.tautological,
        pass: true,
    };
    if config.mode.symbolic() {
        let check = check_record(task.record, task.s, config.enable_even_zeta)?;
        row.residual = Some(check.render_residual());
        row.pass &= check.holds;
    }
    if config.mode.numeric() {
        let n = numeric_check(task.record, task.s, config.digits)?;
        row.lhs_value = Some(n.lhs);
        row.rhs_value = Some(n.rhs);
        row.abs_diff = Some(n.abs_diff);
        row.tolerance = Some(n.tolerance);
        row.pass &= n.pass;
    }
    Ok(row)
}

/// Run a verification sweep with the default execution mode.
pub fn run_verify(config: &RunConfig) -> Result<ReportDocument> {
    run_verify_with(config, Exec::default())
}

/// One row per (identity, s), in catalog order then s, whatever order the
/// workers finish in. In `both` mode a row passes only if both checks do.
pub fn run_verify_with(config: &RunConfig, exec: Exec) -> Result<ReportDocument> {
    let started = Instant::now();
    let selected = config.resolve()?;
    let records: Vec<(IdentityRecord, u32, u32)> = selected
        .into_iter()
        .map(|(r, lo, hi)| {
            let hit = config.falsify.as_deref().is_some_and(|f| f.eq_ignore_ascii_case(r.id));
            (if hit { r.falsified() } else { r.clone() }, lo, hi)
        })
        .collect();

    let tasks: Vec<Task<'_>> =
        records.iter().flat_map(|(record, lo, hi)| (*lo..=*hi).map(move |s| Task { record, s })).collect();

    let rows = map_slice(exec, &tasks, |t| evaluate(t, config)).into_iter().collect::<Result<Vec<_>>>()?;

    let elapsed = started.elapsed().as_millis() as u64;
    Ok(ReportDocument::new(config.clone(), rows, elapsed))
}

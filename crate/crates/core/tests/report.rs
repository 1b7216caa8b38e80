use oddzeta::harness::{run_verify, Mode, OutputFormat, ReportDocument, ReportRow, RunConfig, SRange, CSV_HEADER};
use proptest::prelude::*;

fn config(ids: &[&str], lo: u32, hi: u32, mode: Mode) -> RunConfig {
    RunConfig {
        ids: ids.iter().map(|s| s.to_string()).collect(),
        s_range: SRange { start: lo, end: hi },
        digits: 25,
        mode,
        output_format: OutputFormat::Json,
        ..RunConfig::default()
    }
}

#[test]
fn json_is_deterministic_apart_from_wall_time() {
    let cfg = config(&["all"], 1, 3, Mode::Both);
    let mut a = run_verify(&cfg).unwrap();
    let mut b = run_verify(&cfg).unwrap();
    a.summary.wall_time_ms = 0;
    b.summary.wall_time_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.all_passed());
}

#[test]
fn json_schema_keys() {
    let doc = run_verify(&config(&["I6", "I10"], 1, 2, Mode::Numeric)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
    let mut top: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    top.sort_unstable();
    assert_eq!(top, ["config", "rows", "summary", "version"]);
    let row = v["rows"][0].as_object().unwrap();
    for key in
        ["id", "s", "mode", "lhs_value", "rhs_value", "abs_diff", "tolerance", "residual", "tautological", "pass"]
    {
        assert!(row.contains_key(key), "missing {key}");
    }
    assert!(row["abs_diff"].is_string());
    assert!(row["lhs_value"].is_string());
    assert_eq!(v["summary"]["total"], 4);
}

#[test]
fn csv_layout() {
    let doc = run_verify(&config(&["I8"], 1, 3, Mode::Numeric)).unwrap();
    let csv = doc.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("I8,1,numeric,"));
    assert!(rows[0].ends_with(",1e-20,true"));
}

fn arb_row() -> impl Strategy<Value = ReportRow> {
    (
        "I[0-9]{1,2}",
        1u32..50,
        prop::option::of("-?[0-9]\\.[0-9]{1,30}"),
        prop::option::of("[0-9]\\.[0-9]{2}e-[0-9]{2,3}"),
        prop::option::of("0|[a-z]+: [0-9*a-z^() +-]{1,20}"),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(id, s, value, diff, residual, tautological, pass)| ReportRow {
            id,
            s,
            mode: "both".into(),
            lhs_value: value.clone(),
            rhs_value: value,
            abs_diff: diff.clone(),
            tolerance: diff.map(|_| "1e-95".to_string()),
            residual,
            tautological,
            pass,
        })
}

proptest! {
    #[test]
    fn json_round_trip(rows in prop::collection::vec(arb_row(), 0..8), ms in 0u64..100_000, falsify in any::<bool>()) {
        let mut cfg = config(&["I1", "I2"], 2, 4, Mode::Both);
        if falsify {
            cfg.falsify = Some("I2".into());
        }
        let doc = ReportDocument::new(cfg, rows, ms);
        prop_assert_eq!(doc.summary.total, doc.rows.len());
        prop_assert_eq!(doc.summary.passed + doc.summary.failed, doc.summary.total);
        let back = ReportDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back, doc);
    }
}

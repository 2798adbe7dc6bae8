use std::process::{Command, Output};

use num_bigint::BigInt;
use serde_json::Value;
use twobridge::alexander::alexander_polynomial;
use twobridge::riley::{property_l_certificate, RileyData};
use twobridge::{enumerate_forms, IntPolynomial, TwoBridgeForm};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json", "--no-timing"]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn coeff_list(v: &Value) -> Vec<BigInt> {
    v.as_array()
        .expect("coefficient array")
        .iter()
        .map(|c| c.to_string().parse().expect("integer coefficient"))
        .collect()
}

fn poly_list(p: &IntPolynomial) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn echoed_form(doc: &Value) -> TwoBridgeForm {
    let p = doc["inputs"]["p"].as_i64().unwrap();
    let q = doc["inputs"]["q"].as_i64().unwrap();
    TwoBridgeForm::new(p, q).unwrap()
}

#[test]
fn riley_json_has_ascending_lambda() {
    let doc = json(&["riley", "5", "3"]);
    assert_eq!(doc["command"], "riley");
    assert_eq!(doc["toolkit_version"], twobridge::VERSION);
    assert_eq!(doc["timing_ms"], 0);
    assert_eq!(coeff_list(&doc["results"]["lambda"]), vec![BigInt::from(1); 3]);
    assert_eq!(doc["results"]["degree_check"], true);
}

#[test]
fn json_round_trips_through_echoed_inputs() {
    for (p, q) in [("3", "1"), ("7", "3"), ("9", "4"), ("23", "7"), ("61", "25")] {
        let doc = json(&["riley", p, q]);
        let f = echoed_form(&doc);
        let data = RileyData::compute(&f);
        assert_eq!(coeff_list(&doc["results"]["lambda"]), poly_list(data.lambda().unwrap()));
        assert_eq!(coeff_list(&doc["results"]["w"]["w12"]), poly_list(&data.w.a12));
        assert_eq!(coeff_list(&doc["results"]["w"]["w22"]), poly_list(&data.w.a22));

        let doc = json(&["longitude", p, q]);
        let c = property_l_certificate(&echoed_form(&doc)).unwrap();
        assert_eq!(coeff_list(&doc["results"]["g"]), poly_list(&c.g));
        assert_eq!(coeff_list(&doc["results"]["gcd_rational"]), poly_list(&c.gcd_rational_result));

        let doc = json(&["alexander", p, q]);
        let delta = alexander_polynomial(&echoed_form(&doc));
        assert_eq!(coeff_list(&doc["results"]["delta"]), poly_list(delta.poly()));
    }
}

#[test]
fn large_coefficients_survive_json() {
    // Some entries of W at (99,1) overflow u64.
    let doc = json(&["riley", "99", "1"]);
    let data = RileyData::compute(&echoed_form(&doc));
    let mut widest = 0;
    for (name, entry) in ["w11", "w12", "w21", "w22"].iter().zip(data.w.entries()) {
        let expected = poly_list(entry);
        widest = expected.iter().map(BigInt::bits).fold(widest, u64::max);
        assert_eq!(coeff_list(&doc["results"]["w"][*name]), expected);
    }
    assert!(widest > 64, "{widest}");
}

#[test]
fn certify_trefoil_exits_zero() {
    let out = run(&["certify", "3", "1"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("Certified"));
    let doc = json(&["certify", "3", "1"]);
    assert_eq!(doc["results"]["verdict"], "Certified");
    assert_eq!(doc["results"]["informational"], true);
}

#[test]
fn scan_certify_to_99_exits_zero() {
    let out = run(&["scan", "--pmax", "99", "--certify"]);
    assert_eq!(code(&out), 0);
    let doc = json(&["scan", "--pmax", "99", "--certify"]);
    let forms = enumerate_forms(99);
    assert_eq!(doc["results"]["form_count"], forms.len());
    assert_eq!(doc["results"]["certificate_summary"]["failed"], 0);
    let rows = doc["results"]["forms"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["certificate"]["verdict"] == "Certified"));
}

#[test]
fn jobs_never_change_output_bytes() {
    let cases: [&[&str]; 4] = [
        &["scan", "--pmax", "25", "--certify", "--obstruct", "--format", "json"],
        &["scan", "--pmax", "25", "--certify", "--obstruct", "--format", "csv"],
        &["scan", "--pmax", "25", "--certify", "--obstruct"],
        &["verify", "31", "11", "--format", "json"],
    ];
    for args in cases {
        let outputs: Vec<Vec<u8>> = ["1", "2", "7"]
            .iter()
            .map(|jobs| {
                let mut full = args.to_vec();
                full.extend(["--no-timing", "--jobs", jobs]);
                let out = run(&full);
                assert_eq!(code(&out), 0);
                out.stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn csv_has_one_row_per_form_or_pair() {
    let n = enumerate_forms(21).len();
    let out = run(&["scan", "--pmax", "21", "--certify", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert!(headers.iter().any(|h| h == "verdict"));
    assert_eq!(reader.records().count(), n);

    let out = run(&["scan", "--pmax", "21", "--obstruct", "--certify", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert!(reader.headers().unwrap().iter().any(|h| h == "source_certificate"));
    assert_eq!(reader.records().count(), n * (n - 1));
}

#[test]
fn usage_errors_exit_one_with_reason_and_help() {
    let cases: [&[&str]; 7] = [
        &[],
        &["bogus"],
        &["riley", "5"],
        &["riley", "4", "3"],
        &["certify", "9", "3"],
        &["verify", "7", "3", "--tol", "-1"],
        &["scan", "--pmax", "9", "--jobs", "0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 1, "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.starts_with("error: "), "{args:?}: {err}");
        assert!(err.contains("Usage:"), "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
    // Subcommand help, not the top-level list.
    let err = String::from_utf8_lossy(&run(&["riley", "4", "3"]).stderr).into_owned();
    assert!(err.contains("twobridge riley"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["scan", "--help"])), 0);
    let out = run(&["--version"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains(twobridge::VERSION));
}

#[test]
fn failed_numeric_check_exits_two() {
    // |g| is about 1.9 at the complex roots of Λ(7,3), below this tolerance.
    let out = run(&["verify", "7", "3", "--tol", "100"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stdout.is_empty(), "failures are reported, not swallowed");
    assert_eq!(code(&run(&["verify", "7", "3"])), 0);
}

#[test]
fn obstruct_reports_verdict_and_evidence() {
    let doc = json(&["obstruct", "5", "3", "3", "1"]);
    assert_eq!(doc["results"]["verdict"], "RuledOut");
    assert_eq!(doc["results"]["alexander_divides"], false);
    let tags: Vec<&str> =
        doc["results"]["reasons"].as_array().unwrap().iter().map(|r| r["tag"].as_str().unwrap()).collect();
    assert!(tags.contains(&"alexander"));

    let doc = json(&["obstruct", "9", "1", "3", "1"]);
    assert_eq!(doc["results"]["verdict"], "NotRuledOut");
}

#[test]
fn present_and_alexander_text() {
    let out = run(&["present", "5", "3"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("x1 x2^-1 x1^-1 x2"), "{text}");

    let doc = json(&["alexander", "3", "1"]);
    assert_eq!(doc["results"]["determinant"], 3);
    assert_eq!(doc["results"]["torus_targets"], serde_json::json!([[2, 3]]));
}

#[test]
fn piped_text_has_no_escape_codes() {
    for env in [None, Some("1")] {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_twobridge"));
        cmd.args(["scan", "--pmax", "15", "--certify"]);
        if let Some(v) = env {
            cmd.env("NO_COLOR", v);
        }
        let out = cmd.output().unwrap();
        assert!(!out.stdout.contains(&0x1b));
    }
}

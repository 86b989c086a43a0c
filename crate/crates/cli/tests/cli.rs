use std::process::{Command, Output};

use serde_json::Value;

fn signpat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signpat")).args(args).output().expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = signpat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn code(args: &[&str]) -> i32 {
    signpat(args).status.code().expect("exit code")
}

#[test]
fn check_reports_empty_classes() {
    let v = json_ok(&["check", "+,+,-,+", "2", "0"]);
    assert_eq!(v["compatible"], true);
    assert_eq!(v["empty_by_theorem1"], "Case1");

    let v = json_ok(&["--descending", "check", "+,-,+,+", "2", "0"]);
    assert_eq!(v["empty_by_theorem1"], "Case1");

    let v = json_ok(&["check", "+,-,-,-", "0", "2"]);
    assert_eq!(v["empty_by_theorem1"], "Case2");

    let v = json_ok(&["check", "-,+,+", "1", "0"]);
    assert_eq!(v, serde_json::json!({"compatible": true}));

    let v = json_ok(&["check", "+,+", "2", "0"]);
    assert_eq!(v["compatible"], false);
}

#[test]
fn enumerate_degree_two() {
    let v = json_ok(&["enumerate", "2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let mut profiles: Vec<(u64, u64)> =
        rows.iter().map(|r| (r["pos"].as_u64().unwrap(), r["neg"].as_u64().unwrap())).collect();
    profiles.sort();
    assert_eq!(profiles, vec![(0, 2), (1, 1), (1, 1), (2, 0)]);
    assert!(rows.iter().all(|r| r["hyperbolic"] == "witness"));

    let csv = signpat(&["enumerate", "2", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("index,sigma,pos,neg"));
}

#[test]
fn enumerate_degree_four_marks_empty_classes() {
    let v = json_ok(&["enumerate", "4"]);
    let row = v.as_array().unwrap().iter().find(|r| r["sigma"] == "+,+,-,+").unwrap().clone();
    assert_eq!(row["two_pos"], "empty:Case1");
}

#[test]
fn resultant_matches_quoted_expression_point() {
    let v = json_ok(&["resultant", "x^3+x^2+0x+1", "deriv"]);
    assert_eq!(v["resultant"], "31");
    let v = json_ok(&["resultant", "-1,0,1", "0,2"]);
    assert_eq!(v["resultant"], "-4");
}

#[test]
fn profile_and_classify() {
    let v = json_ok(&["profile", "7/8,-15/8,0,0,1"]);
    assert_eq!(v["pos"], 2);
    assert_eq!(v["complex_pairs"], 1);
    let v = json_ok(&["classify", "1,2,1"]);
    assert_eq!(v["on_delta1"], true);
    assert_eq!(v["multiple_real_root"], true);
    let v = json_ok(&["classify", r#"{"coeffs":["-6","11","-6","1"]}"#]);
    assert_eq!(v["in_pi_star"], true);
    let v = json_ok(&["profile", r#"{"coeffs":["1/2",-3,1]}"#]);
    assert_eq!(v["pos"], 2);
}

#[test]
fn witness_targets() {
    let v = json_ok(&["witness", "+,-,+,+", "--target", "two-pos"]);
    assert_eq!(v["outcome"], "witness");
    assert_eq!(v["profile"]["pos"], 2);
    assert_eq!(v["poly"]["coeffs"][0], "117/128");

    let v = json_ok(&["--descending", "witness", "+,-,+,+", "--target", "two-pos"]);
    assert_eq!(v, serde_json::json!({"outcome": "empty", "case": "Case1"}));

    for side in ["K", "L", "M"] {
        let v = json_ok(&["witness", "-,-,+,+", "--target", "two-mixed", "--side", side]);
        assert_eq!(v["side"], side);
        assert_eq!(v["profile"]["pos"], 1);
        assert_eq!(v["profile"]["neg"], 1);
    }

    let v = json_ok(&["witness", "-,+,-,+,+", "--target", "one-root"]);
    assert_eq!(v["profile"]["pos"], 1);
    let v = json_ok(&["witness", "+,-,-,+", "--target", "elliptic"]);
    assert_eq!(v["profile"]["complex_pairs"], 2);
}

#[test]
fn certify_descend_connect() {
    let v = json_ok(&["certify", "-6,11,-6,1"]);
    assert_eq!(v["class_invariant_ok"], true);
    assert_eq!(v["samples"].as_array().unwrap().len(), 50);

    let v = json_ok(&["--grid", "20", "--refine", "certify", "-6,11,-6,1"]);
    assert_eq!(v["refinements"], 1);

    let v = json_ok(&["descend", "-6,11,-6,1"]);
    assert_eq!(v["sigma"], "+,-");

    let v = json_ok(&["connect", "6,11,6,1", "1/8,7/8,7/4,1"]);
    assert!(v.as_array().unwrap().iter().all(|c| c["class_invariant_ok"] == true));
}

#[test]
fn fiber_outputs() {
    let v = json_ok(&["fiber", "--tail", "1/3,1"]);
    assert_eq!(v["status"]["kind"], "point");
    assert_eq!(v["status"]["value"], "1/27");

    let v = json_ok(&["fiber", "+,+", "--tail", "2"]);
    assert_eq!(v["component_constrained"]["kind"], "open");

    let v = json_ok(&["--width", "1/1024", "fiber", "--tail", "-3,0"]);
    assert_eq!(v["width"], "1/1024");
}

#[test]
fn curve3_formats() {
    let csv = String::from_utf8(signpat(&["curve3", "--grid", "13", "--format", "csv"]).stdout).unwrap();
    assert!(csv.lines().any(|l| l.starts_with("-1/3,1/3,1/27,")));
    assert_eq!(csv.lines().count(), 14);
    let svg = String::from_utf8(signpat(&["curve3", "--format", "svg"]).stdout).unwrap();
    assert!(svg.contains("<polyline"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["profile", "1,2"]), 2);
    assert_eq!(code(&["profile", "1,x"]), 2);
    assert_eq!(code(&["certify", "1,0,1"]), 2);
    assert_eq!(code(&["witness", "+,+,+", "--target", "elliptic"]), 2);
    assert_eq!(code(&["witness", "+,+", "--target", "two-pos"]), 2);
    assert_eq!(code(&["check", "+,+", "3", "0"]), 2);
    assert_eq!(code(&["connect", "6,11,6,1", "-6,11,-6,1"]), 2);
    let out = signpat(&["profile", "1,2"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());
}

#[test]
fn deterministic_bytes() {
    for args in [
        &["--seed", "7", "witness", "-,-,+,+,-,+", "--target", "hyperbolic"][..],
        &["enumerate", "4", "--format", "csv"][..],
        &["certify", "-6,11,-6,1"][..],
        &["fiber", "--tail", "0,-3"][..],
    ] {
        assert_eq!(signpat(args).stdout, signpat(args).stdout, "{args:?}");
    }
}

#[test]
fn printed_polynomials_reparse() {
    let w = json_ok(&["witness", "-,-,+,+", "--target", "two-mixed"]);
    let text = serde_json::to_string(&w["poly"]).unwrap();
    let again = json_ok(&["profile", &text]);
    assert_eq!(again, w["profile"]);

    let d = json_ok(&["descend", "-6,11,-6,1"]);
    let coeffs: Vec<String> =
        d["poly"]["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect();
    let p = json_ok(&["profile", &coeffs.join(",")]);
    assert_eq!(p["pos"], 2);
    assert_eq!(p["all_simple"], true);
}

use std::path::PathBuf;
use std::process::Command;

use fdhopf::cli::run;
use fdhopf::format::{build, export, parse_presentation, FieldChoice};
use fdhopf::report::Report;
use fdhopf::CliError;
use fdhopf_core::exactla::Rationals;

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fdhopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json_run(args: &[&str]) -> (Report, i32) {
    let mut v: Vec<String> = vec!["--format".into(), "json".into()];
    v.extend(args.iter().map(|s| s.to_string()));
    let out = run(v).unwrap();
    (Report::from_json(&out.text).unwrap(), out.exit_code)
}

const DUAL_NUMBERS: &str = r#"{
  "format_version": 1,
  "field": "Q",
  "kind": "algebra",
  "algebra": {
    "labels": ["1", "s"],
    "unit": ["1", "0"],
    "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]
  }
}"#;

// a·a = b, a·b = a, everything else with a or b is zero: (aa)b = 0 but a(ab) = b.
const NOT_ASSOCIATIVE: &str = r#"{
  "format_version": 1,
  "field": "Q",
  "kind": "algebra",
  "algebra": {
    "labels": ["1", "a", "b"],
    "unit": ["1", "0", "0"],
    "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "1"], [1, 0, 1, "1"], [2, 0, 2, "1"],
            [1, 1, 2, "1"], [1, 2, 1, "1"]]
  }
}"#;

#[test]
fn exported_h4_round_trips() {
    let out = run(["export", "builtin:sweedler_h4"]).unwrap();
    assert_eq!(out.exit_code, 0);
    let file = parse_presentation(&out.text).unwrap();
    assert_eq!(file.to_text(), out.text);
    assert!(matches!(file.field_choice().unwrap(), FieldChoice::Rationals));
    let s = build(&file, &Rationals).unwrap();
    assert!(s.validate().is_valid());
    assert_eq!(export(&s, &Rationals).to_text(), out.text);

    let p = scratch("h4.json", &out.text);
    let (r, code) = json_run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.status, "pass");
}

#[test]
fn exported_files_round_trip_over_finite_fields() {
    for (name, field) in [("taft(3)", "GF(7)"), ("h4-regular", "GF(3)"), ("c2-swap", "GF(5)")] {
        let out = run(["--field", field, "export", &format!("builtin:{name}")]).unwrap();
        let p = scratch(&format!("{}.json", name.replace(['(', ')'], "_")), &out.text);
        let again = run(["export", p.to_str().unwrap()]).unwrap();
        assert_eq!(again.text, out.text, "{name}");
        assert_eq!(run(["validate", p.to_str().unwrap()]).unwrap().exit_code, 0);
    }
}

#[test]
fn zero_denominator_is_a_positioned_parse_error() {
    let text = DUAL_NUMBERS.replace("[1, 0, 1, \"1\"]", "[1, 0, 1, \"1/0\"]");
    let err = parse_presentation(&text).unwrap_err();
    assert_eq!(err.line, 8);
    assert!(err.column > 0);
    assert!(err.message.contains("1/0"), "{}", err.message);

    let p = scratch("zero-den.json", &text);
    let e = run(["validate", p.to_str().unwrap()]).unwrap_err();
    assert!(matches!(e, CliError::Parse { .. }));
    assert_eq!(e.exit_code(), 1);
    assert!(e.to_string().contains("line 8"), "{e}");
}

#[test]
fn syntax_and_bounds_errors_are_distinguished_from_validation() {
    let p = scratch("bad-index.json", &DUAL_NUMBERS.replace("[1, 0, 1, \"1\"]", "[1, 0, 5, \"1\"]"));
    let e = run(["validate", p.to_str().unwrap()]).unwrap_err();
    assert_eq!(e.exit_code(), 1);
    assert!(e.to_string().contains("algebra.mul[2]"), "{e}");

    let p = scratch("unknown-key.json", &DUAL_NUMBERS.replace("\"labels\"", "\"lables\""));
    assert_eq!(run(["validate", p.to_str().unwrap()]).unwrap_err().exit_code(), 1);

    let p = scratch("bad-version.json", &DUAL_NUMBERS.replace("\"format_version\": 1", "\"format_version\": 9"));
    assert_eq!(run(["validate", p.to_str().unwrap()]).unwrap_err().exit_code(), 1);
}

#[test]
fn broken_associativity_lists_triples() {
    let p = scratch("nonassoc.json", NOT_ASSOCIATIVE);
    assert!(parse_presentation(NOT_ASSOCIATIVE).is_ok());
    let (r, code) = json_run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r.status, "fail");
    let v = r.sections[0].data["violations"].as_array().unwrap();
    assert!(!v.is_empty());
    let triple = v.iter().find(|x| x["axiom"] == "associativity").expect("associativity violation");
    assert_eq!(triple["indices"].as_array().unwrap().len(), 3);
    // Commands that need a valid structure refuse it.
    let e = run(["radical", p.to_str().unwrap()]).unwrap_err();
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn queries_on_a_file_algebra() {
    let p = scratch("dual.json", DUAL_NUMBERS);
    let path = p.to_str().unwrap();
    let (r, code) = json_run(&["radical", path]);
    assert_eq!(code, 0);
    assert_eq!(r.sections[0].data["dim"], 1);
    let (r, _) = json_run(&["wedderburn", path]);
    assert_eq!(r.sections[0].data["blocks"].as_array().unwrap().len(), 1);
    let (r, code) = json_run(&["frobenius", path]);
    assert_eq!(code, 0);
    assert_eq!(r.sections[0].data["frobenius"], true);
    assert_eq!(json_run(&["qf", path]).1, 0);
}

#[test]
fn coideal_over_h4() {
    let (r, code) = json_run(&["verify", "6.1ii", "--hopf", "builtin:sweedler_h4", "--span", "1,gx"]);
    assert_eq!(code, 0);
    assert_eq!(r.sections.len(), 1);
    let h = r.sections[0].checks.iter().filter(|c| c.subject.starts_with("H (")).collect::<Vec<_>>();
    assert_eq!(h.len(), 2);
    assert!(h.iter().all(|c| c.conclusion == "free of rank 2" && c.status == "pass"));

    let (r, code) = json_run(&["coideal", "builtin:sweedler_h4", "--span", "1,gx"]);
    assert_eq!(code, 0);
    let d = &r.sections[0].data;
    assert_eq!(d["basis_right"].as_array().unwrap().len(), 2);
    assert_eq!(d["basis_left"].as_array().unwrap().len(), 2);
    assert_eq!(d["dim_d"], 2);
    assert_eq!(d["dim_d_prime"], 2);

    // span{1, x} is not a subalgebra closed under the coproduct.
    let e = run(["coideal", "builtin:sweedler_h4", "--span", "1,x"]).unwrap_err();
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn ni89b_by_field() {
    let (r, code) = json_run(&["ni89b"]);
    assert_eq!(code, 0);
    let trace = r.sections[0].data["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 8);
    assert!(trace.iter().all(|e| e["reduces_to_zero"] == true));
    assert!(trace.iter().any(|e| !e["vanishing"].as_array().unwrap().is_empty()));
    assert_eq!(json_run(&["--field", "GF(3)", "ni89b"]).1, 0);
    let (r, code) = json_run(&["--field", "GF(2)", "ni89b"]);
    assert_eq!(code, 3);
    assert_eq!(r.status, "hypothesis-failure");
}

#[test]
fn verify_3_5_on_h4_regular() {
    let (r, code) = json_run(&["verify", "3.5", "--comodalg", "builtin:h4-regular"]);
    assert_eq!(code, 0, "{:?}", r.sections[0].checks.iter().filter(|c| c.status != "pass").collect::<Vec<_>>());
    assert!(r.sections[0].checks.len() >= 6);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["verify", "6.1iv", "--hopf", "builtin:sweedler_h4", "--span", "1,gx", "--seed", "7"],
        vec!["free", "builtin:regular(sweedler_h4)", "--seed", "3"],
        vec!["verify", "5.4", "--comodalg", "builtin:h4-regular"],
    ] {
        let a = run(args.iter().map(|s| s.to_string()).chain(["--format".into(), "json".into()])).unwrap();
        let b = run(args.iter().map(|s| s.to_string()).chain(["--format".into(), "json".into()])).unwrap();
        assert_eq!(a.text, b.text, "{args:?}");
    }
    let a = run(["--format", "json", "--timestamp", "catalog"]).unwrap();
    let r = Report::from_json(&a.text).unwrap();
    assert!(r.timestamp.is_some());
}

#[test]
fn replay_reverifies_witnesses() {
    for (name, args) in [
        ("free", vec!["free", "builtin:regular(sweedler_h4)"]),
        ("proj", vec!["projective", "builtin:regular(group_algebra(C2))", "--field", "GF(2)"]),
        ("frob", vec!["frobenius", "builtin:taft(3)", "--field", "GF(7)"]),
        ("coideal", vec!["coideal", "builtin:sweedler_h4", "--span", "1,gx"]),
    ] {
        let out = run(["--format", "json"].into_iter().chain(args.iter().copied())).unwrap();
        assert_eq!(out.exit_code, 0, "{name}");
        let p = scratch(&format!("{name}.report.json"), &out.text);
        let (r, code) = json_run(&["replay", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{name}: {:?}", r.sections[0].checks);
        // One check for the rerun plus at least one re-verified witness.
        assert!(r.sections[0].checks.len() >= 2, "{name}");
    }
}

#[test]
fn replay_detects_a_tampered_witness() {
    let out = run(["--format", "json", "free", "builtin:regular(sweedler_h4)"]).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    v["sections"][0]["data"]["basis"][0] = serde_json::json!(["0", "0", "1", "0"]);
    let p = scratch("tampered.json", &serde_json::to_string_pretty(&v).unwrap());
    let (r, code) = json_run(&["replay", p.to_str().unwrap()]);
    assert_eq!(code, 4);
    let failing: Vec<&str> = r.sections[0].checks.iter().filter(|c| c.status == "fail").map(|c| c.id.as_str()).collect();
    assert_eq!(failing, ["rerun", "free/basis"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(["verify", "localization"]).unwrap().exit_code, 5);
    assert_eq!(run(["verify", "9.9", "--comodalg", "builtin:h4-regular"]).unwrap_err().exit_code(), 1);
    assert_eq!(run(["validate", "/nonexistent/file.json"]).unwrap_err().exit_code(), 1);
    assert_eq!(run(["--bogus"]).unwrap_err().exit_code(), 1);
    // 7.6 needs an H-simple module algebra.
    let (r, code) = json_run(&["verify", "7.6", "--modalg", "builtin:h4-adjoint"]);
    assert_eq!(code, 3);
    assert_eq!(r.sections[0].status, "hypothesis-failure");
}

#[test]
fn binary_exit_codes_and_output() {
    let bin = env!("CARGO_BIN_EXE_fdhopf");
    let ok = Command::new(bin).args(["catalog"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("# fdhopf report"));
    assert_eq!(Command::new(bin).arg("--help").output().unwrap().status.code(), Some(0));
    assert_eq!(Command::new(bin).arg("frobnicate").output().unwrap().status.code(), Some(1));
    let refused = Command::new(bin).args(["--field", "GF(2)", "ni89b"]).output().unwrap();
    assert_eq!(refused.status.code(), Some(3));
    let p = scratch("bin-nonassoc.json", NOT_ASSOCIATIVE);
    let bad = Command::new(bin).args(["radical", p.to_str().unwrap()]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("associativity"));
}

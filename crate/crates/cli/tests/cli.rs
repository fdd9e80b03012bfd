use std::path::PathBuf;
use std::process::Command as Process;

use bhl_cli::specfile::{export_hopf, load, parse_spec};
use bhl_cli::{run, Cli, Rendered};
use bhl_core::{builtins, Rational};
use clap::Parser;
use serde_json::Value;

fn run_args(args: &[&str]) -> Rendered {
    let cli = Cli::try_parse_from(std::iter::once("bhl").chain(args.iter().copied())).unwrap();
    run(&cli.command).unwrap()
}

fn json(r: &Rendered) -> Value {
    serde_json::from_str(&r.json).unwrap()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const Z2_SPEC: &str = r#"{
  "field": {"cyclotomic_order": 1},
  "group": {"invariant_factors": []},
  "objects": {"H": [{"label": "1"}, {"label": "g"}]},
  "algebras": {
    "kz2": {
      "carrier": "H",
      "m": [[1, 0, 0, 1], [0, 1, 1, 0]],
      "u": [[1], [0]],
      "delta": [[1, DELTA_G1], [0, 0], [0, 0], [0, 1]],
      "eps": [[1, 1]],
      "antipode": [["1", "0"], ["0", "1"]]
    }
  }
}"#;

#[test]
fn sweedler_reconstruction_passes() {
    let r = run_args(&["verify-reconstruction", "--builtin", "sweedler"]);
    assert!(r.passed, "{}", r.summary);
    let v = json(&r);
    assert_eq!(v["data"]["coend_dim"], 4);
    assert_eq!(v["data"]["original_dim"], 4);
    assert_eq!(v["command"], "verify-reconstruction");
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "comparison.iso"));
}

#[test]
fn explicit_group_algebra_passes() {
    let p = tmp("kz2_ok.json", &Z2_SPEC.replace("DELTA_G1", "0"));
    let r = run_args(&["check-hopf", p.to_str().unwrap()]);
    assert!(r.passed, "{}", r.summary);
    let r = run_args(&["antipode", p.to_str().unwrap()]);
    assert!(r.passed, "{}", r.summary);
    assert_eq!(json(&r)["checks"][2]["name"], "matches_supplied");
}

#[test]
fn broken_coassociativity_reports_a_witness() {
    // Δ(g) = g⊗g + 1⊗1 is not coassociative.
    let p = tmp("kz2_broken.json", &Z2_SPEC.replace("DELTA_G1", "1"));
    let r = run_args(&["check-hopf", p.to_str().unwrap(), "--format", "json"]);
    assert!(!r.passed);
    let v = json(&r);
    let c = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "coassociativity")
        .unwrap();
    assert_eq!(c["passed"], false);
    assert!(c["witness"]["row"].is_u64() && c["witness"]["col"].is_u64());
    assert!(r.summary.contains("FAIL coassociativity at ("));

    let out = Process::new(env!("CARGO_BIN_EXE_bhl"))
        .args(["check-hopf", p.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wrong_supplied_antipode_is_flagged() {
    let text = Z2_SPEC.replace("DELTA_G1", "0").replace(r#"[["1", "0"], ["0", "1"]]"#, r#"[["1", "0"], ["0", "-1"]]"#);
    let p = tmp("kz2_bad_s.json", &text);
    let r = run_args(&["antipode", p.to_str().unwrap()]);
    assert!(!r.passed);
    assert!(r.summary.contains("FAIL matches_supplied"));
}

#[test]
fn bosonized_exterior_line_is_four_dimensional() {
    let r = run_args(&["bosonize", "--builtin", "exterior_line"]);
    assert!(r.passed, "{}", r.summary);
    let v = json(&r);
    assert_eq!(v["data"]["dim"], 4);
    // The exported datum loads back and passes its own axiom suite.
    let spec = v["data"]["spec"].to_string();
    let p = tmp("bosonized.json", &spec);
    let again = run_args(&["check-hopf", p.to_str().unwrap()]);
    assert!(again.passed, "{}", again.summary);
}

#[test]
fn exported_spec_round_trips() {
    for (name, h) in [
        ("sweedler", builtins::sweedler::<Rational>().unwrap()),
        ("exterior", builtins::exterior_line::<Rational>().unwrap()),
    ] {
        let spec = export_hopf(name, &h);
        let text = serde_json::to_string_pretty(&spec).unwrap();
        let parsed = parse_spec(&text).unwrap();
        assert_eq!(parsed, spec);
        let loaded = load::<Rational>(&parsed).unwrap();
        let back = &loaded.algebras[name];
        assert!(back.same_structure(&h));
        assert_eq!(back.carrier().labels(), h.carrier().labels());
        assert_eq!(back.carrier().degrees(), h.carrier().degrees());
    }
}

#[test]
fn cyclotomic_spec_round_trips() {
    let h = builtins::nichols_cyclic::<bhl_core::Cyclotomic>(3).unwrap();
    let spec = export_hopf("nichols", &h);
    let loaded = load::<bhl_core::Cyclotomic>(&parse_spec(&serde_json::to_string(&spec).unwrap()).unwrap()).unwrap();
    assert!(loaded.algebras["nichols"].same_structure(&h));
}

#[test]
fn reports_are_deterministic() {
    let a = run_args(&["reconstruct", "--builtin", "nichols_cyclic:3"]);
    let b = run_args(&["reconstruct", "--builtin", "nichols_cyclic:3"]);
    assert!(a.passed);
    assert_eq!(a.json, b.json);
    assert!(a.json.ends_with('\n') && !a.json.contains('\r'));
}

#[test]
fn yd_examples_pass() {
    let r = run_args(&["yd-check", "--builtin", "group_algebra:2"]);
    assert!(r.passed, "{}", r.summary);
}

#[test]
fn custom_probes_are_accepted() {
    let r = run_args(&["reconstruct", "--builtin", "exterior_line", "--probes", "1,H"]);
    assert!(r.passed, "{}", r.summary);
    assert_eq!(json(&r)["data"]["coend_dim"], 2);
}

#[test]
fn out_flag_writes_the_json_report() {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("report.json");
    let r = run_args(&["check-hopf", "--builtin", "sweedler", "--out", p.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), r.json);
}

#[test]
fn parse_errors_carry_line_and_column() {
    let p = tmp("bad.json", "{\n  \"field\": {\"cyclotomic_order\": 1},\n  \"group\": oops\n}");
    let out = Process::new(env!("CARGO_BIN_EXE_bhl"))
        .args(["check-hopf", p.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error[ParseError]"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn engine_errors_surface_their_code() {
    let out = Process::new(env!("CARGO_BIN_EXE_bhl"))
        .args(["check-hopf", "--builtin", "nichols_cyclic:4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error[InvalidParameter]"));
}

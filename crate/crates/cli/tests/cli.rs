use std::io::Write;
use std::process::{Command, Output, Stdio};

use multalg_core::RingFixture;
use serde_json::Value;

fn multalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multalg")).args(args).output().expect("binary runs")
}

fn multalg_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn fixture_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn gaussian_plain_output() {
    let o = multalg(&["gaussian", "-n", "4", "-k", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + t + 2*t^2 + t^3 + t^4");
}

#[test]
fn gaussian_json_coefficients() {
    let v = json(&multalg(&["gaussian", "-n", "5", "-k", "2", "--json"]));
    assert_eq!(v["coefficients"], serde_json::json!([1, 1, 2, 2, 2, 1, 1]));
}

#[test]
fn grassmann_json_round_trips_and_analyzes_clean() {
    let o = multalg(&["grassmann", "-n", "4", "-k", "2", "--json"]);
    assert!(o.status.success());
    let fixture = RingFixture::from_json(&stdout(&o)).unwrap();
    assert_eq!(fixture.provenance.as_deref(), Some("grassmann(4,2)"));

    let file = fixture_file(&fixture.to_json());
    let a = multalg(&["analyze", "--file", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let report = json(&a);
    for key in [
        "finite_dimensional",
        "degree_zero_one_dimensional",
        "gorenstein_socle_dim1",
        "socle_in_top_degree",
        "socle_is_jacobian",
        "pairing_perfect",
        "palindromic",
        "monic",
        "nonnegative",
        "poincare_equals_equivariant_multiplicity",
    ] {
        assert_eq!(report[key], Value::Bool(true), "{key}");
    }
    assert_eq!(report["poincare_polynomial"], "1 + t + 2*t^2 + t^3 + t^4");
}

#[test]
fn jet_output_is_a_fixture_plus_invariants() {
    let o = multalg_stdin(&["jet", "--order", "3", "--json"], r#"{"variables": ["a"], "generators": ["a^2"]}"#);
    assert!(o.status.success());
    let text = stdout(&o);
    let fixture = RingFixture::from_json(&text).unwrap();
    assert_eq!(fixture.variables, ["a0", "a1", "a2"]);
    assert_eq!(fixture.generators, ["a0^2", "2*a0*a1", "a1^2 + 2*a0*a2"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["invariants"]["krull_dimension"], 1);
}

#[test]
fn analyze_reports_failed_clauses_in_exit_code() {
    // x^2, x*y is not a complete intersection with finite quotient.
    let f = fixture_file(r#"{"variables": ["x", "y"], "generators": ["x^2", "x*y"]}"#);
    let o = multalg(&["analyze", "--file", f.path().to_str().unwrap(), "--json"]);
    let report = json(&o);
    assert_eq!(report["finite_dimensional"], false);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn verify_passes_and_corruption_fails() {
    let clean = multalg(&["verify", "--json"]);
    let summary = json(&clean);
    assert_eq!(clean.status.code(), Some(0), "{}", stdout(&clean));
    assert_eq!(summary["failed"], 0);

    let bad = multalg(&["verify", "--inject-corruption", "--filter", "jet/", "--json"]);
    let summary = json(&bad);
    assert_eq!(bad.status.code(), Some(1));
    let failed: Vec<&str> = summary["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["jet/order-3-rescaled"]);
}

#[test]
fn verify_output_is_deterministic() {
    let a = multalg(&["verify", "--filter", "weights/", "--json"]);
    let b = multalg(&["verify", "--filter", "weights/", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(multalg_stdin(&["analyze"], "{not json").status.code(), Some(2));
    let f = fixture_file(r#"{"variables": ["x"], "generators": ["x^^2"]}"#);
    assert_eq!(multalg(&["analyze", "--file", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(multalg(&["orbit", "1,2"]).status.code(), Some(2));
    assert_eq!(multalg(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(multalg(&["analyze", "--file", "/nonexistent/fixture.json"]).status.code(), Some(2));
}

#[test]
fn resource_cap_exits_3() {
    let f = fixture_file(&RingFixture::from_json(&stdout(&multalg(&["grassmann", "-n", "5", "-k", "2", "--json"]))).unwrap().to_json());
    let o = multalg(&["--max-pairs", "1", "analyze", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn weight_subcommands() {
    assert_eq!(stdout(&multalg(&["orbit", "3,0"])).trim(), "2");
    let v = json(&multalg(&["orbit", "2,2,0,0", "--json"]));
    assert_eq!(v["orbit_size"], "6");
    let d = json(&multalg(&["dominance", "1,1,0", "2,0,0", "--json"]));
    assert_eq!(d["relation"], "<");
    let neg = json(&multalg(&["dominance", "0,-1", "1,-2", "--json"]));
    assert_eq!(neg["leq"], true);
    let h = json(&multalg(&["hitchin-weights", "-n", "3", "-g", "2", "--json"]));
    assert_eq!(h["count"], 10);
    let c = json(&multalg(&["closure", "2,1,0", "--json"]));
    assert_eq!(c["strata"].as_array().unwrap().len(), 2);
}

#[test]
fn equivariant_and_multiplicity_agree_on_grassmannian() {
    let e = json(&multalg(&["equivariant", "--domain", "1,2,1,2", "--codomain", "1,2,3,4", "--json"]));
    let m = json(&multalg(&["multiplicity", "-n", "4", "-m", "0,1,0", "--json"]));
    assert_eq!(e["multiplicity"], m["polynomial"]);
    assert_eq!(e["polynomial"], true);
}

#[test]
fn help_names_the_results() {
    let h = stdout(&multalg(&["analyze", "--help"]));
    assert!(h.contains("Gorenstein") && h.contains("Jacobian"));
    let h = stdout(&multalg(&["multiplicity", "--help"]));
    assert!(h.contains("Product formula"));
}

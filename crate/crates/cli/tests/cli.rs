use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sts(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sts"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(args: &[&str]) -> Value {
    let o = sts(args, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    v[0].clone()
}

#[test]
fn analyze_resolvability_of_product_system() {
    let r = report(&["analyze", "--fixture", "C3", "--ops", "resolvability", "--no-timings"]);
    assert_eq!(r["parallel_class_count"], 406);
    assert_eq!(r["resolution_count"], 12480);
    assert_eq!(r["kts_count"], 18);
    assert_eq!(r["doubly_resolvable"], "skipped");
    assert_eq!(r["chromatic_number"], "skipped");
}

#[test]
fn analyze_configurations_and_cycles() {
    let r = report(&["analyze", "--fixture", "C5", "--ops", "configs,cycles", "--no-timings"]);
    let c = &r["configurations"];
    assert_eq!(c["mitre"], 0);
    assert_eq!(c["crown"], 0);
    assert_eq!(c["prism"], 0);
    assert_eq!(c["hexagon"], 441);
    assert_eq!(r["cycle_lists"].as_array().unwrap().len(), 2);
    assert_eq!(r["aut_order"], "skipped");
    assert!(r.get("timings").is_none());
}

#[test]
fn non_resolvable_order_is_not_applicable() {
    let r = report(&["analyze", "--fixture", "STS13", "--ops", "resolvability", "--no-timings"]);
    assert_eq!(r["parallel_class_count"], "not applicable");
}

#[test]
fn reports_are_reproducible_without_timings() {
    let args = ["analyze", "--fixture", "STS9", "--fixture", "STS15PG", "--no-timings"];
    let a = sts(&args, None);
    let b = sts(&args, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[0]["label"], "STS9");
    assert_eq!(v[1]["label"], "STS15PG");
}

#[test]
fn timings_are_reported_by_default() {
    let r = report(&["analyze", "--fixture", "STS7", "--ops", "aut"]);
    assert!(r["timings"]["aut"].is_number());
    assert_eq!(r["aut_order"], 168);
}

#[test]
fn truncated_code_fails_with_step() {
    let code = stdout(&sts(&["encode", "--fixture", "C3"], None));
    let code = code.trim();
    assert_eq!(code.len(), 70);
    let o = sts(&["decode", &code[..69]], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 70"));
}

#[test]
fn decode_round_trips_through_encode() {
    let code = stdout(&sts(&["encode", "--fixture", "C1"], None));
    let triples = stdout(&sts(&["decode", code.trim()], None));
    assert!(triples.starts_with("v=21\n"));
    let again = sts(&["encode"], Some(&triples));
    assert_eq!(stdout(&again), code);
}

#[test]
fn fixture_dump_validates() {
    let dump = sts(&["fixtures", "dump"], None);
    let listed = stdout(&sts(&["fixtures", "list"], None)).lines().count();
    let o = sts(&["validate"], Some(&stdout(&dump)));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), listed);
}

#[test]
fn invalid_input_exits_one() {
    let o = sts(&["validate"], Some("v=7\n0 1 2\n0 1 3\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn budget_exhaustion_exits_two() {
    let o = sts(&["analyze", "--fixture", "STS15PG", "--heavy", "--budget", "1", "--no-timings"], None);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["aut_order"], "budget exceeded");
}

#[test]
fn generators_and_isomorphism() {
    let fano = stdout(&sts(&["gen", "cyclic", "7", "0,1,3"], None));
    let o = sts(&["iso", fano.trim(), "STS7"], None);
    assert!(stdout(&o).starts_with("isomorphic"));
    let product = stdout(&sts(&["gen", "product", "STS7", "v=3\n0 1 2"], None));
    let o = sts(&["iso", product.trim(), "C3"], None);
    assert!(stdout(&o).starts_with("isomorphic"));
    let o = sts(&["iso", "C1", "C3"], None);
    assert_eq!(stdout(&o), "not isomorphic\n");
}

#[test]
fn switching_and_twins() {
    let listing = stdout(&sts(&["switch-pasch", "F2P1"], None));
    assert_eq!(listing.lines().count(), 2);
    let switched = stdout(&sts(&["switch-pasch", "F2P1", "--instance", "0"], None));
    let other = stdout(&sts(&["switch-pasch", "F2P1", "--instance", "1"], None));
    let o = sts(&["iso", switched.trim(), other.trim()], None);
    assert!(stdout(&o).starts_with("isomorphic"));
    let o = sts(&["switch-pasch", "F2P1", "--instance", "2"], None);
    assert_eq!(o.status.code(), Some(1));
    let twins = stdout(&sts(&["twins", "--fixture", "FTWIN1A"], None));
    assert!(twins.starts_with("FTWIN1A: "));
}

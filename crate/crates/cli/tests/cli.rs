use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn ydcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydcat"))
        .args(args)
        .env_remove("YDCAT_FIXTURE_DIR")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn z2_full_suite_passes() {
    let out = ydcat(&["verify", "--group", &fixture("z2.json"), "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = report(&out);
    assert_eq!(rep["pass"], true);
    assert!(rep["records"].as_array().unwrap().len() > 100);
}

#[test]
fn s3_group_algebra_roundtrip_reports_lambda() {
    let out = ydcat(&[
        "verify",
        "--group",
        &fixture("s3.json"),
        "--algebra",
        "group-algebra-conjugation",
        "--suite",
        "roundtrip",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = report(&out);
    let lambda: Vec<&serde_json::Value> =
        rep["records"].as_array().unwrap().iter().filter(|r| r["check"].as_str().unwrap().starts_with("lambda-")).collect();
    assert!(lambda.len() >= 5);
    for r in lambda {
        assert!(r["residual"].as_f64().unwrap() < 1e-8, "{r}");
    }
}

#[test]
fn roundtrip_subcommand_matches_verify_roundtrip() {
    let a = ydcat(&["roundtrip", "--group", "z3", "--algebra", "function-conjugation"]);
    let b = ydcat(&["verify", "--group", "z3", "--algebra", "function-conjugation", "--suite", "roundtrip"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn missing_fixture_is_a_usage_error() {
    let out = ydcat(&["verify", "--group", "/no/such/fixture.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(ydcat(&["verify", "--group", "z2", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(ydcat(&["verify", "--group", "z2", "--algebra", "nonsense"]).status.code(), Some(2));
    assert_eq!(ydcat(&["describe", "--group", "suq2", "--q", "1.5"]).status.code(), Some(2));
    assert_eq!(ydcat(&["verify", "--group", "suq2", "--suite", "lemmas"]).status.code(), Some(2));
    assert_eq!(ydcat(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = ydcat(&["verify", "--group", "s3", "--suite", "axioms", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["pass"], false);
}

#[test]
fn fixture_directory_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_ydcat"))
        .args(["describe", "--group", "fixtures/d4.json"])
        .env("YDCAT_FIXTURE_DIR", fixtures())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("order 8"));
}

fn describe(args: &[&str]) -> String {
    let out = ydcat(args);
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

fn column(text: &str, key: &str) -> Vec<String> {
    text.lines()
        .filter_map(|l| {
            let mut it = l.split_whitespace().skip_while(|w| *w != key);
            it.next().and(it.next()).map(str::to_owned)
        })
        .collect()
}

#[test]
fn describe_z2() {
    let text = describe(&["describe", "--group", &fixture("z2.json")]);
    assert!(text.contains("irreducibles: 2"));
    assert_eq!(column(&text, "dim"), ["1", "1"]);
}

#[test]
fn describe_s3() {
    let text = describe(&["describe", "--group", "s3"]);
    assert_eq!(column(&text, "dim"), ["1", "1", "2"]);
    assert!(text.contains("sum of squared dimensions: 6"));
}

#[test]
fn describe_suq2_quantum_dimensions() {
    let text = describe(&["describe", "--group", "suq2", "--q", "0.5", "--jmax", "1"]);
    let qd: Vec<f64> = column(&text, "quantum-dim").iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(qd.len(), 3);
    for (got, want) in qd.iter().zip([1.0, 2.5, 5.25]) {
        assert!((got - want).abs() < 1e-8);
    }
}

#[test]
fn same_seed_gives_identical_reports() {
    let args = ["verify", "--group", "z3", "--suite", "functors", "--seed", "7"];
    let a = ydcat(&args);
    let b = ydcat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("ydcat-report-{}.json", std::process::id()));
    let to_file = ydcat(&["verify", "--group", "z2", "--suite", "axioms", "--out", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(0));
    let stdout = ydcat(&["verify", "--group", "z2", "--suite", "axioms"]);
    assert_eq!(std::fs::read(&path).unwrap(), stdout.stdout);
    std::fs::remove_file(path).ok();
}

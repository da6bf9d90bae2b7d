use std::path::Path;
use std::process::{Command, Output};

fn coalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn check_passes_on_builtins_and_good_file() {
    for spec in ["trivial".to_string(), "group:2".into(), "matrix:2".into(), fixture("matrix2.coalg")] {
        let o = coalg(&["check", &spec]);
        assert_eq!(o.status.code(), Some(0), "{spec}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"));
    }
}

#[test]
fn broken_fixture_fails_with_a_witness() {
    let o = coalg(&["check", &fixture("broken.coalg"), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let checks = v["report"]["checks"].as_array().unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_string()));
    assert_eq!(checks[0]["identity"], "coassociativity");
    assert_eq!(checks[0]["passed"], false);
}

#[test]
fn broken_fixture_is_refused_by_builders() {
    let o = coalg(&["homology", &fixture("broken.coalg"), "bar", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("coassociativity"));
}

#[test]
fn parse_errors_exit_two_with_location() {
    let o = coalg(&["check", &fixture("malformed.coalg")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 5"), "{err}");
    assert_eq!(coalg(&["check", "no-such-thing"]).status.code(), Some(2));
    assert_eq!(coalg(&["homology", "trivial", "bar"]).status.code(), Some(2));
    assert_eq!(coalg(&["verify", "trivial", "nonsense"]).status.code(), Some(2));
    assert_eq!(coalg(&["homology", "trivial", "bar", "0"]).status.code(), Some(2));
    assert_eq!(coalg(&["verify", "group:2", "weyl"]).status.code(), Some(2));
}

#[test]
fn resource_guard_exits_three() {
    let o = coalg(&["homology", "matrix:3", "ce", "8"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    assert_eq!(coalg(&["lqt", "matrix:2", "--n", "3", "--max-degree", "5"]).status.code(), Some(3));
    assert_eq!(coalg(&["homology", "group:2", "bar", "4", "--cap", "31"]).status.code(), Some(3));
    assert_eq!(coalg(&["homology", "group:2", "bar", "4", "--cap", "32"]).status.code(), Some(0));
}

#[test]
fn homology_tables() {
    let v = json(&coalg(&["homology", "trivial", "bar", "5", "--json"]));
    assert_eq!(v["report"]["tables"][0]["homology"]["dims"], serde_json::json!([1, 0, 0, 0, 0, 0]));
    let v = json(&coalg(&["homology", "matrix:2", "ce-sym", "4", "--json"]));
    let t = &v["report"]["tables"][0];
    assert_eq!(t["chain_dims"]["dims"], serde_json::json!([1, 4, 6, 4, 1]));
    assert_eq!(t["homology"]["dims"], serde_json::json!([1, 1, 0, 1, 1]));
    let o = coalg(&["homology", "trivial", "cyclic", "6"]);
    assert!(stdout(&o).contains("     6          0          0"), "{}", stdout(&o));
}

#[test]
fn verify_suites_pass() {
    for args in [
        ["verify", "group:2", "homotopy", "--max-degree", "5"],
        ["verify", "trivial", "exactness", "--max-degree", "4"],
        ["verify", "matrix:2", "chainmaps", "--max-degree", "3"],
        ["verify", "matrix:2", "hopf", "--max-degree", "4"],
        ["verify", "matrix:3", "weyl", "--max-m", "3"],
    ] {
        let o = coalg(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn lqt_tables() {
    let o = coalg(&["lqt", "trivial", "--n", "3", "--max-degree", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let lqt = &v["report"]["lqt"];
    assert_eq!(lqt["lie_homology_dims"]["dims"], serde_json::json!([1, 1, 0, 1]));
    assert_eq!(lqt["expected_dims"]["dims"], serde_json::json!([1, 1, 0, 1]));
    assert!(lqt["rows"].as_array().unwrap().iter().all(|r| r["agree"] == true));
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    for args in [
        vec!["verify", "matrix:2", "hopf", "--max-degree", "3", "--seed", "7", "--json"],
        vec!["homology", "group:3", "cyclic", "4", "--seed", "11", "--json"],
        vec!["lqt", "group:2", "--n", "2", "--max-degree", "2", "--json"],
    ] {
        let (a, b) = (coalg(&args), coalg(&args));
        assert_eq!(a.status.code(), b.status.code());
        let (va, vb) = (json(&a), json(&b));
        let ra = serde_json::to_vec(&va["report"]).unwrap();
        let rb = serde_json::to_vec(&vb["report"]).unwrap();
        assert_eq!(ra, rb, "{args:?}");
        assert!(va["timings"].is_array());
        // human output carries no timings and must match byte for byte
        let human: Vec<&str> = args.iter().copied().filter(|a| *a != "--json").collect();
        assert_eq!(coalg(&human).stdout, coalg(&human).stdout);
    }
}

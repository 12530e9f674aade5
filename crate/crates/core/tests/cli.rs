use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(cmd: &str, job: &str, extra: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bendtrop"))
        .arg(cmd)
        .arg("--job")
        .arg(fixture(job))
        .args(extra)
        .env("BENDTROP_THREADS", "2")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).expect("report is JSON")
}

#[test]
fn member_job_on_the_line() {
    let (code, out) = run("member", "line_member.json", &[]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["member"], Value::Bool(true));
    assert_eq!(v["degree"], 1);
    assert_eq!(v["budget"]["max_multiplier_degree"], 3);
}

#[test]
fn derive_job_gives_length_two() {
    let (code, out) = run("derive", "square_derive.json", &[]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["verdict"], "proven");
    assert_eq!(v["result"]["chain_length"], 2);
}

#[test]
fn budget_flags_are_recorded_and_can_starve_the_search() {
    let (code, out) = run(
        "derive",
        "square_derive.json",
        &["--budget-chain", "1", "--budget-frontier", "1"],
    );
    let v = json(&out);
    assert_eq!(v["budget"]["max_chain_length"], 1);
    assert_eq!(v["budget"]["frontier_cap"], 1);
    if v["result"]["verdict"] == "unknown" {
        assert_eq!(code, 2);
    } else {
        assert_eq!(code, 0);
    }
    let (code, _) = run("derive", "square_derive.json", &["--budget-chain", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn limit_job_has_one_family() {
    let (code, out) = run("limit", "quadratic_limit.json", &[]);
    assert_eq!(code, 0);
    let v = json(&out);
    let fams = v["limit"]["families"].as_array().unwrap();
    assert_eq!(fams.len(), 1);
    assert_eq!(fams[0][2]["w"], "-3/2");
    assert_eq!(v["limit"]["matches_valuation_points"], Value::Bool(true));
}

#[test]
fn reports_are_byte_stable() {
    for (cmd, job) in [
        ("trop", "quadratic_trop.json"),
        ("limit", "quadratic_limit.json"),
        ("univ", "f4_univ.json"),
    ] {
        let (_, a) = run(cmd, job, &[]);
        let (_, b) = run(cmd, job, &[]);
        assert_eq!(a, b, "{cmd} report differs between runs");
    }
}

#[test]
fn other_commands_succeed() {
    let (code, out) = run("trop", "quadratic_trop.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["presentation"]["basis"][0], "(-1) + u^2");
    let (code, out) = run("univ", "f4_univ.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["points"]["points"].as_array().unwrap().len(), 1);
    let (code, out) = run("valcheck", "quadratic_valcheck.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["report"]["is_valuation"], Value::Bool(true));
    let (code, out) = run("pi", "line_pi.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["point"]["Y"], "-1");
    let (code, out) = run("axioms", "p2_axioms.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["passed"], Value::Bool(true));
    let (code, out) = run("axioms", "f4_bad_table.json", &[]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["passed"], Value::Bool(false));
}

#[test]
fn malformed_json_reports_position() {
    let out = Command::new(env!("CARGO_BIN_EXE_bendtrop"))
        .args(["trop", "--job"])
        .arg(fixture("malformed.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4 column"), "{err}");
}

#[test]
fn wrong_command_and_missing_file_are_usage_errors() {
    let (code, _) = run("member", "quadratic_trop.json", &[]);
    assert_eq!(code, 1);
    let (code, _) = run("trop", "does_not_exist.json", &[]);
    assert_eq!(code, 1);
    let out = Command::new(env!("CARGO_BIN_EXE_bendtrop"))
        .arg("nonsense")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("bendtrop-out-{}.json", std::process::id()));
    let (code, stdout) = run(
        "trop",
        "quadratic_trop.json",
        &["--out", path.to_str().unwrap()],
    );
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(json(&written)["command"], "trop");
    let _ = std::fs::remove_file(path);
}

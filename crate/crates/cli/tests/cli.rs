//! End-to-end tests of the `mc-choice` binary: exit statuses, report
//! formats, and round trips through dataset files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mc-choice"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn generate_reproduces_the_bundled_veto_table() {
    let out = run(&[
        "generate",
        "--weak-order",
        "x,y,z",
        "--linear-order",
        "x > y > z",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let generated = mc_core::dataset::parse_dataset(&stdout(&out)).unwrap();
    assert_eq!(generated, mc_core::fixtures::indifference_veto());
}

#[test]
fn generate_then_recover_round_trips() {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("tied_top.json");
    let out = run(&[
        "generate",
        "--weak-order",
        "x,y > z",
        "--linear-order",
        "z > y > x",
        "--labels",
        "x,y,z",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));

    let out = run(&["recover", "--in", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("exact match"));

    // regenerating from the recovered pair reproduces the same table
    let recovered = stdout(&out);
    let weak = recovered
        .lines()
        .find_map(|l| l.strip_prefix("weak order:"))
        .unwrap()
        .trim()
        .to_owned();
    let linear = recovered
        .lines()
        .find_map(|l| l.strip_prefix("linear order:"))
        .unwrap()
        .trim()
        .to_owned();
    let again = run(&[
        "generate",
        "--weak-order",
        &weak,
        "--linear-order",
        &linear,
        "--labels",
        "x,y,z",
    ]);
    assert_eq!(
        mc_core::dataset::parse_dataset(&stdout(&again)).unwrap(),
        mc_core::dataset::parse_dataset(&std::fs::read_to_string(&path).unwrap()).unwrap()
    );
}

#[test]
fn generate_rejects_bad_orders() {
    let out = run(&["generate", "--weak-order", "x,y", "--linear-order", "x > w"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("--linear-order"));
}

#[test]
fn check_names_cond1_on_the_beta_only_fixture() {
    let out = run(&["check", "--in", fixture("beta_only.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("cond1: fail"));
    assert!(text.contains("beta: pass"));
}

#[test]
fn check_passes_on_a_representable_fixture() {
    let out = run(&[
        "check",
        "--in",
        fixture("indifference_veto.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "conditions all hold on this fixture");
    let text = stdout(&out);
    assert!(text.contains("alpha: fail"));
    assert!(text.contains("cond5: pass"));
}

#[test]
fn check_json_report_shape() {
    let out = run(&[
        "check",
        "--in",
        fixture("indifference_veto.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["axioms"]["beta"]["pass"], serde_json::json!(true));
    assert_eq!(v["axioms"]["beta"]["witness"], serde_json::Value::Null);
    assert_eq!(v["axioms"]["alpha"]["pass"], serde_json::json!(false));
    assert_eq!(
        v["axioms"]["alpha"]["witness"]["menus"],
        serde_json::json!([["x", "y"], ["x", "y", "z"]])
    );
}

#[test]
fn recover_prints_the_pair_on_success() {
    let out = run(&[
        "recover",
        "--in",
        fixture("rational_decisive.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("weak order:   y > x > z"));
    assert!(text.contains("linear order: y > x > z"));
}

#[test]
fn recover_reports_the_failed_condition() {
    let out = run(&[
        "recover",
        "--in",
        fixture("beta_only.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["outcome"], "condition_failed");
    assert_eq!(v["condition"], "cond1");
    assert_eq!(v["witness"]["alternatives"], serde_json::json!(["x", "y"]));
}

#[test]
fn oracle_lists_every_representation() {
    let out = run(&[
        "oracle",
        "--in",
        fixture("rational_decisive.json").to_str().unwrap(),
        "--all",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("representing pairs: 12"));
    assert!(text.contains("R = x,y > z   L = z > y > x"));
    for l in ["x > y > z", "z > y > x", "y > z > x"] {
        assert!(text.contains(&format!("R = y > x > z   L = {l}")));
    }
}

#[test]
fn oracle_exit_reflects_representability() {
    let out = run(&[
        "oracle",
        "--in",
        fixture("impact_coincides.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("representing pairs: 0"));

    let out = run(&[
        "oracle",
        "--in",
        fixture("rational_decisive.json").to_str().unwrap(),
        "--rational",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("rationalizing weak orders: 1"));
    assert!(stdout(&out).contains("y > x > z"));

    let out = run(&[
        "oracle",
        "--in",
        fixture("indifference_veto.json").to_str().unwrap(),
        "--rational",
    ]);
    assert_eq!(exit_code(&out), 1, "an alpha violator is not rationalizable");
}

#[test]
fn sweep_defaults_and_flags() {
    let out = run(&["sweep", "--n", "3", "--shards", "2"]);
    assert_eq!(exit_code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("tables scanned:      189"));
    assert!(text.contains("discrepancies:       0"));

    let out = run(&[
        "sweep", "--n", "3", "--sample", "500", "--seed", "9", "--shards", "2",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("sample(count=500, seed=9)"));

    // n = 4 exhaustive must be requested explicitly
    let out = run(&["sweep", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("--exhaustive"));

    let out = run(&["sweep", "--n", "5", "--exhaustive"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn input_errors_exit_2() {
    let out = run(&["check", "--in", "/nonexistent/file.json"]);
    assert_eq!(exit_code(&out), 2);

    let incomplete = Path::new(env!("CARGO_TARGET_TMPDIR")).join("incomplete.json");
    std::fs::write(
        &incomplete,
        r#"{"alternatives": ["x", "y", "z"],
            "choices": [{"menu": ["x", "y"], "choice": ["x"]}]}"#,
    )
    .unwrap();
    let out = run(&["recover", "--in", incomplete.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("incomplete domain"));
}

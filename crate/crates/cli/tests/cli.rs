use std::process::{Command, Output};

use serde_json::Value;
use torsionlab::schema;

const BIN: &str = env!("CARGO_BIN_EXE_torsionlab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("TORSIONLAB_SEED").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    schema::validate_text(&text).unwrap_or_else(|e| panic!("schema: {e:?}\n{text}"));
    serde_json::from_str(&text).unwrap()
}

#[test]
fn so31_value_at_one() {
    let out = run(&["compute", "--group", "so(3,1)", "--weight", "1,1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["kind"], "torsion");
    assert_eq!(doc["value"], serde_json::json!(["13", "3"]));
    assert!(out.stderr.is_empty());
}

#[test]
fn weight_accepts_parentheses() {
    let a = run(&["compute", "--group", "so(5,3)", "--weight", "(2,1,1,1)"]);
    let b = run(&["compute", "--group", "so(5,3)", "--weight", "2,1,1,1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn errors_go_to_stdout_as_json_with_exit_2() {
    for (args, code) in [
        (&["compute", "--group", "so(3,1)", "--weight", "1,0"][..], "THETA_INVARIANT_WEIGHT"),
        (&["compute", "--group", "su(2,1)", "--weight", "1,0"], "BAD_GROUP"),
        (&["dim", "--group", "so(4,4)", "--weight", "1,1,1,1"], "UNSUPPORTED_GROUP"),
        (&["compute", "--group", "so(5,3)", "--weight", "1,1"], "WRONG_LENGTH"),
        (&["compute", "--group", "so(5,3)", "--weight", "1,2,1,1"], "NOT_DOMINANT"),
        (&["compute", "--group", "sl3", "--weight", "1,0", "--m", "-1"], "BAD_PARAMETER"),
        (&["plancherel", "--group", "sl3", "--sigma", "(m"], "BAD_SIGMA"),
        (&["gap", "--group", "so(3,1)", "--weight", "1,1", "--m", "1", "--p", "0"], "UNSUPPORTED_GROUP"),
        (&["no-such-command"], "USAGE"),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let doc = json(&out);
        assert_eq!(doc["kind"], "error");
        assert_eq!(doc["code"], code, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}: no diagnostic");
    }
}

#[test]
fn vanishing_group_reports_zero() {
    let doc = json(&run(&["compute", "--group", "so(4,3)", "--weight", "1,1,1", "--m", "2"]));
    assert_eq!(doc["zero_flag"], true);
    assert_eq!(doc["delta"], 0);
    assert_eq!(doc["value"], serde_json::json!(["0", "1"]));
}

#[test]
fn latex_output() {
    let out = run(&["compute", "--group", "so(3,1)", "--weight", "1,1", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(r"2 m^{2} + 2 m + \frac{1}{3}"), "{text}");
    assert!(text.starts_with(r"-\frac{\pi \mathrm{vol}(X)}"), "{text}");
}

#[test]
fn dim_matches_weyl_formula() {
    let doc = json(&run(&["dim", "--group", "sl3", "--weight", "1,0", "--m", "2"]));
    assert_eq!(doc["value"], serde_json::json!(["6", "1"]));
    let doc = json(&run(&["dim", "--group", "sl3", "--weight", "2,1", "--m", "1"]));
    assert_eq!(doc["value"], serde_json::json!(["15", "1"]));
}

#[test]
fn kostant_table_for_so53() {
    let doc = json(&run(&["kostant", "--group", "so(5,3)", "--weight", "1,1,1,1"]));
    let rows = doc["data"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["casimir_split"] == true));
}

#[test]
fn gap_examples() {
    let doc = json(&run(&["gap", "--weight", "1,0", "--m", "1", "--p", "1"]));
    assert_eq!(doc["gap"], serde_json::json!(["-20", "9"]));
    let doc = json(&run(&["gap", "--weight", "0,0", "--m", "1", "--p", "0"]));
    assert_eq!(doc["gap"], serde_json::json!(["0", "1"]));
}

#[test]
fn constants_table_lists_every_odd_pair() {
    let doc = json(&run(&["table", "corollary-constants"]));
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2 + 3 + 4 + 5 + 2);
    assert!(rows.iter().all(|r| r["leading_constant"] == serde_json::json!(["1", "1"]) || r["group"] == "sl3"));
}

#[test]
fn seed_precedence() {
    let bad_env = Command::new(BIN).args(["verify", "--max-rank", "1"]).env("TORSIONLAB_SEED", "nope").output().unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
    assert_eq!(json(&bad_env)["code"], "USAGE");
    let flag_wins = Command::new(BIN)
        .args(["verify", "--seed", "11", "--max-rank", "1"])
        .env("TORSIONLAB_SEED", "nope")
        .output()
        .unwrap();
    assert_eq!(json(&flag_wins)["seed"], 11);
}

#[test]
fn regenerated_corpus_matches_shipped_file() {
    let dir = std::env::temp_dir().join(format!("torsionlab-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golden.jsonl");
    let out = run(&["golden", "regenerate", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let fresh = std::fs::read_to_string(&path).unwrap();
    assert_eq!(fresh, torsionlab::golden::EMBEDDED);
    std::fs::remove_dir_all(dir).unwrap();
}

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwahori")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn classify_lists_every_level_up_to_the_requested_one() {
    assert_eq!(stdout(&["classify", "[2, t^-1]", "--level", "I3"]), "I: E_2\nI1: E_2:hyp\nI2: E_2:hyp\nI3: E_2:hyp,open\n");
    assert_eq!(stdout(&["classify", "[0, t^-1]", "--level", "I"]), "I: O_-1\n");
    let v = json(&["classify", "[1, 2*t^-1 + 1]"]);
    assert_eq!(v["labels"]["I4Rot"], "E_1:open,open");
    assert_eq!(v["labels"]["I"], "E_1");
    assert_eq!(v["beta"], "2");
    assert_eq!(v["point"], "[1, 2*t^-1 + 1]");
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&["orbit-info", "O_-2:open", "--level", "I2"]);
    let v = json(&["orbit-info", "O_-2:open", "--level", "I2"]);
    assert!(text.contains(&format!("distinguished point: {}", v["distinguished_point"].as_str().unwrap())));
    assert_eq!(v["distinguished_point"], "[1, t^-2]");
    assert_eq!(v["dimension"], serde_json::json!([1, 2]));
    assert_eq!(v["involution"], Value::Null);
    assert!(text.contains("involution: undefined at level I2"));
}

#[test]
fn point_commands() {
    assert_eq!(stdout(&["normal-form", "[[1, t^-1], [0, 1]]"]), "[0, t^-1]\n");
    assert_eq!(stdout(&["act", "[[1, 0], [t, 1]]", "[-1, 0]"]), "[0, -t^-1]'\n");
    assert_eq!(stdout(&["rotate", "2", "[1, t^-1 + 1]"]), "[1, t^-1 + 2]\n");
    assert_eq!(stdout(&["involute", "[1, t^-1]"]), "[1, -t^-1]\n");
    assert_eq!(stdout(&["involute", "[0, 1]'"]), "[0, -1]'\n");
    assert_eq!(stdout(&["sample", "E_1:hyp,hyp", "--level", "I3", "--seed", "7"]), "[1, 0]\n");
    assert_eq!(
        stdout(&["sample", "E_2:open,hyp", "--level", "I4Rot", "--seed", "3"]),
        stdout(&["sample", "E_2:open,hyp", "--level", "I4Rot", "--seed", "3"])
    );
}

#[test]
fn labels_table() {
    let text = stdout(&["labels", "--level", "I", "--n-min", "0", "--n-max", "0"]);
    assert_eq!(text, "E_0  (0, 0)  point\nO_0  (0, 1)\n");
    let v = json(&["labels", "--level", "I4Rot", "--n-min", "-1", "--n-max", "1"]);
    let points: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["point_orbit"] == true)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(points, ["O_-1:hyp", "E_0", "O_0:hyp", "E_1:hyp,hyp"]);
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "--check", "beta", "--seed", "5"]);
    let report = &v[0];
    assert_eq!(report["check_name"], "beta");
    assert_eq!(report["master_seed"], 5);
    assert_eq!(report["failures"], serde_json::json!([]));
    assert_eq!(report.as_object().unwrap().len(), 4);
    let text = stdout(&["verify", "--check", "involution"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

#[test]
fn exit_codes() {
    for args in [
        &["classify", "[2, t^"][..],
        &["normal-form", "[[1,1],[1,1]]"],
        &["involute"],
        &["frobnicate"],
        &["orbit-info", "E_1", "--level", "I1"],
        &["orbit-info", "E_7:sideways", "--level", "I1"],
        &["verify", "--check", "nothing"],
        &["labels", "--level", "I", "--n-min", "2", "--n-max", "1"],
        &["rotate", "0", "[1, t^-1]"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(run(&["classify", "[2, t^"]).stderr).unwrap();
    assert!(err.contains("position 6"), "{err}");
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

//! Runs the `schurkit` binary and checks its output and exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurkit"))
        .args(args)
        .env_remove("SCHURKIT_MAX_WEIGHT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["nl", "--left", "[1]", "--right", "[1]", "--flavor", "sp"]),
        "<2> + <1,1> + <0>"
    );
    assert_eq!(
        stdout(&["series", "--id", "L", "--cap", "3"]),
        "1 - s[1] + s[1,1] - s[1,1,1]"
    );
    assert_eq!(stdout(&["prod", "s[1]", "s[1]"]), "s[2] + s[1,1]");
}

#[test]
fn algebra_subcommands() {
    assert_eq!(stdout(&["inner", "s[1,1]", "s[1,1]"]), "s[2]");
    assert_eq!(stdout(&["coprod", "s[2]"]), "s[2]⊗1 + s[1]⊗s[1] + 1⊗s[2]");
    assert_eq!(stdout(&["icoprod", "p[3]"]), "p[3]⊗p[3]");
    assert_eq!(stdout(&["skew", "s[2,1]", "s[1]"]), "s[2] + s[1,1]");
    assert_eq!(stdout(&["antipode", "s[2]"]), "s[1,1]");
    assert_eq!(stdout(&["scalar", "p[2]", "p[2]"]), "2");
    assert_eq!(stdout(&["kostka", "[2,1]", "[1,1,1]"]), "2");
    assert_eq!(stdout(&["char", "[1,1]", "[2]"]), "-1");
    assert_eq!(stdout(&["prod", "s[1]", "s[1]", "--basis", "p"]), "p[1,1]");
    assert_eq!(stdout(&["prod", "1/2*p[2] + 1/2*p[1,1]", "1", "--basis", "s"]), "s[2]");
}

#[test]
fn transition_table() {
    assert_eq!(
        stdout(&["transition", "--from", "h", "--to", "s", "--n", "2"]),
        "          s[2]  s[1,1]\nh[2]         1       0\nh[1,1]       1       1"
    );
    let v = json(&["transition", "--from", "e", "--to", "m", "--n", "2"]);
    assert_eq!(v["matrix"], serde_json::json!([["0", "1"], ["1", "2"]]));
}

#[test]
fn series_branching_and_products() {
    assert_eq!(stdout(&["series", "--id", "M", "--max-weight", "2"]), "1 + s[1] + s[2]");
    let capped = Command::new(env!("CARGO_BIN_EXE_schurkit"))
        .args(["series", "--id", "D"])
        .env("SCHURKIT_MAX_WEIGHT", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(capped.stdout).unwrap().trim_end(), "1 + s[2]");
    assert_eq!(
        stdout(&["branch", "--series", "M", "--input", "s[2,1]"]),
        "s[1] + s[2] + s[1,1] + s[2,1]"
    );
    assert_eq!(
        stdout(&["branch", "--series", "D", "--inverse", "--input", "s[2]"]),
        "-1 + s[2]"
    );
    assert_eq!(
        stdout(&["dprod", "--series", "M", "--left", "s[1]", "--right", "s[1]"]),
        "s[2] + s[1,1]"
    );
    assert_eq!(
        stdout(&["circle", "--pairing", "schur", "--left", "s[1]", "--right", "s[1]"]),
        "1 + s[2] + s[1,1]"
    );
    assert_eq!(
        stdout(&["circle", "--pairing", "schur-inv", "--left", "s[1]", "--right", "s[1]"]),
        "-1 + s[2] + s[1,1]"
    );
    assert_eq!(
        stdout(&["circle", "--variant", "7", "--left", "s[1]", "--right", "s[1]"]),
        "s[2] + s[1,1]"
    );
    assert_eq!(
        stdout(&["circle", "--pairing", "counit", "--left", "s[2]", "--right", "s[1]"]),
        "s[3] + s[2,1]"
    );
    assert_eq!(stdout(&["nl", "--left", "[2]", "--right", "[1]"]), "[3] + [2,1] + [1]");
}

#[test]
fn cohomology_and_cases() {
    let out = stdout(&[
        "classify-cochain",
        "--arity",
        "1",
        "--def",
        "series:M",
        "--max-weight",
        "6",
    ]);
    assert!(out.starts_with("cocycle"), "{out}");
    let v = json(&[
        "classify-cochain",
        "--arity",
        "1",
        "--def",
        "series:D",
        "--max-weight",
        "4",
    ]);
    assert_eq!(v["class"], "generic");
    let v = json(&[
        "classify-cochain",
        "--arity",
        "2",
        "--def",
        "d(series:D)",
        "--max-weight",
        "4",
    ]);
    assert_eq!(v["class"], "coboundary");
    let v = json(&["check-case", "IV", "--max-weight", "3"]);
    assert_eq!(v["holds"], false);
    assert_eq!(v["ratios"][2]["ratio"], "3");
    assert!(stdout(&["check-case", "I", "--max-weight", "4"]).contains("holds"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["prod", "s[2", "s[1]"]).status.code(), Some(2));
    assert_eq!(run(&["prod", "q[2]", "s[1]"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["prod", "s[6]", "s[1]", "--max-weight", "5"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["circle", "--variant", "9", "--left", "s[1]", "--right", "s[1]"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["char", "[2]", "[1]"]).status.code(), Some(1));
    assert_eq!(run(&["series", "--id", "Z"]).status.code(), Some(1));
}

#[test]
fn json_matches_text_and_schema() {
    let validator = schema();
    let cases: [&[&str]; 7] = [
        &["prod", "s[2,1]", "s[1]"],
        &["coprod", "s[2,1]"],
        &["series", "--id", "D", "--cap", "4"],
        &["inner", "s[2]", "p[1,1]"],
        &["antipode", "h[2] - 1/3*e[1]", "--basis", "m"],
        &["nl", "--left", "[1]", "--right", "[1]", "--flavor", "sp"],
        &["scalar", "s[2]", "h[2]"],
    ];
    for args in cases {
        let v = json(args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}\n{v}");
    }
    let v = json(&["prod", "s[2,1]", "s[1]"]);
    let terms: Vec<String> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let parts: Vec<String> = t["partition"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect();
            format!("s[{}]", parts.join(","))
        })
        .collect();
    assert_eq!(terms.join(" + "), stdout(&["prod", "s[2,1]", "s[1]"]));

    let err = run(&["prod", "s[2", "s[1]", "--json"]);
    let v: Value = serde_json::from_slice(&err.stdout).unwrap();
    assert!(validator.is_valid(&v), "{v}");
}

#[test]
fn non_canonical_input_is_flagged() {
    let v = json(&["prod", "s[1,2]", "s[]"]);
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([2, 1]));
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    assert!(json(&["prod", "s[2,1]", "s[]"])["warnings"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn selftest_small() {
    let out = run(&["selftest", "--max-weight", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("criterion")).collect();
    assert_eq!(lines.len(), 10, "{text}");
    assert!(text.contains("criteria passed"));
}

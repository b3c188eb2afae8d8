use std::fs;
use std::process::{Command, Output};

fn icalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icalc")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn script(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const HEADER: &str = "ring S = poly(p=2; T,X,Y,Z)\nlet P = ideal(T*Y - X*Z, T^2*X - Z^2, T*X^2 - Y*Z, X^3 - Y^2)\nlet Q = ideal(T, X, Y)\n";

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = script(&dir, "ok.icl", &format!("{HEADER}check equal(meet(P, Q), ideal(T*Y - X*Z, T*X^2 - Y*Z, X^3 - Y^2, T^3*X - T*Z^2))\n"));
    assert_eq!(code(&icalc(&["run", &ok])), 0);

    let bad = script(&dir, "bad.icl", &format!("{HEADER}check equal(meet(P, Q), ideal(T*Y - X*Z))\n"));
    let out = icalc(&["run", &bad]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("left: [T^3*X + T*Z^2, T*X^2 + Y*Z, X^3 + Y^2, T*Y + X*Z]"), "{text}");
    assert!(text.contains("right: [T*Y + X*Z]"), "{text}");

    let syntax = script(&dir, "syntax.icl", "ring S = poly(p=2; x)\nlet I = ideal(x,)\n");
    let out = icalc(&["run", &syntax]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("2:17"));

    let eval = script(&dir, "eval.icl", "ring S = poly(p=4; x)\n");
    assert_eq!(code(&icalc(&["run", &eval])), 3);

    let empty = script(&dir, "empty.icl", "");
    assert_eq!(code(&icalc(&["run", &empty])), 0);

    assert_eq!(code(&icalc(&["run", "/nonexistent/file.icl"])), 2);
    assert_eq!(code(&icalc(&["frobnicate"])), 2);
    let out = icalc(&["repro", "nope"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    for name in ["badintersect", "badcolon", "contain-demo", "cmdvr-demo"] {
        assert!(err.contains(name));
    }
}

#[test]
fn json_file_and_options() {
    let dir = tempfile::tempdir().unwrap();
    let src = script(&dir, "demo.icl", &format!("{HEADER}let I = ideal(Z, X - T)\ncheck member(X*Y, I + meet(P, Q))\n"));
    let json = dir.path().join("out.json");
    let out = icalc(&["run", &src, "--json", json.to_str().unwrap(), "--order", "lex", "--seed", "3", "--emax", "2"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["scenario"], "demo");
    assert_eq!(doc["seed"], 3);
    assert_eq!(doc["checks"][0]["pass"], true);
    assert!(doc["entries"][0]["data"]["ring"].as_str().unwrap().contains("(lex)"));
}

#[test]
fn every_scenario_reproduces() {
    for name in ["badintersect", "badcolon", "contain-demo", "cmdvr-demo"] {
        let out = icalc(&["repro", name, "--json"]);
        assert_eq!(code(&out), 0, "{name}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["scenario"], name);
        assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    }
}

#[test]
fn repro_badcolon_reports_expected_values() {
    let out = icalc(&["repro", "badcolon", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = doc["entries"].as_array().unwrap();
    let find = |label: &str| entries.iter().find(|e| e["label"] == label).unwrap().clone();
    let ne = find("report closedness(ideal(0), ne)");
    assert_eq!(ne["data"]["dc_generators"], serde_json::json!(["X"]));
    assert_eq!(ne["data"]["witness"], "X");
    assert_eq!(ne["data"]["status"], "not_closed_certified");
    let tight = find("report closedness(ideal(0), tight)");
    assert_eq!(tight["data"]["status"], "inconclusive");
    assert!(tight["data"].get("witness").is_none());

    let out = icalc(&["repro", "badintersect", "--json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = doc["entries"].as_array().unwrap();
    let s = entries.iter().find(|e| e["kind"] == "structural").unwrap();
    assert_eq!(s["data"]["status"], "not_closed_certified");
}

#[test]
fn check_suite_runs() {
    let out = icalc(&["check-suite", "--cases", "25", "--seed", "5"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 7);
}

//! End-to-end tests of the compiled binary: commands, formats, exit codes,
//! and byte-for-byte determinism.

use std::process::Output;

use serde_json::Value;

fn cmreg(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_cmreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn json(output: &Output) -> Value {
    serde_json::from_str(&stdout(output)).expect("stdout is JSON")
}

#[test]
fn bound_human_report() {
    let out = cmreg(&["bound", "--spec", "elliptic-quartic", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("regularity bound: 3"), "{text}");
    assert!(text.contains("ranks a_i = [1, 3, 5]"), "{text}");
    assert!(text.contains("rk E = 3, c1(E) = -1"), "{text}");
}

#[test]
fn table_json_schema() {
    let out = cmreg(&["table", "--spec", "twisted-cubic", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["spec"]["name"], "twisted-cubic");
    assert_eq!(doc["spec"]["dim"], 1);
    assert_eq!(doc["spec"]["ambient"], 3);
    assert_eq!(doc["spec"]["coeffs"], Value::from(vec![1, 3]));
    assert_eq!(doc["rows"][0]["m"], 2);
    assert_eq!(doc["rows"][0]["status"], "ran-extended");
    assert_eq!(doc["rows"][0]["bound"], 2);
    assert_eq!(doc["rows"][0]["provenance"], "hilbert-sum");
    assert_eq!(doc["rows"][1]["m"], 3);
    assert_eq!(doc["rows"][1]["status"], "identity");
    assert_eq!(doc["best"], 2);
    assert_eq!(doc["comparisons"]["eisenbud_goto"], 2);
    assert_eq!(doc["comparisons"]["mumford"], 4);
    assert_eq!(doc["comparisons"]["bel"], 5);
}

#[test]
fn table_csv_exact_bytes() {
    let out = cmreg(&["table", "--spec", "elliptic-quartic", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "m,status,bound,eg,mumford,bel\n\
         2,ran-extended,3,3,6,7\n\
         3,identity,4,3,6,7\n"
    );
}

#[test]
fn table_custom_m_list() {
    let out = cmreg(&["table", "--spec", "rnc-6", "--m", "3", "--m", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let m_column: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|line| line.split(',').next().unwrap())
        .collect();
    assert_eq!(m_column, ["3", "5"]);
}

#[test]
fn inline_and_file_specs_agree() {
    let inline = r#"{"family":"curve","d":4,"g":1,"r":3,"name":"elliptic-quartic"}"#;
    let from_inline = cmreg(&["table", "--spec", inline, "--format", "json"]);
    assert_eq!(from_inline.status.code(), Some(0));

    let path = std::env::temp_dir().join(format!("cmreg-spec-{}.json", std::process::id()));
    std::fs::write(&path, inline).unwrap();
    let from_file = cmreg(&["table", "--spec", path.to_str().unwrap(), "--format", "json"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file.status.code(), Some(0));

    assert_eq!(stdout(&from_inline), stdout(&from_file));
    let from_catalog = cmreg(&["table", "--spec", "elliptic-quartic", "--format", "json"]);
    assert_eq!(stdout(&from_inline), stdout(&from_catalog));
}

#[test]
fn values_spec_interpolates() {
    let spec = r#"{"dim":1,"ambient":3,"values":[[0,0],[1,4]]}"#;
    let out = cmreg(&["bound", "--spec", spec, "--m", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rows"][0]["bound"], 3);
}

#[test]
fn ranks_json_fixture() {
    let out = cmreg(&["ranks", "--spec", "elliptic-quartic", "--m", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["ranks"], Value::from(vec![1, 3, 5]));
    assert_eq!(doc["rk_e"], 3);
    assert_eq!(doc["c1_e"], -1);
    assert_eq!(doc["profile_bound"], 1);
    assert_eq!(doc["regularity_bound"], 3);
    assert!(doc["resolution"].as_str().unwrap().contains("(**)"));
}

#[test]
fn splittings_json_fixture() {
    let out = cmreg(&["splittings", "--spec", "elliptic-quartic", "--secant", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["rk_e"], 5);
    assert_eq!(doc["c1_e"], -2);
    assert_eq!(doc["twist_range"], Value::from(vec![-1, 0]));
    assert_eq!(doc["max_secant"], 3);
    assert_eq!(doc["splittings"][0]["components"], Value::from(vec![0, 0, 0, -1, -1]));
    assert_eq!(doc["secant"]["length"], 2);
    assert_eq!(doc["secant"]["components"], Value::from(vec![0, 0, 0, -1, -1]));
}

#[test]
fn verify_small_box_passes() {
    let out = cmreg(&["verify", "--rmax", "6", "--lmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("coefficient-identity"), "{text}");
    assert!(text.contains("6/6 checks passed"), "{text}");

    let out = cmreg(&["verify", "--rmax", "6", "--lmax", "4", "--format", "json"]);
    let doc = json(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn catalog_lists_and_verifies_entries() {
    let out = cmreg(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("twisted-cubic"));
    assert!(text.contains("scroll-4-9"));

    let doc = json(&cmreg(&["catalog", "--format", "json"]));
    let entries = doc["entries"].as_array().unwrap();
    assert!(entries.len() >= 11);
    for entry in entries {
        assert_eq!(
            entry["best"], entry["expected"],
            "catalog entry {} must compute its expected bound",
            entry["name"]
        );
    }
}

#[test]
fn exit_2_on_validation_errors() {
    let out = cmreg(&["bound", "--spec", "elliptic-quartic", "--m", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));

    let out = cmreg(&["bound", "--spec", "no-such-variety", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = cmreg(&["table", "--spec", r#"{"family":"curve","d":3,"g":0,"r":3,"x":1}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unexpected field `x`"));

    // Unknown subcommands and flags are usage errors.
    let out = cmreg(&["bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_3_on_inconsistent_profile() {
    let degenerate = r#"{"dim":1,"ambient":3,"coeffs":[1,2]}"#;
    let out = cmreg(&["bound", "--spec", degenerate, "--m", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("a_1 = -1"));

    // The table command prints the full report, then signals via the code.
    let out = cmreg(&["table", "--spec", degenerate]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("best certified bound: none"), "{text}");

    let out = cmreg(&["ranks", "--spec", degenerate, "--m", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_4_on_impossible_secant() {
    // Arithmetically impossible: the forced multiplicities go negative.
    let out = cmreg(&["splittings", "--spec", "twisted-cubic", "--secant", "3"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("no length-3 secant"));

    // Arithmetically fine (n1 = 0, n2 = 4) but the forced summand O(-2)
    // falls below the component floor O(-1): max secant length is 3.
    let out = cmreg(&["splittings", "--spec", "elliptic-quartic", "--secant", "4"]);
    assert_eq!(out.status.code(), Some(4));
    let err = stderr(&out);
    assert!(err.contains("no length-4 secant"), "stderr: {err}");
    assert!(err.contains("component floor O(-1)"), "stderr: {err}");
    assert!(err.contains("max secant length 3"), "stderr: {err}");

    // The longest possible secant itself still renders.
    let out = cmreg(&["splittings", "--spec", "elliptic-quartic", "--secant", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("a 3-secant line forces"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--spec", "del-pezzo-quartic", "--format", "json"][..],
        &["table", "--spec", "scroll-3-7"][..],
        &["verify", "--rmax", "5", "--lmax", "3"][..],
    ] {
        let first = cmreg(args);
        let second = cmreg(args);
        assert_eq!(stdout(&first), stdout(&second), "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn assume_fibers_upgrades_unsupported_rows_only() {
    let before = json(&cmreg(&["table", "--spec", "scroll-3-7", "--format", "json"]));
    assert_eq!(before["rows"][0]["status"], "unsupported");
    assert_eq!(before["rows"][1]["status"], "ran-extended");

    let after = json(&cmreg(&["table", "--spec", "scroll-3-7", "--assume-fibers", "--format", "json"]));
    assert_eq!(after["rows"][0]["status"], "assumed");
    assert_eq!(after["rows"][1]["status"], "ran-extended");
    // Assumed rows never contribute to the certified best.
    assert_eq!(after["best"], before["best"]);
}

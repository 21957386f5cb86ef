//! End-to-end checks of the installed binary: formats, exit codes, stream
//! separation, environment handling, and byte-for-byte determinism.

use std::process::{Command, Output};

fn hypotria(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypotria"))
        .args(args)
        .env_remove("HYPOTRIA_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn generate_json_is_a_versioned_record() {
    let out = hypotria(&["generate", "--max-c", "15", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["schema_version"], "1");
    assert_eq!(record["command"], "generate");
    let results = record["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert_eq!(results[0]["d"], "1");
    assert_eq!(results[0]["c"], "5");
}

#[test]
fn special_altitude_reports_the_exact_lengths() {
    let out = hypotria(&[
        "special", "altitude", "--d", "25", "--m", "2", "--n", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let result = &record["results"][0];
    assert_eq!(result["h"], "60/1");
    assert_eq!(result["h1"], "45/1");
    assert_eq!(result["h2"], "80/1");
    assert_eq!(result["x"], "36/1");
    assert_eq!(result["y"], "48/1");
}

#[test]
fn six_reports_rejections_and_hits() {
    let out = hypotria(&["six", "--d", "5", "--m", "2", "--n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(record["results"]["configs"].as_array().unwrap().is_empty());
    let rejected: Vec<&str> = record["results"]["rejected_sums"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(rejected, ["265", "180", "145", "160"]);

    let out = hypotria(&["six", "--d", "12", "--m", "2", "--n", "1", "--format", "json"]);
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let configs = record["results"]["configs"].as_array().unwrap();
    assert_eq!(configs.len(), 2);
    assert_eq!(configs[0]["delta"], "6");
    assert_eq!(configs[0]["inner_hypotenuse"], "30");
    assert_eq!(configs[1]["delta"], "7");
    assert_eq!(configs[1]["inner_hypotenuse"], "29");
}

#[test]
fn usage_errors_exit_2_with_clean_stdout() {
    let out = hypotria(&["generate", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = hypotria(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1_with_clean_stdout() {
    let out = hypotria(&["six", "--d", "4", "--m", "3", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("invalid generator pair"));

    let out = hypotria(&["recover", "--a", "3", "--b", "4", "--c", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not a Pythagorean triple"));
}

#[test]
fn help_and_version_exit_0_on_stdout() {
    let out = hypotria(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    assert!(stdout(&out).contains("decompose"));

    let out = hypotria(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("hypotria"));
}

#[test]
fn format_env_variable_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_hypotria"))
        .args(["generate", "--max-c", "15"])
        .env("HYPOTRIA_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["command"], "generate");
}

#[test]
fn format_flag_overrides_the_env_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_hypotria"))
        .args(["generate", "--max-c", "15", "--format", "csv"])
        .env("HYPOTRIA_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("d,m,n,a,b,c\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn invalid_format_env_value_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_hypotria"))
        .args(["generate", "--max-c", "15"])
        .env("HYPOTRIA_FORMAT", "yaml")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["generate", "--max-c", "200", "--format", "json"],
        vec!["six", "--d", "12", "--m", "2", "--n", "1", "--format", "csv"],
        vec![
            "decompose", "--a", "75", "--b", "100", "--c", "125", "--t", "9/25",
        ],
        vec!["verify", "lemma2-coprime", "--bound", "50", "--format", "json"],
    ] {
        let first = hypotria(&args);
        let second = hypotria(&args);
        assert_eq!(first.status.code(), second.status.code());
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn decompose_accepts_either_position_form() {
    let by_t = hypotria(&[
        "decompose", "--a", "75", "--b", "100", "--c", "125", "--t", "9/25", "--format", "json",
    ]);
    let by_h1 = hypotria(&[
        "decompose", "--a", "75", "--b", "100", "--c", "125", "--h1", "45", "--format", "json",
    ]);
    assert_eq!(by_t.status.code(), Some(0));
    assert_eq!(by_h1.status.code(), Some(0));
    let rec_t: serde_json::Value = serde_json::from_str(&stdout(&by_t)).unwrap();
    let rec_h: serde_json::Value = serde_json::from_str(&stdout(&by_h1)).unwrap();
    assert_eq!(rec_t["results"], rec_h["results"]);
    assert_eq!(rec_t["results"][0]["x"], "36/1");
    assert_eq!(rec_t["results"][0]["classification"], "integral");
    assert_eq!(rec_t["results"][0]["delta"], "9");
}

#[test]
fn verify_failure_exit_code_is_reserved_for_mismatches() {
    let out = hypotria(&["verify", "thm6-count", "--bound", "100", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["results"]["confirmed"], true);
    assert_eq!(record["results"]["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn positions_lists_both_scaled_copies() {
    let out = hypotria(&[
        "positions", "--d", "3", "--m", "2", "--n", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = record["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["delta"], "1");
    assert_eq!(results[0]["sub_bdp"]["c"], "5");
    assert_eq!(results[0]["sub_pea"]["c"], "10");
    assert_eq!(results[1]["sub_bdp"]["c"], "10");
    assert_eq!(results[1]["sub_pea"]["c"], "5");
}

#[test]
fn text_tables_align_and_suppress_unit_denominators() {
    let out = hypotria(&["special", "bisector", "--d", "7", "--m", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("point"));
    assert!(text.contains("bisector"));
    assert!(!text.contains("/1"));
}

//! Behavioral checks of the command-line surface: exit codes, exact
//! output formats, determinism across repeated runs, and the cache
//! flag.

use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_hrr"))
        .args(args)
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
        output.status.code().unwrap_or(-1),
    )
}

fn tmp(tag: &str) -> String {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR"))
        .join(tag)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn unknown_subcommands_and_flags_exit_with_usage_code() {
    let (_, _, code) = run(&["no-such-command"]);
    assert_eq!(code, 64);
    let (_, _, code) = run(&["kummer-chern", "--n", "2", "--no-such-flag"]);
    assert_eq!(code, 64);
    let (_, _, code) = run(&[]);
    assert_eq!(code, 64);
}

#[test]
fn help_exits_cleanly_and_names_the_content() {
    let (_, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
    let (out, _, code) = run(&["verify", "omega", "--help"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("eigenvector"),
        "help should describe the check"
    );
    let (out, _, code) = run(&["kummer-chern", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Kummer"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["kummer-chern", "--n", "4", "--format", "json"],
        vec!["kummer-chern", "--n", "3", "--format", "csv"],
        vec!["todd-deformed", "--n", "3", "--format", "json"],
    ] {
        let (first, _, code_first) = run(&args);
        let (second, _, code_second) = run(&args);
        assert_eq!(code_first, code_second);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
    }
}

#[test]
fn verify_omega_degree_zero_prints_ok() {
    let (out, _, code) = run(&["verify", "omega", "--max-degree", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "OK (0 defects)\n");
}

#[test]
fn verify_subcommands_all_pass() {
    let cache = tmp("verify-cache");
    for args in [
        vec!["verify", "omega", "--max-degree", "6", "--cache", &cache],
        vec!["verify", "laexp", "--max-n", "2"],
        vec!["verify", "wheels", "--cache", &cache],
        vec!["verify", "bernoulli-lemma", "--max-weight", "12"],
        vec![
            "verify",
            "scp-partial",
            "--max-degree",
            "4",
            "--cache",
            &cache,
        ],
    ] {
        let (out, err, code) = run(&args);
        assert_eq!(code, 0, "{args:?} failed: {out}{err}");
        assert!(out.ends_with("OK (0 defects)\n"), "{args:?}: {out}");
    }
}

#[test]
fn graph_basis_uses_the_cache_directory() {
    let cache = tmp("basis-cache-flag");
    let _ = std::fs::remove_dir_all(&cache);
    let (first, _, code) = run(&[
        "graph-basis",
        "--legs",
        "2",
        "--trivalent",
        "2",
        "--cache",
        &cache,
    ]);
    assert_eq!(code, 0);
    assert!(PathBuf::from(&cache).join("basis-u2-t2.json").is_file());
    let (second, _, _) = run(&[
        "graph-basis",
        "--legs",
        "2",
        "--trivalent",
        "2",
        "--cache",
        &cache,
    ]);
    assert_eq!(first, second);
    assert!(first.contains("quotient dimension: 2"));
}

#[test]
fn todd_deformed_json_has_the_documented_shape() {
    let (out, _, code) = run(&["todd-deformed", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(doc["n"], 3);
    let coefficients = doc["coefficients"].as_array().expect("array");
    // lambda^0 carries c2 -> 1/12, lambda^1 carries c2 -> 1/24
    let find = |j: usize, monomial: &str| -> Option<String> {
        coefficients[j]["terms"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t["monomial"] == monomial)
            .map(|t| t["value"].as_str().unwrap().to_string())
    };
    assert_eq!(find(0, "c2").as_deref(), Some("1/12"));
    assert_eq!(find(1, "c2").as_deref(), Some("1/24"));
}

#[test]
fn genus_subcommand_prints_the_known_classes() {
    let (out, _, code) = run(&["genus", "--series", "sqrt-todd", "--n", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("1/24 c2"));
    let (out, _, code) = run(&["genus", "--series", "todd", "--n", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("c2^2,1/240"));
    assert!(out.contains("c4,-1/720"));
    let (out, _, code) = run(&["genus", "--series", "chi-y", "--n", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(doc["coefficients"].as_array().unwrap().len(), 3);
}

#[test]
fn fractions_never_render_as_decimals() {
    let (out, _, _) = run(&["todd-deformed", "--n", "2", "--format", "csv"]);
    assert!(!out.contains('.'), "decimal point in exact output: {out}");
    assert!(out.contains("1/12"));
}

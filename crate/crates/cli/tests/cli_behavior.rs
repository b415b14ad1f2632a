//! End-to-end checks of the command line binary: output shapes, exit
//! codes, and the documented error conventions.

use std::path::PathBuf;
use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liealg"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = binary().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("liealg-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write temp file");
    path
}

fn emit(name: &str, field: &str, params: &[&str]) -> PathBuf {
    let mut args = vec!["catalog", "--emit", name, "--field", field];
    for p in params {
        args.push("--params");
        args.push(p);
    }
    let (code, stdout, stderr) = run(&args);
    assert_eq!(code, 0, "emit {name} failed: {stderr}");
    temp_file(&format!("{}.json", name.replace('.', "-")), &stdout)
}

#[test]
fn catalog_list_names_every_family() {
    let (code, stdout, _) = run(&["catalog", "--list"]);
    assert_eq!(code, 0);
    for name in [
        "abelian",
        "heisenberg",
        "sl2",
        "triangular",
        "strictly-triangular",
        "example-3.1",
        "example-3.2",
        "example-4.1",
    ] {
        assert!(stdout.contains(name), "missing {name} in listing");
    }
}

#[test]
fn emitted_documents_validate_cleanly() {
    for (name, field, params) in [
        ("example-3.1", "Q", &[][..]),
        ("example-3.2", "Fp:7", &[]),
        ("example-4.1", "Fp:2", &[]),
        ("abelian", "Fp:5", &["n=3"][..]),
        ("heisenberg", "Q", &["m=2"]),
        ("triangular", "Fp:3", &["k=3"]),
        ("sl2", "Fp:5", &[]),
    ] {
        let path = emit(name, field, params);
        let (code, stdout, _) = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(code, 0, "validate {name}");
        assert!(stdout.contains("valid = yes"));
    }
}

#[test]
fn validate_rejects_garbage_with_exit_one() {
    let path = temp_file("garbage.json", "not a document");
    let (code, _, stderr) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error"));
}

#[test]
fn validate_flags_a_broken_table() {
    // The cyclic sum on (e1, e2, e3) comes to -2 e3, not zero.
    let doc = r#"{
        "name": "broken",
        "dim": 3,
        "field": {"kind": "Q"},
        "brackets": [
            {"i": 1, "j": 2, "v": [[3, "1"]]},
            {"i": 1, "j": 3, "v": [[1, "1"]]},
            {"i": 2, "j": 3, "v": [[2, "1"]]}
        ]
    }"#;
    let path = temp_file("broken.json", doc);
    let (code, stdout, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("valid = no"));
    assert!(stdout.contains("jacobi failure"));

    // Other commands refuse the same file outright.
    let (code, _, stderr) = run(&["info", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("Jacobi"));
}

#[test]
fn unknown_flags_exit_one_not_two() {
    let (code, _, stderr) = run(&["catalog", "--list", "--bogus"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--bogus"));

    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("invariants"));
}

#[test]
fn exact_invariants_match_the_small_example() {
    let path = emit("example-3.1", "Fp:7", &[]);
    let (code, stdout, _) = run(&["invariants", path.to_str().unwrap(), "--exact"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("alpha = 2"));
    assert!(stdout.contains("beta = 1"));

    // The exhaustive strategy agrees.
    let (code, other, _) = run(&[
        "invariants",
        path.to_str().unwrap(),
        "--exact",
        "--strategy",
        "exhaustive",
    ]);
    assert_eq!(code, 0);
    assert!(other.contains("alpha = 2"));
    assert!(other.contains("beta = 1"));
}

#[test]
fn exact_over_the_rationals_is_unsupported() {
    let path = emit("example-3.1", "Q", &[]);
    let (code, _, stderr) = run(&["invariants", path.to_str().unwrap(), "--exact"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unsupported"));
}

#[test]
fn bounds_mode_brackets_the_truth_over_the_rationals() {
    let path = emit("example-3.1", "Q", &[]);
    let (code, stdout, _) = run(&["invariants", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("alpha in [2, 3]"));
    assert!(stdout.contains("beta in ["));
    assert!(stdout.contains("evidence:"));
}

#[test]
fn tiny_budgets_exit_four_with_partial_bounds() {
    let path = emit("example-4.1", "Fp:2", &[]);
    let (code, stdout, _) = run(&[
        "invariants",
        path.to_str().unwrap(),
        "--exact",
        "--budget",
        "10",
    ]);
    assert_eq!(code, 4);
    assert!(stdout.contains("budget of 10 subspace visits exceeded"));
    assert!(stdout.contains("alpha in ["));
}

#[test]
fn classify_walks_the_codimension_two_cases() {
    let path = emit("example-3.1", "Q", &[]);
    let (code, stdout, _) = run(&["classify", path.to_str().unwrap(), "--witness", "e1,e4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("case = ii"));
    assert!(stdout.contains("beta prediction: beta <= 1"));

    let path = emit("example-3.2", "Q", &[]);
    let (code, stdout, _) = run(&["classify", path.to_str().unwrap(), "--witness", "e3,e4"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("case = iii"));
}

#[test]
fn classify_rejects_a_bad_witness_with_exit_one() {
    let path = emit("heisenberg", "Fp:5", &["m=1"]);
    let (code, _, stderr) = run(&["classify", path.to_str().unwrap(), "--witness", "e3"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("alpha"));

    let path = emit("example-3.1", "Fp:7", &[]);
    let (code, _, stderr) = run(&["classify", path.to_str().unwrap(), "--witness", "e1,e2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("abelian"));
}

#[test]
fn verify_runs_single_properties_and_full_suites() {
    let path = emit("example-3.1", "Fp:7", &[]);
    let (code, stdout, _) = run(&[
        "verify",
        path.to_str().unwrap(),
        "--props",
        "T3.5",
        "--witness",
        "e1,e4",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("T3.5    pass"));
    assert!(stdout.contains("case = ii"));

    let (code, stdout, _) = run(&["verify", path.to_str().unwrap(), "--suite", "all"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("P2.1"));
    assert!(stdout.contains("counts:"));
    assert!(stdout.contains("fail = 0"));
}

#[test]
fn verify_needs_exactly_one_selection() {
    let path = emit("sl2", "Fp:5", &[]);
    let (code, _, _) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&[
        "verify",
        path.to_str().unwrap(),
        "--props",
        "P2.1",
        "--suite",
        "all",
    ]);
    assert_eq!(code, 1);
    let (code, _, stderr) = run(&["verify", path.to_str().unwrap(), "--props", "nope"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("nope"));
}

#[test]
fn json_output_carries_the_numbers_from_the_text() {
    let path = emit("example-3.1", "Fp:7", &[]);
    let (code, stdout, _) = run(&["--json", "invariants", path.to_str().unwrap(), "--exact"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("json parses");
    assert_eq!(v["alpha"]["value"], 2);
    assert_eq!(v["beta"]["value"], 1);
    assert_eq!(v["alpha"]["witness"], "e3, e4");

    let (code, stdout, _) = run(&["--json", "info", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("json parses");
    assert_eq!(v["dim"], 4);
    assert_eq!(v["solvable"], true);
}

#[test]
fn thread_count_never_changes_the_bytes() {
    let path = emit("example-3.1", "Fp:7", &[]);
    let one = run(&[
        "--json",
        "--threads",
        "1",
        "verify",
        path.to_str().unwrap(),
        "--suite",
        "all",
    ]);
    let four = run(&[
        "--json",
        "--threads",
        "4",
        "verify",
        path.to_str().unwrap(),
        "--suite",
        "all",
    ]);
    assert_eq!(one.0, 0);
    assert_eq!(one, four);
}

#[test]
fn random_generators_are_reproducible() {
    let a = run(&[
        "random", "--type", "nilpotent", "--dim", "5", "--p", "3", "--seed", "7",
    ]);
    let b = run(&[
        "random", "--type", "nilpotent", "--dim", "5", "--p", "3", "--seed", "7",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert!(a.1.contains("digest = "));

    // A different seed gives a different table.
    let c = run(&[
        "random", "--type", "nilpotent", "--dim", "5", "--p", "3", "--seed", "8",
    ]);
    assert_ne!(a.1, c.1);
}

#[test]
fn random_emit_round_trips_through_validate() {
    let (code, stdout, _) = run(&[
        "random",
        "--type",
        "metabelian-split",
        "--dim",
        "5",
        "--p",
        "3",
        "--seed",
        "5",
        "--split",
        "2",
        "--emit",
    ]);
    assert_eq!(code, 0);
    let path = temp_file("random-emit.json", &stdout);
    let (code, stdout, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("valid = yes"));

    let (code, _, stderr) = run(&[
        "random", "--type", "nilpotent", "--dim", "4", "--p", "3", "--seed", "1", "--split", "2",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("metabelian-split"));
}

#[test]
fn fuzz_reports_a_status_tally() {
    let (code, stdout, _) = run(&[
        "fuzz",
        "--question",
        "OQ1",
        "--trials",
        "6",
        "--seed",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("question = OQ1"));
    assert!(stdout.contains("statuses:"));

    let (code, _, stderr) = run(&["fuzz", "--question", "nope"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("nope"));
}

//! Golden-file tests pinning the report schema, the SVG bytes, and the
//! exit code of every subcommand. Refresh with UPDATE_GOLDEN=1 after an
//! intentional format change and review the diff.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .expect("workspace root")
        .to_path_buf()
}

/// Runs the binary from the workspace root so path echoes are relative
/// and machine-independent.
fn gangulate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gangulate"))
        .args(args)
        .current_dir(workspace_root())
        .env_remove("GANGULATE_MAX_N")
        .output()
        .expect("binary runs")
}

fn check_golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        fs::write(&path, actual).expect("golden written");
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden {name}; run with UPDATE_GOLDEN=1"));
    assert_eq!(actual, expected, "output drifted from golden {name}");
}

fn check(args: &[&str], golden: &str, code: i32) {
    let out = gangulate(args);
    assert_eq!(out.status.code(), Some(code), "exit code for {args:?}");
    check_golden(golden, &String::from_utf8(out.stdout).expect("utf8"));
}

const FSTAR: &str = "crates/core/tests/fixtures/fstar_6_4.txt";
const JSTAR2: &str = "crates/core/tests/fixtures/jstar2_14_5_a.txt";
const EMPTY84: &str = "crates/cli/tests/inputs/empty_8_4.txt";
const EMPTY63: &str = "crates/cli/tests/inputs/empty_6_3.txt";
const TWO84: &str = "crates/cli/tests/inputs/two_chords_8_4.txt";

#[test]
fn decide_reports_a_witnessed_yes() {
    check(&["decide", EMPTY84, "--witness"], "decide_empty_8_4.json", 0);
}

#[test]
fn decide_reports_a_classified_no() {
    check(&["decide", FSTAR], "decide_fstar_6_4.json", 3);
}

#[test]
fn count_in_plain_mode() {
    check(&["count", EMPTY63, "--plain"], "count_empty_6_3.txt", 0);
}

#[test]
fn count_handles_chords() {
    check(&["count", TWO84], "count_two_chords_8_4.json", 0);
}

#[test]
fn construct_builds_within_budget() {
    check(&["construct", TWO84], "construct_two_chords_8_4.json", 0);
}

#[test]
fn classify_emits_reduction_evidence() {
    check(&["classify", JSTAR2], "classify_jstar2_14_5_a.json", 0);
}

#[test]
fn place_cycle_in_plain_mode() {
    check(
        &["place", "cycle", "n=6", "g=4", "--plain"],
        "place_cycle_6_4.txt",
        0,
    );
}

#[test]
fn place_petersen_with_key_value_params() {
    check(
        &["place", "petersen", "n=7", "k=3", "g=4"],
        "place_petersen_7_3_4.json",
        0,
    );
}

#[test]
fn place_cubic_from_a_graph_file() {
    check(
        &[
            "place",
            "cubic",
            "crates/core/tests/fixtures/graphs/petersen_7_3.txt",
        ],
        "place_cubic_petersen_7_3.json",
        0,
    );
}

#[test]
fn place_rejects_the_quadrilateral() {
    check(&["place", "cycle", "n=4", "g=4"], "place_cycle_4_4.json", 3);
}

#[test]
fn census_tabulates_the_hexagon() {
    check(&["census", "6", "4"], "census_6_4.json", 0);
}

#[test]
fn render_draws_forbidden_and_witness_layers() {
    check(&["render", EMPTY84, "--witness"], "render_empty_8_4.svg", 0);
    check(&["render", FSTAR], "render_fstar_6_4.svg", 0);
}

#[test]
fn render_writes_to_a_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("fig.svg");
    let res = gangulate(&["render", FSTAR, "--out", out.to_str().expect("utf8 path")]);
    assert_eq!(res.status.code(), Some(0));
    assert!(res.stdout.is_empty());
    let written = fs::read_to_string(&out).expect("file written");
    let direct = gangulate(&["render", FSTAR]);
    assert_eq!(written, String::from_utf8(direct.stdout).expect("utf8"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = gangulate(&["decide", "no/such/file.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_parameters_are_usage_errors() {
    // 9 is not reachable from face size 4.
    let out = gangulate(&["place", "cycle", "n=9", "g=4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gangulate(&["census", "7", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gangulate(&["place", "frobnicate", "n=6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_caps_use_exit_code_four() {
    let out = gangulate(&["count", EMPTY63, "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_gangulate"))
        .args(["count", EMPTY63])
        .current_dir(workspace_root())
        .env("GANGULATE_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(4));
    // The flag outranks the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_gangulate"))
        .args(["count", EMPTY63, "--max-n", "40"])
        .current_dir(workspace_root())
        .env("GANGULATE_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn g_override_reinterprets_the_file() {
    let out = gangulate(&["count", EMPTY63, "--g-override", "6", "--plain"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("utf8");
    assert!(text.contains("g: 6"), "override must show up in the echo");
    assert!(text.contains("count: 1"), "hexagon at g=6 is one face");
    let out = gangulate(&["count", EMPTY63, "--g-override", "5"]);
    assert_eq!(out.status.code(), Some(2), "inadmissible override");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        ["decide", FSTAR, "--witness"].as_slice(),
        ["count", TWO84].as_slice(),
        ["classify", JSTAR2].as_slice(),
        ["place", "petersen", "n=7", "k=3", "g=4"].as_slice(),
        ["census", "6", "4", "--sample", "25", "--seed", "7"].as_slice(),
        ["render", EMPTY84, "--witness"].as_slice(),
    ] {
        let a = gangulate(args);
        let b = gangulate(args);
        assert_eq!(a.stdout, b.stdout, "two runs of {args:?} differ");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn timing_flag_is_the_only_nondeterminism_escape_hatch() {
    let out = gangulate(&["count", EMPTY63, "--timing"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).expect("utf8");
    assert!(text.contains("timing_ms"));
}

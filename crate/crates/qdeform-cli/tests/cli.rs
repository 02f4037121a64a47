//! End-to-end tests of the `qdeform` binary: output formats, the exit-code
//! contract (0 ok, 1 verification failure, 2 usage, 3 budget), and byte-level
//! determinism.

use std::io::Write;
use std::process::Command;

/// Runs the binary and returns (exit code, stdout, stderr).
fn qdeform(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qdeform"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn golden_bfile_matches_the_displayed_coefficients() {
    let (code, stdout, _) = qdeform(&["expand", "metallic:1", "--order", "21", "--format", "bfile"]);
    assert_eq!(code, 0);
    let expected: Vec<i64> = vec![
        1, 0, 1, -1, 2, -4, 8, -17, 37, -82, 185, -423, 978, -2283, 5373, -12735, 30372, -72832,
        175502, -424748, 1032004,
    ];
    let rendered: String = expected
        .iter()
        .enumerate()
        .map(|(e, c)| format!("{e} {c}\n"))
        .collect();
    assert_eq!(stdout, rendered);
}

#[test]
fn the_zero_series_prints_its_order_marker() {
    let (code, stdout, _) = qdeform(&["expand", "0/1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "O(q^24)\n");
}

#[test]
fn negative_rationals_have_laurent_heads() {
    let (code, stdout, _) = qdeform(&["expand", "-1/2", "--order", "6", "--format", "bfile"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "-1 -1\n0 1\n1 -1\n2 1\n3 -1\n4 1\n5 -1\n");
}

#[test]
fn golden_staircase_is_one_periodic() {
    let (code, stdout, _) = qdeform(&["cfrac", "metallic:1", "--delta", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("den 1 + q - q^2"));
    assert!(stdout.contains("layer periodicity: period 1 from layer 1"));
}

#[test]
fn shifted_silver_staircase_has_period_eight() {
    let (code, stdout, _) = qdeform(&["cfrac", "metallic:2", "--delta", "2", "--shift", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("layer periodicity: period 8 from layer 0"));
}

#[test]
fn catalan_c_fraction_layers_are_all_q() {
    let (code, stdout, _) = qdeform(&["cfrac", "catalan"]);
    assert_eq!(code, 0);
    let layer_lines: Vec<&str> = stdout
        .lines()
        .filter(|l| l.starts_with("layer ") && !l.starts_with("layer periodicity"))
        .collect();
    assert!(!layer_lines.is_empty());
    for line in layer_lines {
        assert!(line.ends_with("num -1 q^1, den 1"), "unexpected layer: {line}");
    }
}

#[test]
fn rational_c_fractions_terminate() {
    let (code, stdout, _) = qdeform(&["cfrac", "5/3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("complete: true"));
}

#[test]
fn silver_wall_table_is_periodic() {
    let (code, stdout, _) = qdeform(&["wall", "metallic:2", "--shifts", "0..3", "--n", "12"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "shift 0: 1 1 -1 -1 1 0 -1 0 0 1 0 -1 1\n\
         shift 1: 1 1 0 -1 0 0 -1 0 1 1 -1 -1 1\n\
         shift 2: 1 0 0 -1 0 1 -1 -1 1 1 -1 0 1\n\
         shift 3: 1 0 -1 -1 1 1 -1 -1 0 1 0 0 1\n"
    );
}

#[test]
fn single_row_walls_export_as_bfiles() {
    let (code, stdout, _) = qdeform(&[
        "wall",
        "metallic:1",
        "--shifts",
        "0..0",
        "--n",
        "8",
        "--format",
        "bfile",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0 1\n1 1\n2 1\n3 0\n4 -1\n5 -1\n6 -1\n7 0\n8 1\n");

    let (code, _, stderr) = qdeform(&[
        "wall",
        "metallic:1",
        "--shifts",
        "0..2",
        "--n",
        "6",
        "--format",
        "bfile",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("narrow --shifts"));
}

#[test]
fn file_sequences_feed_the_wall() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# somos-4").unwrap();
    writeln!(file, "1 1 1 1 2 3 7, 23, 59, 314").unwrap();
    writeln!(file, "1529 8209 83313").unwrap();
    let path = format!("file:{}", file.path().display());

    let (code, stdout, _) = qdeform(&["wall", &path, "--shifts", "0..0", "--n", "6", "--format", "bfile"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0 1\n1 1\n2 0\n3 0\n4 -1\n5 -10\n6 14096\n");

    // Thirteen values cannot certify a 20 x 20 determinant.
    let (code, _, stderr) = qdeform(&["wall", &path, "--shifts", "0..0", "--n", "20"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("insufficient"));
}

#[test]
fn bfile_roundtrip_preserves_the_series() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.txt");
    let (code, stdout, _) = qdeform(&["expand", "metallic:1", "--order", "21", "--format", "bfile"]);
    assert_eq!(code, 0);
    std::fs::write(&path, stdout).unwrap();

    let spec = format!("bfile:{}", path.display());
    let (code, roundtrip, _) = qdeform(&["expand", &spec, "--format", "json"]);
    assert_eq!(code, 0);
    let (code, direct, _) = qdeform(&["expand", "metallic:1", "--order", "21", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(roundtrip, direct);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["wall", "metallic:3", "--shifts", "0..4", "--n", "10", "--format", "json"];
    let (code_a, out_a, _) = qdeform(&args);
    let (code_b, out_b, _) = qdeform(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(out_a, out_b);
}

#[test]
fn usage_errors_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["expand", "not-a-number"],
        vec!["expand", "1/2", "--format", "yaml"],
        vec!["wall", "catalan", "--engine", "quantum"],
        vec!["wall", "catalan", "--shifts", "3..1"],
        vec!["cfrac", "catalan", "--delta", "0"],
        vec!["cfrac", "catalan", "--format", "bfile"],
        vec!["verify", "--conjecture", "0"],
        vec!["expand", "1/2", "--no-such-flag"],
        vec!["expand", "file:/no/such/path"],
    ];
    for args in cases {
        let (code, _, stderr) = qdeform(&args);
        assert_eq!(code, 2, "args {args:?} gave stderr: {stderr}");
    }
}

#[test]
fn verification_succeeds_at_desk_scale() {
    let (code, stdout, _) = qdeform(&["verify", "--conjecture", "1", "--n", "12"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("PASS\n"));
}

#[test]
fn a_range_too_short_to_falsify_is_flagged_not_failed() {
    let (code, stdout, _) = qdeform(&["verify", "--conjecture", "2", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("insufficient range"));
    assert!(stdout.ends_with("PASS\n"));
}

#[test]
fn an_exhausted_budget_exits_three() {
    let (code, stdout, stderr) = qdeform(&[
        "verify",
        "--conjecture",
        "1",
        "--n",
        "40",
        "--budget-seconds",
        "0",
    ]);
    assert_eq!(code, 3);
    assert!(stdout.contains("budget exceeded"));
    assert!(stdout.ends_with("INCOMPLETE\n"));
    assert!(stderr.contains("budget exceeded"));
}

#[test]
fn a_low_order_is_raised_with_a_notice() {
    let (code, stdout, stderr) = qdeform(&[
        "wall",
        "metallic:1",
        "--shifts",
        "0..1",
        "--n",
        "8",
        "--order",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(stderr.contains("notice: --order raised to 16"));
    assert!(stdout.starts_with("shift 0: 1 1 1 0 -1 -1 -1 0 1\n"));
}

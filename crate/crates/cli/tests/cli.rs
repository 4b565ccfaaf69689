//! End-to-end checks of the binary: output bytes, flag validation, exit
//! codes, and the matrix file round trip.

use std::process::{Command, Output};

fn gapcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = gapcomb(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn count_compositions_paper_value() {
    assert_eq!(
        stdout_of(&["count", "compositions", "--n", "4", "--g", "2", "--s", "1"]),
        "7\n"
    );
}

#[test]
fn count_empty_partition() {
    assert_eq!(
        stdout_of(&["count", "partitions", "--n", "0", "--g", "5", "--s", "3"]),
        "1\n"
    );
}

#[test]
fn count_nondecreasing_compositions_are_partitions() {
    assert_eq!(
        stdout_of(&["count", "compositions", "--n", "10", "--g", "1", "--s", "1"]),
        "42\n"
    );
}

#[test]
fn count_list_is_deterministic_and_valid() {
    let args = [
        "count",
        "partitions",
        "--n",
        "4",
        "--g",
        "2",
        "--s",
        "1",
        "--list",
    ];
    let first = stdout_of(&args);
    assert_eq!(first, "[1, 3]\n[4]\n");
    assert_eq!(first, stdout_of(&args));
}

#[test]
fn count_length_filter() {
    // Two-part class compositions of 4: (1,3) and (2,2).
    assert_eq!(
        stdout_of(&[
            "count",
            "compositions",
            "--n",
            "4",
            "--g",
            "2",
            "--s",
            "1",
            "--length",
            "2"
        ]),
        "2\n"
    );
}

#[test]
fn count_rejects_mismatched_flags() {
    let out = gapcomb(&[
        "count",
        "partitions",
        "--n",
        "4",
        "--g",
        "2",
        "--s",
        "1",
        "--m-step",
        "2",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m-step"));
    let out = gapcomb(&[
        "count",
        "compositions",
        "--n",
        "4",
        "--g",
        "2",
        "--s",
        "1",
        "--max-part",
        "2",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-part"));
}

#[test]
fn series_composition_counts() {
    let args = [
        "series", "C", "--g", "2", "--s", "1", "--N", "6", "--at-x", "1",
    ];
    let out = stdout_of(&args);
    assert_eq!(out, "1 1 2 4 7 13 23\n");
    assert_eq!(out, stdout_of(&args), "byte-identical reruns");
}

#[test]
fn series_bounded_at_minus_one_is_the_pochhammer_product() {
    // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
    let out = stdout_of(&[
        "series", "Ple", "--g", "1", "--s", "1", "--m", "3", "--N", "6", "--at-x", "-1",
    ]);
    assert_eq!(out, "1 -1 -1 0 1 1 -1\n");
}

#[test]
fn series_trivial_truncation() {
    assert_eq!(
        stdout_of(&["series", "P", "--g", "0", "--s", "1", "--N", "0", "--L", "0"]),
        "1\n"
    );
}

#[test]
fn series_layers_without_substitution() {
    let out = stdout_of(&[
        "series", "P", "--g", "2", "--s", "1", "--N", "4", "--L", "2",
    ]);
    // Layer 0 is 1; layer 1 starts at q; layer 2 starts at q^4 (from (1,3)).
    assert_eq!(out, "1 0 0 0 0\n0 1 1 1 1\n0 0 0 0 1\n");
}

#[test]
fn series_ple_requires_m() {
    let out = gapcomb(&["series", "Ple", "--g", "1", "--s", "1", "--N", "6"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m"));
    let out = gapcomb(&["series", "Cge", "--g", "1", "--s", "1", "--N", "6"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn matrix_rejects_zero_gap_mu() {
    let out = gapcomb(&["matrix", "mu", "--g", "0", "--s", "1", "--dim", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("positive gap"));
}

#[test]
fn matrix_rejects_bfile_format() {
    let out = gapcomb(&[
        "matrix", "gamma", "--g", "2", "--s", "1", "--dim", "5", "--format", "bfile",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("one-dimensional"));
}

#[test]
fn matrix_product_takes_a_gap_list() {
    let csv = stdout_of(&[
        "matrix", "product", "--g", "0,1", "--s", "1", "--dim", "8", "--format", "csv",
    ]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 8);
    // Overpartition-style counts stabilize along the diagonals: 1, 2, 4, 8.
    let last: Vec<&str> = rows[7].split(',').collect();
    assert_eq!(&last[4..8], &["8", "4", "2", "1"]);
}

#[test]
fn oeis_bfile_is_bit_exact() {
    let out = stdout_of(&[
        "oeis",
        "gap-compositions",
        "--g",
        "2",
        "--s",
        "1",
        "--terms",
        "7",
    ]);
    assert_eq!(out, "0 1\n1 1\n2 2\n3 4\n4 7\n5 13\n6 23\n");
}

#[test]
fn oeis_offset_starts_the_indexing() {
    let out = stdout_of(&["oeis", "partitions", "--terms", "3", "--offset", "2"]);
    assert_eq!(out, "2 2\n3 3\n4 5\n");
}

#[test]
fn oeis_distinct_partition_counts_match_brute_force() {
    // Strictly increasing compositions are distinct-part partitions:
    // 1, 1, 1, 2, 2, 3 for n = 0..5.
    let out = stdout_of(&[
        "oeis",
        "gap-compositions",
        "--g",
        "0",
        "--s",
        "1",
        "--terms",
        "6",
    ]);
    assert_eq!(out, "0 1\n1 1\n2 1\n3 2\n4 2\n5 3\n");
}

#[test]
fn oeis_m_step_counts() {
    let out = stdout_of(&[
        "oeis", "m-step", "--g", "2", "--s", "1", "--m", "1", "--terms", "6", "--offset", "1",
    ]);
    assert_eq!(out, "1 1\n2 1\n3 2\n4 3\n5 6\n6 10\n");
}

#[test]
fn oeis_unknown_sequence() {
    let out = gapcomb(&["oeis", "no-such-thing", "--terms", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown sequence"));
}

#[test]
fn oeis_names_missing_flags() {
    let out = gapcomb(&["oeis", "m-step", "--g", "2", "--s", "1", "--terms", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m"));
}

#[test]
fn verify_inverse_passes() {
    let out = gapcomb(&["verify", "inverse", "--g", "2", "--s", "1", "--dim", "12"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("pass"));
}

#[test]
fn verify_all_with_defaults_passes() {
    let out = gapcomb(&["verify", "all"]);
    assert_eq!(
        exit_code(&out),
        0,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(!stdout.contains("FAIL"));
    // One line per verification cell, across all five suites.
    assert_eq!(stdout.lines().count(), 254);
}

#[test]
fn verify_rejects_zero_s() {
    let out = gapcomb(&["verify", "inverse", "--g", "2", "--s", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn matrix_json_round_trips_through_verify() {
    let dir = std::env::temp_dir().join("gapcomb-cli-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gamma.json");
    let json = stdout_of(&[
        "matrix", "gamma", "--g", "3", "--s", "2", "--dim", "9", "--format", "json",
    ]);
    std::fs::write(&path, &json).unwrap();
    let out = gapcomb(&["verify", "inverse", "--from-file", path.to_str().unwrap()]);
    assert_eq!(
        exit_code(&out),
        0,
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    // A corrupted cell turns the same invocation into a named finding.
    let mut value: serde_json::Value = serde_json::from_str(&json).unwrap();
    value["entries"][8][3] = serde_json::Value::String("999".into());
    let bad_path = dir.join("gamma_bad.json");
    std::fs::write(&bad_path, serde_json::to_string(&value).unwrap()).unwrap();
    let out = gapcomb(&[
        "verify",
        "inverse",
        "--from-file",
        bad_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("differs from the identity at"),
        "{}",
        stderr
    );
}

#[test]
fn verify_from_file_rejects_other_suites() {
    let out = gapcomb(&["verify", "euler", "--from-file", "/nonexistent.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn help_exits_zero() {
    let out = gapcomb(&["--help"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn unknown_flag_exits_two() {
    let out = gapcomb(&[
        "count",
        "partitions",
        "--n",
        "1",
        "--g",
        "1",
        "--s",
        "1",
        "--frobnicate",
    ]);
    assert_eq!(exit_code(&out), 2);
}

use std::process::{Command, Output};

use fde_series::harness::{read_error_csv, read_figure_csv, read_timing_csv, Method};

fn fde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fde"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn tanh_table_on_stdout() {
    let out = fde(&[
        "table",
        "--problem",
        "tanh",
        "--c",
        "3",
        "--t",
        "0.1",
        "--xs",
        "-10:0:2",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).starts_with("x,method,approx,exact,abs_error\n"));
    let records = read_error_csv(out.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 18);
    let origin = records
        .iter()
        .find(|r| r.x == 0.0 && r.method == Method::Rdtm)
        .unwrap();
    assert!((origin.abs_error.unwrap() - 1.0317037658e-5).abs() < 1e-9);
}

#[test]
fn logistic_table_has_no_exact_column_values() {
    let out = fde(&[
        "table",
        "--problem",
        "logistic",
        "--t",
        "0.1",
        "--xs",
        "-1,0",
        "--methods",
        "rdtm",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = read_error_csv(out.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 2);
    assert!(records
        .iter()
        .all(|r| r.exact.is_none() && r.abs_error.is_none()));
    assert!((records[0].approx - 0.2359453940).abs() < 5e-9);
}

#[test]
fn identical_arguments_give_identical_bytes() {
    let args = [
        "solve",
        "--problem",
        "tanh",
        "--c",
        "2",
        "--t",
        "0.05",
        "--xs",
        "-3:1:0.5",
    ];
    let (a, b) = (fde(&args), fde(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn file_output_and_figure_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.csv");
    let out = fde(&[
        "figure",
        "--c",
        "3",
        "--t",
        "0.01",
        "--xs",
        "-10:0:0.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let points = read_figure_csv(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(points.len(), 21);
    assert!(points.iter().all(|&(_, e)| e <= 1e-12));
}

#[test]
fn bench_reports_published_context_on_stderr() {
    let out = fde(&[
        "bench",
        "--problem",
        "logistic",
        "--steps",
        "5",
        "--reps",
        "3",
        "--methods",
        "rdtm,ldm",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let records = read_timing_csv(out.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 2);
    assert!(records[0].mul_count < records[1].mul_count);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("published=0.491 s"), "{err}");
    assert!(err.contains("published=1.182 s"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["table", "--t", "0.1"][..],
        &["solve", "--xs", "0", "--t", "-1"],
        &["solve", "--xs", "0", "--t", "0.1", "--methods", "rk4"],
        &["solve", "--xs", "0", "--t", "0.1", "--c", "0"],
        &["figure", "--problem", "logistic", "--xs", "0", "--t", "0.1"],
        &["bench", "--reps", "2"],
        &["frobnicate"],
    ] {
        let out = fde(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn points_past_the_front_are_refused_unless_allowed() {
    let refused = fde(&["table", "--c", "1", "--t", "0.1", "--xs", "0.5"]);
    assert_eq!(refused.status.code(), Some(2));
    let allowed = fde(&[
        "table",
        "--c",
        "1",
        "--t",
        "0.1",
        "--xs",
        "0.5",
        "--allow-past-front",
    ]);
    assert_eq!(allowed.status.code(), Some(0));
    let records = read_error_csv(allowed.stdout.as_slice()).unwrap();
    assert!(records.iter().all(|r| r.exact == Some(0.0)));
}

#[test]
fn overflow_is_a_numerical_failure() {
    let out = fde(&["solve", "--c", "1e200", "--t", "0.1", "--xs", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-finite"));
}

#[test]
fn unwritable_output_exits_with_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let out = fde(&[
        "solve",
        "--t",
        "0.1",
        "--xs",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn help_exits_cleanly() {
    let out = fde(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("bench"));
}

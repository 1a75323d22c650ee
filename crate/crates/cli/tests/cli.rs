//! End-to-end tests against the compiled `vao` binary.

use std::path::Path;
use std::process::{Command, Output};

fn vao(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vao"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stderr_line(output: &Output) -> String {
    let text = String::from_utf8_lossy(&output.stderr);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1, "expected single-line diagnostic, got: {text}");
    lines[0].to_string()
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut entries: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    entries.sort();
    entries
}

#[test]
fn run_function_prints_summary_row() {
    let out = vao(&[
        "run", "--algo", "pso", "--function", "booth", "--pop", "10", "--iters", "20",
        "--repeats", "2", "--seed", "7",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("target,algorithm,avg_best_cost"));
    assert!(stdout.contains("booth,pso,"));
    assert!(stdout.contains("7+8"));
}

#[test]
fn rerun_is_byte_identical_and_writes_expected_files() {
    let tmp = tempfile::tempdir().unwrap();
    let dir_a = tmp.path().join("a");
    let dir_b = tmp.path().join("b");
    for dir in [&dir_a, &dir_b] {
        let out = vao(&[
            "run", "--algo", "vao", "--function", "dejong", "--dims", "15", "--pop", "10",
            "--iters", "25", "--repeats", "3", "--seed", "1", "--out",
            dir.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = read_dir_sorted(&dir_a);
    let b = read_dir_sorted(&dir_b);
    let names: Vec<&str> = a.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(
        names,
        vec![
            "summary.csv",
            "timing.csv",
            "trace_vao_dejong_seed1.jsonl",
            "trace_vao_dejong_seed2.jsonl",
            "trace_vao_dejong_seed3.jsonl",
        ]
    );
    for ((name_a, bytes_a), (name_b, bytes_b)) in a.iter().zip(&b) {
        assert_eq!(name_a, name_b);
        if name_a == "timing.csv" {
            continue; // wall times are the one legitimately nondeterministic output
        }
        assert_eq!(bytes_a, bytes_b, "{name_a} differs between reruns");
    }
}

#[test]
fn single_repeat_reports_std_zero() {
    let out = vao(&[
        "run", "--algo", "de", "--function", "matyas", "--pop", "10", "--iters", "10",
        "--repeats", "1",
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let row = stdout.lines().nth(1).unwrap();
    let std_field = row.split(',').nth(3).unwrap();
    assert_eq!(std_field, "0");
}

#[test]
fn run_instance_target() {
    let instance = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/pms10.txt");
    let out = vao(&[
        "run", "--algo", "vao", "--instance", instance.to_str().unwrap(), "--problem",
        "pms", "--pop", "10", "--iters", "30", "--repeats", "2",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("pms:pms10,vao,"));
}

#[test]
fn bounds_override_applies_to_functions() {
    let out = vao(&[
        "run", "--algo", "vao", "--function", "ackley", "--dims", "15", "--lower", "-10",
        "--upper", "10", "--pop", "10", "--iters", "10", "--repeats", "1",
    ]);
    assert!(out.status.success());
}

#[test]
fn compare_spec_file_reports_winner() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = tmp.path().join("exp.txt");
    std::fs::write(
        &spec,
        "algo = pso\nfunction = booth\npop = 10\niters = 40\nrepeats = 3\nseed = 1\n\n\
         algo = random\nfunction = booth\npop = 10\niters = 40\nrepeats = 3\nseed = 1\n",
    )
    .unwrap();
    let out = vao(&["compare", "--spec", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().next().unwrap().ends_with(",winner"));
    assert_eq!(stdout.lines().count(), 3);
    assert!(stdout.lines().skip(1).all(|l| l.ends_with(",pso")));
}

#[test]
fn landscape_booth_center() {
    let out = vao(&["landscape", "--function", "booth", "--res", "3"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().count(), 10); // header + 9 grid rows
    assert!(stdout.contains("0,0,74"));
}

#[test]
fn error_unknown_algorithm_names_valid_options() {
    let out = vao(&["run", "--algo", "warp", "--function", "booth"]);
    assert!(!out.status.success());
    let line = stderr_line(&out);
    assert!(line.contains("warp") && line.contains("vao") && line.contains("random"));
}

#[test]
fn error_unknown_function_names_valid_options() {
    let out = vao(&["run", "--algo", "vao", "--function", "nope"]);
    assert!(!out.status.success());
    let line = stderr_line(&out);
    assert!(line.contains("nope") && line.contains("booth"));
}

#[test]
fn error_unreadable_instance() {
    let out = vao(&[
        "run", "--algo", "vao", "--instance", "/no/such/file", "--problem", "ed",
    ]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("/no/such/file"));
}

#[test]
fn error_instance_without_problem() {
    let out = vao(&["run", "--algo", "vao", "--instance", "/tmp/x"]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("--problem"));
}

#[test]
fn error_unknown_problem_kind() {
    let out = vao(&[
        "run", "--algo", "vao", "--instance", "/tmp/x", "--problem", "tsp",
    ]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("tsp"));
}

#[test]
fn error_lower_without_upper() {
    let out = vao(&["run", "--algo", "vao", "--function", "booth", "--lower", "-1"]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("--upper"));
}

#[test]
fn error_compare_unequal_budgets() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = tmp.path().join("exp.txt");
    std::fs::write(
        &spec,
        "algo = vao\nfunction = booth\niters = 500\n\nalgo = pso\nfunction = booth\niters = 400\n",
    )
    .unwrap();
    let out = vao(&["compare", "--spec", spec.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("unequal evaluation budgets"));
}

#[test]
fn error_compare_missing_spec_file() {
    let out = vao(&["compare", "--spec", "/no/such/spec.txt"]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("/no/such/spec.txt"));
}

#[test]
fn error_landscape_fixed_high_dimension_function() {
    let out = vao(&["landscape", "--function", "powell", "--res", "3"]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("powell"));
}

#[test]
fn error_landscape_zero_resolution() {
    let out = vao(&["landscape", "--function", "booth", "--res", "0"]);
    assert!(!out.status.success());
    assert!(stderr_line(&out).contains("resolution"));
}

#[test]
fn summary_recomputable_from_traces() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("out");
    let out = vao(&[
        "run", "--algo", "pso", "--function", "beale", "--pop", "10", "--iters", "30",
        "--repeats", "4", "--seed", "3", "--out", dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "jsonl"))
        .collect();
    paths.sort(); // seed order, matching the harness's summation order
    let mut finals = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path).unwrap();
        let header: trace_header::Header = text.lines().next().unwrap().parse().unwrap();
        finals.push(header.alpha_cost);
    }
    assert_eq!(finals.len(), 4);
    let n = finals.len() as f64;
    let mean = finals.iter().sum::<f64>() / n;
    let std =
        (finals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt();
    let summary = std::fs::read_to_string(dir.join("summary.csv")).unwrap();
    let row = summary.lines().nth(1).unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[2], mean.to_string());
    assert_eq!(fields[3], std.to_string());
}

/// Minimal JSON field extraction so this test crate needs no JSON dependency.
mod trace_header {
    pub struct Header {
        pub alpha_cost: f64,
    }

    impl std::str::FromStr for Header {
        type Err = String;

        fn from_str(s: &str) -> Result<Self, Self::Err> {
            let key = "\"alpha_cost\":";
            let start = s.find(key).ok_or("missing alpha_cost")? + key.len();
            let rest = &s[start..];
            let end = rest
                .find([',', '}'])
                .ok_or("unterminated alpha_cost value")?;
            rest[..end]
                .trim()
                .parse::<f64>()
                .map(|alpha_cost| Header { alpha_cost })
                .map_err(|e| e.to_string())
        }
    }
}

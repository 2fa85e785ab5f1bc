//! End-to-end tests of the `gammagh` binary: files, formats, exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn gammagh(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammagh"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Parses the value column of a `t,value` CSV.
fn csv_values(path: &Path) -> Vec<f64> {
    let text = std::fs::read_to_string(path).expect("csv readable");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,value"), "{path:?} header");
    lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect()
}

#[test]
fn simulate_writes_501_rows_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["simulate", "--a", "0.5", "--out", "p.csv"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for key in ["terminal ", "total_variation ", "quadratic_variation "] {
        assert!(text.contains(key), "missing {key} in {text}");
    }
    let values = csv_values(&dir.path().join("p.csv"));
    assert_eq!(values.len(), 501);
    assert_eq!(values[0], 0.0);
    let first_line = std::fs::read_to_string(dir.path().join("p.csv"))
        .unwrap()
        .lines()
        .nth(1)
        .unwrap()
        .to_string();
    assert_eq!(first_line, "0,0");
}

#[test]
fn simulate_is_deterministic_in_the_seed() {
    let dir = tempfile::tempdir().unwrap();
    gammagh(&["simulate", "--seed", "7", "--out", "a.csv"], dir.path());
    gammagh(&["simulate", "--seed", "7", "--out", "b.csv"], dir.path());
    gammagh(&["simulate", "--seed", "8", "--out", "c.csv"], dir.path());
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read(dir.path().join("b.csv")).unwrap();
    let c = std::fs::read(dir.path().join("c.csv")).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn simulate_brownian_flag() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["simulate", "--brownian", "--out", "bm.csv"], dir.path());
    assert_eq!(code(&out), 0);
    assert_eq!(csv_values(&dir.path().join("bm.csv")).len(), 501);
}

#[test]
fn unknown_flag_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["simulate", "--bogus"], dir.path());
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_output_directory_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["simulate", "--out", "no/such/dir/p.csv"], dir.path());
    assert_eq!(code(&out), 1);
}

const FIGURES: [&str; 5] =
    ["fig_a0p5.csv", "fig_a1.csv", "fig_a3.csv", "fig_a10.csv", "fig_brownian.csv"];

#[test]
fn figures_writes_the_five_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["figures"], dir.path());
    assert_eq!(code(&out), 0);
    for name in FIGURES {
        let values = csv_values(&dir.path().join(name));
        assert_eq!(values.len(), 501, "{name}");
        assert_eq!(values[0], 0.0, "{name}");
    }
}

/// Signs of the centered increments; `None` marks cells whose mixing draw
/// collapsed below the resolution of the prefix sums.
fn centered_signs(values: &[f64], drift_per_cell: f64) -> Vec<Option<bool>> {
    values
        .windows(2)
        .map(|w| {
            let centered = (w[1] - w[0]) - drift_per_cell;
            if centered.abs() < 1e-12 {
                None
            } else {
                Some(centered > 0.0)
            }
        })
        .collect()
}

#[test]
fn paired_figures_share_the_noise_sequence() {
    let paired = tempfile::tempdir().unwrap();
    let plain = tempfile::tempdir().unwrap();
    assert_eq!(code(&gammagh(&["figures", "--paired", "--seed", "5"], paired.path())), 0);
    assert_eq!(code(&gammagh(&["figures", "--seed", "5"], plain.path())), 0);

    let drift = 1.0 / 500.0; // mu T / n with the defaults
    let count_mismatches = |dir: &Path| {
        let a10 = centered_signs(&csv_values(&dir.join("fig_a10.csv")), drift);
        let bm = centered_signs(&csv_values(&dir.join("fig_brownian.csv")), 0.0);
        let mut comparable = 0;
        let mut mismatches = 0;
        for (x, z) in a10.iter().zip(&bm) {
            if let (Some(x), Some(z)) = (x, z) {
                comparable += 1;
                if x != z {
                    mismatches += 1;
                }
            }
        }
        (comparable, mismatches)
    };

    let (comparable, mismatches) = count_mismatches(paired.path());
    assert!(comparable > 200, "only {comparable} comparable cells");
    assert_eq!(mismatches, 0, "paired run must reuse the normal draws");

    let (comparable, mismatches) = count_mismatches(plain.path());
    assert!(mismatches > 50, "independent runs agree on {comparable} cells");

    // paired runs are reproducible byte for byte
    let again = tempfile::tempdir().unwrap();
    assert_eq!(code(&gammagh(&["figures", "--paired", "--seed", "5"], again.path())), 0);
    for name in FIGURES {
        assert_eq!(
            std::fs::read(paired.path().join(name)).unwrap(),
            std::fs::read(again.path().join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn experiment_charfn_meets_the_mc_bound() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["experiment", "charfn", "--n", "100000"], dir.path());
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    let max_error = report["max_error"].as_f64().unwrap();
    assert!(max_error <= 0.01265, "max error {max_error}");
}

#[test]
fn experiment_idecomp_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(
        &["experiment", "idecomp", "--parts", "10", "--reps", "20000", "--seed", "27"],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
}

#[test]
fn experiment_qv_passes_and_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(
        &["experiment", "qv", "--cells", "64,256,1024", "--reps", "4000", "--seed", "22"],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["gamma_gh"].as_array().unwrap().len(), 3);

    let out = gammagh(
        &[
            "experiment", "qv", "--cells", "64,256,1024", "--reps", "4000", "--seed", "22",
            "--format", "csv",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let csv = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(csv.starts_with("label,mesh,cells"));
    assert_eq!(csv.lines().count(), 7); // header + 3 gamma + 3 brownian
}

#[test]
fn experiment_fdd_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(
        &["experiment", "fdd", "--n", "100", "--reps", "2000", "--seed", "28"],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "stdout: {}", stdout(&out));
}

#[test]
fn failed_experiment_checks_exit_3() {
    // A two-step ladder cannot satisfy the 0.1x Brownian collapse criterion,
    // so this configuration fails its checks deterministically.
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(
        &["experiment", "qv", "--cells", "64,256", "--reps", "1000", "--seed", "0"],
        dir.path(),
    );
    assert_eq!(code(&out), 3, "stdout: {}", stdout(&out));
    assert!(stdout(&out).contains("result: FAIL"));
}

#[test]
fn csv_format_rejected_where_undefined() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(
        &["experiment", "charfn", "--n", "1000", "--format", "csv"],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn eval_charfn_at_zero_prints_one_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["eval", "charfn", "--u", "0"], dir.path());
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1 0");
}

#[test]
fn eval_constant_prints_the_proof_constants() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["eval", "constant"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("I1 0.278805585280662"), "{text}");
    assert!(text.contains("I2 0.21938393439552"), "{text}");
    assert!(text.contains("E1 1.01456446762355"), "{text}");
    assert!(text.contains("E2 6.1944358130594"), "{text}");
    assert!(text.contains("C(1,1,0) 2"), "{text}");
}

#[test]
fn eval_pdf_reports_the_singularity() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(
        &["eval", "pdf", "--dist", "gamma", "--a", "0.5", "--u", "1"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "inf");
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
}

#[test]
fn eval_domain_error_names_the_condition() {
    let dir = tempfile::tempdir().unwrap();
    let out = gammagh(&["eval", "constant", "--a", "-1", "--c", "0"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("c = 0 requires a > 0"));
}

#[test]
fn eval_pdf_matches_known_values() {
    let dir = tempfile::tempdir().unwrap();
    // standard Cauchy at 0 via the ig route: 1/pi
    let out = gammagh(
        &[
            "eval", "pdf", "--dist", "ig", "--a", "0.5", "--b", "0.5", "--mu", "0", "--sigma",
            "1", "--u", "0",
        ],
        dir.path(),
    );
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - std::f64::consts::FRAC_1_PI).abs() < 1e-12);
}

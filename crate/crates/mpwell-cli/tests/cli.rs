//! End-to-end tests of the binary: output formats, exit codes, determinism.

use std::process::{Command, Output};

const PI_STR: &str = "3.141592653589793";
const HALF_PI_STR: &str = "1.5707963267948966";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpwell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn poly_degree_zero_is_one() {
    let out = run(&["poly", "--n", "0", "--mu", "0.5", "--theta", "1.5707963", "--y", "0.3"]);
    assert_eq!(code(&out), 0);
    let v: f64 = stdout_str(&out).trim().parse().unwrap();
    assert_eq!(v, 1.0);
}

#[test]
fn poly_degree_one_special_point() {
    let out = run(&["poly", "--n", "1", "--mu", "0.5", "--theta", HALF_PI_STR, "--y", "1"]);
    assert_eq!(code(&out), 0);
    let v: f64 = stdout_str(&out).trim().parse().unwrap();
    assert!((v - 2.0).abs() < 1e-12, "{v}");
}

#[test]
fn poly_all_methods_table_agrees() {
    let out = run(&[
        "poly", "--n", "25", "--mu", "1", "--theta", "1.0", "--y", "2", "--all-methods",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "method,value");
    let mut values = Vec::new();
    for (label, line) in ["sum", "oracle", "recursion"].iter().zip(lines) {
        let (method, value) = line.split_once(',').unwrap();
        assert_eq!(&method, label);
        values.push(value.parse::<f64>().unwrap());
    }
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for pair in values.windows(2) {
        assert!((pair[0] - pair[1]).abs() <= 1e-9 * scale);
    }
}

#[test]
fn poly_method_selection_routes_differ_but_agree() {
    let a = run(&["poly", "--n", "12", "--mu", "0.8", "--theta", "0.9", "--y", "1.5",
                  "--method", "oracle"]);
    let b = run(&["poly", "--n", "12", "--mu", "0.8", "--theta", "0.9", "--y", "1.5",
                  "--method", "recursion"]);
    let va: f64 = stdout_str(&a).trim().parse().unwrap();
    let vb: f64 = stdout_str(&b).trim().parse().unwrap();
    assert!((va - vb).abs() <= 1e-9 * va.abs().max(vb.abs()).max(1.0));
}

#[test]
fn weight_table_matches_sech() {
    let out = run(&[
        "weight", "--mu", "0.5", "--theta", HALF_PI_STR,
        "--y-min", "0", "--y-max", "2", "--points", "3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "y,rho");
    assert_eq!(lines.len(), 4);
    for (line, y) in lines[1..].iter().zip([0.0f64, 1.0, 2.0]) {
        let (ys, rs) = line.split_once(',').unwrap();
        assert!((ys.parse::<f64>().unwrap() - y).abs() < 1e-15);
        let rho: f64 = rs.parse().unwrap();
        let want = 1.0 / (std::f64::consts::PI * y).cosh();
        assert!((rho - want).abs() < 1e-11, "y = {y}: {rho} vs {want}");
    }
}

#[test]
fn spectrum_well_golden_bytes() {
    let out = run(&["spectrum", "--kind", "well", "--a", PI_STR, "--m-max", "3"]);
    assert_eq!(code(&out), 0);
    let want = "m,k,E\n\
                0,0.0000000000000000e0,0.0000000000000000e0\n\
                1,1.0000000000000000e0,5.0000000000000000e-1\n\
                2,2.0000000000000000e0,2.0000000000000000e0\n\
                3,3.0000000000000000e0,4.5000000000000000e0\n";
    assert_eq!(stdout_str(&out), want);
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("E = 0"), "missing edge-state note: {err}");
}

#[test]
fn spectrum_two_parameter_values() {
    let out = run(&[
        "spectrum", "--kind", "twoparam", "--a", PI_STR, "--mu", "0.5", "--m-max", "1",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let energies: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit_once(',').unwrap().1.parse().unwrap())
        .collect();
    assert!((energies[0] - 2.0).abs() < 1e-14);
    assert!((energies[1] - 2.0 / 9.0).abs() < 1e-14);
}

#[test]
fn spectrum_m_max_zero_is_a_single_row() {
    let out = run(&["spectrum", "--kind", "well", "--a", "1.0", "--m-max", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out).lines().count(), 2);
}

#[test]
fn spectrum_twoparam_without_mu_is_a_usage_error() {
    let out = run(&["spectrum", "--kind", "twoparam", "--a", "1.0", "--m-max", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn asymptotics_table_and_trend() {
    let out = run(&[
        "asymptotics", "--mu", "0.5", "--theta", HALF_PI_STR, "--y", "1",
        "--n-list", "64,256,1024,4096",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,exact,asymptotic,abs_err,envelope_rel_err");
    assert_eq!(lines.len(), 6);
    assert_eq!(*lines.last().unwrap(), "trend: decreasing");
    // Error columns are consistent: abs_err = |exact - asymptotic|.
    for line in &lines[1..5] {
        let f: Vec<f64> = line.split(',').skip(1).map(|v| v.parse().unwrap()).collect();
        assert!(((f[0] - f[1]).abs() - f[2]).abs() < 1e-18);
    }
}

#[test]
fn asymptotics_single_degree_is_one_row_without_verdict() {
    let out = run(&[
        "asymptotics", "--mu", "1.0", "--theta", "1.0", "--y", "0.5", "--n-list", "100",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(!text.contains("trend"));
}

#[test]
fn asymptotics_phase_echo_at_origin() {
    let out = run(&["asymptotics", "--mu", "0.5", "--theta", "1.0", "--y", "0", "--phase"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_str(&out).trim(), "phase_shift = -7.853982e-1");
}

#[test]
fn asymptotics_amplitude_echo_matches_closed_form() {
    let out = run(&[
        "asymptotics", "--mu", "0.5", "--theta", HALF_PI_STR, "--y", "0", "--amplitude",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let value: f64 = text.trim().strip_prefix("amplitude = ").unwrap().parse().unwrap();
    let want = (2.0 / std::f64::consts::PI).sqrt();
    assert!((value - want).abs() < 1e-6, "{value} vs {want}");
}

#[test]
fn asymptotics_without_work_is_a_usage_error() {
    let out = run(&["asymptotics", "--mu", "1.0", "--theta", "1.0", "--y", "0.5"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn wavefunction_boundaries_and_summary() {
    let out = run(&[
        "wavefunction", "--m", "0", "--a", PI_STR, "--mu", "0.5", "--g", "0.5",
        "--x-samples", "41",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,psi,psi_analytic,diff");
    assert_eq!(lines.len(), 42);
    let first_psi = lines[1].split(',').nth(1).unwrap();
    let last_psi = lines[41].split(',').nth(1).unwrap();
    assert_eq!(first_psi, "0.0000000000000000e0");
    assert_eq!(last_psi, "0.0000000000000000e0");
    let summary: serde_json::Value =
        serde_json::from_slice(&out.stderr).expect("summary JSON on stderr");
    assert_eq!(summary["schema_version"], "1");
    let norm = summary["results"]["norm"].as_f64().unwrap();
    assert!((norm - 1.0).abs() < 1e-8, "norm {norm}");
    assert!(summary["results"]["fidelity"].as_f64().unwrap() > 0.0);
    assert!(summary["results"]["tail_ratio"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn wavefunction_summary_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("summary.json");
    let out = run(&[
        "wavefunction", "--m", "1", "--a", "1.0", "--mu", "1.0", "--g", "0.7",
        "--x-samples", "11", "--summary", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stderr.is_empty(), "summary must move off stderr");
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(summary["command"], "wavefunction");
    assert_eq!(summary["parameters"]["m"], 1);
}

#[test]
fn wavefunction_short_truncation_exits_three() {
    let out = run(&[
        "wavefunction", "--m", "0", "--a", "1.0", "--mu", "0.5", "--g", "0.5",
        "--n-trunc", "10",
    ]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("truncation insufficient"), "{err}");
}

#[test]
fn domain_errors_exit_two() {
    let out = run(&["poly", "--n", "1", "--mu", "0.5", "--theta", "0", "--y", "1"]);
    assert_eq!(code(&out), 2);
    let out = run(&["weight", "--mu", "-1", "--theta", "1.0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_discrete_suite_passes() {
    let out = run(&["verify", "--suite", "orthogonality-discrete", "--tol", "1e-8"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["summary"]["total"], 69);
    for check in report["checks"].as_array().unwrap() {
        assert_eq!(check["pass"], true, "{}", check["name"]);
    }
}

#[test]
fn verify_unknown_suite_exits_two_with_no_report() {
    let out = run(&["verify", "--suite", "everything"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_impossible_tolerance_exits_one() {
    let out = run(&["verify", "--suite", "orthogonality-continuous", "--tol", "1e-18"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed = report["summary"]["failed"].as_u64().unwrap();
    assert!(failed > 0);
}

#[test]
fn verify_reports_validate_against_the_shipped_schema() {
    let schema_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../schemas/run_report.schema.json"
    ))
    .unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    for suite in [
        "orthogonality-continuous",
        "orthogonality-discrete",
        "asymptotics",
        "all",
    ] {
        let out = run(&["verify", "--suite", suite]);
        assert_eq!(code(&out), 0, "suite {suite}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let detail: Vec<String> = match compiled.validate(&report) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| e.to_string()).collect(),
        };
        assert!(
            detail.is_empty(),
            "suite {suite} fails schema validation: {detail:?}"
        );
    }
}

#[test]
fn csv_emissions_are_byte_deterministic() {
    let invocations: [&[&str]; 4] = [
        &["spectrum", "--kind", "well", "--a", PI_STR, "--m-max", "5"],
        &["weight", "--mu", "1.3", "--theta", "0.7", "--points", "17"],
        &[
            "asymptotics", "--mu", "0.8", "--theta", "1.2", "--y", "0.9",
            "--n-list", "32,128,512",
        ],
        &[
            "wavefunction", "--m", "2", "--a", "2.0", "--mu", "0.5", "--g", "0.6",
            "--x-samples", "33",
        ],
    ];
    for args in invocations {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}

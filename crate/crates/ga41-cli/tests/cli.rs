//! CLI behaviors beyond the acceptance gate: exit codes, error reporting,
//! JSON shapes, and the atomic --out path.

use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ga41"))
}

#[test]
fn bad_flags_exit_2() {
    let output = binary()
        .args(["table", "--format", "yaml"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));

    let output = binary().args(["frobnicate"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn expression_errors_exit_2_with_offsets() {
    let output = binary()
        .args(["eval", "(1 + e023)*(1 + e014)/4"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("byte 21"), "stderr: {stderr}");

    let output = binary().args(["eval", "e10"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("invalid blade"), "stderr: {stderr}");
}

#[test]
fn eval_prints_canonical_form_and_matrix() {
    let output = binary().args(["eval", "e1*e0", "--rep"]).output().unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.starts_with("-e01\n"));
    assert!(stdout.contains('j'), "matrix entries use j: {stdout}");

    let output = binary()
        .args(["eval", "0.25*(1+e023)*(1+e014)", "--json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["text"], "0.25 + 0.25*e014 + 0.25*e023 - 0.25*e1234");
    assert_eq!(doc["coefficients"]["e023"], 0.25);
}

#[test]
fn eval_reports_exp_domain_errors() {
    let output = binary().args(["eval", "exp(e3+e12)"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("not a scalar"), "stderr: {stderr}");
}

#[test]
fn table_out_writes_atomically() {
    let dir = std::env::temp_dir().join(format!("ga41-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let output = binary()
        .args(["table", "--format", "csv", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(output.stdout.is_empty());
    let on_disk = std::fs::read(&path).unwrap();
    let streamed = binary()
        .args(["table", "--format", "csv"])
        .output()
        .unwrap()
        .stdout;
    assert_eq!(on_disk, streamed);
    // No leftover temporary file.
    let leftovers: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().ends_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn generators_json_shape() {
    let output = binary()
        .args([
            "generators",
            "--group",
            "alpha",
            "--matrices",
            "--structure-constants",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    let generators = doc["generators"].as_array().unwrap();
    assert_eq!(generators.len(), 8);
    assert_eq!(generators[0]["label"], "alpha1");
    assert!(generators[0]["matrix"].is_array());
    assert!(!doc["structure_constants"].as_array().unwrap().is_empty());
}

#[test]
fn su4_structure_constants_use_the_full_basis() {
    let output = binary()
        .args([
            "generators",
            "--group",
            "su4",
            "--structure-constants",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    // The dump itself is the seven extension generators.
    assert_eq!(doc["generators"].as_array().unwrap().len(), 7);
    // The constants mention the lambda1..8 block, i.e. the full 15 basis.
    let constants = doc["structure_constants"].as_array().unwrap();
    assert!(constants
        .iter()
        .any(|e| e["c"].as_str().map(|s| s == "lambda3").unwrap_or(false)));
}

#[test]
fn wave_reports_residuals_and_numeric_check() {
    let output = binary()
        .args([
            "wave",
            "--p",
            "5,3,4,0,0",
            "--branch",
            "-",
            "--numeric-check",
            "0.001",
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("on-shell: true"));
    assert!(stdout.contains("monogenic residual: 0"));
    assert!(stdout.contains("refinement ratio"));

    // Off-shell wave with a custom unit and potential.
    let output = binary()
        .args([
            "wave",
            "--p",
            "1,1,1,1,1",
            "--u",
            "i*e023",
            "--a",
            "0.1,0,0,0",
        ])
        .output()
        .unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("on-shell: false"));
    assert!(stdout.contains("gauge residual"));

    // A unit that does not square to -1 is refused.
    let output = binary()
        .args(["wave", "--p", "1,0,0,0,1", "--u", "e1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn csv_table_matches_the_golden_copy() {
    let expected = "\
a0,a1,a2,a3,lambda3,lambda8,lambda15,q,i3,designation
1,0,0,0,0,0.00000000000000000,0.00000000000000000,0,1/2,
0,1,0,0,0,1.15470053837925168,0.81649658092772603,2/3,1/2,up
0,0,1,0,1,0.57735026918962584,-0.81649658092772603,1/3,1/2,anti-down
0,0,0,1,-1,0.57735026918962584,-0.81649658092772603,1,1/2,positron
-1,0,0,0,0,0.00000000000000000,0.00000000000000000,0,-1/2,
0,-1,0,0,0,-1.15470053837925168,-0.81649658092772603,-2/3,-1/2,anti-up
0,0,-1,0,-1,-0.57735026918962584,0.81649658092772603,-1/3,-1/2,down
0,0,0,-1,1,-0.57735026918962584,0.81649658092772603,-1,-1/2,electron
-1/2,-1/2,1/2,1/2,0,0.00000000000000000,-1.22474487139158894,1/3,0,anti-strange
-1/2,1/2,-1/2,1/2,-1,0.57735026918962584,0.40824829046386302,2/3,0,charm
-1/2,1/2,1/2,-1/2,1,0.57735026918962584,0.40824829046386302,0,0,
1/2,-1/2,-1/2,1/2,-1,-0.57735026918962584,-0.40824829046386302,0,0,
1/2,-1/2,1/2,-1/2,1,-0.57735026918962584,-0.40824829046386302,-2/3,0,anti-charm
1/2,1/2,-1/2,-1/2,0,0.00000000000000000,1.22474487139158894,-1/3,0,strange
1/2,1/2,1/2,1/2,0,1.15470053837925168,-0.40824829046386302,1,1,anti-mu
-1/2,-1/2,-1/2,-1/2,0,-1.15470053837925168,0.40824829046386302,-1,-1,mu
";
    let output = binary()
        .args(["table", "--format", "csv"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8(output.stdout).unwrap(), expected);
}

#[test]
fn verify_json_is_byte_stable_across_runs() {
    let run = || {
        binary()
            .args(["verify", "--suite", "core", "--json"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_unknown_suite_exits_2() {
    let output = binary()
        .args(["verify", "--suite", "bogus"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_single_suites_pass() {
    for suite in ["core", "rep", "symmetry", "spectrum", "monogenic"] {
        let output = binary()
            .args(["verify", "--suite", suite])
            .output()
            .unwrap();
        assert!(output.status.success(), "suite {suite}");
        let stdout = String::from_utf8(output.stdout).unwrap();
        assert!(stdout.contains("overall: pass"), "suite {suite}");
    }
}

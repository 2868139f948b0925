use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use pqn_cli::parse_instance;

fn tests_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn fixture(name: &str) -> PathBuf {
    tests_dir().join("fixtures").join(name)
}

fn pqn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqn"))
        .args(args)
        .output()
        .expect("failed to run pqn")
}

fn run(command: &[&str], instance: &str, extra: &[&str]) -> Output {
    let path = fixture(instance);
    let mut args = command.to_vec();
    args.extend(["--instance", path.to_str().unwrap()]);
    args.extend(extra);
    pqn(&args)
}

/// (golden file, command words, fixture, extra flags, exit code)
type Case = (
    &'static str,
    &'static [&'static str],
    &'static str,
    &'static [&'static str],
    i32,
);

const GOLDEN: &[Case] = &[
    (
        "check_poisson_jacobiator.json",
        &["check-poisson"],
        "jacobiator_r4.json",
        &[],
        1,
    ),
    (
        "check_poisson_jacobiator.txt",
        &["check-poisson"],
        "jacobiator_r4.json",
        &["--format", "text"],
        1,
    ),
    (
        "check_poisson_linear.json",
        &["check-poisson"],
        "linear_poisson_r3.json",
        &[],
        0,
    ),
    (
        "theorem_a_trivial.json",
        &["verify-theorem-a"],
        "trivial_pqn_r2.json",
        &[],
        0,
    ),
    (
        "theorem_a_scalar.txt",
        &["verify-theorem-a"],
        "scalar_endomorphism_r4.json",
        &["--format", "text"],
        0,
    ),
    (
        "check_pqn_scalar.json",
        &["check-pqn"],
        "scalar_endomorphism_r4.json",
        &[],
        1,
    ),
    (
        "check_symplectic_quasi.json",
        &["check-symplectic-quasi"],
        "symplectic_quasi_r4.json",
        &[],
        0,
    ),
    (
        "check_gcs_torsion.txt",
        &["check-gcs"],
        "torsion_gcs_r4.json",
        &["--format", "text"],
        1,
    ),
    (
        "theorem_d_complex.json",
        &["verify-theorem-d"],
        "complex_gcs_r2.json",
        &[],
        0,
    ),
    (
        "prop75_symplectic.json",
        &["prop75"],
        "symplectic_gcs_r2.json",
        &["--trials", "5", "--seed", "11"],
        0,
    ),
    (
        "lemma74_torsion.json",
        &["lemma74"],
        "torsion_gcs_r4.json",
        &["--trials", "3"],
        0,
    ),
    (
        "courant_double.txt",
        &["courant-axioms"],
        "double_identity_r2.json",
        &["--trials", "3", "--format", "text"],
        0,
    ),
    (
        "compute_dn.json",
        &["compute", "dn"],
        "dn_identity_r2.json",
        &[],
        0,
    ),
    (
        "compute_bracket_double.json",
        &["compute", "bracket-double"],
        "double_identity_r2.json",
        &[],
        0,
    ),
];

#[test]
fn golden_reports() {
    let update = std::env::var_os("PQN_UPDATE_GOLDEN").is_some();
    let dir = tests_dir().join("golden");
    fs::create_dir_all(&dir).unwrap();
    for (golden, command, instance, extra, code) in GOLDEN {
        let out = run(command, instance, extra);
        assert_eq!(
            out.status.code(),
            Some(*code),
            "{golden}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let path = dir.join(golden);
        if update {
            fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {golden}"));
        assert!(
            expected == out.stdout,
            "{golden} differs:\n{}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for (golden, command, instance, extra, _) in GOLDEN {
        let a = run(command, instance, extra).stdout;
        let b = run(command, instance, extra).stdout;
        assert_eq!(a, b, "{golden}");
    }
}

#[test]
fn malformed_instance_exits_two_without_report() {
    let out = run(&["check-poisson"], "malformed_indices.json", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("indices not strictly increasing"), "{err}");
}

#[test]
fn missing_tensor_is_an_error() {
    let out = run(&["check-pn"], "linear_poisson_r3.json", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing tensor 'N'"));
}

#[test]
fn core_preconditions_surface_as_errors() {
    // The Koszul bracket needs a Poisson bivector.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("koszul.json");
    fs::write(
        &path,
        r#"{"n":4,"tensors":{
            "pi":{"kind":"bivector","components":[{"indices":[1,2],"value":"1"},{"indices":[3,4],"value":"x1"}]},
            "alpha":{"kind":"form","components":[{"indices":[1],"value":"1"}]},
            "beta":{"kind":"form","components":[{"indices":[2],"value":"1"}]}}}"#,
    )
    .unwrap();
    let out = pqn(&["compute", "koszul", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not Poisson"));
}

#[test]
fn unknown_flags_and_commands_fail_with_usage() {
    let path = fixture("linear_poisson_r3.json");
    for args in [
        vec![
            "check-poisson",
            "--instance",
            path.to_str().unwrap(),
            "--bogus",
        ],
        vec!["frobnicate", "--instance", path.to_str().unwrap()],
        vec!["compute", "nothing"],
        vec!["check-poisson"],
    ] {
        let out = pqn(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("Usage"),
            "{args:?}"
        );
    }
}

#[test]
fn zero_defects_carry_no_components() {
    let out = run(&["check-poisson"], "linear_poisson_r3.json", &[]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for e in v["sections"][0]["entries"].as_array().unwrap() {
        assert_eq!(e["is_zero"], true);
        assert!(e.get("components").is_none());
    }
}

#[test]
fn jacobiator_component_is_reported() {
    let out = run(&["check-poisson"], "jacobiator_r4.json", &[]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], false);
    let first = &v["sections"][0]["entries"][0];
    assert_eq!(first["components"][0]["component"], "d2^d3^d4");
    assert_eq!(first["components"][0]["value"], "-2");
}

#[test]
fn compute_dn_of_identity_is_d() {
    let out = run(&["compute", "dn"], "dn_identity_r2.json", &[]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["degree"], 2);
    assert_eq!(
        v["result"]["components"][0]["indices"],
        serde_json::json!([1, 2])
    );
    assert_eq!(v["result"]["components"][0]["value"], "1");
}

#[test]
fn timing_only_on_request() {
    let plain = run(&["check-poisson"], "linear_poisson_r3.json", &[]);
    assert!(!String::from_utf8_lossy(&plain.stdout).contains("timing_ms"));
    let timed = run(&["check-poisson"], "linear_poisson_r3.json", &["--timing"]);
    assert!(String::from_utf8_lossy(&timed.stdout).contains("timing_ms"));
}

#[test]
fn fixtures_round_trip() {
    for entry in fs::read_dir(tests_dir().join("fixtures")).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        let Ok(first) = parse_instance(&text) else {
            continue;
        };
        let again = parse_instance(&first.to_json()).unwrap();
        assert_eq!(first, again, "{}", path.display());
    }
}

//! Byte-exact golden tests for the command-line interface: every invocation
//! must reproduce its recorded stdout exactly and exit with the documented
//! code.

mod common;

use common::{run_golden, GOLDENS};

#[test]
fn golden_suite_has_at_least_25_invocations() {
    assert!(GOLDENS.len() >= 25, "only {} golden cases", GOLDENS.len());
}

#[test]
fn golden_invocations_are_byte_identical() {
    let mut failures = Vec::new();
    for case in GOLDENS {
        let (stdout, code) = run_golden(case);
        if stdout != case.stdout {
            failures.push(format!(
                "{}: stdout mismatch\n  expected: {:?}\n  actual:   {:?}",
                case.name, case.stdout, stdout
            ));
        }
        if code != case.exit {
            failures.push(format!(
                "{}: exit code {} (expected {})",
                case.name, code, case.exit
            ));
        }
    }
    assert!(failures.is_empty(), "\n{}", failures.join("\n"));
}

#[test]
fn error_diagnostics_go_to_stderr() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_symf"))
        .args(["eval", "e[2,]"])
        .output()
        .expect("binary runs");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("syntax error at offset 4"),
        "stderr: {stderr}"
    );
    assert!(out.stdout.is_empty());
}

#[test]
fn verbose_schur_weyl_includes_basis() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_symf"))
        .args([
            "verify",
            "schur-weyl",
            "-N",
            "2",
            "-n",
            "2",
            "--json",
            "--verbose",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["dimension"], 2);
    let basis = value["basis"]
        .as_array()
        .expect("basis array under --verbose");
    assert_eq!(basis.len(), 2);
    for op in basis {
        assert!(op["entries"].as_array().is_some());
    }
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_symf"))
            .arg(flag)
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0), "{flag}");
    }
}

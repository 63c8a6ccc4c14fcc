#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn regdim(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_regdim"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Golden invocations: (fixture file, arguments, expected exit code).
pub const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("dims_4_5_3.json", &["dims", "-m", "4", "-n", "5", "-r", "3", "--format", "json"], 0),
    ("dims_2_4_4.txt", &["dims", "-m", "2", "-n", "4", "-r", "4"], 0),
    ("dims_2_2_2.csv", &["dims", "-m", "2", "-n", "2", "-r", "2", "--format", "csv"], 0),
    ("table_m2_n4_all.csv", &["table", "--m-range", "2..2", "--n-range", "4..4", "--r-policy", "all"], 0),
    (
        "table_m2-4_n4-6_only_n.csv",
        &["table", "--m-range", "2..4", "--n-range", "4..6", "--r-policy", "only-n", "--format", "csv"],
        0,
    ),
    (
        "table_m3_n5-6_only_n_minus_1.json",
        &["table", "--m-range", "3..3", "--n-range", "5..6", "--r-policy", "only-n-minus-1", "--format", "json"],
        0,
    ),
    ("classify_valid.txt", &["classify", "config_valid.json"], 0),
    ("classify_valid.json", &["classify", "config_valid.json", "--format", "json"], 0),
    ("classify_violated.txt", &["classify", "config_violated.json"], 3),
    ("classify_violated.json", &["classify", "config_violated.json", "--format", "json"], 3),
    ("classify_single.csv", &["classify", "config_single.json", "--format", "csv"], 0),
    ("verify_pfaff_seed7.txt", &["verify", "pfaff", "--seed", "7", "--cases", "500"], 0),
    ("verify_routes.txt", &["verify", "routes"], 0),
    ("verify_hockey.json", &["verify", "hockey", "--format", "json"], 0),
    ("verify_all_seed7.csv", &["verify", "all", "--seed", "7", "--format", "csv"], 0),
];

/// Compares stdout with the committed fixture. With `REGDIM_BLESS=1` the
/// fixture is rewritten instead.
pub fn check_golden(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let run = regdim(args);
    if run.code != code {
        return Err(format!("{name}: exit {} (expected {code}); stderr: {}", run.code, run.stderr));
    }
    let path = fixtures().join(name);
    if std::env::var_os("REGDIM_BLESS").is_some() {
        std::fs::write(&path, &run.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
    if expected != run.stdout {
        return Err(format!("{name}: output differs from fixture\n--- expected\n{expected}--- actual\n{}", run.stdout));
    }
    Ok(())
}

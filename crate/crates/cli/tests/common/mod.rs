#![allow(dead_code)]

use std::path::PathBuf;

use assert_cmd::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn bohr(args: &[&str]) -> Run {
    let out = Command::cargo_bin("bohr")
        .expect("binary builds")
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// (file stem, arguments) for every golden file.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("constants_table", &["constants"]),
    ("constants_json", &["constants", "--format", "json"]),
    ("constants_csv", &["constants", "--format", "csv"]),
    ("constants_paper_table", &["constants", "--constants", "paper"]),
    ("orbit_table", &["orbit", "-Z", "1", "-n", "1"]),
    ("orbit_json", &["orbit", "-Z", "1", "-n", "1", "--format", "json"]),
    ("orbit_csv", &["orbit", "-Z", "2", "-n", "1", "--format", "csv"]),
    ("verify_table", &["verify", "-n", "5"]),
    ("verify_json", &["verify", "-n", "5", "--format", "json"]),
    ("verify_csv", &["verify", "-n", "5", "--format", "csv"]),
    ("spectrum_table", &["spectrum", "-Z", "1", "--lower", "2", "--count", "4", "--unit", "nm"]),
    ("spectrum_json", &["spectrum", "--lower", "2", "--count", "4", "--format", "json"]),
    ("spectrum_csv", &["spectrum", "--lower", "1", "--count", "3", "--unit", "eV", "--format", "csv"]),
    ("collapse_table", &["collapse", "--r0", "1e-10"]),
    ("collapse_json", &["collapse", "--r0", "1e-10", "--format", "json"]),
    ("collapse_csv", &["collapse", "--r0", "1e-10", "--format", "csv"]),
];

pub fn golden_path(stem: &str) -> PathBuf {
    let ext = if stem.ends_with("json") {
        "json"
    } else if stem.ends_with("csv") {
        "csv"
    } else {
        "txt"
    };
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{stem}.{ext}"))
}

/// Compare each case against its golden file; `BLESS=1` rewrites them.
/// Returns the stems that did not match.
pub fn check_goldens() -> Vec<String> {
    let bless = std::env::var_os("BLESS").is_some();
    let mut mismatches = Vec::new();
    for (stem, args) in GOLDEN_CASES {
        let run = bohr(args);
        assert_eq!(run.code, 0, "{stem}: {}", run.stderr);
        let path = golden_path(stem);
        if bless {
            std::fs::write(&path, &run.stdout).expect("write golden");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == run.stdout => {}
            _ => mismatches.push(stem.to_string()),
        }
    }
    mismatches
}

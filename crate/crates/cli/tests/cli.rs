mod common;

use common::bohr;
use serde_json::Value;

fn words(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let run = bohr(&full);
    assert_eq!(run.code, 0, "{}", run.stderr);
    serde_json::from_str(&run.stdout).expect("single well-formed json document")
}

#[test]
fn constants_paper_row() {
    let run = bohr(&["constants", "--constants", "paper"]);
    assert_eq!(run.code, 0);
    assert!(words(&run.stdout).contains("e 1.602e-19 C paper"), "{}", run.stdout);
    assert!(words(&run.stdout).contains("c 3e8 m/s paper"));
}

#[test]
fn constants_json_lists_base_and_derived() {
    let v = json(&["constants"]);
    let data = v["data"].as_array().unwrap();
    let symbols: Vec<&str> = data.iter().map(|r| r["symbol"].as_str().unwrap()).collect();
    assert_eq!(symbols, ["e", "m_e", "eps0", "h", "c", "hbar", "rydberg_energy"]);
    assert_eq!(data.iter().filter(|r| r["provenance"] == "full").count(), 5);
    assert_eq!(v["meta"]["constants"], "full");
    assert!(v["meta"]["version"].is_string());
}

#[test]
fn constants_precision() {
    let run = bohr(&["constants", "--precision", "2"]);
    assert!(words(&run.stdout).contains("e 1.6e-19 C full"));
    assert!(words(&run.stdout).contains("m_e 9.1e-31 kg full"));
    assert_eq!(bohr(&["constants", "--precision", "1"]).code, 2);
    assert_eq!(bohr(&["constants", "--precision", "18"]).code, 2);
}

#[test]
fn orbit_ground_state() {
    let v = json(&["orbit", "-Z", "1", "-n", "1"]);
    let row = &v["data"][0];
    let e_ev = row["E_eV"].as_f64().unwrap();
    assert!((e_ev + 13.606).abs() < 0.001, "{e_ev}");
    let table = bohr(&["orbit", "-Z", "1", "-n", "1"]).stdout;
    assert!(table.contains("L/hbar = 1.000000"), "{table}");
}

#[test]
fn orbit_csv_header() {
    let run = bohr(&["orbit", "-Z", "2", "-n", "1", "--format", "csv"]);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "Z,n,r_m,v_mps,f_hz,Ek_J,Ep_J,E_J,E_eV,L_Js");
    assert!(run.stdout.ends_with('\n'));
}

#[test]
fn orbit_usage_errors() {
    for args in [
        &["orbit", "-Z", "1", "-n", "0"][..],
        &["orbit", "-Z", "0", "-n", "1"],
        &["orbit", "-Z", "1"],
        &["orbit", "-n", "x"],
    ] {
        let run = bohr(args);
        assert_eq!(run.code, 2, "{args:?}");
        assert!(run.stdout.is_empty());
        assert!(!run.stderr.is_empty());
    }
}

#[test]
fn verify_rows_and_exit() {
    let run = bohr(&["verify", "-n", "10", "--format", "csv"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().count(), 11);

    let v = json(&["verify", "-n", "1", "--step", "1e-5"]);
    assert!(v["data"][0]["residual_numeric"].as_f64().unwrap() <= 1e-9);

    assert_eq!(bohr(&["verify", "-n", "0"]).code, 2);
    assert_eq!(bohr(&["verify", "-n", "3", "--step", "0.5"]).code, 2);
}

#[test]
fn verify_failure_exits_one() {
    // a 1e-12 step leaves the central difference dominated by rounding
    let run = bohr(&["verify", "-n", "3", "--step", "1e-12"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("verification failed"));
    assert!(run.stdout.contains("FAILED"));
}

#[test]
fn spectrum_balmer() {
    let v = json(&["spectrum", "-Z", "1", "--lower", "2", "--count", "4", "--unit", "nm"]);
    let first = v["data"][0]["value_nm"].as_f64().unwrap();
    assert!((first - 656.1).abs() < 0.05);
    assert!((v["meta"]["series_limit_nm"].as_f64().unwrap() - 364.5).abs() < 0.05);
}

#[test]
fn spectrum_single_line_equivalence() {
    for fmt in ["table", "json", "csv"] {
        let series = bohr(&["spectrum", "--lower", "2", "--count", "1", "--format", fmt]);
        let single = bohr(&["spectrum", "--lower", "2", "--upper", "3", "--format", fmt]);
        assert_eq!(series.code, 0);
        assert_eq!(series.stdout, single.stdout, "{fmt}");
    }
}

#[test]
fn spectrum_usage_errors() {
    assert_eq!(bohr(&["spectrum", "--unit", "furlong"]).code, 2);
    assert_eq!(bohr(&["spectrum", "--lower", "2", "--upper", "2"]).code, 2);
    assert_eq!(bohr(&["spectrum", "--count", "0"]).code, 2);
}

#[test]
fn spectrum_units() {
    let ev = json(&["spectrum", "--lower", "1", "--count", "1", "--unit", "eV"]);
    assert!((ev["data"][0]["value_eV"].as_f64().unwrap() - 10.2043).abs() < 1e-3);
    let hz = json(&["spectrum", "--lower", "2", "--count", "1", "--unit", "Hz"]);
    let f = hz["data"][0]["value_Hz"].as_f64().unwrap();
    assert_eq!(f, hz["data"][0]["f_hz"].as_f64().unwrap());
    let m = json(&["spectrum", "--lower", "2", "--count", "1", "--unit", "m"]);
    assert_eq!(m["data"][0]["value_m"], m["data"][0]["lambda_m"]);
}

#[test]
fn collapse_default() {
    let v = json(&["collapse", "--r0", "1e-10"]);
    let row = &v["data"][0];
    assert!(row["collapse_time_s"].as_f64().unwrap() < 1.0);
    assert!(row["residual"].as_f64().unwrap() <= 1e-3);
}

#[test]
fn collapse_errors() {
    let below = bohr(&["collapse", "--r0", "1e-20"]);
    assert_eq!(below.code, 2);
    assert!(below.stderr.contains("r_stop"));
    assert_eq!(bohr(&["collapse", "--r0", "1e-10", "--tolerance", "0.5"]).code, 2);
    assert_eq!(bohr(&["collapse"]).code, 2);
    let budget = bohr(&["collapse", "--r0", "1e-10", "--max-steps", "3"]);
    assert_eq!(budget.code, 1);
    assert!(budget.stderr.contains("did not reach"));
    assert!(budget.stdout.is_empty());
}

#[test]
fn collapse_trajectory_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traj.csv");
    let run = bohr(&["collapse", "--r0", "1e-10", "--trajectory", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t_seconds,r_meters"));
    let points: Vec<(f64, f64)> = lines
        .map(|l| {
            let (t, r) = l.split_once(',').unwrap();
            (t.parse().unwrap(), r.parse().unwrap())
        })
        .collect();
    assert!(points.len() > 10);
    assert_eq!(points[0], (0.0, 1e-10));
    for w in points.windows(2) {
        assert!(w[1].0 > w[0].0 && w[1].1 < w[0].1);
    }
    assert!(text.ends_with('\n'));
}

#[test]
fn output_is_deterministic() {
    for (_, args) in common::GOLDEN_CASES {
        assert_eq!(bohr(args).stdout, bohr(args).stdout, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    for (stem, args) in common::GOLDEN_CASES {
        if !stem.ends_with("json") {
            continue;
        }
        let text = bohr(args).stdout;
        let first: Value = serde_json::from_str(&text).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
        assert_eq!(first, again, "{stem}");
        assert!(first["meta"].is_object() && first["data"].is_array());
    }
}

#[test]
fn paper_constants_flag_changes_output() {
    let v = json(&["orbit", "-n", "1", "--constants", "paper"]);
    assert_eq!(v["meta"]["constants"], "paper");
    // 4pi eps0 hbar^2/(m e^2) with the four-figure constants: 5.29305e-11 m
    assert!((v["data"][0]["r_m"].as_f64().unwrap() - 5.29305e-11).abs() < 1e-16);
}

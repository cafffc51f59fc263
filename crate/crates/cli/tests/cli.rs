//! End-to-end tests for the `qgal` binary: every subcommand is exercised
//! through a real process, and the JSON/CSV artifacts are parsed back.

use std::process::{Command, Output};

use serde_json::Value;

fn qgal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_standard_row_is_quasi_triangular() {
    let out = qgal(&["classify", "--family", "Ia-standard", "--xi", "1", "--beta1", "1"]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["schema"], "v1");
    assert_eq!(r["checks"]["cocycle"], "pass");
    assert_eq!(r["checks"]["cojacobi"], "pass");
    assert_eq!(r["type"], "quasi-triangular");
    assert_eq!(r["coboundary_matches"], "pass");
    assert_eq!(r["family"], "Ia");
    // the tabulated tie beta4 = xi is filled in automatically
    assert_eq!(r["point"]["beta4"], "1");
}

#[test]
fn classify_nonstandard_row_is_triangular() {
    let out = qgal(&[
        "classify", "--family", "nonstandard", "--beta1", "1/2", "--beta2", "1", "--beta3", "2",
    ]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["type"], "triangular");
    assert_eq!(r["family"], "Ia");
    assert_eq!(r["point"]["beta1"], "1/2");
}

#[test]
fn classify_boost_energy_candidate_fails_the_modified_equation() {
    let out = qgal(&["classify", "--r", "a3=1"]);
    let r = report(&out);
    assert_eq!(code(&out), 1);
    assert_eq!(r["checks"]["mcybe"], "fail");
    assert_eq!(r["type"], "fails");
    assert_eq!(r["pass"], false);
}

#[test]
fn classify_admissible_candidate_lands_in_the_first_family() {
    let out = qgal(&["classify", "--r", "a1=3,a6=2"]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["type"], "quasi-triangular");
    assert_eq!(r["family"], "Ia");
    // induced assignment: xi = beta4 = a1, beta1 = -a6
    assert_eq!(r["point"]["xi"], "3");
    assert_eq!(r["point"]["beta4"], "3");
    assert_eq!(r["point"]["beta1"], "-2");
}

#[test]
fn classify_zero_cobracket_is_trivial() {
    let out = qgal(&["classify", "--delta", "zero"]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["family"], "trivial");
    assert_eq!(r["checks"]["cocycle"], "pass");
}

#[test]
fn classify_exponential_family_rows_classify_themselves() {
    let out = qgal(&["classify", "--family", "IIb", "--alpha", "2", "--beta1", "1"]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["family"], "IIb");
    assert_eq!(r["point"]["beta6"], "-2");

    let out = qgal(&["classify", "--family", "IIa", "--alpha", "1", "--nu", "3"]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["family"], "IIa");

    let out = qgal(&["classify", "--family", "Ib", "--nu", "1", "--xi", "2", "--beta3", "1"]);
    let r = report(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(r["family"], "Ib");
}

#[test]
fn classify_violated_constraints_fail_with_the_values_shown() {
    // beta4 != xi with nu != 0 violates the fourth constraint polynomial
    let out = qgal(&["classify", "--family", "Ib", "--nu", "1", "--xi", "2", "--beta4", "5"]);
    let r = report(&out);
    assert_eq!(code(&out), 1);
    assert_eq!(r["constraints"]["satisfied"], false);
    assert_eq!(r["family"], Value::Null);
}

#[test]
fn classify_usage_errors_exit_2() {
    // two input modes at once
    let out = qgal(&["classify", "--family", "Ib", "--delta", "zero"]);
    assert_eq!(code(&out), 2);
    // malformed rational
    let out = qgal(&["classify", "--family", "Ib", "--nu", "1e-3"]);
    assert_eq!(code(&out), 2);
    // unknown wedge key
    let out = qgal(&["classify", "--r", "a9=1"]);
    assert_eq!(code(&out), 2);
    // unknown family
    let out = qgal(&["classify", "--family", "IIc"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_hopf_passes_for_every_constructed_family() {
    for family in ["standard", "nonstandard", "Ib", "IIb"] {
        let out = qgal(&["verify-hopf", "--family", family, "--order", "4"]);
        let r = report(&out);
        assert_eq!(code(&out), 0, "{family}: {r}");
        assert_eq!(r["pass"], true, "{family}");
        for check in [
            "homomorphism",
            "coassociativity",
            "counit",
            "casimirs",
            "antipode",
            "semiclassical",
            "undeformed_limit",
        ] {
            assert_eq!(r["checks"][check], "pass", "{family}/{check}");
        }
    }
}

#[test]
fn verify_hopf_iia_is_reported_not_implemented() {
    let out = qgal(&["verify-hopf", "--family", "IIa"]);
    let r = report(&out);
    assert_eq!(code(&out), 3);
    assert_eq!(r["status"], "not-implemented");
}

#[test]
fn verify_hopf_unknown_family_is_usage() {
    let out = qgal(&["verify-hopf", "--family", "IIIb"]);
    assert_eq!(code(&out), 2);
    let out = qgal(&["verify-hopf"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_rmatrix_nonstandard_intertwines_and_has_no_defect() {
    let out = qgal(&["verify-rmatrix", "--type", "nonstandard", "--order", "3", "--qybe"]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    for g in ["K", "H", "P", "M"] {
        assert_eq!(r["intertwining"][g], "pass", "{g}");
    }
    assert_eq!(r["slice"], Value::Null);
    assert_eq!(r["qybe"]["lowest_nonzero_order"], Value::Null);
    assert_eq!(r["qybe"]["vanishes"], true);
}

#[test]
fn verify_rmatrix_standard_needs_its_slice_and_keeps_a_defect() {
    let out = qgal(&["verify-rmatrix", "--type", "standard", "--order", "3", "--qybe"]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    assert_eq!(r["slice"]["beta1"], "0");
    for g in ["K", "H", "P", "M"] {
        assert_eq!(r["intertwining"][g], "pass", "{g}");
    }
    assert_eq!(r["qybe"]["lowest_nonzero_order"], 2);
    assert_eq!(r["qybe"]["vanishes"], false);
}

#[test]
fn simulate_conserves_the_deformed_chain() {
    let out = qgal(&[
        "simulate", "--family", "standard", "--N", "3", "--potential", "harmonic",
        "--xi", "0.2", "--beta1", "0.1", "--t-end", "2", "--dt", "1e-3",
    ]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    assert_eq!(r["involution"]["pass"], true);
    assert!(r["conservation"]["max_drift"].as_f64().unwrap() < 1e-8);
    assert_eq!(r["rows"], 2001);
}

#[test]
fn simulate_reports_are_byte_identical_for_identical_configs() {
    let args = [
        "simulate", "--family", "Ib", "--N", "2", "--nu", "0.15", "--xi", "0.2",
        "--beta3", "0.1", "--t-end", "1", "--seed", "77",
    ];
    let a = qgal(&args);
    let b = qgal(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn simulate_trajectory_csv_breaks_energy_into_kinetic_and_potential() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("traj.csv");
    let out = qgal(&[
        "simulate", "--family", "IIb", "--alpha", "0.4", "--N", "2",
        "--potential", "harmonic", "--t-end", "0.5",
        "--csv", csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,q1,q2,p1,p2,H,kinetic,potential,C2_2");
    let first: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    let (p1, p2) = (first[3], first[4]);
    let (h, kin, pot) = (first[5], first[6], first[7]);
    // the breakdown reassembles the energy exactly ...
    assert!((h - kin - pot).abs() < 1e-12);
    // ... and the kinetic term is visibly not the undeformed p^2/2m
    let undeformed = 0.5 * (p1 * p1 + p2 * p2);
    assert!((kin - undeformed).abs() > 1e-4, "kin={kin} undeformed={undeformed}");
}

#[test]
fn simulate_runaway_orbit_exits_with_blow_up() {
    let out = qgal(&[
        "simulate", "--family", "none", "--N", "1", "--potential", "monomial", "--degree", "3",
        "--q0", "-2", "--p0", "-1", "--t-end", "10", "--dt", "1e-2",
    ]);
    let r = report(&out);
    assert_eq!(code(&out), 1, "{r}");
    assert_eq!(r["error"]["kind"], "blow-up");
    assert!(r["error"]["t_last"].as_f64().unwrap() > 0.0);
}

#[test]
fn simulate_config_file_merges_with_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("run.json");
    std::fs::write(
        &cfg_path,
        r#"{"family": "IIb", "particles": 2, "alpha": 0.1, "potential": "harmonic",
            "t_end": 1.0, "masses": [1.0, 1.7]}"#,
    )
    .unwrap();
    let out = qgal(&["simulate", "--config", cfg_path.to_str().unwrap(), "--alpha", "0.2"]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    assert_eq!(r["config"]["family"], "IIb");
    assert_eq!(r["config"]["params"]["alpha"].as_f64().unwrap(), 0.2);
    assert_eq!(r["config"]["masses"][1].as_f64().unwrap(), 1.7);

    // unknown keys are rejected, not ignored
    let bad_path = dir.path().join("bad.json");
    std::fs::write(&bad_path, r#"{"particels": 2}"#).unwrap();
    let out = qgal(&["simulate", "--config", bad_path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn simulate_json_copy_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = qgal(&[
        "simulate", "--family", "none", "--N", "2", "--t-end", "0.5",
        "--json", json_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let copied = std::fs::read(&json_path).unwrap();
    assert_eq!(copied, out.stdout);
}

#[test]
fn simulate_usage_errors_exit_2() {
    let out = qgal(&["simulate", "--family", "IIa"]);
    assert_eq!(code(&out), 2);
    let out = qgal(&["simulate", "--N", "2", "--masses", "1,2,3"]);
    assert_eq!(code(&out), 2);
    let out = qgal(&["simulate", "--method", "leapfrog"]);
    assert_eq!(code(&out), 2);
    let out = qgal(&["simulate", "--potential", "absolute-value"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn pde_periodic_heat_run_reports_continuum_deviation() {
    let out = qgal(&["pde", "--alpha", "0.25", "--nodes", "128", "--t-end", "0.5"]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    assert_eq!(r["config"]["stride"], 1);
    let dev = r["continuum_deviation"].as_f64().unwrap();
    assert!(dev > 0.0 && dev < 1e-2, "dev={dev}");
    let n0 = r["norms"]["initial"].as_f64().unwrap();
    let n1 = r["norms"]["final"].as_f64().unwrap();
    assert!(n1 < n0, "heat flow contracts");
}

#[test]
fn pde_tiny_deformation_scale_matches_the_continuum() {
    let out = qgal(&[
        "pde", "--alpha", "1e-9", "--nodes", "128", "--spacing", "0.15625",
        "--t-end", "0.5", "--continuum-tol", "1e-8",
    ]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    assert_eq!(r["config"]["stride"], Value::Null);
    assert!(r["continuum_deviation"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn pde_snapshots_csv_lists_time_position_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("snap.csv");
    let out = qgal(&[
        "pde", "--alpha", "0.5", "--nodes", "64", "--t-end", "0.2", "--snapshots", "2",
        "--snapshot-csv", csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,x,psi_re,psi_im");
    // 4 stored snapshots (start, two interior, end) x 64 nodes
    assert_eq!(lines.count(), 4 * 64);
}

#[test]
fn pde_oversized_explicit_step_exits_1_and_names_the_implicit_scheme() {
    let out = qgal(&["pde", "--alpha", "0.25", "--dt", "0.03", "--t-end", "2"]);
    let r = report(&out);
    assert_eq!(code(&out), 1);
    assert_eq!(r["error"]["kind"], "unstable");
    assert!(r["error"]["message"].as_str().unwrap().contains("implicit"));
}

#[test]
fn pde_refinement_study_converges_at_second_order() {
    let out = qgal(&["pde", "--refine", "2", "--nodes", "128", "--t-end", "0.5"]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    let exps = r["study"]["exponents"].as_array().unwrap();
    assert_eq!(exps.len(), 1);
    let e = exps[0].as_f64().unwrap();
    assert!((1.8..=2.2).contains(&e), "exponent {e}");
}

#[test]
fn pde_symmetry_check_reports_every_generator() {
    let out = qgal(&[
        "pde", "--alpha", "0.25", "--nodes", "160", "--t-end", "0.5", "--check-symmetry",
    ]);
    let r = report(&out);
    assert_eq!(code(&out), 0, "{r}");
    let rows = r["report"]["commuting"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["pass"], true, "{row}");
        assert!(row["deviation"].as_f64().unwrap() <= row["tolerance"].as_f64().unwrap());
    }
    for id in r["report"]["operator_identities"].as_array().unwrap() {
        assert_eq!(id["exact"], true, "{id}");
    }
}

#[test]
fn pde_usage_errors_exit_2() {
    // Dirichlet waves need the deformation scale commensurate with the grid
    let out = qgal(&[
        "pde", "--alpha", "0.3", "--spacing", "0.1", "--boundary", "dirichlet",
    ]);
    assert_eq!(code(&out), 2);
    let out = qgal(&["pde", "--mode", "wave"]);
    assert_eq!(code(&out), 2);
    let out = qgal(&["pde", "--refine", "2", "--check-symmetry"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn help_documents_the_csv_columns() {
    let out = qgal(&["simulate", "--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("kinetic"), "simulate --help lists CSV columns");
    assert!(text.contains("C2_2..C2_N"), "simulate --help lists the hierarchy columns");
    let out = qgal(&["pde", "--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("psi_re"), "pde --help lists CSV columns");
}

#[test]
fn every_report_carries_the_schema_tag() {
    let runs: Vec<Output> = vec![
        qgal(&["classify", "--delta", "zero"]),
        qgal(&["verify-hopf", "--family", "IIb", "--order", "2"]),
        qgal(&["verify-rmatrix", "--type", "nonstandard", "--order", "2"]),
        qgal(&["simulate", "--family", "none", "--N", "2", "--t-end", "0.1"]),
        qgal(&["pde", "--t-end", "0.1"]),
    ];
    for out in &runs {
        let r = report(out);
        assert_eq!(r["schema"], "v1");
    }
}

//! Hamiltonian flow tests: exactness on free motion, long-run conservation
//! on deformed chains, blow-up detection, CSV output and batch equivalence.

use qgal_dynamics::hamiltonian::{HamiltonianSystem, Potential};
use qgal_dynamics::integrate::{
    integrate, integrate_batch, integrate_batch_seq, Method,
};
use qgal_dynamics::realize::{DeformParams, PhaseRealization, PoissonFamily};
use qgal_dynamics::DynError;

fn params() -> DeformParams {
    DeformParams {
        xi: 0.2,
        nu: 0.15,
        alpha: 0.3,
        beta1: 0.1,
        beta2: 0.1,
        beta3: 0.12,
    }
}

fn chain(family: PoissonFamily, n: usize, potential: Potential) -> HamiltonianSystem {
    let masses: Vec<f64> = [1.0, 1.5, 0.8, 1.2][..n].to_vec();
    let r = PhaseRealization::new(family, params(), masses).unwrap();
    HamiltonianSystem::new(r, n, potential).unwrap()
}

#[test]
fn free_motion_is_ballistic() {
    let r = PhaseRealization::new(PoissonFamily::Undeformed, DeformParams::default(), vec![2.0])
        .unwrap();
    let sys = HamiltonianSystem::new(r, 1, Potential::Zero).unwrap();
    let traj = integrate(&sys, &[0.5], &[1.2], 3.0, 0.01, Method::Rk4).unwrap();
    let last = traj.states.last().unwrap();
    // dq/dt = p/m is constant: q(3) = 0.5 + (1.2/2)·3
    assert!((last[0] - 2.3).abs() < 1e-12);
    assert!((last[1] - 1.2).abs() < 1e-14);
    assert!(traj.conservation().max_drift < 1e-14);
}

#[test]
fn deformed_two_particle_chain_conserves_energy_and_invariant() {
    let sys = chain(PoissonFamily::Standard, 2, Potential::Harmonic);
    let traj = integrate(&sys, &[0.4, -0.3], &[0.7, -0.2], 10.0, 1e-3, Method::Rk4).unwrap();
    let report = traj.conservation();
    assert!(report.energy_drift < 1e-8, "energy drift {}", report.energy_drift);
    assert!(report.max_drift < 1e-8, "max drift {}", report.max_drift);
    assert_eq!(traj.times.len(), 10_001);
}

#[test]
fn exponential_family_chain_conserves_too() {
    let sys = chain(PoissonFamily::IIb, 2, Potential::Harmonic);
    let traj = integrate(&sys, &[0.4, -0.3], &[0.7, -0.2], 10.0, 1e-3, Method::Rk4).unwrap();
    let report = traj.conservation();
    assert!(report.max_drift < 1e-8, "max drift {}", report.max_drift);
}

#[test]
fn implicit_midpoint_stays_near_the_energy_surface() {
    let sys = chain(PoissonFamily::Nonstandard, 2, Potential::Harmonic);
    let traj =
        integrate(&sys, &[0.4, -0.3], &[0.7, -0.2], 5.0, 5e-3, Method::ImplicitMidpoint).unwrap();
    let report = traj.conservation();
    assert!(report.energy_drift < 1e-3, "energy drift {}", report.energy_drift);
}

#[test]
fn runaway_potential_reports_blow_up() {
    // cubic potential, unbounded below: the orbit escapes in finite time
    let sys = chain(PoissonFamily::Undeformed, 1, Potential::Monomial(3));
    let out = integrate(&sys, &[-2.0], &[-1.0], 10.0, 1e-3, Method::Rk4);
    match out {
        Err(DynError::BlowUp { t_last }) => assert!(t_last > 0.0 && t_last < 10.0),
        other => panic!("expected blow-up, got {:?}", other.map(|t| t.times.len())),
    }
}

#[test]
fn unknown_potential_names_are_rejected() {
    assert!(matches!(
        Potential::from_name("absolute-value", None),
        Err(DynError::UnknownPotential(_))
    ));
    assert!(Potential::from_name("harmonic", None).is_ok());
    // registry accepts a degree for the monomial entry
    match Potential::from_name("monomial", Some(4)).unwrap() {
        Potential::Monomial(4) => {}
        other => panic!("wrong potential {:?}", other),
    }
}

#[test]
fn trajectory_csv_has_labeled_columns() {
    let sys = chain(PoissonFamily::Standard, 2, Potential::Harmonic);
    let traj = integrate(&sys, &[0.4, -0.3], &[0.7, -0.2], 0.1, 0.01, Method::Rk4).unwrap();
    let mut buf = Vec::new();
    traj.write_csv(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,q1,q2,p1,p2,H,C2_2");
    assert_eq!(text.lines().count(), 1 + traj.times.len());
    // numbers round-trip through the printed precision
    let first_row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let q1: f64 = first_row[1].parse().unwrap();
    assert_eq!(q1, 0.4);
}

#[test]
fn batched_runs_match_the_sequential_twin_exactly() {
    let sys = chain(PoissonFamily::Standard, 2, Potential::Harmonic);
    let initials: Vec<(Vec<f64>, Vec<f64>)> = (0..8)
        .map(|i| {
            let s = i as f64 * 0.1;
            (vec![0.3 + s, -0.2], vec![0.5, 0.1 - s])
        })
        .collect();
    let par = integrate_batch(&sys, initials.clone(), 1.0, 0.01, Method::Rk4).unwrap();
    let seq = integrate_batch_seq(&sys, initials, 1.0, 0.01, Method::Rk4).unwrap();
    assert_eq!(par.len(), seq.len());
    for (a, b) in par.iter().zip(&seq) {
        assert_eq!(a.states, b.states);
        assert_eq!(a.energy, b.energy);
    }
}

#[test]
fn invalid_run_configurations_are_rejected() {
    let sys = chain(PoissonFamily::Standard, 2, Potential::Harmonic);
    assert!(matches!(
        integrate(&sys, &[0.0, 0.0], &[0.0, 0.0], 1.0, 0.0, Method::Rk4),
        Err(DynError::InvalidConfig(_))
    ));
    assert!(matches!(
        integrate(&sys, &[0.0], &[0.0, 0.0], 1.0, 0.1, Method::Rk4),
        Err(DynError::InvalidConfig(_))
    ));
    assert!(matches!(Method::from_label("leapfrog"), Err(DynError::InvalidConfig(_))));
}

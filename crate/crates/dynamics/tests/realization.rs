//! Phase-space realization checks: closed two-particle forms against the
//! coproduct composition, bracket closure, involution certificates, and
//! the guarded mass functions.

use proptest::prelude::*;
use qgal_dynamics::bracket::{poisson_bracket, poisson_bracket_scaled};
use qgal_dynamics::hamiltonian::{
    certify_closed_forms, certify_closure, certify_involution, HamiltonianSystem, Potential,
};
use qgal_dynamics::realize::{
    deformed_mass, DeformParams, PhaseRealization, PoissonFamily, GEN_H, GEN_K, GEN_M, GEN_P,
    MASS_SERIES_THRESHOLD,
};
use qgal_dynamics::scalar::Dual;
use qgal_dynamics::DynError;

fn params() -> DeformParams {
    DeformParams {
        xi: 0.3,
        nu: 0.2,
        alpha: 0.35,
        beta1: 0.15,
        beta2: 0.12,
        beta3: 0.18,
    }
}

fn realize2(family: PoissonFamily) -> PhaseRealization {
    PhaseRealization::new(family, params(), vec![1.0, 1.7]).unwrap()
}

#[test]
fn canonical_pair_bracket_is_one() {
    let f = |q: &[Dual], _p: &[Dual]| q[0];
    let g = |_q: &[Dual], p: &[Dual]| p[0];
    let v = poisson_bracket(&f, &g, &[0.4], &[-1.3]).unwrap();
    assert_eq!(v, 1.0);
}

#[test]
fn gradient_matches_hand_derivatives() {
    // F = q₁² p₁ + q₂: ∂F/∂q₁ = 2 q₁ p₁, ∂F/∂p₁ = q₁², ∂F/∂q₂ = 1
    let f = |q: &[Dual], p: &[Dual]| q[0] * q[0] * p[0] + q[1];
    let (dq, dp) = qgal_dynamics::bracket::gradient(&f, &[3.0, -1.0], &[2.0, 5.0]).unwrap();
    assert_eq!(dq, vec![12.0, 1.0]);
    assert_eq!(dp, vec![9.0, 0.0]);
}

#[test]
fn undeformed_two_particle_invariant_by_hand() {
    let r = PhaseRealization::new(PoissonFamily::Undeformed, DeformParams::default(), vec![1.0, 2.0])
        .unwrap();
    let q = [0.3, -0.7];
    let p = [3.0, 1.0];
    let f = r.phase_functions(2, &q, &p);
    assert!((f[GEN_P] - 4.0).abs() < 1e-15);
    assert!((f[GEN_H] - 4.75).abs() < 1e-15);
    assert!((f[GEN_M] - 3.0).abs() < 1e-15);
    // P² − 2 M H = 16 − 28.5
    assert!((r.casimir2(&f) + 12.5).abs() < 1e-13);
    // closed form: −(m₂p₁ − m₁p₂)²/(m₁m₂) = −25/2
    assert!((r.c2_closed_2(&q, &p) + 12.5).abs() < 1e-13);
}

#[test]
fn mass_function_is_accurate_at_the_series_switchover() {
    // just below the threshold the Taylor branch runs; it must agree with
    // the exact closed form to near machine precision
    let x = 1.0;
    let m = MASS_SERIES_THRESHOLD * 0.999_999;
    let series = deformed_mass(x, m);
    let closed = f64::exp_m1(x * m) / x;
    assert!((series - closed).abs() / closed.abs() < 1e-14);

    // just above the threshold the closed branch runs; it must agree with
    // the polynomial the other branch would have used
    let m = MASS_SERIES_THRESHOLD * 1.000_001;
    let u = x * m;
    let poly = m * (1.0 + u * (1.0 / 2.0 + u * (1.0 / 6.0 + u / 24.0)));
    let v = deformed_mass(x, m);
    assert!((v - poly).abs() / v.abs() < 1e-14);
}

#[test]
fn family_labels_round_trip() {
    for fam in PoissonFamily::ALL {
        assert_eq!(PoissonFamily::from_label(fam.label()).unwrap(), fam);
    }
    assert!(matches!(
        PoissonFamily::from_label("IIa"),
        Err(DynError::UnsupportedFamily(_))
    ));
    assert!(PoissonFamily::Undeformed.active_params().is_empty());
    assert_eq!(PoissonFamily::Ib.active_params(), &["nu", "xi", "beta3"]);
}

#[test]
fn degenerate_masses_are_rejected() {
    assert!(PhaseRealization::new(PoissonFamily::Standard, params(), vec![]).is_err());
    assert!(PhaseRealization::new(PoissonFamily::Standard, params(), vec![1.0, 0.0]).is_err());
    assert!(PhaseRealization::new(PoissonFamily::Standard, params(), vec![f64::NAN]).is_err());
}

#[test]
fn two_particle_functions_close_the_deformed_brackets() {
    for fam in PoissonFamily::ALL {
        let cert = certify_closure(&realize2(fam), 25, 7, 1e-10).unwrap();
        assert!(
            cert.pass,
            "{}: worst bracket residual {}",
            cert.family, cert.max_residual
        );
    }
}

#[test]
fn closed_two_particle_forms_match_the_composition() {
    for fam in PoissonFamily::ALL {
        let cert = certify_closed_forms(&realize2(fam), 40, 11, 1e-12).unwrap();
        assert!(
            cert.pass,
            "{}: worst deviation {}",
            cert.family, cert.max_deviation
        );
    }
}

#[test]
fn one_particle_boost_momentum_bracket_realizes_the_mass() {
    // standard: {f_K, f_P} = (e^{2ξm} − 1)/(2ξ)
    let r = realize2(PoissonFamily::Standard);
    let fk = |q: &[Dual], p: &[Dual]| r.one_particle(0, q[0], p[0])[GEN_K];
    let fp = |q: &[Dual], p: &[Dual]| r.one_particle(0, q[0], p[0])[GEN_P];
    let v = poisson_bracket(&fk, &fp, &[0.9], &[-0.4]).unwrap();
    let w = deformed_mass(2.0 * params().xi, 1.0);
    assert!((v - w).abs() < 1e-14);

    // exponential family: {f_K, f_P} = m e^{−α p/2} = f_M
    let r = realize2(PoissonFamily::IIb);
    let fk = |q: &[Dual], p: &[Dual]| r.one_particle(0, q[0], p[0])[GEN_K];
    let fp = |q: &[Dual], p: &[Dual]| r.one_particle(0, q[0], p[0])[GEN_P];
    let p0 = -0.4;
    let v = poisson_bracket(&fk, &fp, &[0.9], &[p0]).unwrap();
    let expected = 1.0 * (-0.5 * params().alpha * p0).exp();
    assert!((v - expected).abs() < 1e-14);
}

#[test]
fn hierarchy_is_in_involution_for_three_particles() {
    let masses = vec![1.0, 1.7, 0.9];
    for fam in PoissonFamily::ALL {
        let r = PhaseRealization::new(fam, params(), masses.clone()).unwrap();
        let sys = HamiltonianSystem::new(r, 3, Potential::Harmonic).unwrap();
        let cert = certify_involution(&sys, 20, 2024, 1e-10).unwrap();
        assert!(
            cert.pass,
            "{}: worst involution residual {}",
            cert.family, cert.max_residual
        );
        // two {H, C} pairs plus one {C, C} pair
        assert_eq!(cert.worst.len(), 3);
    }
}

#[test]
fn involution_residual_detects_a_foreign_invariant() {
    // negative control: bracketing the deformed Hamiltonian against the
    // *undeformed* two-particle invariant must leave a visible residual,
    // so a passing certificate is information, not vacuity. (The boost
    // inside the deformed potential term carries reweighted coordinates,
    // which is exactly what the plain invariant cannot survive.)
    let deformed = realize2(PoissonFamily::Standard);
    let plain = PhaseRealization::new(
        PoissonFamily::Undeformed,
        DeformParams::default(),
        vec![1.0, 1.7],
    )
    .unwrap();
    let sys = HamiltonianSystem::new(deformed.clone(), 2, Potential::Harmonic).unwrap();
    let h = |q: &[Dual], p: &[Dual]| sys.hamiltonian(q, p);
    let wrong_c2 = |q: &[Dual], p: &[Dual]| {
        let levels = plain.compose(2, q, p);
        plain.casimir2(&levels[1])
    };
    let b = poisson_bracket_scaled(&h, &wrong_c2, &[0.3, -0.8], &[0.9, 0.4]).unwrap();
    assert!(b.relative() > 1e-4, "foreign invariant looked conserved: {}", b.relative());
}

#[test]
fn exponential_family_degenerates_smoothly_to_the_undeformed_one() {
    let masses = vec![1.0, 1.7];
    let plain =
        PhaseRealization::new(PoissonFamily::Undeformed, DeformParams::default(), masses.clone())
            .unwrap();

    // at α = 0 the guarded functions reproduce the undeformed family exactly
    let pr = DeformParams { alpha: 0.0, ..DeformParams::default() };
    let at_zero = PhaseRealization::new(PoissonFamily::IIb, pr, masses.clone()).unwrap();
    let q = [0.3, -0.8];
    let p = [0.9, 0.4];
    let a = at_zero.phase_functions(2, &q, &p);
    let b = plain.phase_functions(2, &q, &p);
    for x in 0..4 {
        assert!((a[x] - b[x]).abs() < 1e-15, "component {} at alpha = 0", x);
    }

    // at α = 10⁻⁸ every function is within O(α) of the undeformed one
    let pr = DeformParams { alpha: 1e-8, ..DeformParams::default() };
    let near_zero = PhaseRealization::new(PoissonFamily::IIb, pr, masses).unwrap();
    let a = near_zero.phase_functions(2, &q, &p);
    for x in 0..4 {
        assert!((a[x] - b[x]).abs() < 1e-6, "component {} at alpha = 1e-8", x);
    }
    assert!((near_zero.c2_closed_2(&q, &p) - plain.c2_closed_2(&q, &p)).abs() < 1e-6);
}

proptest! {
    #[test]
    fn mass_function_never_strays_from_the_closed_form(
        m in 0.05f64..5.0,
        x in -2.0f64..2.0,
    ) {
        prop_assume!(x.abs() > 1e-12);
        let v = deformed_mass(x, m);
        let closed = f64::exp_m1(x * m) / x;
        prop_assert!((v - closed).abs() <= 1e-12 * closed.abs().max(m));
    }

    #[test]
    fn one_particle_invariant_vanishes_for_every_family(
        q in -2.0f64..2.0,
        p in -2.0f64..2.0,
        m in 0.2f64..3.0,
    ) {
        for fam in PoissonFamily::ALL {
            let r = PhaseRealization::new(fam, params(), vec![m]).unwrap();
            let f = r.one_particle(0, q, p);
            let c2 = r.casimir2(&f);
            prop_assert!(c2.abs() < 1e-12, "{}: {}", fam.label(), c2);
            let c1 = r.casimir1(&f);
            prop_assert!((c1 - m).abs() < 1e-12 * m.max(1.0), "{}: {}", fam.label(), c1);
        }
    }
}

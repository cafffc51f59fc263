//! End-to-end checks of the quantum layer: every family's coproduct against
//! its closed form, the completion solver, structural verification, derived
//! antipodes, and the universal exchange matrices.

use num_traits::One;
use qgal_core::element::Element;
use qgal_core::error::CoreError;
use qgal_core::generator::{Gen, Word};
use qgal_core::hopf::coproduct::Coproduct;
use qgal_core::hopf::quantum::ib_coproduct_completion;
use qgal_core::hopf::{lm, verify, QTag, QuantumFamily, UniversalR};
use qgal_core::param::{Exponents, Param};
use qgal_core::series::{q, qi, Q, Series};
use qgal_core::table::CommutationTable;
use qgal_core::tensor::Tensor2;

fn w(k: u8, h: u8, p: u8, m: u8) -> Word {
    Word([k, h, p, m])
}

fn expv(pairs: &[(Param, i16)]) -> Exponents {
    let mut e = Exponents::ZERO;
    for &(p, k) in pairs {
        e = e.mul(&Exponents::of(p, k));
    }
    e
}

fn mono(pairs: &[(Param, i16)], c: Q, n: u32) -> Series {
    Series::monomial(expv(pairs), c, n)
}

fn fact(k: u32) -> Q {
    (1..=k).fold(Q::one(), |a, i| a * qi(i as i64))
}

/// Δ(X) = 1⊗X + X⊗e^{ξM} as a tensor, shared by several closed forms.
fn one_tensor_x_plus_x_tensor_exp(x: Word, n: u32) -> Tensor2 {
    let mut t = Tensor2::zero(n);
    t.add_term(Word::ONE, x, Series::one(n));
    for k in 0..=n {
        t.add_term(x, w(0, 0, 0, k as u8), mono(&[(Param::Xi, k as i16)], Q::one() / &fact(k), n));
    }
    t
}

fn standard_closed_form(n: u32) -> Coproduct {
    let mut cop = Coproduct::primitive(n);
    cop.set_image(Gen::P, one_tensor_x_plus_x_tensor_exp(w(0, 0, 1, 0), n));
    let mut dk = one_tensor_x_plus_x_tensor_exp(w(1, 0, 0, 0), n);
    for k in 0..n {
        dk.add_term(
            w(0, 0, 1, 0),
            w(0, 0, 0, (k + 1) as u8),
            mono(&[(Param::Beta1, 1), (Param::Xi, k as i16)], Q::one() / &fact(k), n),
        );
    }
    cop.set_image(Gen::K, dk);
    cop
}

fn nonstandard_closed_form(n: u32) -> Coproduct {
    let mut cop = Coproduct::primitive(n);
    let mut dh = cop.image(Gen::H).clone();
    dh.add_term(w(0, 0, 1, 0), w(0, 0, 0, 1), mono(&[(Param::Beta3, 1)], Q::one(), n));
    cop.set_image(Gen::H, dh);
    let mut dk = cop.image(Gen::K).clone();
    dk.add_term(w(0, 0, 1, 0), w(0, 0, 0, 1), mono(&[(Param::Beta1, 1)], Q::one(), n));
    dk.add_term(w(0, 1, 0, 0), w(0, 0, 0, 1), mono(&[(Param::Beta2, 1)], Q::one(), n));
    dk.add_term(
        w(0, 0, 1, 0),
        w(0, 0, 0, 2),
        mono(&[(Param::Beta2, 1), (Param::Beta3, 1)], q(1, 2), n),
    );
    cop.set_image(Gen::K, dk);
    cop
}

fn ib_closed_form(n: u32) -> Coproduct {
    let mut cop = Coproduct::primitive(n);
    cop.set_image(Gen::P, one_tensor_x_plus_x_tensor_exp(w(0, 0, 1, 0), n));
    // H: primitive plus β₃ P⊗(e^{ξM}−1)/ξ
    let mut dh = cop.image(Gen::H).clone();
    for k in 1..=n {
        dh.add_term(
            w(0, 0, 1, 0),
            w(0, 0, 0, k as u8),
            mono(&[(Param::Beta3, 1), (Param::Xi, (k - 1) as i16)], Q::one() / &fact(k), n),
        );
    }
    cop.set_image(Gen::H, dh);
    // K: 1⊗K + K⊗e^{ξM} + ν P⊗He^{ξM} + (νβ₃/2) P²⊗((e^{ξM}−1)/ξ)e^{ξM}
    let mut dk = one_tensor_x_plus_x_tensor_exp(w(1, 0, 0, 0), n);
    for k in 0..n {
        dk.add_term(
            w(0, 0, 1, 0),
            w(0, 1, 0, k as u8),
            mono(&[(Param::Nu, 1), (Param::Xi, k as i16)], Q::one() / &fact(k), n),
        );
    }
    for k in 1..n {
        // coefficient of M^k in ((e^{ξM}−1)/ξ)e^{ξM} is ξ^{k−1}(2^k−1)/k!
        let c = qi((1i64 << k) - 1) / &fact(k) * q(1, 2);
        dk.add_term(
            w(0, 0, 2, 0),
            w(0, 0, 0, k as u8),
            mono(&[(Param::Nu, 1), (Param::Beta3, 1), (Param::Xi, (k - 1) as i16)], c, n),
        );
    }
    cop.set_image(Gen::K, dk);
    cop
}

fn iib_closed_form(n: u32) -> Coproduct {
    let mut cop = Coproduct::primitive(n);
    let exp_neg = |x: Word, t: &mut Tensor2| {
        for k in 0..=n {
            let c = q(-1, 1).pow_signum(k) / &fact(k);
            t.add_term(x, w(0, 0, k as u8, 0), mono(&[(Param::Alpha, k as i16)], c, n));
        }
    };
    let mut dm = Tensor2::zero(n);
    dm.add_term(Word::ONE, w(0, 0, 0, 1), Series::one(n));
    exp_neg(w(0, 0, 0, 1), &mut dm);
    cop.set_image(Gen::M, dm);
    let mut dk = Tensor2::zero(n);
    dk.add_term(Word::ONE, w(1, 0, 0, 0), Series::one(n));
    exp_neg(w(1, 0, 0, 0), &mut dk);
    for k in 0..n {
        let c = -(q(-1, 1).pow_signum(k) / &fact(k));
        dk.add_term(
            w(0, 0, 0, 1),
            w(0, 0, (k + 1) as u8, 0),
            mono(&[(Param::Beta1, 1), (Param::Alpha, k as i16)], c.clone(), n),
        );
        dk.add_term(
            w(0, 0, 0, 1),
            w(0, 1, k as u8, 0),
            mono(&[(Param::Beta2, 1), (Param::Alpha, k as i16)], c, n),
        );
    }
    cop.set_image(Gen::K, dk);
    cop
}

trait PowSignum {
    fn pow_signum(self, k: u32) -> Q;
}

impl PowSignum for Q {
    fn pow_signum(self, k: u32) -> Q {
        if k % 2 == 0 {
            Q::one()
        } else {
            self
        }
    }
}

#[test]
fn standard_coproduct_matches_its_closed_form() {
    for n in [2u32, 4] {
        let qf = QuantumFamily::build(QTag::StandardIa, n).unwrap();
        assert_eq!(*qf.coproduct(), standard_closed_form(n));
    }
}

#[test]
fn nonstandard_coproduct_matches_its_closed_form() {
    for n in [2u32, 4] {
        let qf = QuantumFamily::build(QTag::NonstandardIa, n).unwrap();
        assert_eq!(*qf.coproduct(), nonstandard_closed_form(n));
    }
}

#[test]
fn boost_family_coproduct_matches_its_closed_form() {
    for n in [2u32, 4] {
        let qf = QuantumFamily::build(QTag::IIb, n).unwrap();
        assert_eq!(*qf.coproduct(), iib_closed_form(n));
    }
}

#[test]
fn nu_family_completion_reproduces_the_closed_form() {
    for n in [2u32, 3, 4] {
        let qf = QuantumFamily::build(QTag::Ib, n).unwrap();
        assert_eq!(*qf.coproduct(), ib_closed_form(n));
    }
}

#[test]
fn completion_tail_vanishes_with_nu() {
    let n = 4;
    let table = CommutationTable::family_ib(n);
    let base = lm::ib_partial_matrix(&table).unwrap().coproduct(&table).unwrap();
    let done = ib_coproduct_completion(&base, &table).unwrap();
    let zero = Series::zero(n);
    let stripped = done.subst(Param::Nu, &zero).unwrap();
    assert_eq!(stripped, base);
}

#[test]
fn completion_survives_the_xi_zero_slice() {
    let n = 4;
    let qf = QuantumFamily::build(QTag::Ib, n).unwrap();
    let zero = Series::zero(n);
    let sliced = qf
        .coproduct()
        .subst(Param::Xi, &zero)
        .and_then(|c| c.subst(Param::Beta3, &zero))
        .unwrap();
    let mut expected = Coproduct::primitive(n);
    let mut dk = expected.image(Gen::K).clone();
    dk.add_term(w(0, 0, 1, 0), w(0, 1, 0, 0), mono(&[(Param::Nu, 1)], Q::one(), n));
    expected.set_image(Gen::K, dk);
    assert_eq!(sliced, expected);
}

#[test]
fn completion_rejects_a_broken_base() {
    let n = 3;
    let table = CommutationTable::family_ib(n);
    let mut base = lm::ib_partial_matrix(&table).unwrap().coproduct(&table).unwrap();
    // double the deformation tail of Δ(P); no boost tail can repair this
    let mut dp = Tensor2::zero(n);
    dp.add_term(Word::ONE, w(0, 0, 1, 0), Series::one(n));
    for k in 0..=n {
        let c = qi(2).pow_all(k) / &fact(k);
        dp.add_term(w(0, 0, 1, 0), w(0, 0, 0, k as u8), mono(&[(Param::Xi, k as i16)], c, n));
    }
    base.set_image(Gen::P, dp);
    assert!(matches!(
        ib_coproduct_completion(&base, &table),
        Err(CoreError::CompletionFailure)
    ));
}

trait PowAll {
    fn pow_all(self, k: u32) -> Q;
}

impl PowAll for Q {
    fn pow_all(self, k: u32) -> Q {
        let mut out = Q::one();
        for _ in 0..k {
            out *= &self;
        }
        out
    }
}

#[test]
fn matrix_entries_must_commute() {
    let n = 3;
    let table = CommutationTable::undeformed(n);
    let zero = Element::zero(n);
    let bad = lm::LmMatrix::new(
        vec![Gen::K, Gen::H],
        vec![
            vec![Element::gen(Gen::K, n), zero.clone()],
            vec![zero, Element::gen(Gen::H, n)],
        ],
        &table,
    );
    assert!(matches!(bad, Err(CoreError::NonCommutingEntries)));
}

#[test]
fn matrix_exponential_needs_symbol_weight() {
    let n = 3;
    let table = CommutationTable::undeformed(n);
    let m = lm::LmMatrix::new(vec![Gen::K], vec![vec![Element::gen(Gen::M, n)]], &table).unwrap();
    assert!(matches!(m.exp(&table), Err(CoreError::NonNilpotentExponent)));
}

#[test]
fn general_matrix_specializes_to_both_named_coproducts() {
    let n = 4;
    let table = CommutationTable::undeformed(n);
    let general = lm::full_matrix(&table).unwrap().coproduct(&table).unwrap();
    let zero = Series::zero(n);
    let xi = Series::param(Param::Xi, n);
    let standard = general
        .subst(Param::Beta4, &xi)
        .and_then(|c| c.subst(Param::Beta2, &zero))
        .and_then(|c| c.subst(Param::Beta3, &zero))
        .and_then(|c| c.subst(Param::Beta5, &zero))
        .unwrap();
    assert_eq!(standard, standard_closed_form(n));
    let nonstandard = general
        .subst(Param::Xi, &zero)
        .and_then(|c| c.subst(Param::Beta4, &zero))
        .and_then(|c| c.subst(Param::Beta5, &zero))
        .unwrap();
    assert_eq!(nonstandard, nonstandard_closed_form(n));
}

#[test]
fn all_structural_checks_pass_for_every_family() {
    for tag in QTag::ALL {
        for n in [2u32, 3, 4] {
            let qf = QuantumFamily::build(tag, n).unwrap();
            let checks = verify::check_family(&qf).unwrap();
            assert!(checks.all_ok(), "family {} at order {}: {:?}", tag, n, checks);
        }
    }
}

#[test]
fn rotation_family_has_no_quantum_counterpart() {
    assert!(matches!(
        QuantumFamily::by_label("IIa", 4),
        Err(CoreError::UnsupportedFamily(_))
    ));
}

#[test]
fn tampered_coproduct_is_flagged() {
    let n = 3;
    let qf = QuantumFamily::build(QTag::StandardIa, n).unwrap();
    let mut cop = qf.coproduct().clone();
    cop.set_image(Gen::P, Coproduct::primitive(n).image(Gen::P).clone());
    let broken = QuantumFamily::from_parts(
        qf.tag(),
        qf.table().clone(),
        cop,
        qf.casimirs().clone(),
    );
    assert!(!verify::homomorphism_residuals(&broken).unwrap().is_empty());
    assert!(!verify::semiclassical_residuals(&broken).unwrap().is_empty());
}

#[test]
fn tampered_casimir_is_flagged() {
    let n = 3;
    let qf = QuantumFamily::build(QTag::NonstandardIa, n).unwrap();
    let [c1, c2] = qf.casimirs().clone();
    let spoiled = c2.try_add(&Element::gen(Gen::H, n)).unwrap();
    let broken =
        QuantumFamily::from_parts(qf.tag(), qf.table().clone(), qf.coproduct().clone(), [c1, spoiled]);
    assert!(!verify::casimir_residuals(&broken).unwrap().is_empty());
}

#[test]
fn antipodes_match_hand_computations() {
    let n = 4;
    // ξ-family: S(M)=−M, S(H)=−H, S(P)=−Pe^{−ξM}, S(K)=(−K+β₁PM)e^{−ξM}
    let qf = QuantumFamily::build(QTag::StandardIa, n).unwrap();
    let s = qf.coproduct().antipode(qf.table()).unwrap();
    assert_eq!(s[Gen::M.index()], Element::gen(Gen::M, n).neg());
    assert_eq!(s[Gen::H.index()], Element::gen(Gen::H, n).neg());
    let mut sp = Element::zero(n);
    let mut sk = Element::zero(n);
    for k in 0..=n {
        let c = q(-1, 1).pow_signum(k) / &fact(k);
        sp.add_term(w(0, 0, 1, k as u8), mono(&[(Param::Xi, k as i16)], -c.clone(), n));
        sk.add_term(w(1, 0, 0, k as u8), mono(&[(Param::Xi, k as i16)], -c.clone(), n));
        if k < n {
            sk.add_term(
                w(0, 0, 1, (k + 1) as u8),
                mono(&[(Param::Beta1, 1), (Param::Xi, k as i16)], c, n),
            );
        }
    }
    assert_eq!(s[Gen::P.index()], sp);
    assert_eq!(s[Gen::K.index()], sk);
    // boost family: S(M) = −Me^{αP}
    let qf = QuantumFamily::build(QTag::IIb, n).unwrap();
    let s = qf.coproduct().antipode(qf.table()).unwrap();
    let mut sm = Element::zero(n);
    for k in 0..=n {
        sm.add_term(
            w(0, 0, k as u8, 1),
            mono(&[(Param::Alpha, k as i16)], -(Q::one() / &fact(k)), n),
        );
    }
    assert_eq!(s[Gen::M.index()], sm);
}

#[test]
fn exchange_matrix_small_cases() {
    // order 1: only the classical term survives
    let t1 = CommutationTable::standard(1);
    let r = UniversalR::standard(&t1).unwrap();
    let mut expected = Tensor2::unit(1);
    expected.add_term(w(1, 0, 0, 0), w(0, 0, 1, 0), mono(&[(Param::Xi, 1)], Q::one(), 1));
    expected.add_term(w(0, 0, 1, 0), w(1, 0, 0, 0), mono(&[(Param::Xi, 1)], -Q::one(), 1));
    assert_eq!(*r.tensor(), expected);

    // β-family with β₁=β₂=0 factorizes as exp(β₃M⊗K)·exp(−β₃K⊗M)
    let n = 4;
    let t = CommutationTable::nonstandard(n);
    let r = UniversalR::nonstandard(&t).unwrap();
    let zero = Series::zero(n);
    let sliced = r.tensor().subst(Param::Beta1, &zero).unwrap().subst(Param::Beta2, &zero).unwrap();
    let mut mk = Tensor2::zero(n);
    mk.add_term(w(0, 0, 0, 1), w(1, 0, 0, 0), mono(&[(Param::Beta3, 1)], Q::one(), n));
    let mut km = Tensor2::zero(n);
    km.add_term(w(1, 0, 0, 0), w(0, 0, 0, 1), mono(&[(Param::Beta3, 1)], -Q::one(), n));
    let expected = mk.exp(&t).unwrap().mul(&km.exp(&t).unwrap(), &t).unwrap();
    assert_eq!(sliced, expected);

    // all symbols off: the unit
    let fully = sliced.subst(Param::Beta3, &zero).unwrap();
    assert_eq!(fully, Tensor2::unit(n));
}

#[test]
fn standard_exchange_matrix_intertwines() {
    let n = 4;
    let table = CommutationTable::standard(n);
    let r = UniversalR::standard(&table).unwrap();
    // the factorized form lives on the β₁ = 0 slice
    let cop = QuantumFamily::build(QTag::StandardIa, n)
        .unwrap()
        .coproduct()
        .subst(Param::Beta1, &Series::zero(n))
        .unwrap();
    assert!(r.intertwining_residuals(&cop, &table).unwrap().is_empty());
}

#[test]
fn nonstandard_exchange_matrix_intertwines_the_full_family() {
    let n = 4;
    let qf = QuantumFamily::build(QTag::NonstandardIa, n).unwrap();
    let r = UniversalR::nonstandard(qf.table()).unwrap();
    assert!(r.intertwining_residuals(qf.coproduct(), qf.table()).unwrap().is_empty());
}

#[test]
fn staged_conjugations_follow_the_three_step_pattern() {
    let n = 4;
    let qf = QuantumFamily::build(QTag::NonstandardIa, n).unwrap();
    let table = qf.table();
    let [a1, a2, a3] = qgal_core::hopf::nonstandard_stages(n);

    // momentum: 1⊗P + P⊗1 − β₃ M⊗M, fixed by the middle stage
    let mut h_target = Coproduct::primitive(n).image(Gen::P).clone();
    h_target.add_term(w(0, 0, 0, 1), w(0, 0, 0, 1), mono(&[(Param::Beta3, 1)], -Q::one(), n));
    let stage1 = qf.coproduct().image(Gen::P).conjugate_by_exp(&a1, table).unwrap();
    assert_eq!(stage1, h_target);
    assert_eq!(stage1.conjugate_by_exp(&a2, table).unwrap(), h_target);
    assert_eq!(
        h_target.conjugate_by_exp(&a3, table).unwrap(),
        qf.coproduct().image(Gen::P).flip()
    );

    // time: 1⊗H + H⊗1 − (β₃²/2)(M²⊗M + M⊗M²), fixed by the middle stage
    let mut f_target = Coproduct::primitive(n).image(Gen::H).clone();
    f_target.add_term(w(0, 0, 0, 2), w(0, 0, 0, 1), mono(&[(Param::Beta3, 2)], q(-1, 2), n));
    f_target.add_term(w(0, 0, 0, 1), w(0, 0, 0, 2), mono(&[(Param::Beta3, 2)], q(-1, 2), n));
    let stage1 = qf.coproduct().image(Gen::H).conjugate_by_exp(&a1, table).unwrap();
    assert_eq!(stage1, f_target);
    assert_eq!(stage1.conjugate_by_exp(&a2, table).unwrap(), f_target);
    assert_eq!(
        f_target.conjugate_by_exp(&a3, table).unwrap(),
        qf.coproduct().image(Gen::H).flip()
    );

    // boost: two distinct intermediate forms g₁ and g₂
    let mut g1 = Coproduct::primitive(n).image(Gen::K).clone();
    g1.add_term(w(0, 1, 0, 0), w(0, 0, 0, 1), mono(&[(Param::Beta2, 1)], Q::one(), n));
    g1.add_term(
        w(0, 0, 1, 0),
        w(0, 0, 0, 2),
        mono(&[(Param::Beta2, 1), (Param::Beta3, 1)], q(-1, 2), n),
    );
    let shared = [
        (w(0, 0, 0, 2), w(0, 0, 0, 1), mono(&[(Param::Beta1, 1), (Param::Beta3, 1)], q(-1, 2), n)),
        (w(0, 0, 0, 1), w(0, 0, 0, 2), mono(&[(Param::Beta1, 1), (Param::Beta3, 1)], q(-1, 2), n)),
        (w(0, 0, 0, 2), w(0, 0, 0, 2), mono(&[(Param::Beta2, 1), (Param::Beta3, 2)], q(-1, 2), n)),
    ];
    for (a, b, c) in &shared {
        g1.add_term(*a, *b, c.clone());
    }
    let mut g2 = Coproduct::primitive(n).image(Gen::K).clone();
    g2.add_term(w(0, 0, 0, 1), w(0, 1, 0, 0), mono(&[(Param::Beta2, 1)], Q::one(), n));
    g2.add_term(
        w(0, 0, 0, 2),
        w(0, 0, 1, 0),
        mono(&[(Param::Beta2, 1), (Param::Beta3, 1)], q(-1, 2), n),
    );
    for (a, b, c) in &shared {
        g2.add_term(*a, *b, c.clone());
    }
    let stage1 = qf.coproduct().image(Gen::K).conjugate_by_exp(&a1, table).unwrap();
    assert_eq!(stage1, g1);
    assert_eq!(stage1.conjugate_by_exp(&a2, table).unwrap(), g2);
    assert_eq!(
        g2.conjugate_by_exp(&a3, table).unwrap(),
        qf.coproduct().image(Gen::K).flip()
    );
}

#[test]
fn nonstandard_exchange_matrix_satisfies_yang_baxter() {
    // checked independently up to order 5; kept at 3 and 4 here for test speed
    for n in [3u32, 4] {
        let table = CommutationTable::nonstandard(n);
        let r = UniversalR::nonstandard(&table).unwrap();
        let residual = r.qybe_residual(&table).unwrap();
        assert!(residual.is_zero());
        assert_eq!(qgal_core::hopf::lowest_nonzero_order(&residual), None);
    }
}

#[test]
fn standard_exchange_matrix_fails_yang_baxter_at_second_order() {
    let n = 4;
    let table = CommutationTable::standard(n);
    let r = UniversalR::standard(&table).unwrap();
    let residual = r.qybe_residual(&table).unwrap();
    assert!(!residual.is_zero());
    assert_eq!(qgal_core::hopf::lowest_nonzero_order(&residual), Some(2));
}

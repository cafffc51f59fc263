//! The four quantum deformations assembled end to end: deformed bracket
//! table, coproduct, and the two central elements, one bundle per family.
//!
//! Three coproducts come straight from a matrix exponential. The ν-family
//! needs one extra step: the matrix part misses the ν-terms on the boost
//! generator, and `ib_coproduct_completion` recovers them by solving
//! coassociativity for the tail coefficients.

use crate::bialgebra::Cocommutator;
use crate::element::Element;
use crate::error::CoreError;
use crate::family::Family;
use crate::generator::{Gen, Word, GEN_COUNT};
use crate::hopf::coproduct::Coproduct;
use crate::hopf::lm;
use crate::linalg::QMat;
use crate::param::{Exponents, Param};
use crate::series::{q, qi, Q, Series};
use crate::table::CommutationTable;
use crate::tensor::Tensor2;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Labels for the quantum families. The type-I cell splits into the two
/// named deformations (ξ-only and β-only) plus the ν-family; the rotation
/// cell IIa has no quantum counterpart here and is reported as unsupported.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum QTag {
    StandardIa,
    NonstandardIa,
    Ib,
    IIb,
}

impl QTag {
    pub const ALL: [QTag; 4] = [QTag::StandardIa, QTag::NonstandardIa, QTag::Ib, QTag::IIb];

    pub fn label(self) -> &'static str {
        match self {
            QTag::StandardIa => "standard",
            QTag::NonstandardIa => "nonstandard",
            QTag::Ib => "Ib",
            QTag::IIb => "IIb",
        }
    }

    pub fn from_label(s: &str) -> Option<QTag> {
        QTag::ALL.iter().copied().find(|t| t.label().eq_ignore_ascii_case(s))
    }

    pub fn classical_family(self) -> Family {
        match self {
            QTag::StandardIa | QTag::NonstandardIa => Family::Ia,
            QTag::Ib => Family::Ib,
            QTag::IIb => Family::IIb,
        }
    }

    /// The symbols that switch the deformation off when sent to zero.
    pub fn deformation_symbols(self) -> &'static [Param] {
        match self {
            QTag::StandardIa => &[Param::Xi, Param::Beta1],
            QTag::NonstandardIa => &[Param::Beta1, Param::Beta2, Param::Beta3],
            QTag::Ib => &[Param::Xi, Param::Nu, Param::Beta3],
            QTag::IIb => &[Param::Alpha, Param::Beta1, Param::Beta2],
        }
    }

    /// First-order target: the classical cocommutator this deformation
    /// quantizes, on the reduced (tabulated) symbols.
    pub fn classical_cocommutator(self, order: u32) -> Cocommutator {
        let zero = Series::zero(order);
        match self {
            QTag::StandardIa => Family::Ia
                .tabulated_cocommutator(order)
                .subst(Param::Beta4, &Series::param(Param::Xi, order))
                .and_then(|d| d.subst(Param::Beta2, &zero))
                .and_then(|d| d.subst(Param::Beta3, &zero))
                .and_then(|d| d.subst(Param::Beta5, &zero))
                .expect("polynomial substitution"),
            QTag::NonstandardIa => Family::Ia
                .tabulated_cocommutator(order)
                .subst(Param::Xi, &zero)
                .and_then(|d| d.subst(Param::Beta4, &zero))
                .and_then(|d| d.subst(Param::Beta5, &zero))
                .expect("polynomial substitution"),
            QTag::Ib => Family::Ib.tabulated_cocommutator(order),
            QTag::IIb => Family::IIb.tabulated_cocommutator(order),
        }
    }
}

impl std::fmt::Display for QTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A quantum family at a fixed truncation order: deformed brackets, the
/// coproduct, and the two central elements (mass and the deformed quadratic
/// invariant).
#[derive(Clone)]
pub struct QuantumFamily {
    tag: QTag,
    table: CommutationTable,
    coproduct: Coproduct,
    casimirs: [Element; 2],
}

impl QuantumFamily {
    pub fn build(tag: QTag, order: u32) -> Result<QuantumFamily, CoreError> {
        let (table, coproduct, casimirs) = match tag {
            QTag::StandardIa => {
                let t = CommutationTable::standard(order);
                let cop = lm::standard_matrix(&t)?.coproduct(&t)?;
                let cas = bracket_casimirs(&t)?;
                (t, cop, cas)
            }
            QTag::NonstandardIa => {
                let t = CommutationTable::nonstandard(order);
                let cop = lm::nonstandard_matrix(&t)?.coproduct(&t)?;
                let cas = bracket_casimirs(&t)?;
                (t, cop, cas)
            }
            QTag::Ib => {
                let t = CommutationTable::family_ib(order);
                let base = lm::ib_partial_matrix(&t)?.coproduct(&t)?;
                let cop = ib_coproduct_completion(&base, &t)?;
                let cas = bracket_casimirs(&t)?;
                (t, cop, cas)
            }
            QTag::IIb => {
                let t = CommutationTable::family_iib(order);
                let cop = lm::iib_matrix(&t)?.coproduct(&t)?;
                let cas = iib_casimirs(order);
                (t, cop, cas)
            }
        };
        Ok(QuantumFamily { tag, table, coproduct, casimirs })
    }

    /// Build by family label; the rotation family has no deformed coproduct
    /// in this catalogue.
    pub fn by_label(label: &str, order: u32) -> Result<QuantumFamily, CoreError> {
        match QTag::from_label(label) {
            Some(tag) => QuantumFamily::build(tag, order),
            None => Err(CoreError::UnsupportedFamily(label.to_string())),
        }
    }

    /// Assemble a bundle from parts without validation; the verification
    /// functions exist precisely to judge arbitrary bundles.
    pub fn from_parts(
        tag: QTag,
        table: CommutationTable,
        coproduct: Coproduct,
        casimirs: [Element; 2],
    ) -> QuantumFamily {
        QuantumFamily { tag, table, coproduct, casimirs }
    }

    pub fn tag(&self) -> QTag {
        self.tag
    }

    pub fn order(&self) -> u32 {
        self.table.order()
    }

    pub fn table(&self) -> &CommutationTable {
        &self.table
    }

    pub fn coproduct(&self) -> &Coproduct {
        &self.coproduct
    }

    pub fn casimirs(&self) -> &[Element; 2] {
        &self.casimirs
    }
}

/// Central pair c1 = M, c2 = [K,H]² − 2[K,P]H, valid for every family whose
/// deformed brackets keep M central.
fn bracket_casimirs(table: &CommutationTable) -> Result<[Element; 2], CoreError> {
    let n = table.order();
    let kh = table.bracket_of(Gen::K, Gen::H);
    let kp = table.bracket_of(Gen::K, Gen::P);
    let h = Element::gen(Gen::H, n);
    let c2 = kh
        .mul(&kh, table)?
        .try_sub(&kp.mul(&h, table)?.scale_q(&qi(2)))?;
    Ok([Element::gen(Gen::M, n), c2])
}

/// Central pair for the boost-deformed family:
/// c1 = e^{αP/2} M and c2 = (sinh(αP/4)/(α/4))² − 2 e^{αP/2} M H.
fn iib_casimirs(order: u32) -> [Element; 2] {
    let n = order;
    let word = |kk: u8, hh: u8, pp: u8, mm: u8| Word([kk, hh, pp, mm]);
    // e^{αP/2} · (suffix word), shared by c1 and the MH part of c2
    let exp_half = |suffix: Word, scale: Q| {
        let mut out = Element::zero(n);
        let mut fact = Q::one();
        let mut half_pow = Q::one();
        for k in 0..=n as u8 {
            if k > 0 {
                fact *= qi(k as i64);
                half_pow *= q(1, 2);
            }
            let mut w = suffix.0;
            w[Gen::P.index()] += k;
            out.add_term(
                Word(w),
                Series::monomial(Exponents::of(Param::Alpha, k as i16), &half_pow / &fact * &scale, n),
            );
        }
        out
    };
    let c1 = exp_half(word(0, 0, 0, 1), Q::one());
    // (sinh(αP/4)/(α/4))² = Σ (α/4)^{2(j1+j2)} P^{2(j1+j2)+2} / ((2j1+1)!(2j2+1)!)
    let mut s_sq = Element::zero(n);
    let odd_fact = |j: u32| -> Q {
        let mut f = Q::one();
        for i in 2..=(2 * j + 1) {
            f *= qi(i as i64);
        }
        f
    };
    let mut j1 = 0u32;
    while 2 * j1 <= n {
        let mut j2 = 0u32;
        while 2 * (j1 + j2) <= n {
            let t = j1 + j2;
            let mut quarter = Q::one();
            for _ in 0..2 * t {
                quarter *= q(1, 4);
            }
            let coeff = &quarter / &(odd_fact(j1) * odd_fact(j2));
            let w = word(0, 0, (2 * t + 2) as u8, 0);
            s_sq.add_term(w, Series::monomial(Exponents::of(Param::Alpha, 2 * t as i16), coeff, n));
            j2 += 1;
        }
        j1 += 1;
    }
    let c2 = s_sq
        .try_sub(&exp_half(word(0, 1, 0, 1), qi(2)))
        .expect("order mismatch");
    [c1, c2]
}

/// Complete the matrix-exponential coproduct of the ν-family: the boost
/// image gains a tail
///   Σ_j u_j νξ^j P⊗HM^j + Σ_j v_j νβ₃ξ^j P²⊗M^{j+1}
/// whose leading coefficient u₀ = 1 is pinned by the first-order limit and
/// whose remaining coefficients are the unique solution of coassociativity.
/// The tail enters every residual linearly (its legs never contain the boost
/// generator), so the solve is a plain rational linear system; no unique
/// solution, or a nonzero final residual, is a `CompletionFailure`.
pub fn ib_coproduct_completion(
    base: &Coproduct,
    table: &CommutationTable,
) -> Result<Coproduct, CoreError> {
    let n = base.order();
    let mut tails: Vec<Tensor2> = Vec::new();
    for j in 0..n {
        let e = Exponents::of(Param::Nu, 1).mul(&Exponents::of(Param::Xi, j as i16));
        let mut t = Tensor2::zero(n);
        t.add_term(
            Word([0, 0, 1, 0]),
            Word([0, 1, 0, j as u8]),
            Series::monomial(e, Q::one(), n),
        );
        tails.push(t);
    }
    for j in 0..n.saturating_sub(1) {
        let e = Exponents::of(Param::Nu, 1)
            .mul(&Exponents::of(Param::Beta3, 1))
            .mul(&Exponents::of(Param::Xi, j as i16));
        let mut t = Tensor2::zero(n);
        t.add_term(
            Word([0, 0, 2, 0]),
            Word([0, 0, 0, (j + 1) as u8]),
            Series::monomial(e, Q::one(), n),
        );
        tails.push(t);
    }
    if tails.is_empty() {
        return check_completed(base.clone(), table);
    }
    let seeded = with_extra_boost(base, &tails[0])?;
    let r0 = vectorize(&coassoc_all(&seeded, table)?);
    let unknowns = &tails[1..];
    let mut responses: Vec<BTreeMap<ResidualKey, Q>> = Vec::with_capacity(unknowns.len());
    for b in unknowns {
        let ri = vectorize(&coassoc_all(&with_extra_boost(&seeded, b)?, table)?);
        responses.push(map_sub(&ri, &r0));
    }
    let mut keys: BTreeSet<ResidualKey> = r0.keys().copied().collect();
    for r in &responses {
        keys.extend(r.keys().copied());
    }
    let cols = unknowns.len();
    let mut aug = QMat::zero(keys.len(), cols + 1);
    for (i, k) in keys.iter().enumerate() {
        for (j, r) in responses.iter().enumerate() {
            if let Some(v) = r.get(k) {
                aug.set(i, j, v.clone());
            }
        }
        if let Some(v) = r0.get(k) {
            aug.set(i, cols, -v);
        }
    }
    let pivots = aug.rref();
    if pivots.contains(&cols) || pivots.len() < cols {
        return Err(CoreError::CompletionFailure);
    }
    let mut img = seeded.image(Gen::K).clone();
    for (i, &pc) in pivots.iter().enumerate() {
        let c = aug.get(i, cols);
        if !c.is_zero() {
            img = img.try_add(&unknowns[pc].scale_q(c))?;
        }
    }
    let mut out = seeded;
    out.set_image(Gen::K, img);
    check_completed(out, table)
}

fn check_completed(cop: Coproduct, table: &CommutationTable) -> Result<Coproduct, CoreError> {
    for i in 0..GEN_COUNT {
        if !cop.coassociativity_residual(Gen::from_index(i), table)?.is_zero() {
            return Err(CoreError::CompletionFailure);
        }
    }
    Ok(cop)
}

fn with_extra_boost(cop: &Coproduct, extra: &Tensor2) -> Result<Coproduct, CoreError> {
    let mut out = cop.clone();
    out.set_image(Gen::K, cop.image(Gen::K).try_add(extra)?);
    Ok(out)
}

fn coassoc_all(cop: &Coproduct, table: &CommutationTable) -> Result<[crate::tensor::Tensor3; GEN_COUNT], CoreError> {
    Ok([
        cop.coassociativity_residual(Gen::K, table)?,
        cop.coassociativity_residual(Gen::H, table)?,
        cop.coassociativity_residual(Gen::P, table)?,
        cop.coassociativity_residual(Gen::M, table)?,
    ])
}

type ResidualKey = (usize, Word, Word, Word, Exponents);

fn vectorize(rs: &[crate::tensor::Tensor3; GEN_COUNT]) -> BTreeMap<ResidualKey, Q> {
    let mut out = BTreeMap::new();
    for (g, t) in rs.iter().enumerate() {
        for ((a, b, c), s) in t.terms() {
            for (e, v) in s.terms() {
                if !v.is_zero() {
                    out.insert((g, *a, *b, *c, *e), v.clone());
                }
            }
        }
    }
    out
}

fn map_sub(a: &BTreeMap<ResidualKey, Q>, b: &BTreeMap<ResidualKey, Q>) -> BTreeMap<ResidualKey, Q> {
    let mut out = a.clone();
    for (k, v) in b {
        let entry = out.entry(*k).or_insert_with(Q::zero);
        *entry -= v;
        if entry.is_zero() {
            out.remove(k);
        }
    }
    out
}

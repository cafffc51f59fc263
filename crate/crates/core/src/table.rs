//! Commutation tables: the undeformed bracket set and the four deformed
//! variants used by the quantum families.
//!
//! A table stores [G_i, G_j] for i < j in PBW normal form; antisymmetry is
//! implicit. Deformed remainders such as (exp(2 xi M) - 1)/(2 xi) are stored
//! as finite PBW elements: the scalar division is resolved term by term, so
//! the zero-deformation limit is manifest and no symbol inverses appear.

use crate::element::Element;
use crate::error::CoreError;
use crate::generator::{Gen, Word, GEN_COUNT};
use crate::param::Param;
use crate::series::{q, qi, Q, Series};
use num_traits::One;

/// Default bound on PBW word length during rewriting. Identities at
/// truncation order 6 stay far below this; raise it for higher orders.
pub const DEFAULT_WORD_CAP: usize = 24;

#[derive(Clone)]
pub struct CommutationTable {
    name: &'static str,
    order: u32,
    cap: usize,
    // brackets[pair_index(i,j)] = [G_i, G_j] for i < j
    brackets: Vec<Element>,
}

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < GEN_COUNT);
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!(),
    }
}

/// (exp(c p G) - 1) / (c p) = sum_{k>=1} (c p)^(k-1) G^k / k!
fn exp_minus_one_over(g: Gen, p: Param, c: Q, order: u32) -> Element {
    let mut out = Element::zero(order);
    let mut scalar = Q::one(); // (c p)^(k-1) numeric part
    let mut factorial = Q::one();
    for k in 1..=(order + 1) {
        factorial *= qi(k as i64);
        let mut w = [0u8; GEN_COUNT];
        w[g.index()] = k as u8;
        let coeff = Series::monomial(
            crate::param::Exponents::of(p, (k - 1) as i16),
            &scalar / &factorial,
            order,
        );
        out.add_term(Word(w), coeff);
        scalar *= &c;
    }
    out
}

impl CommutationTable {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Element {
        &self.brackets[pair_index(i, j)]
    }

    pub fn bracket_of(&self, a: Gen, b: Gen) -> Element {
        if a.index() < b.index() {
            self.bracket(a.index(), b.index()).clone()
        } else if a.index() > b.index() {
            self.bracket(b.index(), a.index()).neg()
        } else {
            Element::zero(self.order)
        }
    }

    /// Build a table from explicit bracket values; no consistency check, so
    /// deliberately broken tables can be constructed for testing.
    pub fn custom(
        name: &'static str,
        order: u32,
        cap: usize,
        brackets: impl Fn(Gen, Gen) -> Element,
    ) -> CommutationTable {
        let mut list = Vec::with_capacity(6);
        for i in 0..GEN_COUNT {
            for j in (i + 1)..GEN_COUNT {
                list.push(brackets(Gen::from_index(i), Gen::from_index(j)));
            }
        }
        CommutationTable { name, order, cap, brackets: list }
    }

    /// [K,H]=P, [K,P]=M, all other brackets zero.
    pub fn undeformed(order: u32) -> CommutationTable {
        Self::checked("undeformed", order, |a, b| match (a, b) {
            (Gen::K, Gen::H) => Element::gen(Gen::P, order),
            (Gen::K, Gen::P) => Element::gen(Gen::M, order),
            _ => Element::zero(order),
        })
    }

    /// [K,H]=P, [K,P]=(exp(2 xi M)-1)/(2 xi), M central.
    pub fn standard(order: u32) -> CommutationTable {
        Self::checked("standard", order, |a, b| match (a, b) {
            (Gen::K, Gen::H) => Element::gen(Gen::P, order),
            (Gen::K, Gen::P) => exp_minus_one_over(Gen::M, Param::Xi, qi(2), order),
            _ => Element::zero(order),
        })
    }

    /// [K,H]=P+(beta3/2)M^2, [K,P]=M, M central.
    pub fn nonstandard(order: u32) -> CommutationTable {
        Self::checked("nonstandard", order, |a, b| match (a, b) {
            (Gen::K, Gen::H) => {
                let mut e = Element::gen(Gen::P, order);
                e.add_term(
                    Word([0, 0, 0, 2]),
                    Series::monomial(crate::param::Exponents::of(Param::Beta3, 1), q(1, 2), order),
                );
                e
            }
            (Gen::K, Gen::P) => Element::gen(Gen::M, order),
            _ => Element::zero(order),
        })
    }

    /// [K,H]=P+(beta3/2)((exp(xi M)-1)/xi)^2, [K,P]=(exp(2 xi M)-1)/(2 xi).
    pub fn family_ib(order: u32) -> CommutationTable {
        Self::checked("Ib", order, |a, b| match (a, b) {
            (Gen::K, Gen::H) => {
                let m = exp_minus_one_over(Gen::M, Param::Xi, qi(1), order);
                // M-words commute, so squaring needs no table
                let mut sq = Element::zero(order);
                for (wa, ca) in m.terms() {
                    for (wb, cb) in m.terms() {
                        let w = Word([0, 0, 0, wa.0[3] + wb.0[3]]);
                        sq.add_term(w, ca.try_mul(cb).unwrap());
                    }
                }
                let half_b3 =
                    Series::monomial(crate::param::Exponents::of(Param::Beta3, 1), q(1, 2), order);
                Element::gen(Gen::P, order).try_add(&sq.scale(&half_b3)).unwrap()
            }
            (Gen::K, Gen::P) => exp_minus_one_over(Gen::M, Param::Xi, qi(2), order),
            _ => Element::zero(order),
        })
    }

    /// [K,H]=(1-exp(-alpha P))/alpha, [K,P]=M, [K,M]=-(alpha/2)M^2.
    pub fn family_iib(order: u32) -> CommutationTable {
        Self::checked("IIb", order, |a, b| match (a, b) {
            (Gen::K, Gen::H) => exp_minus_one_over(Gen::P, Param::Alpha, qi(-1), order),
            (Gen::K, Gen::P) => Element::gen(Gen::M, order),
            (Gen::K, Gen::M) => Element::monomial(
                Word([0, 0, 0, 2]),
                Series::monomial(crate::param::Exponents::of(Param::Alpha, 1), q(-1, 2), order),
            ),
            _ => Element::zero(order),
        })
    }

    fn checked(
        name: &'static str,
        order: u32,
        brackets: impl Fn(Gen, Gen) -> Element,
    ) -> CommutationTable {
        let t = Self::custom(name, order, DEFAULT_WORD_CAP, brackets);
        let bad = t.jacobi_residuals().expect("rewriting within cap");
        assert!(
            bad.is_empty(),
            "inconsistent bracket table '{name}': first failing triple {:?}",
            bad[0].0
        );
        t
    }

    /// [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] for every generator triple;
    /// returns the nonzero residuals (must be empty for a Lie algebra).
    pub fn jacobi_residuals(&self) -> Result<Vec<((Gen, Gen, Gen), Element)>, CoreError> {
        let mut bad = Vec::new();
        for i in 0..GEN_COUNT {
            for j in (i + 1)..GEN_COUNT {
                for k in (j + 1)..GEN_COUNT {
                    let (x, y, z) =
                        (Gen::from_index(i), Gen::from_index(j), Gen::from_index(k));
                    let ex = Element::gen(x, self.order);
                    let ey = Element::gen(y, self.order);
                    let ez = Element::gen(z, self.order);
                    let r1 = self.bracket_of(x, y).commutator(&ez, self)?;
                    let r2 = self.bracket_of(y, z).commutator(&ex, self)?;
                    let r3 = self.bracket_of(z, x).commutator(&ey, self)?;
                    let total = r1.try_add(&r2)?.try_add(&r3)?;
                    if !total.is_zero() {
                        bad.push(((x, y, z), total));
                    }
                }
            }
        }
        Ok(bad)
    }
}

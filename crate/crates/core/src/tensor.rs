//! Tensor square and cube of the enveloping algebra.
//!
//! Legs multiply independently (a⊗b)(c⊗d) = ac⊗bd, each product running
//! through the PBW rewriting engine. Wedges are normalized without a 1/2:
//! X∧Y := X⊗Y − Y⊗X.

use crate::element::{normal_order, Element};
use crate::error::CoreError;
use crate::generator::Word;
use crate::par;
use crate::param::Param;
use crate::series::{Q, Series};
use crate::table::CommutationTable;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    order: u32,
    terms: BTreeMap<(Word, Word), Series>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    order: u32,
    terms: BTreeMap<(Word, Word, Word), Series>,
}

fn leg_product(a: &Word, b: &Word, coeff: Series, table: &CommutationTable) -> Result<Element, CoreError> {
    let mut letters = a.letters();
    letters.extend_from_slice(&b.letters());
    normal_order(letters, coeff, table)
}

impl Tensor2 {
    pub fn zero(order: u32) -> Tensor2 {
        Tensor2 { order, terms: BTreeMap::new() }
    }

    pub fn unit(order: u32) -> Tensor2 {
        Tensor2::monomial(Word::ONE, Word::ONE, Series::one(order))
    }

    pub fn monomial(a: Word, b: Word, coeff: Series) -> Tensor2 {
        let mut t = Tensor2::zero(coeff.order());
        t.add_term(a, b, coeff);
        t
    }

    /// a ⊗ b for algebra elements a, b.
    pub fn product(a: &Element, b: &Element) -> Tensor2 {
        let mut t = Tensor2::zero(a.order());
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(*wa, *wb, ca.try_mul(cb).expect("order mismatch"));
            }
        }
        t
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Series)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Word, b: &Word) -> Series {
        self.terms.get(&(*a, *b)).cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn add_term(&mut self, a: Word, b: Word, coeff: Series) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&(a, b)) {
            None => {
                self.terms.insert((a, b), coeff);
            }
            Some(old) => {
                let sum = old.try_add(&coeff).expect("order mismatch");
                if !sum.is_zero() {
                    self.terms.insert((a, b), sum);
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Tensor2) -> Result<Tensor2, CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Tensor2) -> Result<Tensor2, CoreError> {
        self.try_add(&rhs.neg())
    }

    #[must_use]
    pub fn neg(&self) -> Tensor2 {
        self.scale_q(&-Q::one())
    }

    #[must_use]
    pub fn scale_q(&self, c: &Q) -> Tensor2 {
        let mut out = Tensor2::zero(self.order);
        for ((a, b), s) in &self.terms {
            out.add_term(*a, *b, s.scale(c));
        }
        out
    }

    #[must_use]
    pub fn scale(&self, s: &Series) -> Tensor2 {
        let mut out = Tensor2::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c.try_mul(s).expect("order mismatch"));
        }
        out
    }

    /// σ: swap the two legs.
    #[must_use]
    pub fn flip(&self) -> Tensor2 {
        let mut out = Tensor2::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(*b, *a, c.clone());
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        self.try_add(&self.flip()).map_or(false, |s| s.is_zero())
    }

    pub fn subst(&self, p: Param, value: &Series) -> Result<Tensor2, CoreError> {
        let mut out = Tensor2::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c.subst(p, value)?);
        }
        Ok(out)
    }

    /// Part whose coefficients are homogeneous of symbol degree `d`.
    #[must_use]
    pub fn homogeneous_part(&self, d: i32) -> Tensor2 {
        let mut out = Tensor2::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c.homogeneous_part(d));
        }
        out
    }

    pub fn min_symbol_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    pub fn mul(&self, rhs: &Tensor2, table: &CommutationTable) -> Result<Tensor2, CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let mut pairs = Vec::new();
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &rhs.terms {
                let coeff = ca.try_mul(cb)?;
                if !coeff.is_zero() {
                    pairs.push((((*a1, *b1), (*a2, *b2)), coeff));
                }
            }
        }
        let parts = par::try_map_batch(pairs, |((l1, l2), coeff)| {
            let e1 = leg_product(&l1.0, &l1.1, coeff, table)?;
            let e2 = leg_product(&l2.0, &l2.1, Series::one(table.order()), table)?;
            let mut part = Tensor2::zero(table.order());
            for (w1, c1) in e1.terms() {
                for (w2, c2) in e2.terms() {
                    part.add_term(*w1, *w2, c1.try_mul(c2)?);
                }
            }
            Ok::<Tensor2, CoreError>(part)
        })?;
        let mut out = Tensor2::zero(self.order);
        for part in parts {
            out = out.try_add(&part)?;
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Tensor2, table: &CommutationTable) -> Result<Tensor2, CoreError> {
        self.mul(rhs, table)?.try_sub(&rhs.mul(self, table)?)
    }

    /// exp of a tensor whose coefficients all carry deformation symbols.
    pub fn exp(&self, table: &CommutationTable) -> Result<Tensor2, CoreError> {
        if self.min_symbol_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::NonNilpotentExponent);
        }
        let mut out = Tensor2::unit(self.order);
        let mut power = Tensor2::unit(self.order);
        let mut factorial = Q::one();
        for k in 1..=self.order {
            power = power.mul(self, table)?;
            if power.is_zero() {
                break;
            }
            factorial *= Q::from(num_bigint::BigInt::from(k));
            out = out.try_add(&power.scale_q(&(Q::one() / &factorial)))?;
        }
        Ok(out)
    }

    /// sum_k c_k (self)^k with scalar outer coefficients; same domain
    /// condition as exp.
    pub fn compose(outer: &[Q], inner: &Tensor2, table: &CommutationTable) -> Result<Tensor2, CoreError> {
        if inner.min_symbol_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::CompositionDomain);
        }
        let mut out = Tensor2::zero(inner.order);
        let mut power = Tensor2::unit(inner.order);
        for (k, c) in outer.iter().enumerate() {
            if k > 0 {
                power = power.mul(inner, table)?;
                if power.is_zero() {
                    break;
                }
            }
            out = out.try_add(&power.scale_q(c))?;
        }
        Ok(out)
    }

    /// exp(a) · x · exp(−a) = sum_k ad_a^k(x)/k!.
    pub fn conjugate_by_exp(&self, a: &Tensor2, table: &CommutationTable) -> Result<Tensor2, CoreError> {
        if a.min_symbol_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::NonNilpotentExponent);
        }
        let mut out = self.clone();
        let mut nested = self.clone();
        let mut factorial = Q::one();
        for k in 1..=self.order {
            nested = a.commutator(&nested, table)?;
            if nested.is_zero() {
                break;
            }
            factorial *= Q::from(num_bigint::BigInt::from(k));
            out = out.try_add(&nested.scale_q(&(Q::one() / &factorial)))?;
        }
        Ok(out)
    }

    /// Embeddings into the tensor cube: identity in the omitted slot.
    #[must_use]
    pub fn embed12(&self) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, Word::ONE, c.clone());
        }
        out
    }

    #[must_use]
    pub fn embed13(&self) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(*a, Word::ONE, *b, c.clone());
        }
        out
    }

    #[must_use]
    pub fn embed23(&self) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b), c) in &self.terms {
            out.add_term(Word::ONE, *a, *b, c.clone());
        }
        out
    }
}

/// X∧Y = X⊗Y − Y⊗X.
pub fn wedge(x: &Element, y: &Element) -> Tensor2 {
    Tensor2::product(x, y).try_sub(&Tensor2::product(y, x)).expect("order mismatch")
}

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]; `r` must be skew.
pub fn schouten(r: &Tensor2, table: &CommutationTable) -> Result<Tensor3, CoreError> {
    if !r.is_skew() {
        return Err(CoreError::NotSkew);
    }
    let r12 = r.embed12();
    let r13 = r.embed13();
    let r23 = r.embed23();
    let s1 = r12.commutator(&r13, table)?;
    let s2 = r12.commutator(&r23, table)?;
    let s3 = r13.commutator(&r23, table)?;
    s1.try_add(&s2)?.try_add(&s3)
}

impl Tensor3 {
    pub fn zero(order: u32) -> Tensor3 {
        Tensor3 { order, terms: BTreeMap::new() }
    }

    pub fn unit(order: u32) -> Tensor3 {
        let mut t = Tensor3::zero(order);
        t.add_term(Word::ONE, Word::ONE, Word::ONE, Series::one(order));
        t
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word, Word), &Series)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Word, coeff: Series) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&(a, b, c)) {
            None => {
                self.terms.insert((a, b, c), coeff);
            }
            Some(old) => {
                let sum = old.try_add(&coeff).expect("order mismatch");
                if !sum.is_zero() {
                    self.terms.insert((a, b, c), sum);
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Tensor3) -> Result<Tensor3, CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let mut out = self.clone();
        for ((a, b, c), s) in &rhs.terms {
            out.add_term(*a, *b, *c, s.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Tensor3) -> Result<Tensor3, CoreError> {
        self.try_add(&rhs.neg())
    }

    #[must_use]
    pub fn neg(&self) -> Tensor3 {
        self.scale_q(&-Q::one())
    }

    #[must_use]
    pub fn scale_q(&self, q: &Q) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b, c), s) in &self.terms {
            out.add_term(*a, *b, *c, s.scale(q));
        }
        out
    }

    #[must_use]
    pub fn scale(&self, f: &Series) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b, c), s) in &self.terms {
            out.add_term(*a, *b, *c, s.try_mul(f).expect("order mismatch"));
        }
        out
    }

    /// Apply a permutation of the three legs.
    #[must_use]
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b, c), s) in &self.terms {
            let legs = [*a, *b, *c];
            out.add_term(legs[perm[0]], legs[perm[1]], legs[perm[2]], s.clone());
        }
        out
    }

    pub fn min_symbol_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    /// Part whose coefficients are homogeneous of symbol degree `d`.
    #[must_use]
    pub fn homogeneous_part(&self, d: i32) -> Tensor3 {
        let mut out = Tensor3::zero(self.order);
        for ((a, b, c), s) in &self.terms {
            out.add_term(*a, *b, *c, s.homogeneous_part(d));
        }
        out
    }

    pub fn mul(&self, rhs: &Tensor3, table: &CommutationTable) -> Result<Tensor3, CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let mut pairs = Vec::new();
        for ((a1, a2, a3), ca) in &self.terms {
            for ((b1, b2, b3), cb) in &rhs.terms {
                let coeff = ca.try_mul(cb)?;
                if !coeff.is_zero() {
                    pairs.push((((*a1, *b1), (*a2, *b2), (*a3, *b3)), coeff));
                }
            }
        }
        let parts = par::try_map_batch(pairs, |((l1, l2, l3), coeff)| {
            let e1 = leg_product(&l1.0, &l1.1, coeff, table)?;
            let e2 = leg_product(&l2.0, &l2.1, Series::one(table.order()), table)?;
            let e3 = leg_product(&l3.0, &l3.1, Series::one(table.order()), table)?;
            let mut part = Tensor3::zero(table.order());
            for (w1, c1) in e1.terms() {
                for (w2, c2) in e2.terms() {
                    let c12 = c1.try_mul(c2)?;
                    for (w3, c3) in e3.terms() {
                        part.add_term(*w1, *w2, *w3, c12.try_mul(c3)?);
                    }
                }
            }
            Ok::<Tensor3, CoreError>(part)
        })?;
        let mut out = Tensor3::zero(self.order);
        for part in parts {
            out = out.try_add(&part)?;
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Tensor3, table: &CommutationTable) -> Result<Tensor3, CoreError> {
        self.mul(rhs, table)?.try_sub(&rhs.mul(self, table)?)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: &Series, legs: &[&Word]) -> fmt::Result {
    if !first {
        f.write_str(" + ")?;
    }
    let plain = coeff.num_terms() == 1 && coeff.constant_term().is_one();
    if !plain {
        write!(f, "({coeff})*")?;
    }
    for (i, w) in legs.iter().enumerate() {
        if i > 0 {
            f.write_str("⊗")?;
        }
        write!(f, "{w}")?;
    }
    Ok(())
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            fmt_term(f, i == 0, c, &[a, b])?;
        }
        Ok(())
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b, c), s)) in self.terms.iter().enumerate() {
            fmt_term(f, i == 0, s, &[a, b, c])?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! Elements of the (deformed) enveloping algebra in PBW normal form.
//!
//! An `Element` is a finite sum of PBW monomials with series coefficients.
//! Multiplication rewrites concatenated words into normal order by adjacent
//! transpositions: a descent G_j G_i (j > i) becomes G_i G_j - [G_i, G_j],
//! with the bracket looked up in a `CommutationTable`. Termination holds
//! because a swap strictly lowers the inversion count at fixed length, and
//! every extra letter introduced by a bracket remainder carries at least one
//! extra power of a deformation symbol, so at fixed truncation order words
//! can only grow by a bounded amount before their coefficients vanish.

use crate::error::CoreError;
use crate::generator::{Gen, Word};
use crate::param::Param;
use crate::series::{Q, Series};
use crate::table::CommutationTable;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    order: u32,
    terms: BTreeMap<Word, Series>,
}

impl Element {
    pub fn zero(order: u32) -> Element {
        Element { order, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Element {
        Element::monomial(Word::ONE, Series::one(order))
    }

    pub fn gen(g: Gen, order: u32) -> Element {
        Element::monomial(Word::gen(g), Series::one(order))
    }

    pub fn monomial(w: Word, coeff: Series) -> Element {
        let mut e = Element::zero(coeff.order());
        e.add_term(w, coeff);
        e
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Series)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Series {
        self.terms.get(w).cloned().unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn add_term(&mut self, w: Word, coeff: Series) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, coeff);
            }
            Some(old) => {
                let sum = old.try_add(&coeff).expect("coefficient order mismatch");
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Element) -> Result<Element, CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Element) -> Result<Element, CoreError> {
        self.try_add(&rhs.neg())
    }

    #[must_use]
    pub fn neg(&self) -> Element {
        self.scale_q(&-Q::one())
    }

    #[must_use]
    pub fn scale_q(&self, c: &Q) -> Element {
        let mut out = Element::zero(self.order);
        for (w, s) in &self.terms {
            out.add_term(*w, s.scale(c));
        }
        out
    }

    /// Multiply every coefficient by a scalar series (scalars are central).
    #[must_use]
    pub fn scale(&self, s: &Series) -> Element {
        let mut out = Element::zero(self.order);
        for (w, c) in &self.terms {
            out.add_term(*w, c.try_mul(s).expect("coefficient order mismatch"));
        }
        out
    }

    /// Substitute a series for a deformation symbol in every coefficient.
    pub fn subst(&self, p: Param, value: &Series) -> Result<Element, CoreError> {
        let mut out = Element::zero(self.order);
        for (w, c) in &self.terms {
            out.add_term(*w, c.subst(p, value)?);
        }
        Ok(out)
    }

    /// Keep only the part whose coefficients are homogeneous of symbol
    /// degree `d`.
    #[must_use]
    pub fn homogeneous_part(&self, d: i32) -> Element {
        let mut out = Element::zero(self.order);
        for (w, c) in &self.terms {
            out.add_term(*w, c.homogeneous_part(d));
        }
        out
    }

    /// Smallest symbol degree appearing in any coefficient.
    pub fn min_symbol_degree(&self) -> Option<i32> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    pub fn mul(&self, rhs: &Element, table: &CommutationTable) -> Result<Element, CoreError> {
        if self.order != rhs.order {
            return Err(CoreError::OrderMismatch { left: self.order, right: rhs.order });
        }
        let mut out = Element::zero(self.order);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let coeff = ca.try_mul(cb)?;
                if coeff.is_zero() {
                    continue;
                }
                let mut letters = wa.letters();
                letters.extend_from_slice(&wb.letters());
                let part = normal_order(letters, coeff, table)?;
                out = out.try_add(&part)?;
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Element, table: &CommutationTable) -> Result<Element, CoreError> {
        let ab = self.mul(rhs, table)?;
        let ba = rhs.mul(self, table)?;
        ab.try_sub(&ba)
    }

    #[must_use]
    pub fn pow(&self, k: u32, table: &CommutationTable) -> Element {
        let mut out = Element::one(self.order);
        for _ in 0..k {
            out = out.mul(self, table).expect("pow");
        }
        out
    }

    /// Inverse of an element of the form c + v where the scalar part c is an
    /// invertible series and every term of v carries a deformation symbol
    /// (so the geometric series stabilizes under truncation).
    pub fn inverse(&self, table: &CommutationTable) -> Result<Element, CoreError> {
        let c = self.coeff(&Word::ONE);
        let cinv = c.inverse()?;
        let mut v = self.clone();
        v.add_term(Word::ONE, -&c);
        if v.min_symbol_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::NonInvertible);
        }
        let w = v.scale(&-&cinv);
        let mut out = Element::one(self.order);
        let mut power = Element::one(self.order);
        for _ in 1..=self.order {
            power = power.mul(&w, table)?;
            if power.is_zero() {
                break;
            }
            out = out.try_add(&power)?;
        }
        Ok(out.scale(&cinv))
    }

    /// exp of an element all of whose coefficients carry at least one power
    /// of a deformation symbol (so the sum stabilizes under truncation).
    pub fn exp(&self, table: &CommutationTable) -> Result<Element, CoreError> {
        if self.min_symbol_degree().map_or(false, |d| d < 1) {
            return Err(CoreError::NonNilpotentExponent);
        }
        let mut out = Element::one(self.order);
        let mut power = Element::one(self.order);
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
}

/// Rewrite an arbitrary letter sequence (times a series coefficient) into
/// PBW normal form under the given table.
pub fn normal_order(
    letters: Vec<u8>,
    coeff: Series,
    table: &CommutationTable,
) -> Result<Element, CoreError> {
    let order = coeff.order();
    let mut out = Element::zero(order);
    if coeff.is_zero() {
        return Ok(out);
    }
    let mut work: Vec<(Vec<u8>, Series)> = vec![(letters, coeff)];
    while let Some((seq, c)) = work.pop() {
        if seq.len() > table.cap() {
            return Err(CoreError::DegreeCapExceeded { cap: table.cap() });
        }
        match seq.windows(2).position(|w| w[0] > w[1]) {
            None => {
                out.add_term(Word::from_sorted_letters(&seq), c);
            }
            Some(i) => {
                // seq[i] = G_j, seq[i+1] = G_i with j > i in PBW order:
                // G_j G_i = G_i G_j - [G_i, G_j]
                let mut swapped = seq.clone();
                swapped.swap(i, i + 1);
                let lo = seq[i + 1] as usize;
                let hi = seq[i] as usize;
                for (wb, cb) in table.bracket(lo, hi).terms() {
                    let nc = c.try_mul(cb)?.scale(&-Q::one());
                    if nc.is_zero() {
                        continue;
                    }
                    let mut spliced = Vec::with_capacity(seq.len() - 2 + wb.degree());
                    spliced.extend_from_slice(&seq[..i]);
                    spliced.extend_from_slice(&wb.letters());
                    spliced.extend_from_slice(&seq[i + 2..]);
                    work.push((spliced, nc));
                }
                work.push((swapped, c));
            }
        }
    }
    Ok(out)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if w.is_one() {
                write!(f, "({c})")?;
            } else if c.num_terms() == 1 && c.constant_term().is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

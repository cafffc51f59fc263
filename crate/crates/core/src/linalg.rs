//! Exact rational linear algebra: reduced row echelon form, rank,
//! nullspace, and a canonical form for finite sets of polynomial
//! constraints (viewed as vectors over their monomials).

use crate::param::Exponents;
use crate::series::{Q, Series};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> QMat {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> QMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, pr * self.cols + j);
            }
            let inv = Q::one() / self.get(r, c).clone();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j) - &(self.get(r, j) * &factor);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one vector per free column, with the
    /// free coordinate set to 1.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(pi, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading entry (first nonzero coordinate).
fn primitive_scale(v: &mut [Q]) {
    let mut denom_lcm = BigInt::one();
    for q in v.iter() {
        denom_lcm = denom_lcm.lcm(q.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for q in v.iter() {
        let scaled = q.numer() * (&denom_lcm / q.denom());
        numer_gcd = numer_gcd.gcd(&scaled);
    }
    if numer_gcd.is_zero() {
        return;
    }
    let mut factor = Q::new(denom_lcm, numer_gcd);
    if let Some(first) = v.iter().find(|q| !q.is_zero()) {
        if (first * &factor).is_negative() {
            factor = -factor;
        }
    }
    for q in v.iter_mut() {
        *q = &*q * &factor;
    }
}

/// Canonical generating set for the rational span of polynomial
/// constraints: RREF over the monomial-coefficient matrix (leading
/// monomials first), rows rescaled to primitive integer form, sorted by
/// leading monomial. Two sets span the same space iff their canonical
/// forms are equal.
pub fn canonicalize_polys(polys: &[Series]) -> Vec<Series> {
    let order = match polys.first() {
        Some(p) => p.order(),
        None => return Vec::new(),
    };
    // columns: all monomials, largest (graded-lex) first so RREF pivots on
    // leading monomials
    let mut monomials: Vec<Exponents> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| *e))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    monomials.reverse();
    let rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| monomials.iter().map(|e| p.coeff(e)).collect())
        .collect();
    let mut m = QMat::from_rows(rows);
    let pivots = m.rref();
    let mut out = Vec::new();
    for i in 0..pivots.len() {
        let mut row: Vec<Q> = m.row(i).to_vec();
        primitive_scale(&mut row);
        let mut s = Series::zero(order);
        for (j, c) in row.into_iter().enumerate() {
            if !c.is_zero() {
                s = s
                    .try_add(&Series::monomial(monomials[j], c, order))
                    .expect("order mismatch");
            }
        }
        out.push(s);
    }
    out
}

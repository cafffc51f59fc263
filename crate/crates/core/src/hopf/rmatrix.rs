//! Universal exchange matrices for the two type-I deformations together
//! with the conjugation identity R Δ(X) R⁻¹ = σΔ(X) (checked as the
//! residual R·Δ(X) − σΔ(X)·R) and Yang-Baxter residuals.
//!
//! The ξ-only matrix exists on the β₁ = 0 slice and is checked against the
//! coproduct with β₁ set to zero. The β-family matrix covers all three
//! symbols at once; whether it also satisfies Yang-Baxter is left to the
//! residual report.

use crate::element::Element;
use crate::error::CoreError;
use crate::generator::{Gen, Word};
use crate::hopf::coproduct::Coproduct;
use crate::param::{Exponents, Param};
use crate::series::{q, qi, Q, Series};
use crate::table::CommutationTable;
use crate::tensor::{wedge, Tensor2, Tensor3};
use num_traits::{One, Zero};

#[derive(Clone)]
pub struct UniversalR {
    order: u32,
    tensor: Tensor2,
}

impl UniversalR {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.tensor
    }

    /// exp(ξ K∧P f) with the central factor
    /// f = (e^{−ξM/2}⊗e^{−ξM/2}) · arcsin(√u / c) / √u,
    /// u = sinh(ξM)⊗sinh(ξM), c = cosh((ξ/2)(M⊗1+1⊗M)), expanded as
    /// f = (e^{−ξM/2}⊗e^{−ξM/2}) · g(u/c²) / c with g(w) = arcsin(√w)/√w
    /// so that only integer powers appear.
    pub fn standard(table: &CommutationTable) -> Result<UniversalR, CoreError> {
        let n = table.order();
        let sinh = sinh_xi_m(n);
        let u = Tensor2::product(&sinh, &sinh);
        let half_xi = Series::monomial(Exponents::of(Param::Xi, 1), q(1, 2), n);
        let mut t = Tensor2::zero(n);
        t.add_term(Word::gen(Gen::M), Word::ONE, half_xi.clone());
        t.add_term(Word::ONE, Word::gen(Gen::M), half_xi);
        let c = Tensor2::compose(&cosh_coeffs(n), &t, table)?;
        let cinv = invert_unit_plus_tail(&c, table)?;
        let w = u.mul(&cinv, table)?.mul(&cinv, table)?;
        let g = Tensor2::compose(&arcsin_ratio_coeffs(n), &w, table)?;
        let e_half = exp_xi_m(q(-1, 2), n);
        let pref = Tensor2::product(&e_half, &e_half);
        let f = pref.mul(&g, table)?.mul(&cinv, table)?;
        let a = wedge(&Element::gen(Gen::K, n), &Element::gen(Gen::P, n))
            .mul(&f, table)?
            .scale(&Series::param(Param::Xi, n));
        Ok(UniversalR { order: n, tensor: a.exp(table)? })
    }

    /// e^{A₃} e^{A₂} e^{A₁} with the three stages of `nonstandard_stages`.
    pub fn nonstandard(table: &CommutationTable) -> Result<UniversalR, CoreError> {
        let n = table.order();
        let [a1, a2, a3] = nonstandard_stages(n);
        let r = a3
            .exp(table)?
            .mul(&a2.exp(table)?, table)?
            .mul(&a1.exp(table)?, table)?;
        Ok(UniversalR { order: n, tensor: r })
    }

    /// R·Δ(X) − σΔ(X)·R; zero iff R intertwines the coproduct on X.
    pub fn intertwining_residual(
        &self,
        cop: &Coproduct,
        g: Gen,
        table: &CommutationTable,
    ) -> Result<Tensor2, CoreError> {
        let d = cop.image(g);
        self.tensor.mul(d, table)?.try_sub(&d.flip().mul(&self.tensor, table)?)
    }

    pub fn intertwining_residuals(
        &self,
        cop: &Coproduct,
        table: &CommutationTable,
    ) -> Result<Vec<(Gen, Tensor2)>, CoreError> {
        let mut bad = Vec::new();
        for i in 0..crate::generator::GEN_COUNT {
            let g = Gen::from_index(i);
            let r = self.intertwining_residual(cop, g, table)?;
            if !r.is_zero() {
                bad.push((g, r));
            }
        }
        Ok(bad)
    }

    /// R₁₂ R₁₃ R₂₃ − R₂₃ R₁₃ R₁₂.
    pub fn qybe_residual(&self, table: &CommutationTable) -> Result<Tensor3, CoreError> {
        let r12 = self.tensor.embed12();
        let r13 = self.tensor.embed13();
        let r23 = self.tensor.embed23();
        let lhs = r12.mul(&r13, table)?.mul(&r23, table)?;
        let rhs = r23.mul(&r13, table)?.mul(&r12, table)?;
        lhs.try_sub(&rhs)
    }
}

/// The three exponents of the β-family matrix, innermost first:
/// A₁ = β₁H⊗M − β₃K⊗M, A₂ = β₂(H⊗P − P⊗H), A₃ = −β₁M⊗H + β₃M⊗K.
pub fn nonstandard_stages(order: u32) -> [Tensor2; 3] {
    let n = order;
    let sym = |p: Param, c: Q| Series::monomial(Exponents::of(p, 1), c, n);
    let (k, h, p, m) = (Word::gen(Gen::K), Word::gen(Gen::H), Word::gen(Gen::P), Word::gen(Gen::M));
    let mut a1 = Tensor2::zero(n);
    a1.add_term(h, m, sym(Param::Beta1, Q::one()));
    a1.add_term(k, m, sym(Param::Beta3, -Q::one()));
    let mut a2 = Tensor2::zero(n);
    a2.add_term(h, p, sym(Param::Beta2, Q::one()));
    a2.add_term(p, h, sym(Param::Beta2, -Q::one()));
    let mut a3 = Tensor2::zero(n);
    a3.add_term(m, h, sym(Param::Beta1, -Q::one()));
    a3.add_term(m, k, sym(Param::Beta3, Q::one()));
    [a1, a2, a3]
}

/// Lowest total symbol degree carried by any term, None if zero.
pub fn lowest_nonzero_order(t: &Tensor3) -> Option<i32> {
    t.terms().filter_map(|(_, s)| s.min_degree()).min()
}

/// sinh(ξM) as a one-leg element.
fn sinh_xi_m(n: u32) -> Element {
    let mut out = Element::zero(n);
    let mut fact = Q::one();
    for k in 1..=(n as u8) {
        fact *= qi(k as i64);
        if k % 2 == 1 {
            let mut w = [0u8; crate::generator::GEN_COUNT];
            w[Gen::M.index()] = k;
            out.add_term(
                Word(w),
                Series::monomial(Exponents::of(Param::Xi, k as i16), Q::one() / &fact, n),
            );
        }
    }
    out
}

/// e^{cξM} as a one-leg element.
fn exp_xi_m(c: Q, n: u32) -> Element {
    let mut out = Element::zero(n);
    let mut fact = Q::one();
    let mut cpow = Q::one();
    for k in 0..=(n as u8) {
        if k > 0 {
            fact *= qi(k as i64);
            cpow *= &c;
        }
        let mut w = [0u8; crate::generator::GEN_COUNT];
        w[Gen::M.index()] = k;
        out.add_term(
            Word(w),
            Series::monomial(Exponents::of(Param::Xi, k as i16), &cpow / &fact, n),
        );
    }
    out
}

/// Taylor coefficients of cosh up to degree n.
fn cosh_coeffs(n: u32) -> Vec<Q> {
    let mut out = vec![Q::zero(); n as usize + 1];
    let mut fact = Q::one();
    for k in 0..=(n as usize) {
        if k > 0 {
            fact *= qi(k as i64);
        }
        if k % 2 == 0 {
            out[k] = Q::one() / &fact;
        }
    }
    out
}

/// Taylor coefficients of arcsin(√w)/√w = Σ C(2k,k) w^k / (4^k (2k+1)).
fn arcsin_ratio_coeffs(n: u32) -> Vec<Q> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut binom = Q::one(); // C(2k, k)
    for k in 0..=(n as i64) {
        if k > 0 {
            binom *= qi(2 * (2 * k - 1)) / qi(k);
        }
        let mut four_pow = Q::one();
        for _ in 0..k {
            four_pow *= qi(4);
        }
        out.push(&binom / &(four_pow * qi(2 * k + 1)));
    }
    out
}

/// Inverse of 1⊗1 + v with v carrying deformation symbols, by the geometric
/// series.
fn invert_unit_plus_tail(c: &Tensor2, table: &CommutationTable) -> Result<Tensor2, CoreError> {
    let v = c.try_sub(&Tensor2::unit(c.order()))?;
    if v.min_symbol_degree().map_or(false, |d| d < 1) {
        return Err(CoreError::NonInvertible);
    }
    let mut out = Tensor2::unit(c.order());
    let mut power = Tensor2::unit(c.order());
    for _ in 1..=c.order() {
        power = power.mul(&v, table)?.neg();
        if power.is_zero() {
            break;
        }
        out = out.try_add(&power)?;
    }
    Ok(out)
}

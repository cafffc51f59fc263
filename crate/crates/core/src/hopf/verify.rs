//! Structural checks for a quantum family. Every check returns the exact
//! residuals so a caller can distinguish "holds identically" from "fails,
//! and here is the first offending tensor".

use crate::element::Element;
use crate::error::CoreError;
use crate::generator::{Gen, Word, GEN_COUNT};
use crate::hopf::coproduct::{antipode_axiom_left, antipode_axiom_right, Coproduct};
use crate::hopf::quantum::QuantumFamily;
use crate::series::{qi, Series};
use crate::table::CommutationTable;
use crate::tensor::{Tensor2, Tensor3};

/// Δ([X,Y]) − [Δ(X),Δ(Y)] over the six generator pairs; only nonzero
/// residuals are returned.
pub fn homomorphism_residuals(
    qf: &QuantumFamily,
) -> Result<Vec<((Gen, Gen), Tensor2)>, CoreError> {
    let cop = qf.coproduct();
    let table = qf.table();
    let mut bad = Vec::new();
    for i in 0..GEN_COUNT {
        for j in (i + 1)..GEN_COUNT {
            let (x, y) = (Gen::from_index(i), Gen::from_index(j));
            let lhs = cop.apply(&table.bracket_of(x, y), table)?;
            let rhs = cop.image(x).commutator(cop.image(y), table)?;
            let r = lhs.try_sub(&rhs)?;
            if !r.is_zero() {
                bad.push(((x, y), r));
            }
        }
    }
    Ok(bad)
}

/// (Δ⊗id)Δ − (id⊗Δ)Δ on each generator; only nonzero residuals returned.
pub fn coassociativity_residuals(
    qf: &QuantumFamily,
) -> Result<Vec<(Gen, Tensor3)>, CoreError> {
    let mut bad = Vec::new();
    for i in 0..GEN_COUNT {
        let g = Gen::from_index(i);
        let r = qf.coproduct().coassociativity_residual(g, qf.table())?;
        if !r.is_zero() {
            bad.push((g, r));
        }
    }
    Ok(bad)
}

/// (ε⊗id)Δ(X) − X and (id⊗ε)Δ(X) − X with the trivial counit.
pub fn counit_residuals(qf: &QuantumFamily) -> Result<Vec<(Gen, Element)>, CoreError> {
    let mut bad = Vec::new();
    for i in 0..GEN_COUNT {
        let g = Gen::from_index(i);
        let x = Element::gen(g, qf.order());
        let left = Coproduct::counit_left(qf.coproduct().image(g)).try_sub(&x)?;
        let right = Coproduct::counit_right(qf.coproduct().image(g)).try_sub(&x)?;
        if !left.is_zero() {
            bad.push((g, left));
        }
        if !right.is_zero() {
            bad.push((g, right));
        }
    }
    Ok(bad)
}

/// [c, X] for both central elements and every generator.
pub fn casimir_residuals(qf: &QuantumFamily) -> Result<Vec<(usize, Gen, Element)>, CoreError> {
    let mut bad = Vec::new();
    for (ci, c) in qf.casimirs().iter().enumerate() {
        for i in 0..GEN_COUNT {
            let g = Gen::from_index(i);
            let r = c.commutator(&Element::gen(g, qf.order()), qf.table())?;
            if !r.is_zero() {
                bad.push((ci, g, r));
            }
        }
    }
    Ok(bad)
}

/// Derive the antipode and return the residuals of both defining axioms.
pub fn antipode_residuals(qf: &QuantumFamily) -> Result<Vec<(Gen, Element)>, CoreError> {
    let s = qf.coproduct().antipode(qf.table())?;
    let mut bad = Vec::new();
    for i in 0..GEN_COUNT {
        let g = Gen::from_index(i);
        let left = antipode_axiom_left(qf.coproduct(), &s, g, qf.table())?;
        let right = antipode_axiom_right(qf.coproduct(), &s, g, qf.table())?;
        if !left.is_zero() {
            bad.push((g, left));
        }
        if !right.is_zero() {
            bad.push((g, right));
        }
    }
    Ok(bad)
}

/// First order of Δ − σΔ compared against the classical cocommutator the
/// family quantizes.
pub fn semiclassical_residuals(qf: &QuantumFamily) -> Result<Vec<(Gen, Tensor2)>, CoreError> {
    let target = qf.tag().classical_cocommutator(qf.order());
    let mut bad = Vec::new();
    for i in 0..GEN_COUNT {
        let g = Gen::from_index(i);
        let img = qf.coproduct().image(g);
        let first = img.try_sub(&img.flip())?.homogeneous_part(1);
        let r = first.try_sub(target.image(g))?;
        if !r.is_zero() {
            bad.push((g, r));
        }
    }
    Ok(bad)
}

/// Setting every deformation symbol to zero must return the primitive
/// coproduct, the undeformed brackets, and the undeformed central pair.
pub fn undeformed_limit_ok(qf: &QuantumFamily) -> Result<bool, CoreError> {
    let n = qf.order();
    let zero = Series::zero(n);
    let mut cop = qf.coproduct().clone();
    for &p in qf.tag().deformation_symbols() {
        cop = cop.subst(p, &zero)?;
    }
    let prim = Coproduct::primitive(n);
    for i in 0..GEN_COUNT {
        if cop.image(Gen::from_index(i)) != prim.image(Gen::from_index(i)) {
            return Ok(false);
        }
    }
    let flat = CommutationTable::undeformed(n);
    for i in 0..GEN_COUNT {
        for j in (i + 1)..GEN_COUNT {
            let (x, y) = (Gen::from_index(i), Gen::from_index(j));
            let mut b = qf.table().bracket_of(x, y);
            for &p in qf.tag().deformation_symbols() {
                b = b.subst(p, &zero)?;
            }
            if b != flat.bracket_of(x, y) {
                return Ok(false);
            }
        }
    }
    let mut limits = qf.casimirs().clone();
    for c in limits.iter_mut() {
        for &p in qf.tag().deformation_symbols() {
            *c = c.subst(p, &zero)?;
        }
    }
    let mut c2_flat = Element::monomial(Word([0, 0, 2, 0]), Series::one(n));
    c2_flat.add_term(Word([0, 1, 0, 1]), Series::constant(qi(-2), n));
    Ok(limits[0] == Element::gen(Gen::M, n) && limits[1] == c2_flat)
}

/// Pass/fail summary of every structural check, for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyChecks {
    pub homomorphism: bool,
    pub coassociativity: bool,
    pub counit: bool,
    pub casimirs: bool,
    pub antipode: bool,
    pub semiclassical: bool,
    pub undeformed_limit: bool,
}

impl FamilyChecks {
    pub fn all_ok(&self) -> bool {
        self.homomorphism
            && self.coassociativity
            && self.counit
            && self.casimirs
            && self.antipode
            && self.semiclassical
            && self.undeformed_limit
    }
}

pub fn check_family(qf: &QuantumFamily) -> Result<FamilyChecks, CoreError> {
    Ok(FamilyChecks {
        homomorphism: homomorphism_residuals(qf)?.is_empty(),
        coassociativity: coassociativity_residuals(qf)?.is_empty(),
        counit: counit_residuals(qf)?.is_empty(),
        casimirs: casimir_residuals(qf)?.is_empty(),
        antipode: antipode_residuals(qf)?.is_empty(),
        semiclassical: semiclassical_residuals(qf)?.is_empty(),
        undeformed_limit: undeformed_limit_ok(qf)?,
    })
}

//! Coproducts from exponentials of parameter matrices: for a square matrix
//! A of mutually commuting elements indexed by a subset of generators, the
//! coproduct is Δ(Xᵢ) = 1⊗Xᵢ + Σⱼ Xⱼ⊗E_ij with E = exp(A); generators
//! outside the subset stay primitive.

use crate::element::Element;
use crate::error::CoreError;
use crate::generator::Gen;
use crate::hopf::coproduct::Coproduct;
use crate::param::{Exponents, Param};
use crate::series::{Q, Series};
use crate::table::CommutationTable;
use crate::tensor::Tensor2;
use num_traits::One;

#[derive(Clone, Debug)]
pub struct LmMatrix {
    order: u32,
    gens: Vec<Gen>,
    entries: Vec<Vec<Element>>,
}

impl LmMatrix {
    /// Build and validate: entries must commute pairwise under the table
    /// (they are exponentiated and multiplied as ordinary functions).
    pub fn new(
        gens: Vec<Gen>,
        entries: Vec<Vec<Element>>,
        table: &CommutationTable,
    ) -> Result<LmMatrix, CoreError> {
        let d = gens.len();
        assert!(entries.len() == d && entries.iter().all(|r| r.len() == d), "square matrix");
        let order = table.order();
        let flat: Vec<&Element> = entries.iter().flatten().collect();
        for (i, a) in flat.iter().enumerate() {
            for b in flat.iter().skip(i + 1) {
                if !a.commutator(b, table)?.is_zero() {
                    return Err(CoreError::NonCommutingEntries);
                }
            }
        }
        Ok(LmMatrix { order, gens, entries })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn entry(&self, i: usize, j: usize) -> &Element {
        &self.entries[i][j]
    }

    /// Matrix exponential as a terminating series: every entry must carry a
    /// deformation symbol, so A^k vanishes beyond the truncation order.
    pub fn exp(&self, table: &CommutationTable) -> Result<LmMatrix, CoreError> {
        let d = self.gens.len();
        let n = self.order;
        for row in &self.entries {
            for e in row {
                if e.min_symbol_degree().map_or(false, |deg| deg < 1) {
                    return Err(CoreError::NonNilpotentExponent);
                }
            }
        }
        let identity = |k: usize, l: usize| {
            if k == l {
                Element::one(n)
            } else {
                Element::zero(n)
            }
        };
        let mut out: Vec<Vec<Element>> =
            (0..d).map(|i| (0..d).map(|j| identity(i, j)).collect()).collect();
        let mut power = out.clone();
        let mut factorial = Q::one();
        for k in 1..=n {
            let mut next: Vec<Vec<Element>> =
                (0..d).map(|_| (0..d).map(|_| Element::zero(n)).collect()).collect();
            let mut all_zero = true;
            for i in 0..d {
                for j in 0..d {
                    let mut acc = Element::zero(n);
                    for (l, row) in self.entries.iter().enumerate() {
                        acc = acc.try_add(&power[i][l].mul(&row[j], table)?)?;
                    }
                    if !acc.is_zero() {
                        all_zero = false;
                    }
                    next[i][j] = acc;
                }
            }
            if all_zero {
                break;
            }
            power = next;
            factorial *= Q::from(num_bigint::BigInt::from(k));
            let inv = Q::one() / &factorial;
            for i in 0..d {
                for j in 0..d {
                    out[i][j] = out[i][j].try_add(&power[i][j].scale_q(&inv))?;
                }
            }
        }
        Ok(LmMatrix { order: n, gens: self.gens.clone(), entries: out })
    }

    /// Assemble the coproduct from the exponentiated matrix.
    pub fn coproduct(&self, table: &CommutationTable) -> Result<Coproduct, CoreError> {
        let e = self.exp(table)?;
        let n = self.order;
        let mut cop = Coproduct::primitive(n);
        for (i, &gi) in self.gens.iter().enumerate() {
            let mut img = Tensor2::product(&Element::one(n), &Element::gen(gi, n));
            for (j, &gj) in self.gens.iter().enumerate() {
                img = img.try_add(&Tensor2::product(&Element::gen(gj, n), &e.entries[i][j]))?;
            }
            cop.set_image(gi, img);
        }
        Ok(cop)
    }
}

/// c · p^k · M as a one-term element.
fn m_times(p: Param, k: i16, c: Q, order: u32) -> Element {
    Element::monomial(
        crate::generator::Word::gen(Gen::M),
        Series::monomial(Exponents::of(p, k), c, order),
    )
}

/// The full six-parameter matrix over (K, H, P):
/// [[ξM, β₂M, β₁M], [β₅M, (β₄−ξ)M, β₃M], [0, 0, β₄M]].
pub fn full_matrix(table: &CommutationTable) -> Result<LmMatrix, CoreError> {
    let n = table.order();
    let zero = Element::zero(n);
    let b4_minus_xi = m_times(Param::Beta4, 1, Q::one(), n)
        .try_add(&m_times(Param::Xi, 1, -Q::one(), n))
        .unwrap();
    LmMatrix::new(
        vec![Gen::K, Gen::H, Gen::P],
        vec![
            vec![
                m_times(Param::Xi, 1, Q::one(), n),
                m_times(Param::Beta2, 1, Q::one(), n),
                m_times(Param::Beta1, 1, Q::one(), n),
            ],
            vec![
                m_times(Param::Beta5, 1, Q::one(), n),
                b4_minus_xi,
                m_times(Param::Beta3, 1, Q::one(), n),
            ],
            vec![zero.clone(), zero.clone(), m_times(Param::Beta4, 1, Q::one(), n)],
        ],
        table,
    )
}

/// Sub-matrix for the standard deformation (β₄=ξ, β₂=β₃=β₅=0).
pub fn standard_matrix(table: &CommutationTable) -> Result<LmMatrix, CoreError> {
    let n = table.order();
    let zero = Element::zero(n);
    LmMatrix::new(
        vec![Gen::K, Gen::H, Gen::P],
        vec![
            vec![
                m_times(Param::Xi, 1, Q::one(), n),
                zero.clone(),
                m_times(Param::Beta1, 1, Q::one(), n),
            ],
            vec![zero.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), m_times(Param::Xi, 1, Q::one(), n)],
        ],
        table,
    )
}

/// Sub-matrix for the non-standard deformation (ξ=β₄=β₅=0).
pub fn nonstandard_matrix(table: &CommutationTable) -> Result<LmMatrix, CoreError> {
    let n = table.order();
    let zero = Element::zero(n);
    LmMatrix::new(
        vec![Gen::K, Gen::H, Gen::P],
        vec![
            vec![
                zero.clone(),
                m_times(Param::Beta2, 1, Q::one(), n),
                m_times(Param::Beta1, 1, Q::one(), n),
            ],
            vec![zero.clone(), zero.clone(), m_times(Param::Beta3, 1, Q::one(), n)],
            vec![zero.clone(), zero.clone(), zero.clone()],
        ],
        table,
    )
}

/// Partial matrix for the second family of type I (the ν-independent part).
pub fn ib_partial_matrix(table: &CommutationTable) -> Result<LmMatrix, CoreError> {
    let n = table.order();
    let zero = Element::zero(n);
    LmMatrix::new(
        vec![Gen::K, Gen::H, Gen::P],
        vec![
            vec![m_times(Param::Xi, 1, Q::one(), n), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), m_times(Param::Beta3, 1, Q::one(), n)],
            vec![zero.clone(), zero.clone(), m_times(Param::Xi, 1, Q::one(), n)],
        ],
        table,
    )
}

/// 2×2 matrix over (K, M) for the boost-deformed family:
/// [[−αP, −β₁P − β₂H], [0, −αP]].
pub fn iib_matrix(table: &CommutationTable) -> Result<LmMatrix, CoreError> {
    let n = table.order();
    let p_times = |p: Param, c: Q| {
        Element::monomial(
            crate::generator::Word::gen(Gen::P),
            Series::monomial(Exponents::of(p, 1), c, n),
        )
    };
    let h_times = |p: Param, c: Q| {
        Element::monomial(
            crate::generator::Word::gen(Gen::H),
            Series::monomial(Exponents::of(p, 1), c, n),
        )
    };
    let off = p_times(Param::Beta1, -Q::one())
        .try_add(&h_times(Param::Beta2, -Q::one()))
        .unwrap();
    LmMatrix::new(
        vec![Gen::K, Gen::M],
        vec![
            vec![p_times(Param::Alpha, -Q::one()), off],
            vec![Element::zero(n), p_times(Param::Alpha, -Q::one())],
        ],
        table,
    )
}

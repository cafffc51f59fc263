//! Lie bialgebra machinery on the four-generator algebra: cocommutators,
//! the 1-cocycle condition, dual-Jacobi constraints, automorphism
//! pushforwards, coboundary structures and the modified classical
//! Yang-Baxter classification.

use crate::element::Element;
use crate::error::CoreError;
use crate::generator::{Gen, Word, GEN_COUNT};
use crate::linalg::{canonicalize_polys, QMat};
use crate::param::Param;
use crate::series::{Q, Series};
use crate::table::CommutationTable;
use crate::tensor::{schouten, wedge, Tensor2, Tensor3};
use num_traits::{One, Zero};

/// Skew pairs (i, j) with i < j, the basis of wedge squares; used as the
/// canonical coordinate ordering wherever cocommutators are vectorized.
pub const WEDGE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A linear map from generators into the skew part of the tensor square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocommutator {
    order: u32,
    images: [Tensor2; GEN_COUNT],
}

impl Cocommutator {
    pub fn zero(order: u32) -> Cocommutator {
        Cocommutator {
            order,
            images: std::array::from_fn(|_| Tensor2::zero(order)),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn image(&self, g: Gen) -> &Tensor2 {
        &self.images[g.index()]
    }

    pub fn set_image(&mut self, g: Gen, t: Tensor2) {
        assert_eq!(t.order(), self.order, "order mismatch");
        self.images[g.index()] = t;
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Tensor2::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        self.images.iter().all(Tensor2::is_skew)
    }

    /// Linear extension to an element that is a combination of generators.
    pub fn apply(&self, el: &Element) -> Result<Tensor2, CoreError> {
        let mut out = Tensor2::zero(self.order);
        for (w, c) in el.terms() {
            if w.degree() != 1 {
                return Err(CoreError::NonLinearElement);
            }
            let g = Gen::from_index(w.letters()[0] as usize);
            out = out.try_add(&self.images[g.index()].scale(c))?;
        }
        Ok(out)
    }

    pub fn subst(&self, p: Param, value: &Series) -> Result<Cocommutator, CoreError> {
        let mut out = Cocommutator::zero(self.order);
        for g in Gen::ALL {
            out.set_image(g, self.image(g).subst(p, value)?);
        }
        Ok(out)
    }

    /// The general cocycle on the undeformed table: nine symbol directions
    /// xi, nu, alpha, beta1..beta6.
    pub fn nine_parameter(order: u32) -> Cocommutator {
        let n = order;
        let el = |g: Gen| Element::gen(g, n);
        let sp = |p: Param| Series::param(p, n);
        let (k, h, p, m) = (el(Gen::K), el(Gen::H), el(Gen::P), el(Gen::M));

        let mut d = Cocommutator::zero(n);
        // K -> b6 K^P + xi K^M + nu P^H + b1 P^M + b2 H^M
        let dk = wedge(&k, &p)
            .scale(&sp(Param::Beta6))
            .try_add(&wedge(&k, &m).scale(&sp(Param::Xi)))
            .and_then(|t| t.try_add(&wedge(&p, &h).scale(&sp(Param::Nu))))
            .and_then(|t| t.try_add(&wedge(&p, &m).scale(&sp(Param::Beta1))))
            .and_then(|t| t.try_add(&wedge(&h, &m).scale(&sp(Param::Beta2))))
            .unwrap();
        d.set_image(Gen::K, dk);
        // H -> b5 K^M - (b6+alpha) P^H + b3 P^M + (b4-xi) H^M
        let b6a = sp(Param::Beta6).try_add(&sp(Param::Alpha)).unwrap();
        let b4mxi = sp(Param::Beta4).try_sub(&sp(Param::Xi)).unwrap();
        let dh = wedge(&k, &m)
            .scale(&sp(Param::Beta5))
            .try_sub(&wedge(&p, &h).scale(&b6a))
            .and_then(|t| t.try_add(&wedge(&p, &m).scale(&sp(Param::Beta3))))
            .and_then(|t| t.try_add(&wedge(&h, &m).scale(&b4mxi)))
            .unwrap();
        d.set_image(Gen::H, dh);
        // P -> b4 P^M + (b6+alpha) H^M
        let dp = wedge(&p, &m)
            .scale(&sp(Param::Beta4))
            .try_add(&wedge(&h, &m).scale(&b6a))
            .unwrap();
        d.set_image(Gen::P, dp);
        // M -> alpha P^M
        d.set_image(Gen::M, wedge(&p, &m).scale(&sp(Param::Alpha)));
        d
    }
}

/// delta([X,Y]) - [delta(X), 1⊗Y+Y⊗1] - [1⊗X+X⊗1, delta(Y)] for all pairs.
pub fn cocycle_residual(
    delta: &Cocommutator,
    table: &CommutationTable,
) -> Result<Vec<((Gen, Gen), Tensor2)>, CoreError> {
    let n = delta.order();
    let mut out = Vec::with_capacity(6);
    for (i, j) in WEDGE_PAIRS {
        let x = Gen::from_index(i);
        let y = Gen::from_index(j);
        let ex = Element::gen(x, n);
        let ey = Element::gen(y, n);
        let both = |e: &Element| {
            Tensor2::product(&Element::one(n), e)
                .try_add(&Tensor2::product(e, &Element::one(n)))
        };
        let lhs = delta.apply(&ex.commutator(&ey, table)?)?;
        let t1 = delta.image(x).commutator(&both(&ey)?, table)?;
        let t2 = both(&ex)?.commutator(delta.image(y), table)?;
        let res = lhs.try_sub(&t1)?.try_sub(&t2)?;
        out.push(((x, y), res));
    }
    Ok(out)
}

pub fn is_cocycle(delta: &Cocommutator, table: &CommutationTable) -> Result<bool, CoreError> {
    Ok(cocycle_residual(delta, table)?.iter().all(|(_, t)| t.is_zero()))
}

/// The cyclic co-Jacobi tensor (1 + tau + tau^2)(delta ⊗ id)(delta(X)) per
/// generator. Vanishing for all X makes the dual map a Lie bracket.
pub fn cojacobi_tensors(delta: &Cocommutator) -> Result<[Tensor3; GEN_COUNT], CoreError> {
    let n = delta.order();
    let mut out = std::array::from_fn(|_| Tensor3::zero(n));
    for g in Gen::ALL {
        let img = delta.image(g);
        let mut a = Tensor3::zero(n);
        for ((w1, w2), c) in img.terms() {
            if w1.degree() != 1 {
                return Err(CoreError::NonLinearElement);
            }
            let leg1 = Gen::from_index(w1.letters()[0] as usize);
            let inner = delta.image(leg1).scale(c);
            for ((u1, u2), cc) in inner.terms() {
                a.add_term(*u1, *u2, *w2, cc.clone());
            }
        }
        let total = a
            .try_add(&a.permute([1, 2, 0]))?
            .try_add(&a.permute([2, 0, 1]))?;
        out[g.index()] = total;
    }
    Ok(out)
}

/// Polynomial obstructions to the dual Jacobi identity, canonicalized so
/// that equality of generating sets is a plain set comparison. Requires the
/// input to be a cocycle for the undeformed table.
pub fn cojacobi_constraints(delta: &Cocommutator) -> Result<Vec<Series>, CoreError> {
    if !is_cocycle(delta, &CommutationTable::undeformed(delta.order()))? {
        return Err(CoreError::NotACocycle);
    }
    let tensors = cojacobi_tensors(delta)?;
    let mut polys = Vec::new();
    for t in &tensors {
        for (_, c) in t.terms() {
            polys.push(c.clone());
        }
    }
    Ok(canonicalize_polys(&polys))
}

/// Canonical form of the five printed dual-Jacobi obstructions, the target
/// of the constraint-recovery check.
pub fn expected_constraints(order: u32) -> Vec<Series> {
    let sp = |p: Param| Series::param(p, order);
    let mul = |a: &Series, b: &Series| a.try_mul(b).unwrap();
    let alpha = sp(Param::Alpha);
    let xi = sp(Param::Xi);
    let nu = sp(Param::Nu);
    let b4 = sp(Param::Beta4);
    let b5 = sp(Param::Beta5);
    let b6 = sp(Param::Beta6);
    let ximb4 = xi.try_sub(&b4).unwrap();
    let b6pa = b6.try_add(&alpha).unwrap();
    let list = vec![
        mul(&alpha, &b5),
        mul(&b6, &b6pa),
        mul(&b4, &b6pa),
        mul(&nu, &ximb4),
        mul(&alpha, &ximb4).try_sub(&mul(&nu, &b5)).unwrap(),
    ];
    canonicalize_polys(&list)
}

/// Result of solving the cocycle condition on the full 24-dimensional
/// skew ansatz space (4 generators x 6 wedge pairs).
pub struct AnsatzSolution {
    /// basis of the solution space, one 24-vector per row, coordinates in
    /// (generator, WEDGE_PAIRS) order
    pub basis: Vec<Vec<Q>>,
}

impl AnsatzSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// True when `v` lies in the span of the solution basis.
    pub fn contains(&self, v: &[Q]) -> bool {
        let mut rows = self.basis.clone();
        let base_rank = QMat::from_rows(rows.clone()).rank();
        rows.push(v.to_vec());
        QMat::from_rows(rows).rank() == base_rank
    }
}

fn basis_cocommutator(gen: usize, pair: usize, order: u32) -> Cocommutator {
    let (i, j) = WEDGE_PAIRS[pair];
    let mut d = Cocommutator::zero(order);
    d.set_image(
        Gen::from_index(gen),
        wedge(&Element::gen(Gen::from_index(i), order), &Element::gen(Gen::from_index(j), order)),
    );
    d
}

/// Impose the cocycle condition on the generic skew ansatz and return the
/// solution space. The residual is linear in the ansatz coefficients, so
/// this is exact rational linear algebra.
pub fn solve_cocycle_ansatz(table: &CommutationTable) -> Result<AnsatzSolution, CoreError> {
    let order = table.order();
    // residual vectors of the 24 basis cocommutators, keyed consistently
    let mut columns: Vec<std::collections::BTreeMap<(usize, Word, Word, crate::param::Exponents), Q>> =
        Vec::with_capacity(24);
    let mut keys = std::collections::BTreeSet::new();
    for gen in 0..GEN_COUNT {
        for pair in 0..6 {
            let d = basis_cocommutator(gen, pair, order);
            let mut col = std::collections::BTreeMap::new();
            for (pi, (_, res)) in cocycle_residual(&d, table)?.into_iter().enumerate() {
                for ((w1, w2), c) in res.terms() {
                    for (e, q) in c.terms() {
                        let key = (pi, *w1, *w2, *e);
                        keys.insert(key);
                        col.insert(key, q.clone());
                    }
                }
            }
            columns.push(col);
        }
    }
    let keys: Vec<_> = keys.into_iter().collect();
    let rows: Vec<Vec<Q>> = keys
        .iter()
        .map(|k| columns.iter().map(|col| col.get(k).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    let m = if rows.is_empty() { QMat::zero(1, 24) } else { QMat::from_rows(rows) };
    Ok(AnsatzSolution { basis: m.nullspace() })
}

/// Vectorize a cocommutator that is linear in a single symbol direction:
/// returns the 24 coordinates of d(image)/d(param).
pub fn direction_vector(delta: &Cocommutator, p: Param) -> Vec<Q> {
    let e = crate::param::Exponents::of(p, 1);
    let mut v = Vec::with_capacity(24);
    for gen in 0..GEN_COUNT {
        let img = delta.image(Gen::from_index(gen));
        for (i, j) in WEDGE_PAIRS {
            let c = img.coeff(&Word::gen(Gen::from_index(i)), &Word::gen(Gen::from_index(j)));
            v.push(c.coeff(&e));
        }
    }
    v
}

// ---------------------------------------------------------------------------
// automorphisms
// ---------------------------------------------------------------------------

/// The general linear map preserving the undeformed brackets:
/// K' = K + l1 H + l2 P + l3 M, H' = H + l4 P + l5 M, P' = P + l4 M, M' = M.
#[derive(Clone, Debug)]
pub struct Automorphism {
    order: u32,
    lambda: [Series; 5],
}

impl Automorphism {
    pub fn new(lambda: [Series; 5]) -> Automorphism {
        let order = lambda[0].order();
        assert!(lambda.iter().all(|l| l.order() == order), "order mismatch");
        Automorphism { order, lambda }
    }

    pub fn identity(order: u32) -> Automorphism {
        Automorphism::new(std::array::from_fn(|_| Series::zero(order)))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Matrix rows = images of K,H,P,M expressed in the (K,H,P,M) basis.
    pub fn matrix(&self) -> [[Series; GEN_COUNT]; GEN_COUNT] {
        let n = self.order;
        let zero = || Series::zero(n);
        let one = || Series::one(n);
        let l = |i: usize| self.lambda[i].clone();
        [
            [one(), l(0), l(1), l(2)],
            [zero(), one(), l(3), l(4)],
            [zero(), zero(), one(), l(3)],
            [zero(), zero(), zero(), one()],
        ]
    }

    /// Inverse matrix; exact because the map is unipotent.
    pub fn inverse_matrix(&self) -> [[Series; GEN_COUNT]; GEN_COUNT] {
        let n = self.order;
        let a = self.matrix();
        // N = A - I is strictly upper triangular, so inv(A) = I - N + N^2 - N^3
        let mut nmat: [[Series; GEN_COUNT]; GEN_COUNT] =
            std::array::from_fn(|i| std::array::from_fn(|j| a[i][j].clone()));
        for (i, row) in nmat.iter_mut().enumerate() {
            row[i] = row[i].try_sub(&Series::one(n)).unwrap();
        }
        let mut inv: [[Series; GEN_COUNT]; GEN_COUNT] =
            std::array::from_fn(|i| std::array::from_fn(|j| {
                if i == j { Series::one(n) } else { Series::zero(n) }
            }));
        let mut power = inv.clone();
        let mut sign = Q::one();
        for _ in 1..GEN_COUNT {
            // power = power * N
            let mut next: [[Series; GEN_COUNT]; GEN_COUNT] =
                std::array::from_fn(|_| std::array::from_fn(|_| Series::zero(n)));
            for i in 0..GEN_COUNT {
                for j in 0..GEN_COUNT {
                    for (k, nrow) in nmat.iter().enumerate() {
                        let t = power[i][k].try_mul(&nrow[j]).unwrap();
                        next[i][j] = next[i][j].try_add(&t).unwrap();
                    }
                }
            }
            power = next;
            sign = -sign;
            for i in 0..GEN_COUNT {
                for j in 0..GEN_COUNT {
                    inv[i][j] = inv[i][j].try_add(&power[i][j].scale(&sign)).unwrap();
                }
            }
        }
        inv
    }

    /// Image of a generator as an element.
    pub fn apply_gen(&self, g: Gen) -> Element {
        let row = &self.matrix()[g.index()];
        let mut out = Element::zero(self.order);
        for (j, c) in row.iter().enumerate() {
            out.add_term(Word::gen(Gen::from_index(j)), c.clone());
        }
        out
    }

    /// Re-express both legs of a generator-linear tensor through a basis
    /// matrix (rows = images of K,H,P,M).
    fn map_tensor(
        &self,
        mat: &[[Series; GEN_COUNT]; GEN_COUNT],
        t: &Tensor2,
    ) -> Result<Tensor2, CoreError> {
        let mut out = Tensor2::zero(self.order);
        for ((w1, w2), c) in t.terms() {
            if w1.degree() != 1 || w2.degree() != 1 {
                return Err(CoreError::NonLinearElement);
            }
            let g1 = w1.letters()[0] as usize;
            let g2 = w2.letters()[0] as usize;
            for (j1, c1) in mat[g1].iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (j2, c2) in mat[g2].iter().enumerate() {
                    if c2.is_zero() {
                        continue;
                    }
                    let coeff = c.try_mul(c1)?.try_mul(c2)?;
                    out.add_term(Word::gen(Gen::from_index(j1)), Word::gen(Gen::from_index(j2)), coeff);
                }
            }
        }
        Ok(out)
    }

    /// Check bracket preservation against a table: [OX, OY] = O([X,Y]).
    pub fn preserves(&self, table: &CommutationTable) -> Result<bool, CoreError> {
        let mat = self.matrix();
        for (i, j) in WEDGE_PAIRS {
            let x = self.apply_gen(Gen::from_index(i));
            let y = self.apply_gen(Gen::from_index(j));
            let lhs = x.commutator(&y, table)?;
            // O([X,Y]) for [X,Y] a combination of generators
            let br = table.bracket(i, j);
            let mut rhs = Element::zero(self.order);
            for (w, c) in br.terms() {
                if w.degree() != 1 {
                    return Err(CoreError::NonLinearElement);
                }
                let g = w.letters()[0] as usize;
                for (jj, cc) in mat[g].iter().enumerate() {
                    rhs.add_term(Word::gen(Gen::from_index(jj)), c.try_mul(cc)?);
                }
            }
            if !lhs.try_sub(&rhs)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The cocommutator seen from the primed basis X' = O(X): evaluate the
    /// original map on each primed generator and rewrite both legs of the
    /// result in primed coordinates. The output, read on the standard basis,
    /// is the primed structure with the primes dropped.
    pub fn pushforward(&self, delta: &Cocommutator) -> Result<Cocommutator, CoreError> {
        if !self.preserves(&CommutationTable::undeformed(self.order))? {
            return Err(CoreError::NotAnAutomorphism);
        }
        let mat = self.matrix();
        let inv = self.inverse_matrix();
        let mut out = Cocommutator::zero(self.order);
        for g in Gen::ALL {
            let mut img = Tensor2::zero(self.order);
            for (j, c) in mat[g.index()].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                img = img.try_add(&delta.image(Gen::from_index(j)).scale(c))?;
            }
            out.set_image(g, self.map_tensor(&inv, &img)?);
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// coboundary structures
// ---------------------------------------------------------------------------

/// Skew candidate r = a1 K∧P + a2 K∧M + a3 K∧H + a4 P∧M + a5 P∧H + a6 M∧H,
/// plus the invariant element t1 (P⊗P − M⊗H − H⊗M) + t2 M⊗M + t3 P∧M.
#[derive(Clone, Debug)]
pub struct RMatrixCandidate {
    pub a: [Series; 6],
    pub tau: [Series; 3],
}

impl RMatrixCandidate {
    pub fn skew(a: [Series; 6]) -> RMatrixCandidate {
        let order = a[0].order();
        RMatrixCandidate { a, tau: std::array::from_fn(|_| Series::zero(order)) }
    }

    pub fn order(&self) -> u32 {
        self.a[0].order()
    }

    /// The generic invariant element with the candidate's tau coefficients.
    pub fn invariant_part(&self) -> Tensor2 {
        let n = self.order();
        let el = |g: Gen| Element::gen(g, n);
        let (h, p, m) = (el(Gen::H), el(Gen::P), el(Gen::M));
        let pp = Tensor2::product(&p, &p);
        let mh = Tensor2::product(&m, &h);
        let hm = Tensor2::product(&h, &m);
        let mm = Tensor2::product(&m, &m);
        pp.try_sub(&mh)
            .and_then(|t| t.try_sub(&hm))
            .map(|t| t.scale(&self.tau[0]))
            .and_then(|t| t.try_add(&mm.scale(&self.tau[1])))
            .and_then(|t| t.try_add(&wedge(&p, &m).scale(&self.tau[2])))
            .unwrap()
    }

    pub fn to_tensor(&self) -> Tensor2 {
        let n = self.order();
        let el = |g: Gen| Element::gen(g, n);
        let (k, h, p, m) = (el(Gen::K), el(Gen::H), el(Gen::P), el(Gen::M));
        let parts = [
            wedge(&k, &p),
            wedge(&k, &m),
            wedge(&k, &h),
            wedge(&p, &m),
            wedge(&p, &h),
            wedge(&m, &h),
        ];
        let mut out = Tensor2::zero(n);
        for (t, c) in parts.iter().zip(self.a.iter()) {
            out = out.try_add(&t.scale(c)).unwrap();
        }
        out.try_add(&self.invariant_part()).unwrap()
    }
}

/// delta_r(X) = [1⊗X + X⊗1, r].
pub fn coboundary_delta(r: &Tensor2, table: &CommutationTable) -> Result<Cocommutator, CoreError> {
    let n = r.order();
    let mut out = Cocommutator::zero(n);
    for g in Gen::ALL {
        let e = Element::gen(g, n);
        let both = Tensor2::product(&Element::one(n), &e)
            .try_add(&Tensor2::product(&e, &Element::one(n)))?;
        out.set_image(g, both.commutator(r, table)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum YbClass {
    /// zero Schouten bracket
    Triangular,
    /// nonzero but ad-invariant Schouten bracket
    QuasiTriangular,
    /// Schouten bracket not ad-invariant
    Fails,
}

impl YbClass {
    pub fn label(self) -> &'static str {
        match self {
            YbClass::Triangular => "triangular",
            YbClass::QuasiTriangular => "quasi-triangular",
            YbClass::Fails => "fails",
        }
    }
}

/// Classify a skew candidate by its Schouten bracket and the ad-invariance
/// of that bracket.
pub fn mcybe_check(r: &Tensor2, table: &CommutationTable) -> Result<YbClass, CoreError> {
    let s = schouten(r, table)?;
    if s.is_zero() {
        return Ok(YbClass::Triangular);
    }
    let n = r.order();
    for g in Gen::ALL {
        let w = Word::gen(g);
        let mut x3 = Tensor3::zero(n);
        x3.add_term(w, Word::ONE, Word::ONE, Series::one(n));
        x3.add_term(Word::ONE, w, Word::ONE, Series::one(n));
        x3.add_term(Word::ONE, Word::ONE, w, Series::one(n));
        if !x3.commutator(&s, table)?.is_zero() {
            return Ok(YbClass::Fails);
        }
    }
    Ok(YbClass::QuasiTriangular)
}

/// Structure constants of the dual Lie algebra, read off the cocommutator:
/// [x^a, x^b] = sum_i <x^a ⊗ x^b, delta(X_i)> x^i on the dual basis
/// (k, h, p, m). Requires co-Jacobi to hold identically.
pub fn dual_brackets(delta: &Cocommutator) -> Result<CommutationTable, CoreError> {
    let n = delta.order();
    let tensors = cojacobi_tensors(delta)?;
    if tensors.iter().any(|t| !t.is_zero()) {
        return Err(CoreError::ConstraintsViolated);
    }
    let images: Vec<Element> = WEDGE_PAIRS
        .iter()
        .map(|&(a, b)| {
            let mut val = Element::zero(n);
            for g in Gen::ALL {
                let c = delta
                    .image(g)
                    .coeff(&Word::gen(Gen::from_index(a)), &Word::gen(Gen::from_index(b)));
                val.add_term(Word::gen(g), c);
            }
            val
        })
        .collect();
    Ok(CommutationTable::custom("dual", n, crate::table::DEFAULT_WORD_CAP, move |x, y| {
        let idx = WEDGE_PAIRS
            .iter()
            .position(|&(a, b)| (a, b) == (x.index(), y.index()))
            .expect("ordered pair");
        images[idx].clone()
    }))
}

/// The nine-symbol assignment induced by a coboundary: xi = beta4 = a1,
/// beta6 = a3, beta1 = -a6, beta2 = -a5, beta3 = -a2, alpha = nu = beta5 = 0.
/// Since the Yang-Baxter condition kills a3, admissible coboundaries land in
/// the first family.
pub fn coboundary_family_parameters(r: &RMatrixCandidate) -> Vec<(Param, Series)> {
    let n = r.order();
    vec![
        (Param::Xi, r.a[0].clone()),
        (Param::Beta4, r.a[0].clone()),
        (Param::Beta6, r.a[2].clone()),
        (Param::Beta1, -&r.a[5]),
        (Param::Beta2, -&r.a[4]),
        (Param::Beta3, -&r.a[1]),
        (Param::Beta5, Series::zero(n)),
        (Param::Nu, Series::zero(n)),
        (Param::Alpha, Series::zero(n)),
    ]
}

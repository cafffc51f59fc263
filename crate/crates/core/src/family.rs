//! The four admissible sub-families of the cocycle space, their tabulated
//! cocommutators, and the basis changes that strip each family down to its
//! essential symbols.

use crate::bialgebra::{Automorphism, Cocommutator};
use crate::element::Element;
use crate::error::CoreError;
use crate::generator::Gen;
use crate::param::{Exponents, Param};
use crate::series::{q, qi, Q, Series};
use crate::tensor::wedge;
use num_traits::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Ia,
    Ib,
    IIa,
    IIb,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Ia, Family::Ib, Family::IIa, Family::IIb];

    pub fn label(self) -> &'static str {
        match self {
            Family::Ia => "Ia",
            Family::Ib => "Ib",
            Family::IIa => "IIa",
            Family::IIb => "IIb",
        }
    }

    pub fn from_label(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.label().eq_ignore_ascii_case(s))
    }

    /// The family's defining assignments on the nine cocycle symbols. The
    /// open conditions (nu != 0 for Ib, alpha != 0 for IIa/IIb) are not
    /// expressible as substitutions and live in `ParamPoint::classify`.
    pub fn restrictions(self, order: u32) -> Vec<(Param, Series)> {
        let zero = Series::zero(order);
        match self {
            Family::Ia => vec![
                (Param::Alpha, zero.clone()),
                (Param::Beta6, zero.clone()),
                (Param::Nu, zero),
            ],
            Family::Ib => vec![
                (Param::Alpha, zero.clone()),
                (Param::Beta6, zero.clone()),
                (Param::Beta4, Series::param(Param::Xi, order)),
                (Param::Beta5, zero),
            ],
            Family::IIa => vec![
                (Param::Xi, zero.clone()),
                (Param::Beta4, zero.clone()),
                (Param::Beta5, zero.clone()),
                (Param::Beta6, zero),
            ],
            Family::IIb => vec![
                (Param::Beta4, Series::param(Param::Xi, order)),
                (Param::Beta5, zero),
                (Param::Beta6, -&Series::param(Param::Alpha, order)),
            ],
        }
    }

    /// The general cocycle with this family's assignments substituted in,
    /// before any change of basis.
    pub fn restricted_cocommutator(self, order: u32) -> Cocommutator {
        let mut d = Cocommutator::nine_parameter(order);
        for (p, v) in self.restrictions(order) {
            d = d.subst(p, &v).expect("polynomial substitution");
        }
        d
    }

    /// The tabulated post-reduction cocommutator, written on the standard
    /// basis with the primed symbols renamed back to plain ones.
    pub fn tabulated_cocommutator(self, order: u32) -> Cocommutator {
        let n = order;
        let el = |g: Gen| Element::gen(g, n);
        let sp = |p: Param| Series::param(p, n);
        let (k, h, p, m) = (el(Gen::K), el(Gen::H), el(Gen::P), el(Gen::M));
        let mut d = Cocommutator::zero(n);
        match self {
            Family::Ia => {
                let dk = wedge(&k, &m)
                    .scale(&sp(Param::Xi))
                    .try_add(&wedge(&p, &m).scale(&sp(Param::Beta1)))
                    .and_then(|t| t.try_add(&wedge(&h, &m).scale(&sp(Param::Beta2))))
                    .unwrap();
                let b4mxi = sp(Param::Beta4).try_sub(&sp(Param::Xi)).unwrap();
                let dh = wedge(&k, &m)
                    .scale(&sp(Param::Beta5))
                    .try_add(&wedge(&p, &m).scale(&sp(Param::Beta3)))
                    .and_then(|t| t.try_add(&wedge(&h, &m).scale(&b4mxi)))
                    .unwrap();
                d.set_image(Gen::K, dk);
                d.set_image(Gen::H, dh);
                d.set_image(Gen::P, wedge(&p, &m).scale(&sp(Param::Beta4)));
            }
            Family::Ib => {
                let dk = wedge(&k, &m)
                    .scale(&sp(Param::Xi))
                    .try_add(&wedge(&p, &h).scale(&sp(Param::Nu)))
                    .unwrap();
                d.set_image(Gen::K, dk);
                d.set_image(Gen::H, wedge(&p, &m).scale(&sp(Param::Beta3)));
                d.set_image(Gen::P, wedge(&p, &m).scale(&sp(Param::Xi)));
            }
            Family::IIa => {
                d.set_image(Gen::H, wedge(&p, &h).scale(&-&sp(Param::Alpha)));
                d.set_image(Gen::P, wedge(&h, &m).scale(&sp(Param::Alpha)));
                d.set_image(Gen::M, wedge(&p, &m).scale(&sp(Param::Alpha)));
            }
            Family::IIb => {
                let dk = wedge(&k, &p)
                    .scale(&-&sp(Param::Alpha))
                    .try_add(&wedge(&p, &m).scale(&sp(Param::Beta1)))
                    .and_then(|t| t.try_add(&wedge(&h, &m).scale(&sp(Param::Beta2))))
                    .unwrap();
                d.set_image(Gen::K, dk);
                d.set_image(Gen::M, wedge(&p, &m).scale(&sp(Param::Alpha)));
            }
        }
        d
    }

    /// The basis change taking the restricted cocommutator to the tabulated
    /// one. Laurent monomials in the symbols are expected; the denominators
    /// are exactly the family's open conditions.
    pub fn reduction(self, order: u32) -> Automorphism {
        let zero = || Series::zero(order);
        let mono = |pairs: &[(Param, i16)], c: Q| {
            let mut e = Exponents::ZERO;
            for &(p, k) in pairs {
                e = e.mul(&Exponents::of(p, k));
            }
            Series::monomial(e, c, order)
        };
        let lambda = match self {
            Family::Ia => [zero(), zero(), zero(), zero(), zero()],
            Family::Ib => [
                zero(),
                zero(),
                zero(),
                mono(&[(Param::Beta2, 1), (Param::Nu, -1)], qi(-1)),
                mono(&[(Param::Beta1, 1), (Param::Nu, -1)], qi(1))
                    .try_add(&mono(&[(Param::Beta2, 2), (Param::Nu, -2)], qi(1)))
                    .unwrap(),
            ],
            Family::IIa => [
                mono(&[(Param::Nu, 1), (Param::Alpha, -1)], qi(1)),
                mono(&[(Param::Beta2, 1), (Param::Alpha, -1)], qi(-1)),
                mono(&[(Param::Beta1, 1), (Param::Alpha, -1)], qi(-1))
                    .try_add(&mono(
                        &[(Param::Nu, 1), (Param::Beta3, 1), (Param::Alpha, -2)],
                        qi(-1),
                    ))
                    .unwrap(),
                zero(),
                mono(&[(Param::Beta3, 1), (Param::Alpha, -1)], q(-1, 2)),
            ],
            Family::IIb => [
                mono(&[(Param::Nu, 1), (Param::Alpha, -1)], qi(1)),
                zero(),
                zero(),
                mono(&[(Param::Xi, 1), (Param::Alpha, -1)], qi(-1)),
                mono(&[(Param::Xi, 2), (Param::Alpha, -2)], qi(1))
                    .try_add(&mono(&[(Param::Beta3, 1), (Param::Alpha, -1)], qi(-1)))
                    .unwrap(),
            ],
        };
        Automorphism::new(lambda)
    }

    /// How the surviving tabulated symbols read in terms of the original
    /// ones. Substituting these in order into `tabulated_cocommutator` must
    /// reproduce `reduction().pushforward(restricted_cocommutator())`; the
    /// order matters because a replacement may mention a symbol that is
    /// itself replaced (and then means the original one).
    pub fn primed_symbols(self, order: u32) -> Vec<(Param, Series)> {
        let mono = |pairs: &[(Param, i16)], c: Q| {
            let mut e = Exponents::ZERO;
            for &(p, k) in pairs {
                e = e.mul(&Exponents::of(p, k));
            }
            Series::monomial(e, c, order)
        };
        match self {
            Family::Ia | Family::IIa => Vec::new(),
            Family::Ib => vec![(
                Param::Beta3,
                Series::param(Param::Beta3, order)
                    .try_add(&mono(&[(Param::Beta2, 1), (Param::Xi, 1), (Param::Nu, -1)], qi(-1)))
                    .unwrap(),
            )],
            Family::IIb => vec![
                (
                    Param::Beta2,
                    Series::param(Param::Beta2, order)
                        .try_add(&mono(&[(Param::Nu, 1), (Param::Xi, 1), (Param::Alpha, -1)], qi(-1)))
                        .unwrap(),
                ),
                (
                    Param::Beta1,
                    Series::param(Param::Beta1, order)
                        .try_add(&mono(
                            &[(Param::Beta2, 1), (Param::Xi, 1), (Param::Alpha, -1)],
                            qi(1),
                        ))
                        .and_then(|s| {
                            s.try_add(&mono(
                                &[(Param::Beta3, 1), (Param::Nu, 1), (Param::Alpha, -1)],
                                qi(1),
                            ))
                        })
                        .and_then(|s| {
                            s.try_add(&mono(
                                &[(Param::Nu, 1), (Param::Xi, 2), (Param::Alpha, -2)],
                                qi(-1),
                            ))
                        })
                        .unwrap(),
                ),
            ],
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// A rational point in the nine-symbol cocycle space.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint {
    pub xi: Q,
    pub nu: Q,
    pub alpha: Q,
    pub beta: [Q; 6],
}

impl Default for ParamPoint {
    fn default() -> ParamPoint {
        ParamPoint {
            xi: Q::zero(),
            nu: Q::zero(),
            alpha: Q::zero(),
            beta: std::array::from_fn(|_| Q::zero()),
        }
    }
}

impl ParamPoint {
    pub fn get(&self, p: Param) -> Option<&Q> {
        match p {
            Param::Xi => Some(&self.xi),
            Param::Nu => Some(&self.nu),
            Param::Alpha => Some(&self.alpha),
            Param::Beta1 => Some(&self.beta[0]),
            Param::Beta2 => Some(&self.beta[1]),
            Param::Beta3 => Some(&self.beta[2]),
            Param::Beta4 => Some(&self.beta[3]),
            Param::Beta5 => Some(&self.beta[4]),
            Param::Beta6 => Some(&self.beta[5]),
            _ => None,
        }
    }

    const COCYCLE_PARAMS: [Param; 9] = [
        Param::Xi,
        Param::Nu,
        Param::Alpha,
        Param::Beta1,
        Param::Beta2,
        Param::Beta3,
        Param::Beta4,
        Param::Beta5,
        Param::Beta6,
    ];

    /// Values of the five dual-Jacobi obstructions at this point.
    pub fn constraint_values(&self) -> [Q; 5] {
        let b4 = &self.beta[3];
        let b5 = &self.beta[4];
        let b6 = &self.beta[5];
        let b6pa = b6 + &self.alpha;
        let ximb4 = &self.xi - b4;
        [
            &self.alpha * b5,
            b6 * &b6pa,
            b4 * &b6pa,
            &self.nu * &ximb4,
            &self.alpha * &ximb4 - &self.nu * b5,
        ]
    }

    pub fn satisfies_constraints(&self) -> bool {
        self.constraint_values().iter().all(Q::is_zero)
    }

    /// Which sub-family the point belongs to. The five obstructions carve
    /// the parameter space into exactly these four cells:
    /// alpha = 0 forces beta6 = 0, and then nu = 0 gives Ia while nu != 0
    /// forces beta4 = xi, beta5 = 0 (Ib); alpha != 0 forces beta5 = 0 and
    /// beta4 = xi with beta6 = 0 (then xi = 0, IIa) or beta6 = -alpha (IIb).
    pub fn classify(&self) -> Result<Family, CoreError> {
        if !self.satisfies_constraints() {
            return Err(CoreError::ConstraintsViolated);
        }
        if self.alpha.is_zero() {
            if self.nu.is_zero() {
                Ok(Family::Ia)
            } else {
                Ok(Family::Ib)
            }
        } else if self.beta[5].is_zero() {
            Ok(Family::IIa)
        } else {
            Ok(Family::IIb)
        }
    }

    /// Substitute the point into a cocommutator's scalar coefficients.
    pub fn apply(&self, delta: &Cocommutator) -> Result<Cocommutator, CoreError> {
        let mut out = delta.clone();
        for p in Self::COCYCLE_PARAMS {
            let v = Series::constant(self.get(p).unwrap().clone(), delta.order());
            out = out.subst(p, &v)?;
        }
        Ok(out)
    }
}

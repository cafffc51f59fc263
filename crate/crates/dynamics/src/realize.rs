//! Phase-space realizations of the four-generator algebra and its
//! deformations, together with their N-particle extensions.
//!
//! A realization maps each generator X ∈ {K, H, P, M} to a function
//! f_X^{(1)}(qᵢ, pᵢ; mᵢ) on one-particle phase space such that canonical
//! Poisson brackets of the f's reproduce the (possibly deformed) bracket
//! relations. N-particle functions are produced by iterating the family's
//! coproduct, which here collapses to an explicit left-to-right recursion;
//! the aggregates for particles 1..k are combined with one-particle data at
//! slot k+1. Everything is generic over [`Scalar`], so the same code yields
//! values and exact derivatives.

use crate::error::DynError;
use crate::scalar::Scalar;

/// Generator slots in the fixed order K, H, P, M.
pub const GEN_K: usize = 0;
pub const GEN_H: usize = 1;
pub const GEN_P: usize = 2;
pub const GEN_M: usize = 3;

pub const GEN_NAMES: [&str; 4] = ["K", "H", "P", "M"];

/// Which deformation a realization belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoissonFamily {
    Undeformed,
    Standard,
    Nonstandard,
    Ib,
    IIb,
}

impl PoissonFamily {
    pub const ALL: [PoissonFamily; 5] = [
        PoissonFamily::Undeformed,
        PoissonFamily::Standard,
        PoissonFamily::Nonstandard,
        PoissonFamily::Ib,
        PoissonFamily::IIb,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PoissonFamily::Undeformed => "none",
            PoissonFamily::Standard => "standard",
            PoissonFamily::Nonstandard => "nonstandard",
            PoissonFamily::Ib => "Ib",
            PoissonFamily::IIb => "IIb",
        }
    }

    pub fn from_label(s: &str) -> Result<PoissonFamily, DynError> {
        match s {
            "none" | "undeformed" => Ok(PoissonFamily::Undeformed),
            "standard" => Ok(PoissonFamily::Standard),
            "nonstandard" | "non-standard" => Ok(PoissonFamily::Nonstandard),
            "Ib" | "ib" => Ok(PoissonFamily::Ib),
            "IIb" | "iib" => Ok(PoissonFamily::IIb),
            other => Err(DynError::UnsupportedFamily(other.to_string())),
        }
    }

    /// Deformation parameters this family actually reads.
    pub fn active_params(self) -> &'static [&'static str] {
        match self {
            PoissonFamily::Undeformed => &[],
            PoissonFamily::Standard => &["xi", "beta1"],
            PoissonFamily::Nonstandard => &["beta1", "beta2", "beta3"],
            PoissonFamily::Ib => &["nu", "xi", "beta3"],
            PoissonFamily::IIb => &["alpha", "beta1", "beta2"],
        }
    }
}

/// Numeric values for the deformation parameters. Families read only the
/// entries listed by [`PoissonFamily::active_params`]; the rest are ignored.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DeformParams {
    pub xi: f64,
    pub nu: f64,
    pub alpha: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub beta3: f64,
}

/// Switchover point below which (e^{x m} − 1)/x is evaluated by its Taylor
/// polynomial to avoid cancellation.
pub const MASS_SERIES_THRESHOLD: f64 = 1e-6;

/// The deformed mass (e^{x m} − 1)/x, continuous at x = 0 with value m.
/// A 4-term Taylor polynomial takes over for |x·m| below the threshold.
pub fn deformed_mass(x: f64, m: f64) -> f64 {
    let u = x * m;
    if u.abs() < MASS_SERIES_THRESHOLD {
        m * (1.0 + u * (1.0 / 2.0 + u * (1.0 / 6.0 + u / 24.0)))
    } else {
        u.exp_m1() / x
    }
}

/// (e^{x·m} − 1)/x for a scalar-valued m (x a plain parameter), with the
/// same series fallback as [`deformed_mass`].
pub fn mass_fn<T: Scalar>(x: f64, m: T) -> T {
    let u = m * T::from_f64(x);
    if u.val().abs() < MASS_SERIES_THRESHOLD {
        let half = T::from_f64(0.5);
        let sixth = T::from_f64(1.0 / 6.0);
        let t24 = T::from_f64(1.0 / 24.0);
        let one = T::from_f64(1.0);
        m * (one + u * (half + u * (sixth + u * t24)))
    } else {
        u.exp_m1() / T::from_f64(x)
    }
}

/// sinh(c·p)/c, continuous at c = 0 with value p.
pub fn sinh_fn<T: Scalar>(c: f64, p: T) -> T {
    let u = p * T::from_f64(c);
    if u.val().abs() < MASS_SERIES_THRESHOLD {
        let one = T::from_f64(1.0);
        let u2 = u * u;
        p * (one + u2 * (T::from_f64(1.0 / 6.0) + u2 * T::from_f64(1.0 / 120.0)))
    } else {
        u.sinh() / T::from_f64(c)
    }
}

/// (1 − e^{−a·p})/a, continuous at a = 0 with value p.
pub fn expm_fn<T: Scalar>(a: f64, p: T) -> T {
    let u = p * T::from_f64(a);
    if u.val().abs() < MASS_SERIES_THRESHOLD {
        let one = T::from_f64(1.0);
        p * (one - u * (T::from_f64(0.5) - u * (T::from_f64(1.0 / 6.0) - u * T::from_f64(1.0 / 24.0))))
    } else {
        (T::from_f64(1.0) - (-u).exp()) / T::from_f64(a)
    }
}

/// A family with fixed parameter values and per-particle mass constants.
#[derive(Clone, Debug)]
pub struct PhaseRealization {
    family: PoissonFamily,
    params: DeformParams,
    masses: Vec<f64>,
}

impl PhaseRealization {
    pub fn new(
        family: PoissonFamily,
        params: DeformParams,
        masses: Vec<f64>,
    ) -> Result<PhaseRealization, DynError> {
        if masses.is_empty() {
            return Err(DynError::InvalidConfig("at least one particle".into()));
        }
        if masses.iter().any(|m| !m.is_finite() || *m == 0.0) {
            return Err(DynError::InvalidConfig(
                "masses must be finite and nonzero".into(),
            ));
        }
        Ok(PhaseRealization { family, params, masses })
    }

    pub fn family(&self) -> PoissonFamily {
        self.family
    }

    pub fn params(&self) -> &DeformParams {
        &self.params
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn particles(&self) -> usize {
        self.masses.len()
    }

    /// One-particle functions [K, H, P, M] at slot `i` (zero-based).
    pub fn one_particle<T: Scalar>(&self, i: usize, q: T, p: T) -> [T; 4] {
        let m = self.masses[i];
        let pr = &self.params;
        let mc = T::from_f64(m);
        match self.family {
            PoissonFamily::Undeformed => {
                [mc * q, p * p / T::from_f64(2.0 * m), p, mc]
            }
            PoissonFamily::Standard => {
                let w = deformed_mass(2.0 * pr.xi, m);
                [T::from_f64(w) * q, p * p / T::from_f64(2.0 * w), p, mc]
            }
            PoissonFamily::Nonstandard => {
                let shift = T::from_f64(0.5 * pr.beta3 * m * m);
                [mc * q, p * p / T::from_f64(2.0 * m), p - shift, mc]
            }
            PoissonFamily::Ib => {
                let w = deformed_mass(2.0 * pr.xi, m);
                let g = deformed_mass(pr.xi, m);
                let shift = T::from_f64(0.5 * pr.beta3 * g * g);
                [T::from_f64(w) * q, p * p / T::from_f64(2.0 * w), p - shift, mc]
            }
            PoissonFamily::IIb => {
                let x = (p * T::from_f64(-0.5 * pr.alpha)).exp();
                let s = sinh_fn(0.25 * pr.alpha, p);
                [mc * x * q, s * s / T::from_f64(2.0 * m), p, mc * x]
            }
        }
    }

    /// Aggregates [K, H, P, M] for particles 1..=k, for every k up to `n`.
    /// `q` and `p` must each hold at least `n` coordinates.
    pub fn compose<T: Scalar>(&self, n: usize, q: &[T], p: &[T]) -> Vec<[T; 4]> {
        assert!(n >= 1 && n <= self.masses.len());
        assert!(q.len() >= n && p.len() >= n);
        let pr = &self.params;
        let mut levels = Vec::with_capacity(n);
        levels.push(self.one_particle(0, q[0], p[0]));
        for i in 1..n {
            let one = self.one_particle(i, q[i], p[i]);
            let agg = levels[i - 1];
            let m = self.masses[i];
            let next = match self.family {
                PoissonFamily::Undeformed => [
                    agg[0] + one[0],
                    agg[1] + one[1],
                    agg[2] + one[2],
                    agg[3] + one[3],
                ],
                PoissonFamily::Standard => {
                    let e = T::from_f64((pr.xi * m).exp());
                    [
                        one[0] + agg[0] * e + agg[2] * T::from_f64(pr.beta1 * m * (pr.xi * m).exp()),
                        agg[1] + one[1],
                        one[2] + agg[2] * e,
                        agg[3] + one[3],
                    ]
                }
                PoissonFamily::Nonstandard => [
                    one[0] + agg[0]
                        + agg[2] * T::from_f64(pr.beta1 * m + 0.5 * pr.beta2 * pr.beta3 * m * m)
                        + agg[1] * T::from_f64(pr.beta2 * m),
                    agg[1] + one[1] + agg[2] * T::from_f64(pr.beta3 * m),
                    one[2] + agg[2],
                    agg[3] + one[3],
                ],
                PoissonFamily::Ib => {
                    let e = T::from_f64((pr.xi * m).exp());
                    let g = deformed_mass(pr.xi, m);
                    [
                        one[0]
                            + agg[0] * e
                            + agg[2] * one[1] * e * T::from_f64(pr.nu)
                            + agg[2] * agg[2] * e * T::from_f64(0.5 * pr.nu * pr.beta3 * g),
                        agg[1] + one[1] + agg[2] * T::from_f64(pr.beta3 * g),
                        one[2] + agg[2] * e,
                        agg[3] + one[3],
                    ]
                }
                PoissonFamily::IIb => {
                    let ep = (p[i] * T::from_f64(-pr.alpha)).exp();
                    [
                        one[0] + agg[0] * ep
                            - agg[3] * (p[i] * T::from_f64(pr.beta1) + one[1] * T::from_f64(pr.beta2)) * ep,
                        agg[1] + one[1],
                        one[2] + agg[2],
                        one[3] + agg[3] * ep,
                    ]
                }
            };
            levels.push(next);
        }
        levels
    }

    /// The N-particle phase functions [K, H, P, M] for the first `n` slots.
    pub fn phase_functions<T: Scalar>(&self, n: usize, q: &[T], p: &[T]) -> [T; 4] {
        *self.compose(n, q, p).last().unwrap()
    }

    /// First Casimir as a function of generator values.
    pub fn casimir1<T: Scalar>(&self, f: &[T; 4]) -> T {
        match self.family {
            PoissonFamily::IIb => (f[GEN_P] * T::from_f64(0.5 * self.params.alpha)).exp() * f[GEN_M],
            _ => f[GEN_M],
        }
    }

    /// Second Casimir as a function of generator values; vanishes on every
    /// one-particle realization.
    pub fn casimir2<T: Scalar>(&self, f: &[T; 4]) -> T {
        let pr = &self.params;
        let two = T::from_f64(2.0);
        match self.family {
            PoissonFamily::Undeformed => f[GEN_P] * f[GEN_P] - two * f[GEN_M] * f[GEN_H],
            PoissonFamily::Standard => {
                f[GEN_P] * f[GEN_P] - two * mass_fn(2.0 * pr.xi, f[GEN_M]) * f[GEN_H]
            }
            PoissonFamily::Nonstandard => {
                let shifted = f[GEN_P] + f[GEN_M] * f[GEN_M] * T::from_f64(0.5 * pr.beta3);
                shifted * shifted - two * f[GEN_M] * f[GEN_H]
            }
            PoissonFamily::Ib => {
                let g = mass_fn(pr.xi, f[GEN_M]);
                let shifted = f[GEN_P] + g * g * T::from_f64(0.5 * pr.beta3);
                shifted * shifted - two * mass_fn(2.0 * pr.xi, f[GEN_M]) * f[GEN_H]
            }
            PoissonFamily::IIb => {
                let s = sinh_fn(0.25 * pr.alpha, f[GEN_P]);
                let e = (f[GEN_P] * T::from_f64(0.5 * pr.alpha)).exp();
                s * s - two * e * f[GEN_M] * f[GEN_H]
            }
        }
    }

    /// Right-hand side of the deformed bracket {X_a, X_b} expressed through
    /// generator values, for a < b in the K, H, P, M ordering.
    pub fn bracket_image<T: Scalar>(&self, a: usize, b: usize, f: &[T; 4]) -> T {
        let pr = &self.params;
        let zero = T::from_f64(0.0);
        match (a, b) {
            (GEN_K, GEN_H) => match self.family {
                PoissonFamily::Undeformed | PoissonFamily::Standard => f[GEN_P],
                PoissonFamily::Nonstandard => {
                    f[GEN_P] + f[GEN_M] * f[GEN_M] * T::from_f64(0.5 * pr.beta3)
                }
                PoissonFamily::Ib => {
                    let g = mass_fn(pr.xi, f[GEN_M]);
                    f[GEN_P] + g * g * T::from_f64(0.5 * pr.beta3)
                }
                PoissonFamily::IIb => expm_fn(pr.alpha, f[GEN_P]),
            },
            (GEN_K, GEN_P) => match self.family {
                PoissonFamily::Standard | PoissonFamily::Ib => mass_fn(2.0 * pr.xi, f[GEN_M]),
                _ => f[GEN_M],
            },
            (GEN_K, GEN_M) => match self.family {
                PoissonFamily::IIb => -(f[GEN_M] * f[GEN_M]) * T::from_f64(0.5 * pr.alpha),
                _ => zero,
            },
            _ => zero,
        }
    }

    /// Two-particle functions in the closed form tabulated for each family
    /// (as opposed to the coproduct recursion in [`Self::compose`]).
    pub fn two_particle_closed<T: Scalar>(&self, q: &[T], p: &[T]) -> [T; 4] {
        assert!(self.masses.len() >= 2);
        let pr = &self.params;
        let (m1, m2) = (self.masses[0], self.masses[1]);
        let (q1, q2, p1, p2) = (q[0], q[1], p[0], p[1]);
        match self.family {
            PoissonFamily::Undeformed => [
                T::from_f64(m1) * q1 + T::from_f64(m2) * q2,
                p1 * p1 / T::from_f64(2.0 * m1) + p2 * p2 / T::from_f64(2.0 * m2),
                p1 + p2,
                T::from_f64(m1 + m2),
            ],
            PoissonFamily::Standard => {
                let w1 = deformed_mass(2.0 * pr.xi, m1);
                let w2 = deformed_mass(2.0 * pr.xi, m2);
                let e2 = (pr.xi * m2).exp();
                [
                    T::from_f64(e2 * w1) * q1
                        + T::from_f64(w2) * q2
                        + p1 * T::from_f64(pr.beta1 * e2 * m2),
                    p1 * p1 / T::from_f64(2.0 * w1) + p2 * p2 / T::from_f64(2.0 * w2),
                    p1 * T::from_f64(e2) + p2,
                    T::from_f64(m1 + m2),
                ]
            }
            PoissonFamily::Nonstandard => {
                let pi1 = p1 - T::from_f64(0.5 * pr.beta3 * m1 * m1);
                [
                    T::from_f64(m1) * q1
                        + T::from_f64(m2) * q2
                        + pi1 * T::from_f64(pr.beta1 * m2 + 0.5 * pr.beta2 * pr.beta3 * m2 * m2)
                        + p1 * p1 * T::from_f64(pr.beta2 * m2 / (2.0 * m1)),
                    p1 * p1 / T::from_f64(2.0 * m1)
                        + p2 * p2 / T::from_f64(2.0 * m2)
                        + pi1 * T::from_f64(pr.beta3 * m2),
                    p1 + p2 - T::from_f64(0.5 * pr.beta3 * (m1 * m1 + m2 * m2)),
                    T::from_f64(m1 + m2),
                ]
            }
            PoissonFamily::Ib => {
                let w1 = deformed_mass(2.0 * pr.xi, m1);
                let w2 = deformed_mass(2.0 * pr.xi, m2);
                let g1 = deformed_mass(pr.xi, m1);
                let g2 = deformed_mass(pr.xi, m2);
                let e2 = (pr.xi * m2).exp();
                let pi1 = p1 - T::from_f64(0.5 * pr.beta3 * g1 * g1);
                let h2 = p2 * p2 / T::from_f64(2.0 * w2);
                [
                    T::from_f64(e2 * w1) * q1
                        + T::from_f64(w2) * q2
                        + pi1 * h2 * T::from_f64(pr.nu * e2)
                        + pi1 * pi1 * T::from_f64(0.5 * pr.nu * pr.beta3 * e2 * g2),
                    p1 * p1 / T::from_f64(2.0 * w1) + h2 + pi1 * T::from_f64(pr.beta3 * g2),
                    p1 * T::from_f64(e2) + p2
                        - T::from_f64(0.5 * pr.beta3 * (g1 * g1 * e2 + g2 * g2)),
                    T::from_f64(m1 + m2),
                ]
            }
            PoissonFamily::IIb => {
                let a = pr.alpha;
                let x1 = (p1 * T::from_f64(-0.5 * a)).exp();
                let x2 = (p2 * T::from_f64(-0.5 * a)).exp();
                let efull = (p2 * T::from_f64(-a)).exp();
                let s1 = sinh_fn(0.25 * a, p1);
                let s2 = sinh_fn(0.25 * a, p2);
                let h2 = s2 * s2 / T::from_f64(2.0 * m2);
                [
                    T::from_f64(m1) * x1 * efull * q1 + T::from_f64(m2) * x2 * q2
                        - T::from_f64(m1) * x1 * efull * (p2 * T::from_f64(pr.beta1) + h2 * T::from_f64(pr.beta2)),
                    s1 * s1 / T::from_f64(2.0 * m1) + h2,
                    p1 + p2,
                    T::from_f64(m1) * x1 * efull + T::from_f64(m2) * x2,
                ]
            }
        }
    }

    /// Two-particle first Casimir, closed form.
    pub fn c1_closed_2<T: Scalar>(&self, _q: &[T], p: &[T]) -> T {
        let (m1, m2) = (self.masses[0], self.masses[1]);
        match self.family {
            PoissonFamily::IIb => {
                let a = self.params.alpha;
                T::from_f64(m1) * (p[1] * T::from_f64(-0.5 * a)).exp()
                    + T::from_f64(m2) * (p[0] * T::from_f64(0.5 * a)).exp()
            }
            _ => T::from_f64(m1 + m2),
        }
    }

    /// Two-particle second Casimir, closed form as tabulated.
    pub fn c2_closed_2<T: Scalar>(&self, _q: &[T], p: &[T]) -> T {
        let pr = &self.params;
        let (m1, m2) = (self.masses[0], self.masses[1]);
        let (p1, p2) = (p[0], p[1]);
        match self.family {
            PoissonFamily::Undeformed => {
                let d = p1 * T::from_f64(m2) - p2 * T::from_f64(m1);
                -(d * d) / T::from_f64(m1 * m2)
            }
            PoissonFamily::Standard => {
                let w1 = deformed_mass(2.0 * pr.xi, m1);
                let w2 = deformed_mass(2.0 * pr.xi, m2);
                let e2 = (pr.xi * m2).exp();
                let d = p1 * T::from_f64(w2) - p2 * T::from_f64(w1 * e2);
                -(d * d) / T::from_f64(w1 * w2)
            }
            PoissonFamily::Nonstandard => {
                let d = p1 * T::from_f64(m2) - p2 * T::from_f64(m1);
                let b3 = pr.beta3;
                -(d * d) / T::from_f64(m1 * m2) - d * T::from_f64(2.0 * b3 * m2)
                    + T::from_f64(b3 * b3 * m1 * m1 * m2 * (m1 + 2.0 * m2))
            }
            PoissonFamily::Ib => {
                let xi = pr.xi;
                let b3 = pr.beta3;
                let w1 = deformed_mass(2.0 * xi, m1);
                let w2 = deformed_mass(2.0 * xi, m2);
                let g1 = deformed_mass(xi, m1);
                let g2 = deformed_mass(xi, m2);
                let e2 = (xi * m2).exp();
                let d = p1 * T::from_f64(w2) - p2 * T::from_f64(w1 * e2);
                let brace = g2 * (2.0 + xi * g1).powi(2) * (1.0 + xi * g2).powi(2)
                    + 4.0 * w1
                    + 4.0 * w2
                    + 8.0 * xi * w1 * w2;
                -(d * d) / T::from_f64(w1 * w2) - d * T::from_f64(2.0 * b3 * g2)
                    + T::from_f64(0.25 * b3 * b3 * g1 * g1 * g2 * brace)
            }
            PoissonFamily::IIb => {
                let a = pr.alpha;
                let s1 = sinh_fn(0.25 * a, p1);
                let s2 = sinh_fn(0.25 * a, p2);
                let d = s1 * (p1 * T::from_f64(0.25 * a)).exp() * T::from_f64(m2)
                    - s2 * (p2 * T::from_f64(-0.25 * a)).exp() * T::from_f64(m1);
                -(d * d) / T::from_f64(m1 * m2)
            }
        }
    }
}

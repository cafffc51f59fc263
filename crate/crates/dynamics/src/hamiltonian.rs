//! Integrable Hamiltonians H^{(N)} = f_H^{(N)} + F(f_K^{(N)}) and the
//! randomized involution certificates for their integrals of motion.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bracket::poisson_bracket_scaled;
use crate::error::DynError;
use crate::realize::{PhaseRealization, GEN_H, GEN_K};
use crate::scalar::{Dual, Scalar, Smooth1D};

/// The outer potential F applied to the collective boost coordinate.
#[derive(Clone)]
pub enum Potential {
    /// Free motion, F = 0.
    Zero,
    /// u²/2.
    Harmonic,
    /// e^u.
    Exponential,
    /// u^k.
    Monomial(u32),
    /// Any caller-supplied smooth function.
    Custom(Arc<dyn Smooth1D>),
}

impl std::fmt::Debug for Potential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

impl Potential {
    /// Resolve a registry name. Anything outside the registry is rejected,
    /// which is how non-differentiable potentials are kept out of CLI runs.
    pub fn from_name(name: &str, degree: Option<u32>) -> Result<Potential, DynError> {
        match name {
            "none" | "zero" | "free" => Ok(Potential::Zero),
            "harmonic" => Ok(Potential::Harmonic),
            "exponential" => Ok(Potential::Exponential),
            "monomial" => Ok(Potential::Monomial(degree.unwrap_or(3))),
            other => Err(DynError::UnknownPotential(other.to_string())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Potential::Zero => "none".into(),
            Potential::Harmonic => "harmonic".into(),
            Potential::Exponential => "exponential".into(),
            Potential::Monomial(k) => format!("monomial^{}", k),
            Potential::Custom(_) => "custom".into(),
        }
    }

    pub fn eval<T: Scalar>(&self, u: T) -> T {
        match self {
            Potential::Zero => T::from_f64(0.0),
            Potential::Harmonic => u * u * T::from_f64(0.5),
            Potential::Exponential => u.exp(),
            Potential::Monomial(k) => u.powi(*k as i32),
            Potential::Custom(f) => T::smooth(f.as_ref(), u),
        }
    }
}

/// An N-particle system: realization, particle count and potential.
#[derive(Clone, Debug)]
pub struct HamiltonianSystem {
    realization: PhaseRealization,
    n: usize,
    potential: Potential,
}

impl HamiltonianSystem {
    pub fn new(
        realization: PhaseRealization,
        n: usize,
        potential: Potential,
    ) -> Result<HamiltonianSystem, DynError> {
        if n < 1 || n > realization.particles() {
            return Err(DynError::InvalidConfig(format!(
                "particle count {} outside 1..={}",
                n,
                realization.particles()
            )));
        }
        Ok(HamiltonianSystem { realization, n, potential })
    }

    pub fn realization(&self) -> &PhaseRealization {
        &self.realization
    }

    pub fn particles(&self) -> usize {
        self.n
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    /// H^{(N)} = f_H^{(N)} + F(f_K^{(N)}).
    pub fn hamiltonian<T: Scalar>(&self, q: &[T], p: &[T]) -> T {
        let f = self.realization.phase_functions(self.n, q, p);
        f[GEN_H] + self.potential.eval(f[GEN_K])
    }

    /// The integrals C₂^{(k)} for k = 2..=N (built on the leading k slots).
    pub fn integrals<T: Scalar>(&self, q: &[T], p: &[T]) -> Vec<T> {
        let levels = self.realization.compose(self.n, q, p);
        (2..=self.n)
            .map(|k| self.realization.casimir2(&levels[k - 1]))
            .collect()
    }

    /// Value of H and of every integral at an f64 point.
    pub fn observables(&self, q: &[f64], p: &[f64]) -> (f64, Vec<f64>) {
        (self.hamiltonian(q, p), self.integrals(q, p))
    }
}

/// One checked bracket with its relative residual.
#[derive(Clone, Debug, Serialize)]
pub struct PairResidual {
    pub lhs: String,
    pub rhs: String,
    pub residual: f64,
}

/// Randomized certificate that H^{(N)} and the C₂^{(k)} are in involution.
#[derive(Clone, Debug, Serialize)]
pub struct InvolutionCertificate {
    pub family: String,
    pub particles: usize,
    pub potential: String,
    pub points: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub worst: Vec<PairResidual>,
    pub max_residual: f64,
    pub pass: bool,
}

fn sample_point(rng: &mut ChaCha8Rng, n: usize) -> (Vec<f64>, Vec<f64>) {
    let q: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let p: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    (q, p)
}

/// Check {H, C₂^{(k)}} and {C₂^{(k)}, C₂^{(l)}} at seeded random points.
pub fn certify_involution(
    system: &HamiltonianSystem,
    points: usize,
    seed: u64,
    tolerance: f64,
) -> Result<InvolutionCertificate, DynError> {
    let n = system.particles();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampled: Vec<(Vec<f64>, Vec<f64>)> = (0..points).map(|_| sample_point(&mut rng, n)).collect();

    let h = |q: &[Dual], p: &[Dual]| system.hamiltonian(q, p);
    let c2 = |k: usize| {
        move |q: &[Dual], p: &[Dual]| {
            let levels = system.realization().compose(k, q, p);
            system.realization().casimir2(&levels[k - 1])
        }
    };

    let results = qgal_core::par::try_map_batch(sampled, |(q, p)| {
        let mut worst: Vec<PairResidual> = Vec::new();
        for k in 2..=n {
            let b = poisson_bracket_scaled(&h, &c2(k), &q, &p)?;
            worst.push(PairResidual {
                lhs: "H".into(),
                rhs: format!("C2^({})", k),
                residual: b.relative(),
            });
        }
        for k in 2..=n {
            for l in (k + 1)..=n {
                let b = poisson_bracket_scaled(&c2(k), &c2(l), &q, &p)?;
                worst.push(PairResidual {
                    lhs: format!("C2^({})", k),
                    rhs: format!("C2^({})", l),
                    residual: b.relative(),
                });
            }
        }
        Ok::<_, DynError>(worst)
    })?;

    let mut worst_by_pair: Vec<PairResidual> = Vec::new();
    for batch in results {
        for r in batch {
            match worst_by_pair.iter_mut().find(|w| w.lhs == r.lhs && w.rhs == r.rhs) {
                Some(w) => w.residual = w.residual.max(r.residual),
                None => worst_by_pair.push(r),
            }
        }
    }
    let max_residual = worst_by_pair.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(InvolutionCertificate {
        family: system.realization().family().label().into(),
        particles: n,
        potential: system.potential().name(),
        points,
        seed,
        tolerance,
        max_residual,
        pass: max_residual < tolerance,
        worst: worst_by_pair,
    })
}

/// Certificate that the two-particle functions close the family's deformed
/// bracket relations under the canonical Poisson bracket.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureCertificate {
    pub family: String,
    pub points: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_residual: f64,
    pub pass: bool,
}

pub fn certify_closure(
    realization: &PhaseRealization,
    points: usize,
    seed: u64,
    tolerance: f64,
) -> Result<ClosureCertificate, DynError> {
    if realization.particles() < 2 {
        return Err(DynError::InvalidConfig("closure check needs two particles".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_residual: f64 = 0.0;
    for _ in 0..points {
        let (q, p) = sample_point(&mut rng, 2);
        let fvals = realization.phase_functions(2, &q, &p);
        for a in 0..4 {
            for b in (a + 1)..4 {
                let fa = |qq: &[Dual], pp: &[Dual]| realization.phase_functions(2, qq, pp)[a];
                let fb = |qq: &[Dual], pp: &[Dual]| realization.phase_functions(2, qq, pp)[b];
                let lhs = poisson_bracket_scaled(&fa, &fb, &q, &p)?;
                let rhs = realization.bracket_image(a, b, &fvals);
                let residual = (lhs.value - rhs).abs() / lhs.scale.max(rhs.abs()).max(1.0);
                if residual > max_residual {
                    max_residual = residual;
                }
            }
        }
    }
    Ok(ClosureCertificate {
        family: realization.family().label().into(),
        points,
        seed,
        tolerance,
        max_residual,
        pass: max_residual < tolerance,
    })
}

/// Certificate that the tabulated closed two-particle forms agree with the
/// coproduct-composed ones, and that one-particle Casimirs take their fixed
/// values (C₁ = m₁ realized, C₂ = 0).
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormCertificate {
    pub family: String,
    pub points: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub pass: bool,
}

pub fn certify_closed_forms(
    realization: &PhaseRealization,
    points: usize,
    seed: u64,
    tolerance: f64,
) -> Result<ClosedFormCertificate, DynError> {
    if realization.particles() < 2 {
        return Err(DynError::InvalidConfig("closed-form check needs two particles".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_dev: f64 = 0.0;
    let dev = |a: f64, b: f64| (a - b).abs() / a.abs().max(b.abs()).max(1.0);
    for _ in 0..points {
        let (q, p) = sample_point(&mut rng, 2);
        let levels = realization.compose(2, &q, &p);
        let closed = realization.two_particle_closed(&q, &p);
        for x in 0..4 {
            max_dev = max_dev.max(dev(levels[1][x], closed[x]));
        }
        max_dev = max_dev.max(dev(realization.casimir1(&levels[1]), realization.c1_closed_2(&q, &p)));
        max_dev = max_dev.max(dev(realization.casimir2(&levels[1]), realization.c2_closed_2(&q, &p)));
        // one-particle level: C1 realizes the first mass, C2 vanishes
        max_dev = max_dev.max(dev(realization.casimir1(&levels[0]), realization.masses()[0]));
        max_dev = max_dev.max(realization.casimir2(&levels[0]).abs());
    }
    Ok(ClosedFormCertificate {
        family: realization.family().label().into(),
        points,
        seed,
        tolerance,
        max_deviation: max_dev,
        pass: max_dev < tolerance,
    })
}

//! Uniform-lattice discretization of the heat/Schrödinger wave operator.
//!
//! The second-difference operator (sinh(α∂ₓ/4)/(α/4))² involves shifts by
//! α/2, so the computational grid is built at half that scale: with node
//! spacing h = α/2 the operator is an exact nearest-neighbour stencil
//! (4/α²)(Ψ_{j+1} − 2Ψ_j + Ψ_{j−1}). Coarser rational ratios α = 2sh keep
//! the stencil exact with stride s. On periodic grids the operator is also
//! available through its Fourier multiplier −(sin(kα/4)/(α/4))², which
//! handles arbitrary α (including α far below the spacing, where the
//! operator degenerates to the plain Laplacian).

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::DynError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Periodic,
    Dirichlet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdeMode {
    Heat,
    Schrodinger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Explicit,
    Implicit,
}

/// A uniform 1-D grid carrying the deformation scale and particle mass.
#[derive(Clone, Debug)]
pub struct Grid {
    nodes: usize,
    h: f64,
    alpha: f64,
    /// Stencil stride: α/2 expressed in nodes, when it is a whole number.
    stride: Option<usize>,
    mass: f64,
    boundary: Boundary,
}

impl Grid {
    /// The canonical grid: node spacing h = α/2, stride-1 stencil.
    pub fn half_spacing(
        alpha: f64,
        nodes: usize,
        mass: f64,
        boundary: Boundary,
    ) -> Result<Grid, DynError> {
        Grid::with_spacing(alpha, alpha / 2.0, nodes, mass, boundary)
    }

    /// A grid with caller-chosen spacing. If α/2 is a whole number of grid
    /// steps the exact stencil is used; otherwise the operator falls back
    /// to its Fourier multiplier, which requires a periodic grid.
    pub fn with_spacing(
        alpha: f64,
        h: f64,
        nodes: usize,
        mass: f64,
        boundary: Boundary,
    ) -> Result<Grid, DynError> {
        if !(alpha > 0.0) || !(h > 0.0) || !(mass > 0.0) || nodes < 4 {
            return Err(DynError::InvalidConfig(
                "need alpha > 0, spacing > 0, mass > 0 and at least 4 nodes".into(),
            ));
        }
        let ratio = alpha / (2.0 * h);
        let stride = if (ratio - ratio.round()).abs() < 1e-9 && ratio.round() >= 1.0 {
            Some(ratio.round() as usize)
        } else {
            None
        };
        if stride.is_none() && boundary == Boundary::Dirichlet {
            return Err(DynError::IncompatibleSpacing);
        }
        if let Some(s) = stride {
            if 2 * s >= nodes {
                return Err(DynError::InvalidConfig("stencil stride exceeds the grid".into()));
            }
        }
        Ok(Grid { nodes, h, alpha, stride, mass, boundary })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn spacing(&self) -> f64 {
        self.h
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn stride(&self) -> Option<usize> {
        self.stride
    }

    pub fn length(&self) -> f64 {
        self.nodes as f64 * self.h
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.nodes).map(|j| j as f64 * self.h).collect()
    }

    /// Allowed wavenumber of integer mode `j` on the periodic cell.
    pub fn mode_wavenumber(&self, j: i64) -> f64 {
        2.0 * std::f64::consts::PI * j as f64 / self.length()
    }

    /// Fourier multiplier of the deformed Laplacian.
    pub fn symbol(&self, k: f64) -> f64 {
        let quarter = 0.25 * self.alpha;
        let s = (k * quarter).sin() / quarter;
        -(s * s)
    }

    /// Exact periodic shift by `steps` nodes: out_j = in_{j−steps}.
    pub fn shift(&self, psi: &[Complex64], steps: isize) -> Vec<Complex64> {
        let n = self.nodes as isize;
        (0..n)
            .map(|j| psi[(((j - steps) % n + n) % n) as usize])
            .collect()
    }

    /// Apply the deformed Laplacian.
    pub fn deformed_laplacian(&self, psi: &[Complex64]) -> Result<Vec<Complex64>, DynError> {
        assert_eq!(psi.len(), self.nodes);
        match (self.stride, self.boundary) {
            (Some(s), Boundary::Periodic) => {
                let c = 4.0 / (self.alpha * self.alpha);
                let n = self.nodes;
                Ok((0..n)
                    .map(|j| {
                        let up = psi[(j + s) % n];
                        let dn = psi[(j + n - s) % n];
                        (up - psi[j] * 2.0 + dn) * c
                    })
                    .collect())
            }
            (Some(s), Boundary::Dirichlet) => {
                let c = 4.0 / (self.alpha * self.alpha);
                let n = self.nodes;
                let zero = Complex64::new(0.0, 0.0);
                Ok((0..n)
                    .map(|j| {
                        let up = if j + s < n { psi[j + s] } else { zero };
                        let dn = if j >= s { psi[j - s] } else { zero };
                        (up - psi[j] * 2.0 + dn) * c
                    })
                    .collect())
            }
            (None, Boundary::Periodic) => Ok(self.apply_multiplier(psi, |k| {
                Complex64::new(self.symbol(k), 0.0)
            })),
            (None, Boundary::Dirichlet) => Err(DynError::IncompatibleSpacing),
        }
    }

    /// Apply a diagonal-in-Fourier operator defined by its multiplier.
    pub fn apply_multiplier<F>(&self, psi: &[Complex64], mult: F) -> Vec<Complex64>
    where
        F: Fn(f64) -> Complex64,
    {
        let n = self.nodes;
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        let mut buf: Vec<Complex64> = psi.to_vec();
        fwd.process(&mut buf);
        for (j, v) in buf.iter_mut().enumerate() {
            let jj = if j <= n / 2 { j as i64 } else { j as i64 - n as i64 };
            *v *= mult(self.mode_wavenumber(jj));
        }
        inv.process(&mut buf);
        let scale = 1.0 / n as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
        buf
    }

    /// Exact spectral derivative on the periodic grid.
    pub fn spectral_derivative(&self, psi: &[Complex64]) -> Result<Vec<Complex64>, DynError> {
        if self.boundary != Boundary::Periodic {
            return Err(DynError::NeedsPeriodic);
        }
        let n = self.nodes;
        Ok(self.apply_multiplier(psi, |k| {
            // drop the unpaired mode so the derivative of real data stays real
            if n % 2 == 0 && (k * self.length() / (2.0 * std::f64::consts::PI)).round() as i64 == (n / 2) as i64 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(0.0, k)
            }
        }))
    }

    /// Evolve the sampled data under the continuum heat flow, spectrally.
    pub fn continuum_heat_reference(
        &self,
        psi0: &[Complex64],
        t: f64,
    ) -> Result<Vec<Complex64>, DynError> {
        if self.boundary != Boundary::Periodic {
            return Err(DynError::NeedsPeriodic);
        }
        let c = t / (2.0 * self.mass);
        Ok(self.apply_multiplier(psi0, |k| Complex64::new((-k * k * c).exp(), 0.0)))
    }

    /// Grid L² norm, weighted by the spacing.
    pub fn norm(&self, psi: &[Complex64]) -> f64 {
        (psi.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.h).sqrt()
    }
}

/// Time-stepping configuration for the wave equation.
#[derive(Clone, Debug)]
pub struct HseConfig {
    pub mode: PdeMode,
    pub scheme: Scheme,
    pub dt: f64,
    pub t_end: f64,
    /// Number of interior snapshots to keep besides initial and final.
    pub snapshots: usize,
}

/// Evolution output: snapshot times and fields; last entry is t_end.
#[derive(Clone, Debug)]
pub struct HseRun {
    pub times: Vec<f64>,
    pub fields: Vec<Vec<Complex64>>,
}

impl HseRun {
    pub fn final_field(&self) -> &[Complex64] {
        self.fields.last().unwrap()
    }

    /// CSV snapshot: x, re(Ψ), im(Ψ) for the requested snapshot index.
    pub fn write_snapshot_csv<W: std::io::Write>(
        &self,
        grid: &Grid,
        index: usize,
        out: W,
    ) -> Result<(), DynError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "psi_re", "psi_im"])?;
        for (x, v) in grid.xs().iter().zip(&self.fields[index]) {
            w.write_record(&[
                format!("{:.17e}", x),
                format!("{:.17e}", v.re),
                format!("{:.17e}", v.im),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn thomas_uniform(
    diag: Complex64,
    off: Complex64,
    rhs: &[Complex64],
) -> Vec<Complex64> {
    // constant-coefficient tridiagonal solve (Dirichlet ends)
    let n = rhs.len();
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    let mut d = vec![Complex64::new(0.0, 0.0); n];
    c[0] = off / diag;
    d[0] = rhs[0] / diag;
    for i in 1..n {
        let denom = diag - off * c[i - 1];
        c[i] = off / denom;
        d[i] = (rhs[i] - off * d[i - 1]) / denom;
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}

/// Evolve `psi0` under {(deformed Laplacian) − 2m ∂ₜ}Ψ = 0 (heat mode) or
/// its i-rotated reading (Schrödinger mode, always unitary Crank–Nicolson).
pub fn solve_hse(grid: &Grid, psi0: &[Complex64], cfg: &HseConfig) -> Result<HseRun, DynError> {
    if cfg.dt <= 0.0 || cfg.t_end <= 0.0 {
        return Err(DynError::InvalidConfig("dt and t_end must be positive".into()));
    }
    if psi0.len() != grid.nodes() {
        return Err(DynError::InvalidConfig("initial data size must match the grid".into()));
    }
    let steps = (cfg.t_end / cfg.dt).round().max(1.0) as usize;
    let dt = cfg.t_end / steps as f64;
    let keep_every = if cfg.snapshots == 0 { steps } else { steps.div_ceil(cfg.snapshots + 1) };

    let mut psi = psi0.to_vec();
    let mut times = vec![0.0];
    let mut fields = vec![psi.clone()];
    let norm0 = grid.norm(&psi);

    // Crank–Nicolson data, prepared once
    let implicit = cfg.mode == PdeMode::Schrodinger || cfg.scheme == Scheme::Implicit;
    let c = dt / (4.0 * grid.mass());
    let rot = match cfg.mode {
        PdeMode::Heat => Complex64::new(c, 0.0),
        PdeMode::Schrodinger => Complex64::new(0.0, c),
    };

    for step in 1..=steps {
        if implicit {
            psi = match grid.boundary() {
                Boundary::Periodic => grid.apply_multiplier(&psi, |k| {
                    let lam = grid.symbol(k);
                    (Complex64::new(1.0, 0.0) + rot * lam)
                        / (Complex64::new(1.0, 0.0) - rot * lam)
                }),
                Boundary::Dirichlet => {
                    let s = grid.stride().ok_or(DynError::IncompatibleSpacing)?;
                    if s != 1 {
                        return Err(DynError::InvalidConfig(
                            "implicit Dirichlet stepping needs stride 1 (spacing = alpha/2)".into(),
                        ));
                    }
                    let w = 4.0 / (grid.alpha() * grid.alpha());
                    let lap = grid.deformed_laplacian(&psi)?;
                    let rhs: Vec<Complex64> =
                        psi.iter().zip(&lap).map(|(v, l)| v + rot * l).collect();
                    let diag = Complex64::new(1.0, 0.0) + rot * (2.0 * w);
                    let off = -rot * w;
                    thomas_uniform(diag, off, &rhs)
                }
            };
        } else {
            // explicit RK4 on dΨ/dt = L Ψ / (2m)
            let f = |v: &[Complex64]| -> Result<Vec<Complex64>, DynError> {
                let l = grid.deformed_laplacian(v)?;
                let a = 1.0 / (2.0 * grid.mass());
                Ok(match cfg.mode {
                    PdeMode::Heat => l.iter().map(|x| x * a).collect(),
                    PdeMode::Schrodinger => l.iter().map(|x| x * Complex64::new(0.0, a)).collect(),
                })
            };
            let k1 = f(&psi)?;
            let add = |base: &[Complex64], s: f64, dir: &[Complex64]| -> Vec<Complex64> {
                base.iter().zip(dir).map(|(b, d)| b + d * s).collect()
            };
            let k2 = f(&add(&psi, dt / 2.0, &k1))?;
            let k3 = f(&add(&psi, dt / 2.0, &k2))?;
            let k4 = f(&add(&psi, dt, &k3))?;
            psi = psi
                .iter()
                .enumerate()
                .map(|(i, v)| v + (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (dt / 6.0))
                .collect();
        }

        let norm = grid.norm(&psi);
        if !norm.is_finite() || (cfg.mode == PdeMode::Heat && norm > 2.0 * norm0 + 1e-12) {
            return Err(DynError::Unstable { t: step as f64 * dt });
        }
        if step % keep_every == 0 || step == steps {
            times.push(step as f64 * dt);
            fields.push(psi.clone());
        }
    }

    Ok(HseRun { times, fields })
}

/// Outcome of a dyadic refinement study against the continuum flow.
#[derive(Clone, Debug, Serialize)]
pub struct RefinementStudy {
    pub alphas: Vec<f64>,
    pub errors: Vec<f64>,
    /// log₂(eₗ/eₗ₊₁) between consecutive levels.
    pub exponents: Vec<f64>,
}

/// Refine α (and the grid with it) by factors of two on a fixed periodic
/// cell, integrating the heat mode and measuring the L² error against the
/// spectrally evolved continuum reference.
pub fn heat_refinement_study<F>(
    nodes0: usize,
    levels: usize,
    length: f64,
    t_end: f64,
    mass: f64,
    init: F,
) -> Result<RefinementStudy, DynError>
where
    F: Fn(f64) -> f64,
{
    if levels < 2 {
        return Err(DynError::InvalidConfig("need at least two refinement levels".into()));
    }
    let mut alphas = Vec::new();
    let mut errors = Vec::new();
    for level in 0..levels {
        let nodes = nodes0 << level;
        let h = length / nodes as f64;
        let alpha = 2.0 * h;
        let grid = Grid::with_spacing(alpha, h, nodes, mass, Boundary::Periodic)?;
        let psi0: Vec<Complex64> = grid
            .xs()
            .iter()
            .map(|&x| Complex64::new(init(x), 0.0))
            .collect();
        // keep the time error far below the O(α²) spatial error
        let dt = 0.05 * mass * alpha * alpha;
        let run = solve_hse(
            &grid,
            &psi0,
            &HseConfig {
                mode: PdeMode::Heat,
                scheme: Scheme::Explicit,
                dt,
                t_end,
                snapshots: 0,
            },
        )?;
        let reference = grid.continuum_heat_reference(&psi0, t_end)?;
        let diff: Vec<Complex64> = run
            .final_field()
            .iter()
            .zip(&reference)
            .map(|(a, b)| a - b)
            .collect();
        alphas.push(alpha);
        errors.push(grid.norm(&diff));
    }
    let exponents = errors
        .windows(2)
        .map(|w| (w[0] / w[1]).log2())
        .collect();
    Ok(RefinementStudy { alphas, errors, exponents })
}

//! Fixed-step Hamiltonian integration with a per-step conservation log.
//!
//! The default scheme is the classical explicit Runge–Kutta of order 4;
//! the deformed kinetic terms couple q and p non-separably, so splitting
//! methods are not applicable in general. An implicit-midpoint option is
//! provided for long-horizon runs where symplecticity matters more than
//! raw local order.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::bracket::gradient;
use crate::error::DynError;
use crate::hamiltonian::HamiltonianSystem;
use crate::scalar::Dual;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Rk4,
    ImplicitMidpoint,
}

impl Method {
    pub fn from_label(s: &str) -> Result<Method, DynError> {
        match s {
            "rk4" => Ok(Method::Rk4),
            "midpoint" | "implicit-midpoint" => Ok(Method::ImplicitMidpoint),
            other => Err(DynError::InvalidConfig(format!("unknown integrator `{}`", other))),
        }
    }
}

/// A completed run: states at every step plus the conserved-quantity log.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    /// Each row is q₁..q_N followed by p₁..p_N.
    pub states: Vec<Vec<f64>>,
    /// H^{(N)} at each step.
    pub energy: Vec<f64>,
    /// C₂^{(k)} for k = 2..=N at each step (inner index k−2).
    pub integrals: Vec<Vec<f64>>,
}

/// Worst relative drift of each logged quantity over a trajectory.
#[derive(Clone, Debug, Serialize)]
pub struct ConservationReport {
    pub energy_drift: f64,
    pub integral_drifts: Vec<f64>,
    pub max_drift: f64,
}

impl Trajectory {
    pub fn particles(&self) -> usize {
        self.states[0].len() / 2
    }

    pub fn conservation(&self) -> ConservationReport {
        let rel_drift = |series: &[f64]| -> f64 {
            let x0 = series[0];
            let denom = x0.abs().max(1e-12);
            series.iter().map(|x| (x - x0).abs()).fold(0.0, f64::max) / denom
        };
        let energy_drift = rel_drift(&self.energy);
        let k = self.integrals[0].len();
        let integral_drifts: Vec<f64> = (0..k)
            .map(|j| {
                let series: Vec<f64> = self.integrals.iter().map(|row| row[j]).collect();
                rel_drift(&series)
            })
            .collect();
        let max_drift = integral_drifts
            .iter()
            .copied()
            .fold(energy_drift, f64::max);
        ConservationReport { energy_drift, integral_drifts, max_drift }
    }

    /// CSV rows: t, q₁..q_N, p₁..p_N, H, C₂^{(2)}..C₂^{(N)}.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), DynError> {
        let n = self.particles();
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["t".to_string()];
        for i in 1..=n {
            header.push(format!("q{}", i));
        }
        for i in 1..=n {
            header.push(format!("p{}", i));
        }
        header.push("H".into());
        for k in 2..=(1 + self.integrals[0].len()) {
            header.push(format!("C2_{}", k));
        }
        w.write_record(&header)?;
        for (i, t) in self.times.iter().enumerate() {
            let mut row = vec![format!("{:.17e}", t)];
            row.extend(self.states[i].iter().map(|x| format!("{:.17e}", x)));
            row.push(format!("{:.17e}", self.energy[i]));
            row.extend(self.integrals[i].iter().map(|x| format!("{:.17e}", x)));
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_csv_path<P: AsRef<Path>>(&self, path: P) -> Result<(), DynError> {
        let f = std::fs::File::create(path)?;
        self.write_csv(f)
    }
}

fn hamiltonian_flow(system: &HamiltonianSystem, state: &[f64]) -> Result<Vec<f64>, DynError> {
    let n = state.len() / 2;
    let (q, p) = state.split_at(n);
    let h = |qq: &[Dual], pp: &[Dual]| system.hamiltonian(qq, pp);
    let (dq, dp) = gradient(&h, q, p)?;
    let mut out = Vec::with_capacity(2 * n);
    out.extend(dp); // dq/dt = ∂H/∂p
    out.extend(dq.iter().map(|x| -x)); // dp/dt = −∂H/∂q
    Ok(out)
}

fn axpy(y: &[f64], a: f64, x: &[f64]) -> Vec<f64> {
    y.iter().zip(x).map(|(yi, xi)| yi + a * xi).collect()
}

fn rk4_step(system: &HamiltonianSystem, state: &[f64], dt: f64) -> Result<Vec<f64>, DynError> {
    let k1 = hamiltonian_flow(system, state)?;
    let k2 = hamiltonian_flow(system, &axpy(state, dt / 2.0, &k1))?;
    let k3 = hamiltonian_flow(system, &axpy(state, dt / 2.0, &k2))?;
    let k4 = hamiltonian_flow(system, &axpy(state, dt, &k3))?;
    Ok(state
        .iter()
        .enumerate()
        .map(|(i, s)| s + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect())
}

fn midpoint_step(system: &HamiltonianSystem, state: &[f64], dt: f64) -> Result<Vec<f64>, DynError> {
    // solve y = z + (dt/2) F(y) by fixed-point iteration, then z' = 2y − z
    let mut y = axpy(state, dt / 2.0, &hamiltonian_flow(system, state)?);
    let scale: f64 = state.iter().map(|x| x.abs()).fold(1.0, f64::max);
    for _ in 0..64 {
        let f = hamiltonian_flow(system, &y)?;
        let next = axpy(state, dt / 2.0, &f);
        let delta: f64 = next
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        y = next;
        if delta <= 1e-15 * scale {
            break;
        }
    }
    Ok(y.iter().zip(state).map(|(yi, zi)| 2.0 * yi - zi).collect())
}

/// Integrate from (q₀, p₀) to `t_end` with fixed step `dt`.
pub fn integrate(
    system: &HamiltonianSystem,
    q0: &[f64],
    p0: &[f64],
    t_end: f64,
    dt: f64,
    method: Method,
) -> Result<Trajectory, DynError> {
    if dt <= 0.0 || t_end <= 0.0 {
        return Err(DynError::InvalidConfig("dt and t_end must be positive".into()));
    }
    let n = system.particles();
    if q0.len() != n || p0.len() != n {
        return Err(DynError::InvalidConfig(format!(
            "initial point must supply {} coordinate pairs",
            n
        )));
    }
    let steps = (t_end / dt).round().max(1.0) as usize;
    let mut state: Vec<f64> = q0.iter().chain(p0.iter()).copied().collect();
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let mut energy = Vec::with_capacity(steps + 1);
    let mut integrals = Vec::with_capacity(steps + 1);

    let log = |state: &[f64],
               energy: &mut Vec<f64>,
               integrals: &mut Vec<Vec<f64>>| {
        let (q, p) = state.split_at(n);
        let (h, c) = system.observables(q, p);
        energy.push(h);
        integrals.push(c);
    };

    times.push(0.0);
    states.push(state.clone());
    log(&state, &mut energy, &mut integrals);

    for step in 1..=steps {
        let stepped = match method {
            Method::Rk4 => rk4_step(system, &state, dt),
            Method::ImplicitMidpoint => midpoint_step(system, &state, dt),
        };
        let next = match stepped {
            Ok(next) => next,
            // overflow during a stage evaluation is the orbit escaping
            Err(DynError::NonFinite(_)) => {
                return Err(DynError::BlowUp { t_last: (step - 1) as f64 * dt })
            }
            Err(e) => return Err(e),
        };
        if next.iter().any(|x| !x.is_finite()) {
            return Err(DynError::BlowUp { t_last: (step - 1) as f64 * dt });
        }
        state = next;
        times.push(step as f64 * dt);
        states.push(state.clone());
        log(&state, &mut energy, &mut integrals);
    }

    Ok(Trajectory { times, states, energy, integrals })
}

/// Integrate a batch of initial conditions; fans out across the thread pool
/// when the `parallel` feature is active.
pub fn integrate_batch(
    system: &HamiltonianSystem,
    initials: Vec<(Vec<f64>, Vec<f64>)>,
    t_end: f64,
    dt: f64,
    method: Method,
) -> Result<Vec<Trajectory>, DynError> {
    qgal_core::par::try_map_batch(initials, |(q0, p0)| {
        integrate(system, &q0, &p0, t_end, dt, method)
    })
}

/// Sequential twin of [`integrate_batch`], kept callable regardless of the
/// feature flag so the two strategies can be compared head to head.
pub fn integrate_batch_seq(
    system: &HamiltonianSystem,
    initials: Vec<(Vec<f64>, Vec<f64>)>,
    t_end: f64,
    dt: f64,
    method: Method,
) -> Result<Vec<Trajectory>, DynError> {
    initials
        .into_iter()
        .map(|(q0, p0)| integrate(system, &q0, &p0, t_end, dt, method))
        .collect()
}

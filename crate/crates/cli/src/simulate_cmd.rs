//! `simulate`: certify involution of the invariant hierarchy at seeded
//! random points, integrate the N-particle system, and report conservation.

use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};

use qgal_dynamics::realize::{GEN_H, GEN_K};
use qgal_dynamics::{
    certify_involution, integrate, DeformParams, DynError, HamiltonianSystem, Method,
    PhaseRealization, PoissonFamily, Potential, Trajectory,
};

use crate::config::FileCfg;
use crate::qparse::parse_f64_list;
use crate::report::{usage, Outcome, UsageError, EXIT_PASS, EXIT_RESIDUAL};

#[derive(Args, Debug)]
#[command(after_help = "\
Trajectory CSV columns (--csv FILE):
  t                  time
  q1..qN, p1..pN     canonical coordinates
  H                  total energy
  kinetic            collective kinetic term (translation-sector function)
  potential          external term F evaluated on the boost-sector function
  C2_2..C2_N         the invariant hierarchy

The involution certificate samples --points phase-space points from the seeded
generator and reports the worst relative bracket residual per pair.")]
pub struct SimulateArgs {
    /// Deformation family: none | standard | nonstandard | Ib | IIb
    #[arg(long)]
    family: Option<String>,
    /// Number of particles
    #[arg(long, short = 'N', visible_alias = "N")]
    particles: Option<usize>,
    /// Comma-separated particle masses (a single value is broadcast)
    #[arg(long, allow_hyphen_values = true)]
    masses: Option<String>,
    /// External potential: none | harmonic | exponential | monomial
    #[arg(long)]
    potential: Option<String>,
    /// Degree for the monomial potential
    #[arg(long)]
    degree: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    xi: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta3: Option<f64>,
    /// Comma-separated initial positions (default: fixed spread)
    #[arg(long, allow_hyphen_values = true)]
    q0: Option<String>,
    /// Comma-separated initial momenta (default: fixed spread)
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<String>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    /// Integrator: rk4 | implicit-midpoint
    #[arg(long)]
    method: Option<String>,
    /// Seed for the involution sample points
    #[arg(long)]
    seed: Option<u64>,
    /// Number of involution sample points
    #[arg(long)]
    points: Option<usize>,
    /// Relative residual bound for the involution certificate
    #[arg(long)]
    tolerance: Option<f64>,
    /// Relative drift bound for conserved quantities along the trajectory
    #[arg(long)]
    drift_tolerance: Option<f64>,
    /// Write the trajectory table to this CSV file
    #[arg(long)]
    csv: Option<PathBuf>,
    /// JSON config file; flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Also write the report to this file
    #[arg(long)]
    pub json: Option<PathBuf>,
}

/// Deterministic default initial conditions: a fixed spread that keeps
/// particles separated without tuning.
fn default_spread(n: usize, base: f64, step: f64) -> Vec<f64> {
    (0..n).map(|i| base - step * i as f64).collect()
}

fn write_trajectory_csv(
    path: &PathBuf,
    system: &HamiltonianSystem,
    traj: &Trajectory,
) -> Result<(), UsageError> {
    let n = system.particles();
    let mut w = csv::Writer::from_path(path)
        .map_err(|e| UsageError(format!("opening {}: {e}", path.display())))?;
    let mut header = vec!["t".to_string()];
    header.extend((1..=n).map(|i| format!("q{i}")));
    header.extend((1..=n).map(|i| format!("p{i}")));
    header.push("H".into());
    header.push("kinetic".into());
    header.push("potential".into());
    header.extend((2..=n).map(|k| format!("C2_{k}")));
    w.write_record(&header).map_err(usage)?;
    for (i, t) in traj.times.iter().enumerate() {
        let state = &traj.states[i];
        let (q, p) = state.split_at(n);
        let f = system.realization().phase_functions(n, q, p);
        let kinetic = f[GEN_H];
        let potential = system.potential().eval(f[GEN_K]);
        let mut row = vec![format!("{t:.17e}")];
        row.extend(state.iter().map(|v| format!("{v:.17e}")));
        row.push(format!("{:.17e}", traj.energy[i]));
        row.push(format!("{kinetic:.17e}"));
        row.push(format!("{potential:.17e}"));
        row.extend(traj.integrals[i].iter().map(|v| format!("{v:.17e}")));
        w.write_record(&row).map_err(usage)?;
    }
    w.flush().map_err(usage)?;
    Ok(())
}

pub fn run(args: SimulateArgs) -> Result<Outcome, UsageError> {
    let mut cfg = FileCfg::load(args.config.as_ref())?;
    let family = args.family.or(cfg.take_string("family")?).unwrap_or_else(|| "none".into());
    let n = args.particles.or(cfg.take_usize("particles")?).unwrap_or(2);
    let masses_spec = args.masses.map(|s| parse_f64_list(&s)).transpose().map_err(UsageError)?;
    let masses_spec = match masses_spec {
        Some(m) => Some(m),
        None => cfg.take_f64_list("masses")?,
    };
    let potential_name = args
        .potential
        .or(cfg.take_string("potential")?)
        .unwrap_or_else(|| "none".into());
    let degree = args.degree.or(cfg.take_u32("degree")?);
    let xi = args.xi.or(cfg.take_f64("xi")?).unwrap_or(0.0);
    let nu = args.nu.or(cfg.take_f64("nu")?).unwrap_or(0.0);
    let alpha = args.alpha.or(cfg.take_f64("alpha")?).unwrap_or(0.0);
    let beta1 = args.beta1.or(cfg.take_f64("beta1")?).unwrap_or(0.0);
    let beta2 = args.beta2.or(cfg.take_f64("beta2")?).unwrap_or(0.0);
    let beta3 = args.beta3.or(cfg.take_f64("beta3")?).unwrap_or(0.0);
    let q0_spec = args.q0.map(|s| parse_f64_list(&s)).transpose().map_err(UsageError)?;
    let q0_spec = match q0_spec {
        Some(v) => Some(v),
        None => cfg.take_f64_list("q0")?,
    };
    let p0_spec = args.p0.map(|s| parse_f64_list(&s)).transpose().map_err(UsageError)?;
    let p0_spec = match p0_spec {
        Some(v) => Some(v),
        None => cfg.take_f64_list("p0")?,
    };
    let t_end = args.t_end.or(cfg.take_f64("t_end")?).unwrap_or(10.0);
    let dt = args.dt.or(cfg.take_f64("dt")?).unwrap_or(1e-3);
    let method_name = args.method.or(cfg.take_string("method")?).unwrap_or_else(|| "rk4".into());
    let seed = args.seed.or(cfg.take_u64("seed")?).unwrap_or(20240);
    let points = args.points.or(cfg.take_usize("points")?).unwrap_or(20);
    let tolerance = args.tolerance.or(cfg.take_f64("tolerance")?).unwrap_or(1e-10);
    let drift_tol = args
        .drift_tolerance
        .or(cfg.take_f64("drift_tolerance")?)
        .unwrap_or(1e-8);
    cfg.finish()?;

    if n < 1 {
        return Err(UsageError("--particles must be at least 1".into()));
    }
    let masses = match masses_spec {
        None => vec![1.0; n],
        Some(m) if m.len() == 1 => vec![m[0]; n],
        Some(m) if m.len() == n => m,
        Some(m) => {
            return Err(UsageError(format!(
                "--masses lists {} values for {} particles",
                m.len(),
                n
            )))
        }
    };
    let q0 = q0_spec.unwrap_or_else(|| default_spread(n, 0.5, 0.2));
    let p0 = p0_spec.unwrap_or_else(|| default_spread(n, 0.7, 0.3));
    if q0.len() != n || p0.len() != n {
        return Err(UsageError(format!(
            "--q0 and --p0 must each list {n} values"
        )));
    }

    let fam = PoissonFamily::from_label(&family).map_err(usage)?;
    let params = DeformParams { xi, nu, alpha, beta1, beta2, beta3 };
    let realization = PhaseRealization::new(fam, params, masses.clone()).map_err(usage)?;
    let potential = Potential::from_name(&potential_name, degree).map_err(usage)?;
    let system = HamiltonianSystem::new(realization, n, potential).map_err(usage)?;
    let method = Method::from_label(&method_name).map_err(usage)?;

    let config = json!({
        "family": fam.label(),
        "particles": n,
        "masses": masses,
        "potential": system.potential().name(),
        "params": { "xi": xi, "nu": nu, "alpha": alpha,
                    "beta1": beta1, "beta2": beta2, "beta3": beta3 },
        "q0": q0,
        "p0": p0,
        "t_end": t_end,
        "dt": dt,
        "method": method_name,
        "seed": seed,
        "points": points,
        "tolerance": tolerance,
        "drift_tolerance": drift_tol,
    });

    let involution = certify_involution(&system, points, seed, tolerance).map_err(usage)?;
    let inv_pass = involution.pass;
    let involution_json = serde_json::to_value(&involution).map_err(usage)?;

    let traj = match integrate(&system, &q0, &p0, t_end, dt, method) {
        Ok(t) => t,
        Err(DynError::BlowUp { t_last }) => {
            let report = json!({
                "schema": "v1",
                "command": "simulate",
                "config": config,
                "involution": involution_json,
                "error": {
                    "kind": "blow-up",
                    "t_last": t_last,
                    "message": DynError::BlowUp { t_last }.to_string(),
                },
                "pass": false,
            });
            return Ok(Outcome { report, exit: EXIT_RESIDUAL });
        }
        Err(e) => return Err(usage(e)),
    };
    let conservation = traj.conservation();
    let cons_pass = conservation.max_drift < drift_tol;

    if let Some(path) = &args.csv {
        write_trajectory_csv(path, &system, &traj)?;
    }

    let pass = inv_pass && cons_pass;
    let report = json!({
        "schema": "v1",
        "command": "simulate",
        "config": config,
        "involution": involution_json,
        "conservation": {
            "energy_drift": conservation.energy_drift,
            "integral_drifts": conservation.integral_drifts,
            "max_drift": conservation.max_drift,
            "tolerance": drift_tol,
            "pass": cons_pass,
        },
        "rows": traj.times.len(),
        "csv": args.csv.as_ref().map(|p| p.display().to_string()).map(Value::from).unwrap_or(Value::Null),
        "pass": pass,
    });
    Ok(Outcome {
        report,
        exit: if pass { EXIT_PASS } else { EXIT_RESIDUAL },
    })
}

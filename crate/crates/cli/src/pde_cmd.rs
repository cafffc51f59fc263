//! `pde`: evolve the lattice heat / Schrödinger equation built on the
//! deformed second difference, study its convergence in the deformation
//! scale, or verify the discrete symmetry algebra against the flow.

use std::path::PathBuf;

use clap::Args;
use num_complex::Complex64;
use serde_json::{json, Value};

use qgal_dynamics::{
    heat_refinement_study, solve_hse, verify_symmetry, Boundary, DynError, Grid, HseConfig,
    PdeMode, Scheme,
};

use crate::config::FileCfg;
use crate::report::{usage, Outcome, UsageError, EXIT_PASS, EXIT_RESIDUAL};

/// Convergence exponents outside this band fail the refinement study.
const EXPONENT_BAND: (f64, f64) = (1.8, 2.2);

#[derive(Args, Debug)]
#[command(after_help = "\
Operating modes:
  (default)         evolve the field and report norms; with a periodic heat
                    run, also the relative L2 deviation from the continuum
                    solution at the same time
  --refine L        dyadic refinement study over L levels: halve the
                    deformation scale (and grid step) per level and report
                    the observed convergence exponents (band: 1.8..2.2)
  --check-symmetry  compare evolving-then-acting with acting-then-evolving
                    for each symmetry generator, and check the discrete
                    operator identities exactly

Snapshot CSV columns (--snapshot-csv FILE): t, x, psi_re, psi_im, one row per
grid node per stored snapshot.

An unstable explicit run exits 1; the message names the implicit scheme.")]
pub struct PdeArgs {
    /// Deformation scale of the second difference
    #[arg(long)]
    alpha: Option<f64>,
    /// Number of grid nodes
    #[arg(long)]
    nodes: Option<usize>,
    /// Grid step (default: alpha/2, the commensurate choice)
    #[arg(long)]
    spacing: Option<f64>,
    /// Mass constant in the evolution factor 1/(2m)
    #[arg(long)]
    mass: Option<f64>,
    /// Boundary condition: periodic | dirichlet
    #[arg(long)]
    boundary: Option<String>,
    /// Equation: heat | schrodinger
    #[arg(long)]
    mode: Option<String>,
    /// Stepping: explicit | implicit
    #[arg(long)]
    scheme: Option<String>,
    /// Time step (default: 0.05 * mass * min(alpha, 2*spacing)^2)
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    /// Number of interior snapshots to store besides start and end
    #[arg(long)]
    snapshots: Option<usize>,
    /// Width of the Gaussian initial field
    #[arg(long)]
    sigma: Option<f64>,
    /// Center of the Gaussian initial field (default: mid-domain)
    #[arg(long, allow_negative_numbers = true)]
    center: Option<f64>,
    /// Run a refinement study with this many dyadic levels
    #[arg(long)]
    refine: Option<usize>,
    /// Domain length for the refinement study
    #[arg(long)]
    length: Option<f64>,
    /// Verify the symmetry generators against the flow
    #[arg(long)]
    check_symmetry: bool,
    /// Fail unless the periodic heat run stays this close to the continuum
    #[arg(long)]
    continuum_tol: Option<f64>,
    /// Write field snapshots to this CSV file
    #[arg(long)]
    snapshot_csv: Option<PathBuf>,
    /// JSON config file; flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Also write the report to this file
    #[arg(long)]
    pub json: Option<PathBuf>,
}

fn gaussian(center: f64, sigma: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| (-(x - center) * (x - center) / (2.0 * sigma * sigma)).exp()
}

fn write_snapshots_csv(
    path: &PathBuf,
    grid: &Grid,
    times: &[f64],
    fields: &[Vec<Complex64>],
) -> Result<(), UsageError> {
    let mut w = csv::Writer::from_path(path)
        .map_err(|e| UsageError(format!("opening {}: {e}", path.display())))?;
    w.write_record(["t", "x", "psi_re", "psi_im"]).map_err(usage)?;
    for (t, field) in times.iter().zip(fields) {
        for (x, v) in grid.xs().iter().zip(field) {
            w.write_record(&[
                format!("{t:.17e}"),
                format!("{x:.17e}"),
                format!("{:.17e}", v.re),
                format!("{:.17e}", v.im),
            ])
            .map_err(usage)?;
        }
    }
    w.flush().map_err(usage)?;
    Ok(())
}

pub fn run(args: PdeArgs) -> Result<Outcome, UsageError> {
    let mut cfg = FileCfg::load(args.config.as_ref())?;
    let alpha = args.alpha.or(cfg.take_f64("alpha")?).unwrap_or(0.25);
    let nodes_flag = args.nodes.or(cfg.take_usize("nodes")?);
    let spacing_flag = args.spacing.or(cfg.take_f64("spacing")?);
    let mass = args.mass.or(cfg.take_f64("mass")?).unwrap_or(1.0);
    let boundary_name = args
        .boundary
        .or(cfg.take_string("boundary")?)
        .unwrap_or_else(|| "periodic".into());
    let mode_name = args.mode.or(cfg.take_string("mode")?).unwrap_or_else(|| "heat".into());
    let scheme_name = args
        .scheme
        .or(cfg.take_string("scheme")?)
        .unwrap_or_else(|| "explicit".into());
    let dt_flag = args.dt.or(cfg.take_f64("dt")?);
    let t_end = args.t_end.or(cfg.take_f64("t_end")?).unwrap_or(1.0);
    let snapshots = args.snapshots.or(cfg.take_usize("snapshots")?).unwrap_or(4);
    let sigma = args.sigma.or(cfg.take_f64("sigma")?).unwrap_or(1.0);
    let center_flag = args.center.or(cfg.take_f64("center")?);
    let refine = match args.refine {
        Some(r) => Some(r),
        None => cfg.take_usize("refine")?,
    };
    let length = args.length.or(cfg.take_f64("length")?).unwrap_or(20.0);
    let check_symmetry = args.check_symmetry || cfg.take_bool("check_symmetry")?.unwrap_or(false);
    let continuum_tol = args.continuum_tol.or(cfg.take_f64("continuum_tol")?);
    cfg.finish()?;

    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(UsageError("--alpha must be positive".into()));
    }
    if refine.is_some() && check_symmetry {
        return Err(UsageError(
            "--refine and --check-symmetry are separate modes; give one".into(),
        ));
    }

    let boundary = match boundary_name.to_ascii_lowercase().as_str() {
        "periodic" => Boundary::Periodic,
        "dirichlet" => Boundary::Dirichlet,
        other => {
            return Err(UsageError(format!(
                "unknown boundary `{other}`; expected periodic or dirichlet"
            )))
        }
    };
    let mode = match mode_name.to_ascii_lowercase().as_str() {
        "heat" => PdeMode::Heat,
        "schrodinger" | "schroedinger" => PdeMode::Schrodinger,
        other => {
            return Err(UsageError(format!(
                "unknown equation `{other}`; expected heat or schrodinger"
            )))
        }
    };
    let scheme = match scheme_name.to_ascii_lowercase().as_str() {
        "explicit" => Scheme::Explicit,
        "implicit" => Scheme::Implicit,
        other => {
            return Err(UsageError(format!(
                "unknown scheme `{other}`; expected explicit or implicit"
            )))
        }
    };

    // Refinement study: nodes double per level while the domain is fixed,
    // so the deformation scale (locked to twice the step) halves per level.
    if let Some(levels) = refine {
        let nodes0 = match nodes_flag {
            Some(n) => n,
            None => ((2.0 * length / alpha).round() as usize).max(8),
        };
        let center = center_flag.unwrap_or(length / 2.0);
        let study = heat_refinement_study(nodes0, levels, length, t_end, mass, gaussian(center, sigma))
            .map_err(usage)?;
        let pass = study
            .exponents
            .iter()
            .all(|&e| e >= EXPONENT_BAND.0 && e <= EXPONENT_BAND.1);
        let report = json!({
            "schema": "v1",
            "command": "pde",
            "operation": "refine",
            "config": {
                "nodes0": nodes0,
                "levels": levels,
                "length": length,
                "t_end": t_end,
                "mass": mass,
                "sigma": sigma,
                "center": center,
            },
            "study": serde_json::to_value(&study).map_err(usage)?,
            "band": [EXPONENT_BAND.0, EXPONENT_BAND.1],
            "pass": pass,
        });
        return Ok(Outcome {
            report,
            exit: if pass { EXIT_PASS } else { EXIT_RESIDUAL },
        });
    }

    let nodes = nodes_flag.unwrap_or(128);
    let spacing = spacing_flag.unwrap_or(alpha / 2.0);
    // Stable explicit-heat default. The operator's Fourier symbol is
    // bounded by 16/alpha^2 and by the grid cutoff at once, so the stable
    // step scales with the larger of the two lengths; keying it to alpha
    // alone would make a tiny alpha demand an astronomically small step.
    let scale = alpha.max(2.0 * spacing);
    let dt = dt_flag.unwrap_or(0.05 * mass * scale * scale);
    let grid = Grid::with_spacing(alpha, spacing, nodes, mass, boundary).map_err(usage)?;
    let center = center_flag.unwrap_or(grid.length() / 2.0);
    let init = gaussian(center, sigma);
    let psi0: Vec<Complex64> = grid.xs().iter().map(|&x| Complex64::new(init(x), 0.0)).collect();

    let config = json!({
        "alpha": alpha,
        "nodes": nodes,
        "spacing": spacing,
        "stride": grid.stride().map(Value::from).unwrap_or(Value::Null),
        "mass": mass,
        "boundary": boundary_name.to_ascii_lowercase(),
        "mode": mode_name.to_ascii_lowercase(),
        "scheme": scheme_name.to_ascii_lowercase(),
        "dt": dt,
        "t_end": t_end,
        "snapshots": snapshots,
        "sigma": sigma,
        "center": center,
    });

    if check_symmetry {
        let report_inner = verify_symmetry(&grid, &psi0, t_end, dt).map_err(usage)?;
        let pass = report_inner.pass;
        let report = json!({
            "schema": "v1",
            "command": "pde",
            "operation": "symmetry",
            "config": config,
            "report": serde_json::to_value(&report_inner).map_err(usage)?,
            "pass": pass,
        });
        return Ok(Outcome {
            report,
            exit: if pass { EXIT_PASS } else { EXIT_RESIDUAL },
        });
    }

    let hse = HseConfig { mode, scheme, dt, t_end, snapshots };
    let run = match solve_hse(&grid, &psi0, &hse) {
        Ok(r) => r,
        Err(e @ DynError::Unstable { .. }) => {
            let report = json!({
                "schema": "v1",
                "command": "pde",
                "operation": "solve",
                "config": config,
                "error": { "kind": "unstable", "message": e.to_string() },
                "pass": false,
            });
            return Ok(Outcome { report, exit: EXIT_RESIDUAL });
        }
        Err(e) => return Err(usage(e)),
    };

    let norm0 = grid.norm(&psi0);
    let norm_final = grid.norm(run.final_field());
    let continuum = if mode == PdeMode::Heat && boundary == Boundary::Periodic {
        let reference = grid.continuum_heat_reference(&psi0, t_end).map_err(usage)?;
        let diff: Vec<Complex64> = run
            .final_field()
            .iter()
            .zip(&reference)
            .map(|(a, b)| a - b)
            .collect();
        Some(grid.norm(&diff) / norm0)
    } else {
        None
    };
    let continuum_pass = match (continuum, continuum_tol) {
        (Some(dev), Some(tol)) => dev <= tol,
        _ => true,
    };

    if let Some(path) = &args.snapshot_csv {
        write_snapshots_csv(path, &grid, &run.times, &run.fields)?;
    }

    let pass = continuum_pass;
    let report = json!({
        "schema": "v1",
        "command": "pde",
        "operation": "solve",
        "config": config,
        "norms": { "initial": norm0, "final": norm_final },
        "stored_times": run.times,
        "continuum_deviation": continuum.map(Value::from).unwrap_or(Value::Null),
        "continuum_tolerance": continuum_tol.map(Value::from).unwrap_or(Value::Null),
        "snapshot_csv": args.snapshot_csv.as_ref().map(|p| p.display().to_string()).map(Value::from).unwrap_or(Value::Null),
        "pass": pass,
    });
    Ok(Outcome {
        report,
        exit: if pass { EXIT_PASS } else { EXIT_RESIDUAL },
    })
}

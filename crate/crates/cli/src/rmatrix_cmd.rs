//! `verify-rmatrix`: check that a factorized exchange element intertwines
//! the family coproduct, and optionally measure its Yang-Baxter defect.

use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};

use qgal_core::hopf::rmatrix::lowest_nonzero_order;
use qgal_core::{CommutationTable, Gen, Param, QTag, QuantumFamily, Series, UniversalR};

use crate::config::FileCfg;
use crate::report::{pass_fail, usage, Outcome, UsageError, EXIT_PASS, EXIT_RESIDUAL};

#[derive(Args, Debug)]
#[command(after_help = "\
The nonstandard exchange element intertwines the full family coproduct.
The standard one is factorized on the beta1 = 0 slice, so its coproduct is
specialized there before checking; the report records the slice.

--qybe also expands the quantum Yang-Baxter defect R12 R13 R23 - R23 R13 R12
and reports the lowest order with a nonzero term (null if it vanishes to the
computed order). The defect is informational and never affects the exit code.
Its cost grows steeply with order; the default expansion order is capped at 4
and can be raised with --qybe-order.")]
pub struct RmatrixArgs {
    /// Exchange element: standard | nonstandard
    #[arg(long = "type")]
    rtype: Option<String>,
    /// Truncation order for the series arithmetic
    #[arg(long)]
    order: Option<u32>,
    /// Also expand the quantum Yang-Baxter defect
    #[arg(long)]
    qybe: bool,
    /// Order for the defect expansion (defaults to min(--order, 4))
    #[arg(long)]
    qybe_order: Option<u32>,
    /// JSON config file; flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Also write the report to this file
    #[arg(long)]
    pub json: Option<PathBuf>,
}

pub fn run(args: RmatrixArgs) -> Result<Outcome, UsageError> {
    let mut cfg = FileCfg::load(args.config.as_ref())?;
    let rtype = args
        .rtype
        .or(cfg.take_string("type")?)
        .ok_or_else(|| UsageError("--type is required".into()))?;
    let order = args.order.or(cfg.take_u32("order")?).unwrap_or(6);
    let qybe = args.qybe || cfg.take_bool("qybe")?.unwrap_or(false);
    // The defect expansion multiplies three tensor legs, so its cost grows
    // much faster with order than the intertwining check; default to 4.
    let qybe_order = args
        .qybe_order
        .or(cfg.take_u32("qybe_order")?)
        .unwrap_or_else(|| order.min(4));
    cfg.finish()?;

    if order < 2 {
        return Err(UsageError("--order must be at least 2".into()));
    }
    let standard = match rtype.to_ascii_lowercase().as_str() {
        "standard" | "ia-standard" => true,
        "nonstandard" | "non-standard" | "ia-nonstandard" => false,
        other => {
            return Err(UsageError(format!(
                "unknown exchange element `{other}`; expected standard or nonstandard"
            )))
        }
    };

    // Build table, exchange element and the coproduct it must intertwine.
    let build = |n: u32| -> Result<(CommutationTable, UniversalR), UsageError> {
        if standard {
            let table = CommutationTable::standard(n);
            let r = UniversalR::standard(&table).map_err(usage)?;
            Ok((table, r))
        } else {
            let table = CommutationTable::nonstandard(n);
            let r = UniversalR::nonstandard(&table).map_err(usage)?;
            Ok((table, r))
        }
    };
    let (table, r) = build(order)?;
    let cop = if standard {
        QuantumFamily::build(QTag::StandardIa, order)
            .map_err(usage)?
            .coproduct()
            .subst(Param::Beta1, &Series::zero(order))
            .map_err(usage)?
    } else {
        QuantumFamily::build(QTag::NonstandardIa, order)
            .map_err(usage)?
            .coproduct()
            .clone()
    };

    let failures = r.intertwining_residuals(&cop, &table).map_err(usage)?;
    let failed: Vec<Gen> = failures.iter().map(|(g, _)| *g).collect();
    let mut intertwining = serde_json::Map::new();
    for g in Gen::ALL {
        intertwining.insert(
            g.name().to_string(),
            Value::from(pass_fail(!failed.contains(&g))),
        );
    }

    let qybe_report = if qybe {
        let (qtable, qr) = if qybe_order == order {
            (table, r)
        } else {
            build(qybe_order)?
        };
        let defect = qr.qybe_residual(&qtable).map_err(usage)?;
        let lowest = lowest_nonzero_order(&defect);
        json!({
            "order": qybe_order,
            "lowest_nonzero_order": lowest,
            "vanishes": lowest.is_none(),
        })
    } else {
        Value::Null
    };

    let pass = failures.is_empty();
    let report = json!({
        "schema": "v1",
        "command": "verify-rmatrix",
        "type": if standard { "standard" } else { "nonstandard" },
        "order": order,
        "slice": if standard { json!({ "beta1": "0" }) } else { Value::Null },
        "intertwining": intertwining,
        "qybe": qybe_report,
        "pass": pass,
    });
    Ok(Outcome {
        report,
        exit: if pass { EXIT_PASS } else { EXIT_RESIDUAL },
    })
}

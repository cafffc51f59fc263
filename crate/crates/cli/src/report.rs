//! Shared report plumbing: exit codes, pass/fail labels and JSON emission.
//!
//! Every subcommand produces a single JSON document on stdout whose first
//! key is always `"schema": "v1"`. Key order is fixed by construction order
//! (the JSON map preserves insertion order), so two runs with the same
//! resolved configuration emit byte-identical reports.

use std::path::Path;

use serde_json::Value;

/// Everything verified within tolerance.
pub const EXIT_PASS: i32 = 0;
/// A residual, drift or stability bound was violated.
pub const EXIT_RESIDUAL: i32 = 1;
/// Malformed flags, config keys or values.
pub const EXIT_USAGE: i32 = 2;
/// The requested case is recognized but deliberately not constructed.
pub const EXIT_UNIMPLEMENTED: i32 = 3;

/// A finished command: the report to print and the process exit code.
pub struct Outcome {
    pub report: Value,
    pub exit: i32,
}

/// Usage-level failure; printed to stderr, exits with [`EXIT_USAGE`].
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand for mapping engine errors onto usage errors.
pub fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

pub fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// Serialize the report, print it to stdout and optionally copy it to a file.
pub fn emit(report: &Value, json_path: Option<&Path>) -> Result<(), UsageError> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| UsageError(format!("serializing report: {e}")))?;
    println!("{text}");
    if let Some(path) = json_path {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| UsageError(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

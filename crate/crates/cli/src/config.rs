//! Optional JSON config files.
//!
//! Every subcommand accepts `--config FILE` holding a flat JSON object whose
//! keys mirror the long flag names (underscores for dashes). Flags given on
//! the command line override file values. Unknown keys are rejected so a
//! typo cannot silently fall back to a default.

use std::path::PathBuf;

use serde_json::{Map, Value};

use crate::report::UsageError;

pub struct FileCfg {
    map: Map<String, Value>,
}

impl FileCfg {
    pub fn load(path: Option<&PathBuf>) -> Result<FileCfg, UsageError> {
        let map = match path {
            None => Map::new(),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| UsageError(format!("reading {}: {e}", p.display())))?;
                let value: Value = serde_json::from_str(&text)
                    .map_err(|e| UsageError(format!("parsing {}: {e}", p.display())))?;
                match value {
                    Value::Object(m) => m,
                    _ => {
                        return Err(UsageError(format!(
                            "{} must contain a JSON object",
                            p.display()
                        )))
                    }
                }
            }
        };
        Ok(FileCfg { map })
    }

    /// String-valued key; numbers are accepted and rendered back to text so
    /// exact values like `"1/2"` and plain `3` both work.
    pub fn take_string(&mut self, key: &str) -> Result<Option<String>, UsageError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(Value::Number(n)) => Ok(Some(n.to_string())),
            Some(other) => Err(UsageError(format!(
                "config key `{key}` must be a string or number, got {other}"
            ))),
        }
    }

    pub fn take_f64(&mut self, key: &str) -> Result<Option<f64>, UsageError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(Value::Number(n)) => n
                .as_f64()
                .map(Some)
                .ok_or_else(|| UsageError(format!("config key `{key}` is out of range"))),
            Some(Value::String(s)) => s
                .trim()
                .parse::<f64>()
                .map(Some)
                .map_err(|_| UsageError(format!("config key `{key}`: `{s}` is not a number"))),
            Some(other) => Err(UsageError(format!(
                "config key `{key}` must be a number, got {other}"
            ))),
        }
    }

    pub fn take_usize(&mut self, key: &str) -> Result<Option<usize>, UsageError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(Value::Number(n)) => n
                .as_u64()
                .map(|v| Some(v as usize))
                .ok_or_else(|| UsageError(format!("config key `{key}` must be a nonnegative integer"))),
            Some(other) => Err(UsageError(format!(
                "config key `{key}` must be a nonnegative integer, got {other}"
            ))),
        }
    }

    pub fn take_u32(&mut self, key: &str) -> Result<Option<u32>, UsageError> {
        Ok(self.take_usize(key)?.map(|v| v as u32))
    }

    pub fn take_u64(&mut self, key: &str) -> Result<Option<u64>, UsageError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(Value::Number(n)) => n
                .as_u64()
                .map(Some)
                .ok_or_else(|| UsageError(format!("config key `{key}` must be a nonnegative integer"))),
            Some(other) => Err(UsageError(format!(
                "config key `{key}` must be a nonnegative integer, got {other}"
            ))),
        }
    }

    pub fn take_bool(&mut self, key: &str) -> Result<Option<bool>, UsageError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(Value::Bool(b)) => Ok(Some(b)),
            Some(other) => Err(UsageError(format!(
                "config key `{key}` must be true or false, got {other}"
            ))),
        }
    }

    /// List of numbers, either a JSON array or a comma string.
    pub fn take_f64_list(&mut self, key: &str) -> Result<Option<Vec<f64>>, UsageError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(Value::String(s)) => crate::qparse::parse_f64_list(&s)
                .map(Some)
                .map_err(|e| UsageError(format!("config key `{key}`: {e}"))),
            Some(Value::Array(items)) => {
                let mut out = Vec::with_capacity(items.len());
                for item in items {
                    match item {
                        Value::Number(n) => out.push(n.as_f64().ok_or_else(|| {
                            UsageError(format!("config key `{key}` has an out-of-range entry"))
                        })?),
                        other => {
                            return Err(UsageError(format!(
                                "config key `{key}` must hold numbers, got {other}"
                            )))
                        }
                    }
                }
                Ok(Some(out))
            }
            Some(other) => Err(UsageError(format!(
                "config key `{key}` must be an array or comma string, got {other}"
            ))),
        }
    }

    /// Reject any key that no getter consumed.
    pub fn finish(self) -> Result<(), UsageError> {
        if let Some(key) = self.map.keys().next() {
            return Err(UsageError(format!("unknown config key `{key}`")));
        }
        Ok(())
    }
}

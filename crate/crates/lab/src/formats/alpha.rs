//! `name=true|false`, one line per argument, sorted by name.

use std::collections::HashMap;

use arglab_core::{AcceptanceVector, ArgumentSystem};

use crate::error::{LabError, LabResult};

const FORMAT: &str = "alpha";

pub fn write_alpha(sys: &ArgumentSystem, alpha: &AcceptanceVector) -> String {
    let mut lines: Vec<(&str, bool)> = (0..sys.len())
        .map(|i| (sys.name(i), alpha.get(i)))
        .collect();
    lines.sort_unstable();
    lines
        .into_iter()
        .map(|(name, v)| format!("{name}={v}\n"))
        .collect()
}

/// Entries may come in any order, but must cover every argument once.
pub fn parse_alpha(sys: &ArgumentSystem, text: &str) -> LabResult<AcceptanceVector> {
    let mut values: HashMap<usize, bool> = HashMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        let (name, value) = t
            .split_once('=')
            .ok_or_else(|| LabError::syntax(FORMAT, line, "expected `name=true|false`"))?;
        let (name, value) = (name.trim(), value.trim());
        let i = sys
            .index_of(name)
            .ok_or_else(|| LabError::syntax(FORMAT, line, format!("unknown argument `{name}`")))?;
        let v = match value {
            "true" => true,
            "false" => false,
            _ => {
                return Err(LabError::syntax(
                    FORMAT,
                    line,
                    format!("`{value}` is not true or false"),
                ))
            }
        };
        if values.insert(i, v).is_some() {
            return Err(LabError::syntax(
                FORMAT,
                line,
                format!("`{name}` given twice"),
            ));
        }
    }
    let bools = (0..sys.len())
        .map(|i| {
            values
                .get(&i)
                .copied()
                .ok_or_else(|| LabError::format(FORMAT, format!("no entry for `{}`", sys.name(i))))
        })
        .collect::<LabResult<Vec<bool>>>()?;
    Ok(AcceptanceVector::from_bools(&bools)?)
}

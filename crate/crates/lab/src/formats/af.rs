//! `arg(a).` / `att(a,b).` text format.

use std::collections::HashMap;

use arglab_core::system::is_valid_name;
use arglab_core::ArgumentSystem;

use crate::error::{LabError, LabResult};

const FORMAT: &str = "AF";

enum Statement<'a> {
    Arg(&'a str),
    Att(&'a str, &'a str),
}

/// Parses the statements on one comment-stripped line.
fn statements(mut rest: &str, line: usize) -> LabResult<Vec<Statement<'_>>> {
    let err = |msg: String| LabError::syntax(FORMAT, line, msg);
    let mut out = Vec::new();
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(out);
        }
        let open = rest
            .find('(')
            .ok_or_else(|| err(format!("expected a statement, found `{rest}`")))?;
        let keyword = rest[..open].trim();
        let close = rest[open..]
            .find(')')
            .map(|k| open + k)
            .ok_or_else(|| err("missing `)`".into()))?;
        let inner = &rest[open + 1..close];
        let after = rest[close + 1..].trim_start();
        rest = after
            .strip_prefix('.')
            .ok_or_else(|| err("missing `.` after statement".into()))?;
        let name = |s| checked_name(s, line);
        match keyword {
            "arg" => out.push(Statement::Arg(name(inner)?)),
            "att" => {
                let (a, b) = inner
                    .split_once(',')
                    .ok_or_else(|| err("att needs two arguments".into()))?;
                out.push(Statement::Att(name(a)?, name(b)?));
            }
            other => return Err(err(format!("unknown statement `{other}`"))),
        }
    }
}

fn checked_name(s: &str, line: usize) -> LabResult<&str> {
    let s = s.trim();
    if is_valid_name(s) {
        Ok(s)
    } else {
        Err(LabError::syntax(
            FORMAT,
            line,
            format!("invalid argument name `{s}`"),
        ))
    }
}

pub fn parse_af(text: &str) -> LabResult<ArgumentSystem> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut attacks: Vec<(String, String, usize)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        for st in statements(content, line)? {
            match st {
                Statement::Arg(a) => {
                    if index.insert(a.to_owned(), names.len()).is_some() {
                        return Err(LabError::syntax(
                            FORMAT,
                            line,
                            format!("`{a}` declared twice"),
                        ));
                    }
                    names.push(a.to_owned());
                }
                Statement::Att(a, b) => attacks.push((a.to_owned(), b.to_owned(), line)),
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::with_capacity(attacks.len());
    for (a, b, line) in attacks {
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| LabError::syntax(FORMAT, line, format!("`{s}` is never declared")))
        };
        let (i, j) = (lookup(&a)?, lookup(&b)?);
        if i == j {
            return Err(LabError::syntax(
                FORMAT,
                line,
                format!("`{a}` attacks itself"),
            ));
        }
        if !seen.insert((i, j)) {
            return Err(LabError::syntax(
                FORMAT,
                line,
                format!("attack ({a},{b}) repeated"),
            ));
        }
        pairs.push((i, j));
    }
    Ok(ArgumentSystem::new(names, pairs)?)
}

/// `arg` lines in declaration order, then `att` lines sorted by name pair.
pub fn write_af(sys: &ArgumentSystem) -> String {
    let mut out = String::new();
    for name in sys.names() {
        out.push_str(&format!("arg({name}).\n"));
    }
    let mut atts: Vec<(&str, &str)> = sys
        .attack_pairs()
        .map(|(a, b)| (sys.name(a), sys.name(b)))
        .collect();
    atts.sort_unstable();
    for (a, b) in atts {
        out.push_str(&format!("att({a},{b}).\n"));
    }
    out
}

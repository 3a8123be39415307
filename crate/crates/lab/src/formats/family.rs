//! Candidate families: a `universe n` header, then one extension per line
//! as a comma-separated list over `x1..xn`. `{}` stands for the empty set.

use arglab_core::system::default_names;
use arglab_core::{ArgSet, ExtensionFamily};

use crate::error::{LabError, LabResult};

const FORMAT: &str = "family";

pub fn parse_family(text: &str) -> LabResult<ExtensionFamily> {
    let mut n: Option<usize> = None;
    let mut members = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        let Some(n) = n else {
            let value = t
                .strip_prefix("universe")
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| LabError::syntax(FORMAT, line, "expected `universe <n>` first"))?;
            if value > arglab_core::MAX_ARGS {
                return Err(LabError::syntax(
                    FORMAT,
                    line,
                    format!("universe {value} is too large"),
                ));
            }
            n = Some(value);
            continue;
        };
        let names = default_names(n);
        let mut s = ArgSet::EMPTY;
        if t != "{}" {
            for item in t.split(',') {
                let item = item.trim();
                let i = names.iter().position(|x| x == item).ok_or_else(|| {
                    LabError::syntax(FORMAT, line, format!("`{item}` is not in x1..x{n}"))
                })?;
                if s.contains(i) {
                    return Err(LabError::syntax(FORMAT, line, format!("`{item}` repeated")));
                }
                s.insert(i);
            }
        }
        if members.contains(&s) {
            return Err(LabError::syntax(FORMAT, line, "extension listed twice"));
        }
        members.push(s);
    }
    let n = n.ok_or_else(|| LabError::format(FORMAT, "missing `universe <n>` header"))?;
    Ok(ExtensionFamily::candidate(n, members)?)
}

pub fn format_members(family: &ExtensionFamily, s: ArgSet) -> String {
    if s.is_empty() {
        return "{}".into();
    }
    let names = default_names(family.n());
    s.iter()
        .map(|i| names[i].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_family(family: &ExtensionFamily) -> String {
    let mut out = format!("universe {}\n", family.n());
    for s in family.iter() {
        out.push_str(&format_members(family, s));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let f = parse_family("# two singletons\nuniverse 2\nx1\n\nx2\n").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(write_family(&f), "universe 2\nx2\nx1\n");
        let g = parse_family("universe 3\n{}\n").unwrap();
        assert_eq!(g.members(), [ArgSet::EMPTY]);
        assert_eq!(parse_family(&write_family(&g)).unwrap(), g);
        assert!(parse_family("universe 2\n").unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_lines() {
        for (text, line) in [
            ("x1\n", 1),
            ("universe 2\nx3\n", 2),
            ("universe 2\nx1,x1\n", 2),
            ("universe 2\nx1\nx1\n", 3),
        ] {
            match parse_family(text) {
                Err(LabError::Syntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(parse_family("").is_err());
    }
}

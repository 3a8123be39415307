//! DIMACS CNF, restricted to clauses of exactly three literals.

use arglab_core::reduction::{CnfFormula, Literal};

use crate::error::{LabError, LabResult};

const FORMAT: &str = "DIMACS";

pub fn parse_dimacs(text: &str) -> LabResult<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if let Some(rest) = t.strip_prefix('p') {
            if header.is_some() {
                return Err(LabError::syntax(FORMAT, line, "second problem line"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let parsed = match fields[..] {
                ["cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                LabError::syntax(FORMAT, line, "expected `p cnf <vars> <clauses>`")
            })?);
            continue;
        }
        let (vars, _) = header
            .ok_or_else(|| LabError::syntax(FORMAT, line, "clause before the problem line"))?;
        for tok in t.split_whitespace() {
            let k: i64 = tok
                .parse()
                .map_err(|_| LabError::syntax(FORMAT, line, format!("bad literal `{tok}`")))?;
            if k == 0 {
                let clause: [Literal; 3] = current.as_slice().try_into().map_err(|_| {
                    LabError::syntax(
                        FORMAT,
                        line,
                        format!("clause has {} literals, expected 3", current.len()),
                    )
                })?;
                clauses.push(clause);
                current.clear();
                continue;
            }
            let lit = Literal::from_dimacs(k)
                .filter(|l| (l.var() as usize) <= vars)
                .ok_or_else(|| {
                    LabError::syntax(
                        FORMAT,
                        line,
                        format!("variable {} out of range 1..={vars}", k.unsigned_abs()),
                    )
                })?;
            current.push(lit);
        }
    }
    let (vars, count) = header.ok_or_else(|| LabError::format(FORMAT, "missing problem line"))?;
    if !current.is_empty() {
        return Err(LabError::syntax(
            FORMAT,
            last_line,
            "last clause is not terminated by 0",
        ));
    }
    if clauses.len() != count {
        return Err(LabError::format(
            FORMAT,
            format!(
                "header declares {count} clauses, body has {}",
                clauses.len()
            ),
        ));
    }
    Ok(CnfFormula::three_cnf(vars, clauses)?)
}

pub fn write_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.var_count(), phi.clause_count());
    for clause in phi.clauses() {
        for l in clause {
            out.push_str(&format!("{} ", l.to_dimacs()));
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use arglab_core::reduction::{fixture_single_clause, fixture_unsat};

    #[test]
    fn fixtures_parse() {
        let phi = parse_dimacs("c single clause\np cnf 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(phi, fixture_single_clause());
        let phi = parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n").unwrap();
        assert_eq!(phi, fixture_unsat());
        assert_eq!(parse_dimacs(&write_dimacs(&phi)).unwrap(), phi);
    }

    #[test]
    fn clauses_may_span_lines() {
        let phi = parse_dimacs("p cnf 3 2\n1 -2\n3 0 -1 2 3\n0\n").unwrap();
        assert_eq!(phi.clause_count(), 2);
    }

    #[test]
    fn rejects_malformed_input() {
        for (text, fragment) in [
            ("p cnf 1 1\n1 -1 0\n", "2 literals"),
            ("p cnf 2 1\n1 2 3 0\n", "out of range"),
            ("p cnf 3 2\n1 2 3 0\n", "declares 2"),
            ("1 2 3 0\n", "before the problem line"),
            ("p cnf 3 1\n1 2 3\n", "not terminated"),
            ("p cnf 3 1\n1 x 3 0\n", "bad literal"),
            ("p cnf 3 1\n99999999999999999999 1 1 0\n", "bad literal"),
            ("p dnf 3 1\n", "expected `p cnf"),
        ] {
            let e = parse_dimacs(text).unwrap_err().to_string();
            assert!(e.contains(fragment), "{text:?}: {e}");
        }
    }
}

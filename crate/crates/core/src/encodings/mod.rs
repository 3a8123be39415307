//! Encoding schemes for extension families.
//!
//! An encoding turns a system into a bit string together with a procedure
//! deciding family membership from that string alone:
//!
//! * `tab`: the family listed row by row, `n` bits per member, members in
//!   canonical order. Size grows with the family, which can be
//!   exponential in `n`.
//! * `truthtable`: the characteristic function `f_H`, `2^n` bits.
//! * `adjacency`: the `n × n` attack matrix. Stable membership is
//!   decidable from it in polynomial time.
//!
//! DNF formulas and exact minimal formula lengths live in [`formula`] and
//! [`minlen`].

mod bits;
pub mod formula;
pub mod minlen;

pub use bits::BitString;
pub use formula::{dnf_formula, Formula};
pub use minlen::{
    compute_l_of_n, min_formula_length, preferred_function, FormulaLengths, LOfN, TruthTable,
    DEFAULT_LITERAL_CAP,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semantics::enumerate;
use crate::set::{ArgSet, ExtensionFamily, Semantics};
use crate::system::{default_names, ArgumentSystem};

/// Largest system [`truth_table`] will tabulate.
pub const TRUTH_TABLE_MAX_ARGS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Tab,
    TruthTable,
    Adjacency,
}

impl Scheme {
    pub const fn name(self) -> &'static str {
        match self {
            Scheme::Tab => "tab",
            Scheme::TruthTable => "truthtable",
            Scheme::Adjacency => "adjacency",
        }
    }
}

/// `η(H)` for one scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Encoding {
    pub scheme: Scheme,
    pub semantics: Semantics,
    pub n: usize,
    /// Number of rows for `tab`, 0 otherwise.
    pub rows: usize,
    pub payload: BitString,
}

impl Encoding {
    /// Checks the payload length against the scheme.
    pub fn new(
        scheme: Scheme,
        semantics: Semantics,
        n: usize,
        rows: usize,
        payload: BitString,
    ) -> Result<Self> {
        let expected = match scheme {
            Scheme::Tab => n.checked_mul(rows),
            Scheme::TruthTable if n <= TRUTH_TABLE_MAX_ARGS => Some(1usize << n),
            Scheme::TruthTable => None,
            Scheme::Adjacency => n.checked_mul(n),
        };
        if scheme != Scheme::Tab && rows != 0 {
            return Err(Error::InvalidFamily("only tab encodings carry rows".into()));
        }
        if scheme == Scheme::Adjacency && semantics != Semantics::Stable {
            return Err(Error::InvalidFamily(
                "an adjacency matrix decides stable membership only".into(),
            ));
        }
        if n > crate::set::MAX_ARGS {
            return Err(Error::cap("argument count", crate::set::MAX_ARGS, n));
        }
        match expected {
            Some(len) if len == payload.len() => Ok(Encoding {
                scheme,
                semantics,
                n,
                rows,
                payload,
            }),
            _ => Err(Error::WidthMismatch {
                expected: expected.unwrap_or(usize::MAX),
                got: payload.len(),
            }),
        }
    }

    /// `|η(H)|` in bits.
    pub fn size_bits(&self) -> usize {
        self.payload.len()
    }

    fn expect(&self, scheme: Scheme) -> Result<()> {
        if self.scheme == scheme {
            Ok(())
        } else {
            Err(Error::SchemeMismatch {
                expected: scheme.name(),
                got: self.scheme.name(),
            })
        }
    }
}

/// Family rows in canonical order; bit `(i-1)·n + (j-1)` is set iff
/// `x_j ∈ S_i`.
pub fn encode_tab(sys: &ArgumentSystem, semantics: Semantics) -> Result<Encoding> {
    let family = enumerate(sys, semantics)?;
    Ok(tab_of_family(&family))
}

pub fn tab_of_family(family: &ExtensionFamily) -> Encoding {
    let n = family.n();
    let payload = family
        .iter()
        .flat_map(|s| (0..n).map(move |j| s.contains(j)))
        .collect();
    Encoding {
        scheme: Scheme::Tab,
        semantics: family.semantics(),
        n,
        rows: family.len(),
        payload,
    }
}

/// Membership by row comparison, with the number of bits read.
pub fn decide_tab_counted(e: &Encoding, s: ArgSet) -> Result<(bool, u64)> {
    e.expect(Scheme::Tab)?;
    s.check_width(e.n)?;
    let mut steps = 0u64;
    for row in 0..e.rows {
        let base = row * e.n;
        let mut equal = true;
        for j in 0..e.n {
            steps += 1;
            if e.payload.get(base + j) != s.contains(j) {
                equal = false;
                break;
            }
        }
        if equal {
            return Ok((true, steps));
        }
    }
    Ok((false, steps))
}

pub fn decide_tab(e: &Encoding, s: ArgSet) -> Result<bool> {
    decide_tab_counted(e, s).map(|(answer, _)| answer)
}

/// Deterministic verifier: is `e` exactly the tab encoding of `sys`?
pub fn verify_tab(e: &Encoding, sys: &ArgumentSystem) -> bool {
    e.scheme == Scheme::Tab
        && e.n == sys.len()
        && encode_tab(sys, e.semantics).is_ok_and(|fresh| fresh == *e)
}

/// Row-major attack matrix: bit `n·i + j` is set iff `x_{i+1}` attacks
/// `x_{j+1}`.
pub fn encode_adjacency(sys: &ArgumentSystem) -> Encoding {
    let n = sys.len();
    let payload = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| sys.attacks(i, j))
        .collect();
    Encoding {
        scheme: Scheme::Adjacency,
        semantics: Semantics::Stable,
        n,
        rows: 0,
        payload,
    }
}

/// The system an adjacency payload describes, named `x1..xn`.
pub fn decode_adjacency(e: &Encoding) -> Result<ArgumentSystem> {
    e.expect(Scheme::Adjacency)?;
    let n = e.n;
    let mut targets = alloc::vec![0u64; n];
    for (i, row) in targets.iter_mut().enumerate() {
        for j in 0..n {
            if e.payload.get(n * i + j) {
                if i == j {
                    return Err(Error::InvalidSystem(
                        "self-attack in adjacency matrix".into(),
                    ));
                }
                *row |= 1 << j;
            }
        }
    }
    Ok(ArgumentSystem::from_target_masks(default_names(n), targets))
}

/// Stable membership straight from the matrix, `O(n²)` bit reads.
pub fn decide_stable_member_counted(e: &Encoding, s: ArgSet) -> Result<(bool, u64)> {
    let sys = decode_adjacency(e)?;
    s.check_width(e.n)?;
    Ok((sys.stable_raw(s), (e.n * e.n) as u64))
}

pub fn decide_stable_member(e: &Encoding, s: ArgSet) -> Result<bool> {
    decide_stable_member_counted(e, s).map(|(answer, _)| answer)
}

/// `f_H` as `2^n` bits; bit `Σ 2^{j-1}·[x_j ∈ S]` is set iff `S` is in the
/// family.
pub fn truth_table(sys: &ArgumentSystem, semantics: Semantics) -> Result<Encoding> {
    let n = sys.len();
    if n > TRUTH_TABLE_MAX_ARGS {
        return Err(Error::cap(
            "truth-table argument count",
            TRUTH_TABLE_MAX_ARGS,
            n,
        ));
    }
    let family = enumerate(sys, semantics)?;
    let mut payload = BitString::zeros(1 << n);
    for s in family.iter() {
        payload.set(s.bits() as usize, true);
    }
    Ok(Encoding {
        scheme: Scheme::TruthTable,
        semantics,
        n,
        rows: 0,
        payload,
    })
}

pub fn decide_truth_table(e: &Encoding, s: ArgSet) -> Result<bool> {
    e.expect(Scheme::TruthTable)?;
    s.check_width(e.n)?;
    Ok(e.payload.get(s.bits() as usize))
}

/// Membership through whichever procedure belongs to the scheme.
pub fn decide(e: &Encoding, s: ArgSet) -> Result<bool> {
    match e.scheme {
        Scheme::Tab => decide_tab(e, s),
        Scheme::TruthTable => decide_truth_table(e, s),
        Scheme::Adjacency => decide_stable_member(e, s),
    }
}

/// One line of [`size_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRow {
    pub label: String,
    pub n: usize,
    pub scheme: Scheme,
    pub semantics: Semantics,
    pub rows: usize,
    pub bits: usize,
    pub queries: usize,
    /// Bit reads spent answering the whole query workload.
    pub steps: u64,
}

/// The fixed query workload: `∅`, every singleton, and `X`.
pub fn query_workload(n: usize) -> Vec<ArgSet> {
    let mut q = alloc::vec![ArgSet::EMPTY];
    q.extend((0..n).map(ArgSet::singleton));
    if n > 1 {
        q.push(ArgSet::full(n));
    }
    q
}

/// Encoding sizes and decision costs for each system under `tab`
/// (preferred and stable), `truthtable` (preferred, when `n <= 20`) and
/// `adjacency`.
pub fn size_report(systems: &[(String, ArgumentSystem)]) -> Result<Vec<SizeRow>> {
    let mut out = Vec::new();
    for (label, sys) in systems {
        let n = sys.len();
        let work = query_workload(n);
        let mut encodings = alloc::vec![
            encode_tab(sys, Semantics::Preferred)?,
            encode_tab(sys, Semantics::Stable)?,
        ];
        if n <= TRUTH_TABLE_MAX_ARGS {
            encodings.push(truth_table(sys, Semantics::Preferred)?);
        }
        encodings.push(encode_adjacency(sys));
        for e in encodings {
            let mut steps = 0u64;
            for &q in &work {
                steps += match e.scheme {
                    Scheme::Tab => decide_tab_counted(&e, q)?.1,
                    Scheme::TruthTable => {
                        decide_truth_table(&e, q)?;
                        1
                    }
                    Scheme::Adjacency => decide_stable_member_counted(&e, q)?.1,
                };
            }
            out.push(SizeRow {
                label: label.clone(),
                n,
                scheme: e.scheme,
                semantics: e.semantics,
                rows: e.rows,
                bits: e.size_bits(),
                queries: work.len(),
                steps,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_isolated, gen_k3};
    use crate::system::system_from_names;

    fn two_cycle() -> ArgumentSystem {
        system_from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap()
    }
    fn chain() -> ArgumentSystem {
        system_from_names(&["a", "b"], &[("a", "b")]).unwrap()
    }
    fn three_cycle() -> ArgumentSystem {
        system_from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    #[test]
    fn tab_of_two_cycle() {
        let e = encode_tab(&two_cycle(), Semantics::Preferred).unwrap();
        assert_eq!(e.rows, 2);
        assert_eq!(e.payload.to_bit_string(), "0110");
        assert_eq!(e.payload.as_bytes(), &[0x60]);
        assert!(decide_tab(&e, ArgSet::singleton(0)).unwrap());
        assert!(!decide_tab(&e, ArgSet::full(2)).unwrap());
    }

    #[test]
    fn empty_tab() {
        let e = encode_tab(&three_cycle(), Semantics::Stable).unwrap();
        assert_eq!((e.rows, e.size_bits()), (0, 0));
        assert!(!decide_tab(&e, ArgSet::EMPTY).unwrap());
    }

    #[test]
    fn tab_verifier() {
        let h = two_cycle();
        let e = encode_tab(&h, Semantics::Preferred).unwrap();
        assert!(verify_tab(&e, &h));
        for i in 0..e.size_bits() {
            let mut bad = e.clone();
            bad.payload.set(i, !e.payload.get(i));
            assert!(!verify_tab(&bad, &h));
        }
        let mut bad = e.clone();
        bad.rows = 1;
        assert!(!verify_tab(&bad, &h));
        assert!(!verify_tab(&encode_adjacency(&h), &h));
    }

    #[test]
    fn adjacency_of_chain() {
        let e = encode_adjacency(&chain());
        assert_eq!(e.payload.to_bit_string(), "0100");
        assert!(decide_stable_member(&e, ArgSet::singleton(0)).unwrap());
        assert!(!decide_stable_member(&e, ArgSet::singleton(1)).unwrap());
        let e = encode_adjacency(&three_cycle());
        assert!((0..8).all(|s| !decide_stable_member(&e, ArgSet::from_bits(s)).unwrap()));
        let e = encode_adjacency(&gen_isolated(0).unwrap());
        assert!(e.payload.is_empty());
        assert!(decide_stable_member(&e, ArgSet::EMPTY).unwrap());
    }

    #[test]
    fn scheme_mismatch_is_an_error() {
        let e = encode_adjacency(&chain());
        assert!(matches!(
            decide_tab(&e, ArgSet::EMPTY),
            Err(Error::SchemeMismatch { .. })
        ));
        let t = encode_tab(&chain(), Semantics::Preferred).unwrap();
        assert!(decide_stable_member(&t, ArgSet::EMPTY).is_err());
    }

    #[test]
    fn truth_tables() {
        let e = truth_table(&two_cycle(), Semantics::Preferred).unwrap();
        assert_eq!(e.payload.to_bit_string(), "0110");
        let e = truth_table(&three_cycle(), Semantics::Preferred).unwrap();
        assert_eq!(e.payload.to_bit_string(), "10000000");
        let big = gen_isolated(21).unwrap();
        assert!(truth_table(&big, Semantics::Preferred).is_err());
    }

    #[test]
    fn encoding_constructor_checks_lengths() {
        let bits: BitString = [true, false].into_iter().collect();
        assert!(Encoding::new(Scheme::Tab, Semantics::Preferred, 2, 1, bits.clone()).is_ok());
        assert!(Encoding::new(Scheme::Tab, Semantics::Preferred, 2, 2, bits.clone()).is_err());
        assert!(Encoding::new(Scheme::Adjacency, Semantics::Stable, 2, 0, bits.clone()).is_err());
        assert!(Encoding::new(Scheme::TruthTable, Semantics::Stable, 1, 0, bits).is_ok());
    }

    #[test]
    fn size_report_shows_tab_blow_up() {
        let rows = size_report(&[
            ("k3(3)".into(), gen_k3(3).unwrap()),
            ("iso(5)".into(), gen_isolated(5).unwrap()),
        ])
        .unwrap();
        let find = |label: &str, scheme, sem| {
            rows.iter()
                .find(|r| r.label == label && r.scheme == scheme && r.semantics == sem)
                .unwrap()
        };
        assert_eq!(find("k3(3)", Scheme::Tab, Semantics::Preferred).bits, 243);
        assert_eq!(find("k3(3)", Scheme::Adjacency, Semantics::Stable).bits, 81);
        assert_eq!(find("iso(5)", Scheme::Tab, Semantics::Preferred).bits, 5);
        assert_eq!(
            find("k3(3)", Scheme::TruthTable, Semantics::Preferred).bits,
            512
        );
        let adj = find("k3(3)", Scheme::Adjacency, Semantics::Stable);
        assert_eq!(adj.steps, 81 * adj.queries as u64);
    }
}

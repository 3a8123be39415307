use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::generators::SplitMix64;

/// Largest variable count the brute-force satisfiability scan accepts.
pub const BRUTE_MAX_VARS: usize = 24;

/// A signed reference to variable `x_var` (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: u32,
    positive: bool,
}

impl Literal {
    pub fn new(var: u32, positive: bool) -> Self {
        Literal { var, positive }
    }

    pub fn pos(var: u32) -> Self {
        Literal::new(var, true)
    }

    pub fn neg(var: u32) -> Self {
        Literal::new(var, false)
    }

    /// From the DIMACS convention: `k` is `x_k`, `-k` is `¬x_k`.
    pub fn from_dimacs(k: i64) -> Option<Self> {
        let var = u32::try_from(k.unsigned_abs()).ok().filter(|&v| v != 0)?;
        Some(Literal::new(var, k > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn var(self) -> u32 {
        self.var
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn negated(self) -> Self {
        Literal::new(self.var, !self.positive)
    }

    pub fn eval(self, a: Assignment) -> bool {
        a.get(self.var) == self.positive
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("¬")?;
        }
        write!(f, "x{}", self.var)
    }
}

/// Truth values for `x_1..x_n`; bit `i - 1` holds `x_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    n: usize,
    bits: u64,
}

impl Assignment {
    pub fn new(n: usize, bits: u64) -> Self {
        debug_assert!(n <= 64);
        Assignment { n, bits }
    }

    pub fn from_bools(values: &[bool]) -> Self {
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &v)| acc | (v as u64) << i);
        Assignment::new(values.len(), bits)
    }

    pub fn width(&self) -> usize {
        self.n
    }

    /// Value of `x_var` (1-based).
    pub fn get(&self, var: u32) -> bool {
        self.bits >> (var - 1) & 1 == 1
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (1..=self.n as u32).map(|v| self.get(v)).collect()
    }

    /// The same values followed by `extra`.
    pub fn extended(&self, extra: &[bool]) -> Assignment {
        let mut v = self.to_bools();
        v.extend_from_slice(extra);
        Assignment::from_bools(&v)
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.to_bools() {
            f.write_str(if v { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A CNF formula over `x_1..x_n`.
///
/// Formulas built with [`CnfFormula::three_cnf`] have clauses of width
/// exactly three. The augmented formula produced by
/// [`build_psi`](super::build_psi) has width five and is flagged by
/// [`is_three_cnf`](Self::is_three_cnf) returning false.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Vec<Literal>>,
    three_cnf: bool,
}

impl CnfFormula {
    /// A 3-CNF with at least one variable and one clause. Repeated
    /// literals inside a clause are allowed.
    pub fn three_cnf(var_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if var_count == 0 {
            return Err(Error::InvalidFormula(
                "at least one variable is required".into(),
            ));
        }
        if clauses.is_empty() {
            return Err(Error::InvalidFormula(
                "at least one clause is required".into(),
            ));
        }
        let f = CnfFormula {
            var_count,
            clauses: clauses.into_iter().map(|c| c.to_vec()).collect(),
            three_cnf: true,
        };
        f.check_vars()?;
        Ok(f)
    }

    /// Arbitrary clause widths.
    pub(crate) fn general(var_count: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let f = CnfFormula {
            var_count,
            clauses,
            three_cnf: false,
        };
        f.check_vars()?;
        Ok(f)
    }

    fn check_vars(&self) -> Result<()> {
        for (i, c) in self.clauses.iter().enumerate() {
            for l in c {
                if l.var == 0 || l.var as usize > self.var_count {
                    return Err(Error::InvalidFormula(format!(
                        "clause {} mentions x{} outside 1..={}",
                        i + 1,
                        l.var,
                        self.var_count
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn is_three_cnf(&self) -> bool {
        self.three_cnf
    }

    /// True when no clause repeats a literal.
    pub fn has_distinct_literals(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().enumerate().all(|(i, l)| !c[..i].contains(l)))
    }

    pub fn eval(&self, a: Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(a)))
    }

    /// Every satisfying assignment, enumerated with `x_1` as the most
    /// significant position (so `00…0`, `00…1`, … in order).
    pub fn models(&self) -> Result<impl Iterator<Item = Assignment> + '_> {
        let n = self.var_count;
        if n > BRUTE_MAX_VARS {
            return Err(Error::cap("variable count", BRUTE_MAX_VARS, n));
        }
        Ok((0..1u64 << n)
            .map(move |k| Assignment::new(n, msb_first(k, n)))
            .filter(move |&a| self.eval(a)))
    }

    /// A random 3-CNF with `1..=max_vars` variables and `1..=max_clauses`
    /// clauses, drawn from `rng`.
    pub fn random(rng: &mut SplitMix64, max_vars: usize, max_clauses: usize) -> Result<Self> {
        if max_vars == 0 || max_clauses == 0 {
            return Err(Error::InvalidFormula("empty corpus dimensions".into()));
        }
        let n = 1 + rng.below(max_vars as u64) as u32;
        let m = 1 + rng.below(max_clauses as u64) as usize;
        let mut clauses = Vec::with_capacity(m);
        for _ in 0..m {
            let mut lit = || {
                let var = 1 + rng.below(n as u64) as u32;
                Literal::new(var, rng.next_u64() & 1 == 1)
            };
            clauses.push([lit(), lit(), lit()]);
        }
        CnfFormula::three_cnf(n as usize, clauses)
    }
}

/// Reverses the low `n` bits of `k`, turning "x_1 most significant"
/// counting order into the bit-`i-1` layout of [`Assignment`].
fn msb_first(k: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        k.reverse_bits() >> (64 - n)
    }
}

impl fmt::Debug for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∧ ")?;
            }
            f.write_str("(")?;
            for (j, l) in c.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ∨ ")?;
                }
                write!(f, "{l:?}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The first satisfying assignment in lexicographic order, if any.
pub fn brute_sat(phi: &CnfFormula) -> Result<Option<Assignment>> {
    Ok(phi.models()?.next())
}

/// The seeded corpus: `count` formulas from one splitmix64 stream.
pub fn random_corpus(
    count: usize,
    max_vars: usize,
    max_clauses: usize,
    seed: u64,
) -> Result<Vec<CnfFormula>> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| CnfFormula::random(&mut rng, max_vars, max_clauses))
        .collect()
}

/// `(x1 ∨ x2 ∨ x3)`.
pub fn fixture_single_clause() -> CnfFormula {
    CnfFormula::three_cnf(
        3,
        alloc::vec![[Literal::pos(1), Literal::pos(2), Literal::pos(3)]],
    )
    .expect("valid fixture")
}

/// `(x1 ∨ x1 ∨ x1) ∧ (¬x1 ∨ ¬x1 ∨ ¬x1)`, unsatisfiable.
pub fn fixture_unsat() -> CnfFormula {
    CnfFormula::three_cnf(1, alloc::vec![[Literal::pos(1); 3], [Literal::neg(1); 3]])
        .expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_sat_returns_lexicographically_first() {
        let a = brute_sat(&fixture_single_clause()).unwrap().unwrap();
        assert_eq!(a.to_bools(), [false, false, true]);
        assert_eq!(brute_sat(&fixture_unsat()).unwrap(), None);
        let f = CnfFormula::three_cnf(1, alloc::vec![[Literal::neg(1); 3]]).unwrap();
        assert_eq!(brute_sat(&f).unwrap().unwrap().to_bools(), [false]);
    }

    #[test]
    fn brute_sat_respects_cap() {
        let f = CnfFormula::three_cnf(25, alloc::vec![[Literal::pos(25); 3]]).unwrap();
        assert!(matches!(brute_sat(&f), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn construction_checks() {
        assert!(CnfFormula::three_cnf(0, alloc::vec![]).is_err());
        assert!(CnfFormula::three_cnf(2, alloc::vec![]).is_err());
        assert!(CnfFormula::three_cnf(2, alloc::vec![[Literal::pos(3); 3]]).is_err());
        assert!(!fixture_unsat().has_distinct_literals());
        assert!(fixture_single_clause().has_distinct_literals());
    }

    #[test]
    fn dimacs_literals() {
        assert_eq!(Literal::from_dimacs(-4), Some(Literal::neg(4)));
        assert_eq!(Literal::from_dimacs(0), None);
        assert_eq!(Literal::neg(7).to_dimacs(), -7);
    }

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = random_corpus(50, 4, 6, 7).unwrap();
        assert_eq!(a, random_corpus(50, 4, 6, 7).unwrap());
        assert!(a
            .iter()
            .all(|f| (1..=4).contains(&f.var_count()) && (1..=6).contains(&f.clause_count())));
        assert_ne!(a, random_corpus(50, 4, 6, 8).unwrap());
    }

    #[test]
    fn assignment_extension() {
        let a = Assignment::from_bools(&[true, false]).extended(&[true, false]);
        assert_eq!(a.to_bools(), [true, false, true, false]);
        assert!(a.get(3) && !a.get(4));
    }
}

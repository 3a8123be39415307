//! Exact minimal formula length over `{∧, ∨, ¬}` for functions of at
//! most four variables.
//!
//! Length counts literal occurrences. Pushing negations to the leaves
//! with De Morgan's laws never changes that count, so it suffices to
//! search negation-normal formulas: level 1 holds the `2n` literals and
//! level `k` every `g ∧ h`, `g ∨ h` with `g` at level `i`, `h` at level
//! `k - i`. A function's length is the first level it appears at.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semantics::enumerate_preferred;
use crate::system::ArgumentSystem;

pub const MINLEN_MAX_VARS: usize = 4;
pub const DEFAULT_LITERAL_CAP: usize = 16;
/// Largest `n` for which `L(n)` is computed by enumerating every system.
pub const L_OF_N_MAX_ARGS: usize = 3;

/// A boolean function of `n <= 4` variables: bit `p` of `table` is the
/// value at the point whose bit `j - 1` is `x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    table: u16,
}

impl TruthTable {
    pub fn new(n: usize, table: u16) -> Result<Self> {
        if n > MINLEN_MAX_VARS {
            return Err(Error::cap(
                "minimal-length variable count",
                MINLEN_MAX_VARS,
                n,
            ));
        }
        let points = 1u32 << n;
        if points < 16 && u32::from(table) >> points != 0 {
            return Err(Error::WidthMismatch {
                expected: points as usize,
                got: 16 - table.leading_zeros() as usize,
            });
        }
        Ok(TruthTable { n, table })
    }

    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool) -> Result<Self> {
        if n > MINLEN_MAX_VARS {
            return Err(Error::cap(
                "minimal-length variable count",
                MINLEN_MAX_VARS,
                n,
            ));
        }
        let table = (0..1u64 << n)
            .filter(|&p| f(p))
            .fold(0u16, |acc, p| acc | 1 << p);
        TruthTable::new(n, table)
    }

    /// `x_var` as a function of `n` variables.
    pub fn variable(n: usize, var: usize) -> Result<Self> {
        TruthTable::from_fn(n, |p| p >> (var - 1) & 1 == 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> u16 {
        self.table
    }

    pub fn value(&self, point: u64) -> bool {
        self.table >> point & 1 == 1
    }

    fn full(&self) -> u16 {
        low16(self.n)
    }

    pub fn is_constant(&self) -> bool {
        self.table == 0 || self.table == self.full()
    }
}

fn low16(n: usize) -> u16 {
    if n >= 4 {
        u16::MAX
    } else {
        (1u16 << (1 << n)) - 1
    }
}

/// The level-by-level closure, extended lazily and shared between queries
/// over the same `n`.
pub struct FormulaLengths {
    n: usize,
    /// 0 = not reached yet.
    best: Vec<u8>,
    levels: Vec<Vec<u16>>,
}

impl FormulaLengths {
    pub fn new(n: usize) -> Result<Self> {
        if n > MINLEN_MAX_VARS {
            return Err(Error::cap(
                "minimal-length variable count",
                MINLEN_MAX_VARS,
                n,
            ));
        }
        let mut best = alloc::vec![0u8; 1 << (1 << n)];
        let mut first = Vec::new();
        let full = low16(n);
        for var in 1..=n {
            let pos = TruthTable::variable(n, var)?.table;
            for t in [pos, !pos & full] {
                if best[t as usize] == 0 {
                    best[t as usize] = 1;
                    first.push(t);
                }
            }
        }
        Ok(FormulaLengths {
            n,
            best,
            // levels[0] stays empty so that levels[k] is length k
            levels: alloc::vec![Vec::new(), first],
        })
    }

    pub fn reached_level(&self) -> usize {
        self.levels.len() - 1
    }

    fn grow(&mut self) {
        let k = self.levels.len();
        let mut next = Vec::new();
        for i in 1..=k / 2 {
            let (left, right) = (&self.levels[i], &self.levels[k - i]);
            for &g in left {
                for &h in right {
                    for t in [g & h, g | h] {
                        let slot = &mut self.best[t as usize];
                        if *slot == 0 {
                            *slot = k as u8;
                            next.push(t);
                        }
                    }
                }
            }
        }
        self.levels.push(next);
    }

    /// Minimal literal count of `f`, or `None` when it exceeds `cap`.
    /// Constant functions are never reached: no formula without constants
    /// is constant.
    pub fn length(&mut self, f: TruthTable, cap: usize) -> Result<Option<usize>> {
        if f.n != self.n {
            return Err(Error::WidthMismatch {
                expected: self.n,
                got: f.n,
            });
        }
        if f.is_constant() {
            return Ok(None);
        }
        loop {
            let b = self.best[f.table as usize] as usize;
            if b != 0 {
                return Ok((b <= cap).then_some(b));
            }
            if self.reached_level() >= cap {
                return Ok(None);
            }
            self.grow();
        }
    }
}

/// `L(f)`: the minimal number of literal occurrences over `{∧, ∨, ¬}`.
pub fn min_formula_length(f: TruthTable, cap: usize) -> Result<Option<usize>> {
    FormulaLengths::new(f.n)?.length(f, cap)
}

/// `f_H` for the preferred semantics.
pub fn preferred_function(sys: &ArgumentSystem) -> Result<TruthTable> {
    let n = sys.len();
    if n > MINLEN_MAX_VARS {
        return Err(Error::cap(
            "minimal-length variable count",
            MINLEN_MAX_VARS,
            n,
        ));
    }
    let table = enumerate_preferred(sys)?
        .iter()
        .fold(0u16, |acc, s| acc | 1 << s.bits());
    TruthTable::new(n, table)
}

/// `L(n)` with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LOfN {
    pub n: usize,
    pub value: usize,
    /// Distinct functions `f_H` met while scanning all systems.
    pub distinct_functions: usize,
    /// Relation index (see [`ArgumentSystem::from_relation_index`]) of the
    /// first system attaining the maximum.
    pub witness: u64,
}

/// `L(n) = max_H L(H)` over every system on `n <= 3` arguments, preferred
/// semantics.
pub fn compute_l_of_n(n: usize, cap: usize) -> Result<LOfN> {
    if n == 0 || n > L_OF_N_MAX_ARGS {
        return Err(Error::cap("L(n) argument count", L_OF_N_MAX_ARGS, n));
    }
    let relations = 1u64 << (n * (n - 1));
    let mut first_seen: Vec<(TruthTable, u64)> = Vec::new();
    for idx in 0..relations {
        let f = preferred_function(&ArgumentSystem::from_relation_index(n, idx)?)?;
        if !first_seen.iter().any(|(g, _)| *g == f) {
            first_seen.push((f, idx));
        }
    }
    let mut dp = FormulaLengths::new(n)?;
    let mut best: Option<(usize, u64)> = None;
    for &(f, idx) in &first_seen {
        let len = dp
            .length(f, cap)?
            .ok_or(Error::cap("formula length", cap, cap + 1))?;
        if best.map_or(true, |(b, _)| len > b) {
            best = Some((len, idx));
        }
    }
    let (value, witness) = best.expect("at least one system");
    Ok(LOfN {
        n,
        value,
        distinct_functions: first_seen.len(),
        witness,
    })
}

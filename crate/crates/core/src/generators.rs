//! Deterministic system families.

use crate::error::{Error, Result};
use crate::set::MAX_ARGS;
use crate::system::{ordered_pairs, ArgumentSystem};

/// The splitmix64 generator. Fixed here, rather than taken from a crate,
/// because generated corpora must be bit-identical everywhere.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Value in `0..bound` by plain reduction; `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Draw threshold for probability `p`: `floor(p * 2^64)`, or `None` when
/// every draw passes (`p = 1`).
fn threshold(p: f64) -> Result<Option<u64>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange);
    }
    if p >= 1.0 {
        return Ok(None);
    }
    // exact: scaling by a power of two, then truncation
    Ok(Some((p * 18_446_744_073_709_551_616.0) as u64))
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_ARGS {
        Err(Error::cap("argument count", MAX_ARGS, n))
    } else {
        Ok(())
    }
}

/// `t` disjoint triangles, each with all six attacks: `3^t` preferred
/// extensions on `3t` arguments.
pub fn gen_k3(t: usize) -> Result<ArgumentSystem> {
    check_n(t.saturating_mul(3))?;
    let attacks = (0..t).flat_map(|k| {
        let b = 3 * k;
        [
            (b, b + 1),
            (b, b + 2),
            (b + 1, b),
            (b + 1, b + 2),
            (b + 2, b),
            (b + 2, b + 1),
        ]
    });
    ArgumentSystem::with_default_names(3 * t, attacks)
}

/// `k` arguments and no attacks.
pub fn gen_isolated(k: usize) -> Result<ArgumentSystem> {
    check_n(k)?;
    ArgumentSystem::with_default_names(k, [])
}

/// The directed cycle `x1 → x2 → … → xn → x1`.
pub fn gen_cycle(n: usize) -> Result<ArgumentSystem> {
    check_n(n)?;
    if n < 2 {
        return Err(Error::InvalidSystem(
            "a cycle needs at least two arguments".into(),
        ));
    }
    ArgumentSystem::with_default_names(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Each ordered pair `(i, j)`, `i != j`, taken in ascending order, is an
/// attack when the next splitmix64 draw is below `floor(p * 2^64)`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<ArgumentSystem> {
    check_n(n)?;
    let threshold = threshold(p)?;
    let mut rng = SplitMix64::new(seed);
    let mut attacks = alloc::vec::Vec::new();
    for pair in ordered_pairs(n) {
        let draw = rng.next_u64();
        if threshold.map_or(true, |t| draw < t) {
            attacks.push(pair);
        }
    }
    ArgumentSystem::with_default_names(n, attacks)
}

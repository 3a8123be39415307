//! Argument subsets as characteristic words, and canonically ordered
//! families of them.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Largest number of arguments a system may have.
pub const MAX_ARGS: usize = 64;

/// A subset of `x_1..x_n` stored as a characteristic word: bit `j` is set
/// iff argument `x_{j+1}` is a member.
///
/// The width `n` lives with the host system, not in the set; bits at
/// positions `>= n` must be zero when the set is used with that system.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ArgSet(u64);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ArgSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{x_1, ..., x_n}`.
    pub const fn full(n: usize) -> Self {
        ArgSet(low_mask(n))
    }

    pub const fn singleton(i: usize) -> Self {
        ArgSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(ArgSet::EMPTY, |s, i| s.with(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        ArgSet(self.0 | 1 << i)
    }

    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        ArgSet(self.0 & !(1 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub const fn union(self, other: ArgSet) -> Self {
        ArgSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: ArgSet) -> Self {
        ArgSet(self.0 & other.0)
    }

    pub const fn difference(self, other: ArgSet) -> Self {
        ArgSet(self.0 & !other.0)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_subset(self, other: ArgSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_strict_subset(self, other: ArgSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    /// True when no bit at position `>= n` is set.
    pub const fn fits(self, n: usize) -> bool {
        self.0 & !low_mask(n) == 0
    }

    pub(crate) fn check_width(self, n: usize) -> Result<()> {
        if self.fits(n) {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: n,
                got: 64 - self.0.leading_zeros() as usize,
            })
        }
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Order on characteristic strings `b_1 b_2 ... b_n`, compared
    /// lexicographically. Independent of `n` as long as both sets fit.
    pub fn lex_cmp(self, other: ArgSet) -> Ordering {
        self.0.reverse_bits().cmp(&other.0.reverse_bits())
    }

    /// The characteristic string `b_1 ... b_n` as ASCII `0`/`1`.
    pub fn to_bit_string(self, n: usize) -> alloc::string::String {
        (0..n)
            .map(|j| if self.contains(j) { '1' } else { '0' })
            .collect()
    }
}

pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ArgSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ArgSet::from_indices(iter)
    }
}

impl IntoIterator for ArgSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of an [`ArgSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// Which sets a family collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    Preferred,
    Stable,
    Admissible,
}

impl Semantics {
    pub const fn name(self) -> &'static str {
        match self {
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
            Semantics::Admissible => "admissible",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A duplicate-free list of argument sets over `x_1..x_n`, kept in
/// ascending lexicographic order of characteristic strings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtensionFamily {
    n: usize,
    semantics: Semantics,
    members: Vec<ArgSet>,
}

impl ExtensionFamily {
    /// Sorts and deduplicates `members`. Preferred families must also be a
    /// non-empty antichain.
    pub fn new(n: usize, semantics: Semantics, members: Vec<ArgSet>) -> Result<Self> {
        if n > MAX_ARGS {
            return Err(Error::cap("argument count", MAX_ARGS, n));
        }
        for s in &members {
            s.check_width(n)?;
        }
        let family = Self::from_unsorted(n, semantics, members);
        if semantics == Semantics::Preferred {
            if family.is_empty() {
                return Err(Error::InvalidFamily(
                    "a preferred family is never empty".into(),
                ));
            }
            if !family.is_antichain() {
                return Err(Error::InvalidFamily(
                    "preferred extensions are pairwise incomparable".into(),
                ));
            }
        }
        Ok(family)
    }

    pub(crate) fn from_unsorted(n: usize, semantics: Semantics, mut members: Vec<ArgSet>) -> Self {
        members.sort_unstable_by(|a, b| a.lex_cmp(*b));
        members.dedup();
        ExtensionFamily {
            n,
            semantics,
            members,
        }
    }

    /// A family for problems that take an arbitrary candidate list (the
    /// realisability input): canonical order, duplicates rejected, no
    /// structural requirement beyond width.
    pub fn candidate(n: usize, members: Vec<ArgSet>) -> Result<Self> {
        if n > MAX_ARGS {
            return Err(Error::cap("argument count", MAX_ARGS, n));
        }
        for s in &members {
            s.check_width(n)?;
        }
        let count = members.len();
        let family = Self::from_unsorted(n, Semantics::Preferred, members);
        if family.len() != count {
            return Err(Error::InvalidFamily("duplicate member".into()));
        }
        Ok(family)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn members(&self) -> &[ArgSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: ArgSet) -> bool {
        self.members.binary_search_by(|m| m.lex_cmp(s)).is_ok()
    }

    pub fn iter(&self) -> core::iter::Copied<core::slice::Iter<'_, ArgSet>> {
        self.members.iter().copied()
    }

    /// No member is a strict subset of another.
    pub fn is_antichain(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members[i + 1..]
                .iter()
                .all(|b| !a.is_subset(*b) && !b.is_subset(*a))
        })
    }

    /// Same members, ignoring the semantics tag.
    pub fn same_sets(&self, other: &ExtensionFamily) -> bool {
        self.n == other.n && self.members == other.members
    }
}

/// Families order by width, then member by member in canonical order,
/// then by semantics tag.
impl Ord for ExtensionFamily {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| {
                let by_member = self
                    .members
                    .iter()
                    .zip(&other.members)
                    .map(|(a, b)| a.lex_cmp(*b))
                    .find(|o| o.is_ne());
                by_member.unwrap_or_else(|| self.members.len().cmp(&other.members.len()))
            })
            .then_with(|| self.semantics.cmp(&other.semantics))
    }
}

impl PartialOrd for ExtensionFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExtensionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.semantics)?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&m.to_bit_string(self.n))?;
        }
        f.write_str("]")
    }
}

//! Finite argument systems and the primitive predicates over them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::set::{low_mask, ArgSet, MAX_ARGS};

/// A finite argument system `(X, A)`.
///
/// Attacks are ordered pairs `(attacker, target)` of distinct arguments.
/// Both directions of the relation are held as bit masks so every
/// predicate is a handful of word operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgumentSystem {
    names: Vec<String>,
    /// `attackers[t]`: who attacks `t`.
    attackers: Vec<u64>,
    /// `targets[a]`: whom `a` attacks.
    targets: Vec<u64>,
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl ArgumentSystem {
    /// Builds a system from argument names and index pairs.
    ///
    /// Rejects duplicate or malformed names, out-of-range endpoints,
    /// self-attacks, duplicate pairs and more than 64 arguments.
    pub fn new<S, I>(names: Vec<S>, attacks: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = (usize, usize)>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        if n > MAX_ARGS {
            return Err(Error::cap("argument count", MAX_ARGS, n));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidSystem(format!(
                    "malformed argument name {name:?}"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidSystem(format!("duplicate argument {name}")));
            }
        }
        let mut sys = ArgumentSystem {
            names,
            attackers: alloc::vec![0; n],
            targets: alloc::vec![0; n],
        };
        for (a, t) in attacks {
            for i in [a, t] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            if a == t {
                return Err(Error::InvalidSystem(format!(
                    "self-attack on {}",
                    sys.names[a]
                )));
            }
            if sys.targets[a] >> t & 1 == 1 {
                return Err(Error::InvalidSystem(format!(
                    "duplicate attack ({}, {})",
                    sys.names[a], sys.names[t]
                )));
            }
            sys.targets[a] |= 1 << t;
            sys.attackers[t] |= 1 << a;
        }
        Ok(sys)
    }

    /// Arguments named `x1..xn`.
    pub fn with_default_names<I>(n: usize, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ARGS {
            return Err(Error::cap("argument count", MAX_ARGS, n));
        }
        Self::new(default_names(n), attacks)
    }

    /// Builds from an attacker-mask row per target; the caller guarantees
    /// the masks are in range and irreflexive.
    pub(crate) fn from_target_masks(names: Vec<String>, targets: Vec<u64>) -> Self {
        let n = names.len();
        let mut attackers = alloc::vec![0u64; n];
        for (a, &row) in targets.iter().enumerate() {
            for t in ArgSet::from_bits(row) {
                attackers[t] |= 1 << a;
            }
        }
        debug_assert!(targets.iter().enumerate().all(|(a, r)| r >> a & 1 == 0));
        ArgumentSystem {
            names,
            attackers,
            targets,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all(&self) -> ArgSet {
        ArgSet::full(self.len())
    }

    pub fn attackers_of(&self, t: usize) -> ArgSet {
        ArgSet::from_bits(self.attackers[t])
    }

    pub fn targets_of(&self, a: usize) -> ArgSet {
        ArgSet::from_bits(self.targets[a])
    }

    pub fn attacks(&self, a: usize, t: usize) -> bool {
        self.targets[a] >> t & 1 == 1
    }

    pub fn attack_count(&self) -> usize {
        self.targets.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All attack pairs ordered by `(attacker, target)` index.
    pub fn attack_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.targets
            .iter()
            .enumerate()
            .flat_map(|(a, &row)| ArgSet::from_bits(row).iter().map(move |t| (a, t)))
    }

    /// Same arguments, every attack turned around.
    pub fn reversed(&self) -> Self {
        ArgumentSystem {
            names: self.names.clone(),
            attackers: self.targets.clone(),
            targets: self.attackers.clone(),
        }
    }

    /// Parses a comma-separated list of argument names; the empty string
    /// (or only whitespace) is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<ArgSet> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(ArgSet::EMPTY);
        }
        let mut set = ArgSet::EMPTY;
        for part in text.split(',') {
            let name = part.trim();
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::InvalidSystem(format!("unknown argument {name:?}")))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Member names in argument order.
    pub fn set_names(&self, s: ArgSet) -> Vec<&str> {
        s.iter().map(|i| self.name(i)).collect()
    }

    pub fn format_set(&self, s: ArgSet) -> String {
        self.set_names(s).join(",")
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.len(),
            })
        }
    }

    pub(crate) fn check_set(&self, s: ArgSet) -> Result<()> {
        s.check_width(self.len())
    }

    /// Union of the targets of every member of `s`.
    pub(crate) fn attacked_by(&self, s: ArgSet) -> u64 {
        s.iter().fold(0, |acc, i| acc | self.targets[i])
    }

    /// Union of the attackers of every member of `s`.
    pub(crate) fn attackers_of_set(&self, s: ArgSet) -> u64 {
        s.iter().fold(0, |acc, i| acc | self.attackers[i])
    }

    pub(crate) fn conflict_free_raw(&self, s: ArgSet) -> bool {
        self.attacked_by(s) & s.bits() == 0
    }

    pub(crate) fn admissible_raw(&self, s: ArgSet) -> bool {
        let hit = self.attacked_by(s);
        hit & s.bits() == 0 && self.attackers_of_set(s) & !hit == 0
    }

    pub(crate) fn stable_raw(&self, s: ArgSet) -> bool {
        let hit = self.attacked_by(s);
        hit & s.bits() == 0 && (hit | s.bits()) == low_mask(self.len())
    }

    /// Is `s` attacked by some member of `r`?
    pub fn is_attacked(&self, r: ArgSet, s: usize) -> Result<bool> {
        self.check_index(s)?;
        self.check_set(r)?;
        Ok(self.attackers[s] & r.bits() != 0)
    }

    /// Is every attacker of `x` attacked by `s`?
    pub fn is_acceptable(&self, x: usize, s: ArgSet) -> Result<bool> {
        self.check_index(x)?;
        self.check_set(s)?;
        Ok(self.attackers[x] & !self.attacked_by(s) == 0)
    }

    pub fn is_conflict_free(&self, s: ArgSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.conflict_free_raw(s))
    }

    /// Conflict-free, and every member acceptable with respect to `s`.
    pub fn is_admissible(&self, s: ArgSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.admissible_raw(s))
    }

    /// Conflict-free, and every argument outside `s` attacked by it.
    pub fn is_stable(&self, s: ArgSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.stable_raw(s))
    }

    /// The attack relation as a bitmask over the pairs `(i, j)`, `i != j`,
    /// in ascending `(i, j)` order. Only defined for `n <= 8`.
    pub fn relation_index(&self) -> Option<u64> {
        let n = self.len();
        if n > 8 {
            return None;
        }
        let mut idx = 0u64;
        for (k, (a, t)) in ordered_pairs(n).enumerate() {
            if self.attacks(a, t) {
                idx |= 1 << k;
            }
        }
        Some(idx)
    }

    /// Inverse of [`relation_index`](Self::relation_index), with default names.
    pub fn from_relation_index(n: usize, index: u64) -> Result<Self> {
        if n > 8 {
            return Err(Error::cap("argument count for relation indexing", 8, n));
        }
        let pairs = n * n.saturating_sub(1);
        if pairs < 64 && index >> pairs != 0 {
            return Err(Error::InvalidSystem(format!(
                "relation index {index} exceeds {pairs} pairs"
            )));
        }
        let mut targets = alloc::vec![0u64; n];
        for (k, (a, t)) in ordered_pairs(n).enumerate() {
            if index >> k & 1 == 1 {
                targets[a] |= 1 << t;
            }
        }
        Ok(Self::from_target_masks(default_names(n), targets))
    }
}

/// `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Pairs `(i, j)` with `i != j` in ascending lexicographic order.
pub fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
}

impl core::fmt::Debug for ArgumentSystem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let pairs: Vec<String> = self
            .attack_pairs()
            .map(|(a, t)| format!("{}->{}", self.names[a], self.names[t]))
            .collect();
        write!(f, "AF{{{}; {}}}", self.names.join(","), pairs.join(","))
    }
}

impl core::fmt::Display for ArgumentSystem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        core::fmt::Debug::fmt(self, f)
    }
}

/// Handy for tests and examples: a system from name pairs over the
/// given names.
pub fn system_from_names(names: &[&str], attacks: &[(&str, &str)]) -> Result<ArgumentSystem> {
    let idx = |s: &str| {
        names
            .iter()
            .position(|n| *n == s)
            .ok_or_else(|| Error::InvalidSystem(format!("unknown argument {s}")))
    };
    let pairs = attacks
        .iter()
        .map(|(a, t)| Ok((idx(a)?, idx(t)?)))
        .collect::<Result<Vec<_>>>()?;
    ArgumentSystem::new(names.iter().map(|s| s.to_string()).collect(), pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_ab() -> ArgumentSystem {
        system_from_names(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn two_cycle() -> ArgumentSystem {
        system_from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap()
    }

    fn three_cycle() -> ArgumentSystem {
        system_from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    fn mutual_defense() -> ArgumentSystem {
        system_from_names(
            &["a", "b", "c", "d"],
            &[("c", "a"), ("d", "b"), ("b", "c"), ("a", "d")],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            ArgumentSystem::with_default_names(2, [(0, 0)]),
            Err(Error::InvalidSystem(_))
        ));
        assert!(ArgumentSystem::with_default_names(2, [(0, 1), (0, 1)]).is_err());
        assert!(ArgumentSystem::with_default_names(2, [(0, 2)]).is_err());
        assert!(ArgumentSystem::new(alloc::vec!["a", "a"], []).is_err());
        assert!(ArgumentSystem::new(alloc::vec!["a-b"], []).is_err());
        assert!(ArgumentSystem::new(alloc::vec![""], []).is_err());
        assert!(matches!(
            ArgumentSystem::with_default_names(65, []),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(
            ArgumentSystem::with_default_names(64, [(63, 0)])
                .unwrap()
                .len(),
            64
        );
    }

    #[test]
    fn is_attacked_cases() {
        let a = ArgSet::singleton(0);
        let b = ArgSet::singleton(1);
        assert!(chain_ab().is_attacked(a, 1).unwrap());
        assert!(!chain_ab().is_attacked(ArgSet::EMPTY, 1).unwrap());
        assert!(!three_cycle().is_attacked(ArgSet::EMPTY, 0).unwrap());
        assert!(two_cycle().is_attacked(b, 0).unwrap());
        assert!(matches!(
            chain_ab().is_attacked(a, 2),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        ));
    }

    #[test]
    fn is_acceptable_cases() {
        // c attacks b, b attacks a
        let h = system_from_names(&["a", "b", "c"], &[("c", "b"), ("b", "a")]).unwrap();
        assert!(h.is_acceptable(0, ArgSet::singleton(2)).unwrap());
        assert!(h.is_acceptable(2, ArgSet::EMPTY).unwrap());
        assert!(!chain_ab().is_acceptable(1, ArgSet::EMPTY).unwrap());
        assert!(h.is_acceptable(3, ArgSet::EMPTY).is_err());
    }

    #[test]
    fn conflict_free_cases() {
        assert!(two_cycle().is_conflict_free(ArgSet::EMPTY).unwrap());
        assert!(!two_cycle().is_conflict_free(ArgSet::full(2)).unwrap());
        let iso = ArgumentSystem::with_default_names(3, []).unwrap();
        assert!(iso.is_conflict_free(ArgSet::full(3)).unwrap());
        assert!(matches!(
            iso.is_conflict_free(ArgSet::singleton(3)),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn admissible_cases() {
        assert!(three_cycle().is_admissible(ArgSet::EMPTY).unwrap());
        assert!(!three_cycle().is_admissible(ArgSet::singleton(0)).unwrap());
        let md = mutual_defense();
        assert!(md.is_admissible(ArgSet::from_indices([0, 1])).unwrap());
        assert!(!md.is_admissible(ArgSet::singleton(0)).unwrap());
        assert!(!md.is_admissible(ArgSet::singleton(1)).unwrap());
    }

    #[test]
    fn stable_cases() {
        assert!(chain_ab().is_stable(ArgSet::singleton(0)).unwrap());
        let h = three_cycle();
        assert!((0..8u64).all(|s| !h.is_stable(ArgSet::from_bits(s)).unwrap()));
        let empty = ArgumentSystem::with_default_names(0, []).unwrap();
        assert!(empty.is_stable(ArgSet::EMPTY).unwrap());
    }

    #[test]
    fn relation_index_round_trips() {
        for idx in 0..4096u64 {
            let h = ArgumentSystem::from_relation_index(4, idx).unwrap();
            assert_eq!(h.relation_index(), Some(idx));
        }
        assert!(ArgumentSystem::from_relation_index(2, 4).is_err());
        // pair order for n = 3: (0,1) (0,2) (1,0) (1,2) (2,0) (2,1)
        let h = ArgumentSystem::from_relation_index(3, 0b000100).unwrap();
        assert!(h.attacks(1, 0) && h.attack_count() == 1);
    }

    #[test]
    fn set_parsing() {
        let h = two_cycle();
        assert_eq!(h.parse_set("").unwrap(), ArgSet::EMPTY);
        assert_eq!(h.parse_set(" b , a").unwrap(), ArgSet::full(2));
        assert!(h.parse_set("c").is_err());
        assert_eq!(h.format_set(ArgSet::full(2)), "a,b");
    }

    #[test]
    fn reversal_swaps_orientation() {
        let r = chain_ab().reversed();
        assert!(r.attacks(1, 0) && !r.attacks(0, 1));
        assert_eq!(r.reversed(), chain_ab());
    }
}

//! Which families are the preferred extensions of some system on the
//! same arguments?
//!
//! The brute-force route tries every attack relation. The cheap route is
//! a set of necessary conditions ([`prefilter`]) plus two readings of a
//! candidate pair-based condition ([`condition_literal`],
//! [`condition_existential`]); [`survey`] tabulates how each reading
//! relates to actual realisability for small `n`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::semantics::{enumerate_preferred, oracle_extensions};
use crate::set::{ArgSet, ExtensionFamily, Semantics};
use crate::system::ArgumentSystem;

/// Default brute-force cap; `n = 5` needs an explicit opt-in.
pub const REALISE_MAX_ARGS: usize = 4;
pub const REALISE_MAX_ARGS_EXTENDED: usize = 5;
pub const SURVEY_MAX_ARGS: usize = 4;

/// Why a family cannot be realised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefilterReason {
    /// Some preferred extension always exists.
    Empty,
    /// `smaller ⊊ larger`, but preferred extensions are ⊆-maximal.
    NotAntichain { smaller: ArgSet, larger: ArgSet },
    /// `∅` is preferred only when it is the sole preferred extension.
    EmptySetAmongOthers,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefilter {
    pub reasons: Vec<PrefilterReason>,
}

impl Prefilter {
    pub fn pass(&self) -> bool {
        self.reasons.is_empty()
    }
}

pub fn prefilter(family: &ExtensionFamily) -> Prefilter {
    let mut reasons = Vec::new();
    if family.is_empty() {
        reasons.push(PrefilterReason::Empty);
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if a.is_strict_subset(b) {
                reasons.push(PrefilterReason::NotAntichain {
                    smaller: a,
                    larger: b,
                });
            } else if b.is_strict_subset(a) {
                reasons.push(PrefilterReason::NotAntichain {
                    smaller: b,
                    larger: a,
                });
            }
        }
    }
    if members.len() > 1 && family.contains(ArgSet::EMPTY) {
        reasons.push(PrefilterReason::EmptySetAmongOthers);
    }
    Prefilter { reasons }
}

/// The sets `T = S_i ∪ {z}`, `z ∉ S_i`, in member-then-`z` order.
fn one_step_supersets(family: &ExtensionFamily) -> impl Iterator<Item = ArgSet> + '_ {
    let n = family.n();
    family
        .iter()
        .flat_map(move |s| ArgSet::full(n).difference(s).iter().map(move |z| s.with(z)))
}

fn pairs(t: ArgSet) -> impl Iterator<Item = (usize, usize)> {
    t.iter()
        .flat_map(move |x| t.iter().filter(move |&y| y > x).map(move |y| (x, y)))
}

/// A violation of the literal reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiteralWitness {
    pub superset: ArgSet,
    pub pair: (usize, usize),
    pub member: ArgSet,
}

/// Literal reading: for every `T = S_i ∪ {z}` and every pair `{x, y} ⊆ T`,
/// since some member lies strictly inside `T`, no member may contain
/// `{x, y}`. Returns the first violation found.
pub fn condition_literal(family: &ExtensionFamily) -> Option<LiteralWitness> {
    for t in one_step_supersets(family) {
        if !family.iter().any(|s| s.is_strict_subset(t)) {
            continue;
        }
        for (x, y) in pairs(t) {
            let pair = ArgSet::singleton(x).with(y);
            if let Some(member) = family.iter().find(|s| pair.is_subset(*s)) {
                return Some(LiteralWitness {
                    superset: t,
                    pair: (x, y),
                    member,
                });
            }
        }
    }
    None
}

/// Existential reading: every `T = S_i ∪ {z}` contains some pair that no
/// member contains. Returns the first `T` without such a pair.
pub fn condition_existential(family: &ExtensionFamily) -> Option<ArgSet> {
    one_step_supersets(family).find(|&t| {
        !pairs(t).any(|(x, y)| {
            let pair = ArgSet::singleton(x).with(y);
            !family.iter().any(|s| pair.is_subset(s))
        })
    })
}

/// The first system (in relation-index order) whose preferred extensions
/// are exactly `family`, confirmed against the power-set oracle.
pub fn realise_bruteforce(
    family: &ExtensionFamily,
    allow_five: bool,
) -> Result<Option<ArgumentSystem>> {
    let n = family.n();
    let cap = if allow_five {
        REALISE_MAX_ARGS_EXTENDED
    } else {
        REALISE_MAX_ARGS
    };
    if n > cap {
        return Err(Error::cap("realisation argument count", cap, n));
    }
    for idx in 0..relation_count(n) {
        let sys = ArgumentSystem::from_relation_index(n, idx)?;
        if enumerate_preferred(&sys)?.same_sets(family) {
            let check = oracle_extensions(&sys, Semantics::Preferred)?;
            assert!(
                check.same_sets(family),
                "search and oracle disagree on relation {idx}"
            );
            return Ok(Some(sys));
        }
    }
    Ok(None)
}

/// `2^{n(n-1)}`.
pub fn relation_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1))
}

/// Preferred families realised by the relations with index in `range`.
/// Chunks can be computed independently and merged by set union.
pub fn realized_families(n: usize, range: Range<u64>) -> Result<BTreeSet<ExtensionFamily>> {
    if n > SURVEY_MAX_ARGS {
        return Err(Error::cap("survey argument count", SURVEY_MAX_ARGS, n));
    }
    let mut out = BTreeSet::new();
    for idx in range {
        let sys = ArgumentSystem::from_relation_index(n, idx)?;
        out.insert(enumerate_preferred(&sys)?);
    }
    Ok(out)
}

/// Every antichain over the subsets of `X_n`, the empty family included.
pub fn antichain_families(n: usize) -> Result<Vec<ExtensionFamily>> {
    if n > SURVEY_MAX_ARGS {
        return Err(Error::cap("survey argument count", SURVEY_MAX_ARGS, n));
    }
    let subsets = 1usize << n;
    let mut out = Vec::new();
    for mask in 0u64..1u64 << subsets {
        let members: Vec<ArgSet> = (0..subsets as u64)
            .filter(|&s| mask >> s & 1 == 1)
            .map(ArgSet::from_bits)
            .collect();
        let antichain = members.iter().enumerate().all(|(i, a)| {
            members[i + 1..]
                .iter()
                .all(|b| !a.is_subset(*b) && !b.is_subset(*a))
        });
        if antichain {
            out.push(ExtensionFamily::from_unsorted(
                n,
                Semantics::Preferred,
                members,
            ));
        }
    }
    out.sort();
    Ok(out)
}

/// How one reading of the condition lines up with realisability.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConditionTally {
    pub realized_true: usize,
    pub realized_false: usize,
    pub unrealized_true: usize,
    pub unrealized_false: usize,
    /// Realised families on which the condition fails.
    pub necessity_counterexamples: Vec<ExtensionFamily>,
    /// Unrealised families that pass the prefilter and the condition.
    pub sufficiency_counterexamples: Vec<ExtensionFamily>,
}

impl ConditionTally {
    fn record(
        &mut self,
        family: &ExtensionFamily,
        realized: bool,
        prefilter_ok: bool,
        holds: bool,
    ) {
        match (realized, holds) {
            (true, true) => self.realized_true += 1,
            (true, false) => {
                self.realized_false += 1;
                self.necessity_counterexamples.push(family.clone());
            }
            (false, true) => {
                self.unrealized_true += 1;
                if prefilter_ok {
                    self.sufficiency_counterexamples.push(family.clone());
                }
            }
            (false, false) => self.unrealized_false += 1,
        }
    }

    /// No realised family violates the condition.
    pub fn necessary(&self) -> bool {
        self.realized_false == 0
    }

    /// Prefilter plus condition implies realisable.
    pub fn sufficient_with_prefilter(&self) -> bool {
        self.sufficiency_counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub n: usize,
    pub systems: u64,
    /// Distinct preferred families, canonically sorted.
    pub realized: Vec<ExtensionFamily>,
    /// Number of antichain families over `℘(X_n)`.
    pub candidates: usize,
    /// Candidates passing the prefilter.
    pub prefilter_pass: usize,
    /// Realised families rejected by the prefilter (must stay empty).
    pub prefilter_violations: Vec<ExtensionFamily>,
    pub literal: ConditionTally,
    pub existential: ConditionTally,
}

/// Cross-tabulates the candidates against an already computed set of
/// realised families.
pub fn survey_from_realized(n: usize, realized: BTreeSet<ExtensionFamily>) -> Result<SurveyReport> {
    let candidates = antichain_families(n)?;
    let mut literal = ConditionTally::default();
    let mut existential = ConditionTally::default();
    let mut prefilter_pass = 0;
    for family in &candidates {
        let is_realized = realized.contains(family);
        let ok = prefilter(family).pass();
        prefilter_pass += ok as usize;
        literal.record(family, is_realized, ok, condition_literal(family).is_none());
        existential.record(
            family,
            is_realized,
            ok,
            condition_existential(family).is_none(),
        );
    }
    let prefilter_violations = realized
        .iter()
        .filter(|f| !prefilter(f).pass())
        .cloned()
        .collect();
    Ok(SurveyReport {
        n,
        systems: relation_count(n),
        realized: realized.into_iter().collect(),
        candidates: candidates.len(),
        prefilter_pass,
        prefilter_violations,
        literal,
        existential,
    })
}

pub fn survey(n: usize) -> Result<SurveyReport> {
    if n > SURVEY_MAX_ARGS {
        return Err(Error::cap("survey argument count", SURVEY_MAX_ARGS, n));
    }
    let realized = realized_families(n, 0..relation_count(n))?;
    survey_from_realized(n, realized)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fam(n: usize, sets: &[&[usize]]) -> ExtensionFamily {
        ExtensionFamily::candidate(
            n,
            sets.iter()
                .map(|s| ArgSet::from_indices(s.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn prefilter_cases() {
        let p = prefilter(&fam(2, &[]));
        assert_eq!(p.reasons, [PrefilterReason::Empty]);
        let p = prefilter(&fam(2, &[&[0], &[0, 1]]));
        assert!(matches!(
            p.reasons[..],
            [PrefilterReason::NotAntichain { .. }]
        ));
        assert!(prefilter(&fam(2, &[&[0], &[1]])).pass());
        let p = prefilter(&fam(2, &[&[], &[1]]));
        assert!(p.reasons.contains(&PrefilterReason::EmptySetAmongOthers));
        assert!(prefilter(&fam(3, &[&[]])).pass());
    }

    #[test]
    fn literal_reading() {
        assert_eq!(condition_literal(&fam(2, &[&[0], &[1]])), None);
        let w = condition_literal(&fam(3, &[&[0, 1]])).unwrap();
        assert_eq!(w.superset, ArgSet::full(3));
        assert_eq!(w.pair, (0, 1));
        assert_eq!(w.member, ArgSet::from_indices([0, 1]));
        assert_eq!(condition_literal(&fam(3, &[&[0, 1, 2]])), None);
    }

    #[test]
    fn existential_reading() {
        assert_eq!(condition_existential(&fam(3, &[&[0, 1]])), None);
        assert_eq!(condition_existential(&fam(2, &[&[0], &[1]])), None);
        assert_eq!(condition_existential(&fam(3, &[&[0, 1, 2]])), None);
        // T = {x1} has no pair at all
        assert_eq!(
            condition_existential(&fam(1, &[&[]])),
            Some(ArgSet::singleton(0))
        );
    }

    #[test]
    fn bruteforce_realisation() {
        let h = realise_bruteforce(&fam(2, &[&[0], &[1]]), false)
            .unwrap()
            .unwrap();
        assert!(h.attacks(0, 1) && h.attacks(1, 0));
        let target = fam(3, &[&[0, 1]]);
        let h = realise_bruteforce(&target, false).unwrap().unwrap();
        assert!(enumerate_preferred(&h).unwrap().same_sets(&target));
        assert!(realise_bruteforce(&fam(2, &[&[0], &[0, 1]]), false)
            .unwrap()
            .is_none());
        assert!(matches!(
            realise_bruteforce(&fam(5, &[&[0]]), false),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn survey_small() {
        let r = survey(1).unwrap();
        assert_eq!(r.systems, 1);
        assert_eq!(r.realized, vec![fam(1, &[&[0]])]);

        let r = survey(2).unwrap();
        assert_eq!(r.systems, 4);
        let mut want = vec![
            fam(2, &[&[0, 1]]),
            fam(2, &[&[0]]),
            fam(2, &[&[1]]),
            fam(2, &[&[0], &[1]]),
        ];
        want.sort();
        assert_eq!(r.realized, want);
        assert!(r.prefilter_violations.is_empty());
    }

    #[test]
    fn antichain_counts_are_dedekind_numbers() {
        let counts: Vec<usize> = (0..=3)
            .map(|n| antichain_families(n).unwrap().len())
            .collect();
        assert_eq!(counts, [2, 3, 6, 20]);
    }

    #[test]
    fn chunked_scan_matches_full_scan() {
        let full = realized_families(3, 0..64).unwrap();
        let mut merged = realized_families(3, 0..20).unwrap();
        merged.extend(realized_families(3, 20..64).unwrap());
        assert_eq!(full, merged);
    }
}

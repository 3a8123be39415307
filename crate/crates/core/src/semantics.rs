//! Extension families, acceptance and coherence.
//!
//! Two independent routes compute every family: [`oracle_extensions`]
//! scans the whole power set, while [`enumerate_preferred`] and
//! [`enumerate_stable`] run the pruned search. The search is correct
//! exactly when it agrees with the scan.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::search::{admissible_supersets, collect_admissible, collect_stable, Budget};
use crate::set::{ArgSet, ExtensionFamily, Semantics};
use crate::system::ArgumentSystem;

/// Largest system the power-set oracle accepts.
pub const ORACLE_MAX_ARGS: usize = 22;

/// Exact family by testing every one of the `2^n` subsets.
pub fn oracle_extensions(sys: &ArgumentSystem, semantics: Semantics) -> Result<ExtensionFamily> {
    let n = sys.len();
    if n > ORACLE_MAX_ARGS {
        return Err(Error::cap("oracle argument count", ORACLE_MAX_ARGS, n));
    }
    let members: Vec<ArgSet> = (0..1u64 << n)
        .map(ArgSet::from_bits)
        .filter(|&s| match semantics {
            Semantics::Stable => sys.stable_raw(s),
            Semantics::Admissible | Semantics::Preferred => sys.admissible_raw(s),
        })
        .collect();
    let members = if semantics == Semantics::Preferred {
        maximal_only(members)
    } else {
        members
    };
    Ok(ExtensionFamily::from_unsorted(n, semantics, members))
}

/// Keeps the ⊆-maximal members. Every non-maximal set sits under a
/// larger maximal one, so scanning by decreasing size and comparing
/// against the survivors is enough.
pub(crate) fn maximal_only(mut sets: Vec<ArgSet>) -> Vec<ArgSet> {
    sets.sort_unstable_by_key(|s| core::cmp::Reverse(s.len()));
    let mut kept: Vec<ArgSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|m| s.is_subset(*m)) {
            kept.push(s);
        }
    }
    kept
}

pub fn enumerate_admissible(sys: &ArgumentSystem, budget: &mut Budget) -> Result<ExtensionFamily> {
    let found = collect_admissible(sys, ArgSet::EMPTY, budget)?;
    Ok(ExtensionFamily::from_unsorted(
        sys.len(),
        Semantics::Admissible,
        found,
    ))
}

/// Preferred extensions: the ⊆-maximal admissible sets found by search.
pub fn enumerate_preferred(sys: &ArgumentSystem) -> Result<ExtensionFamily> {
    enumerate_preferred_with(sys, &mut Budget::unlimited())
}

pub fn enumerate_preferred_with(
    sys: &ArgumentSystem,
    budget: &mut Budget,
) -> Result<ExtensionFamily> {
    let found = collect_admissible(sys, ArgSet::EMPTY, budget)?;
    Ok(ExtensionFamily::from_unsorted(
        sys.len(),
        Semantics::Preferred,
        maximal_only(found),
    ))
}

pub fn enumerate_stable(sys: &ArgumentSystem) -> Result<ExtensionFamily> {
    enumerate_stable_with(sys, &mut Budget::unlimited())
}

pub fn enumerate_stable_with(sys: &ArgumentSystem, budget: &mut Budget) -> Result<ExtensionFamily> {
    let found = collect_stable(sys, ArgSet::EMPTY, budget)?;
    Ok(ExtensionFamily::from_unsorted(
        sys.len(),
        Semantics::Stable,
        found,
    ))
}

/// Search-based enumeration for the given semantics.
pub fn enumerate(sys: &ArgumentSystem, semantics: Semantics) -> Result<ExtensionFamily> {
    let mut budget = Budget::unlimited();
    match semantics {
        Semantics::Preferred => enumerate_preferred_with(sys, &mut budget),
        Semantics::Stable => enumerate_stable_with(sys, &mut budget),
        Semantics::Admissible => enumerate_admissible(sys, &mut budget),
    }
}

/// Is there an admissible `T` with `forced ⊆ T` and `T != except`?
fn admissible_superset_exists(
    sys: &ArgumentSystem,
    forced: ArgSet,
    except: Option<ArgSet>,
    budget: &mut Budget,
) -> Result<bool> {
    let flow = admissible_supersets(sys, forced, budget, |t| {
        if Some(t) == except {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })?;
    Ok(flow.is_break())
}

/// Admissible, and no admissible strict superset exists anywhere.
///
/// Adding one argument at a time is not enough to test maximality: a
/// larger admissible set may need several arguments that defend each
/// other, so the superset search is complete.
pub fn is_preferred(sys: &ArgumentSystem, s: ArgSet) -> Result<bool> {
    is_preferred_with(sys, s, &mut Budget::unlimited())
}

pub fn is_preferred_with(sys: &ArgumentSystem, s: ArgSet, budget: &mut Budget) -> Result<bool> {
    sys.check_set(s)?;
    if !sys.admissible_raw(s) {
        return Ok(false);
    }
    Ok(!admissible_superset_exists(sys, s, Some(s), budget)?)
}

/// Some preferred extension contains `x`, i.e. some admissible set does.
pub fn credulous(sys: &ArgumentSystem, x: usize) -> Result<bool> {
    credulous_with(sys, x, &mut Budget::unlimited())
}

pub fn credulous_with(sys: &ArgumentSystem, x: usize, budget: &mut Budget) -> Result<bool> {
    sys.check_index(x)?;
    admissible_superset_exists(sys, ArgSet::singleton(x), None, budget)
}

/// Every preferred extension contains `x`.
pub fn sceptical(sys: &ArgumentSystem, x: usize) -> Result<bool> {
    sys.check_index(x)?;
    let pe = enumerate_preferred(sys)?;
    Ok(pe.iter().all(|s| s.contains(x)))
}

/// Every preferred extension is stable.
pub fn is_coherent(sys: &ArgumentSystem) -> Result<bool> {
    let pe = enumerate_preferred(sys)?;
    Ok(pe.iter().all(|s| sys.stable_raw(s)))
}

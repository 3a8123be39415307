//! Depth-first search over conflict-free sets.
//!
//! Arguments are decided in index order. At every node the set `in`
//! is conflict-free and the candidates are the undecided arguments that
//! could still join it. Branches are explored "exclude" first, so leaves
//! are reached in ascending lexicographic order of characteristic strings.

use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::set::{low_mask, ArgSet};
use crate::system::ArgumentSystem;

/// Optional cap on the number of search nodes an operation may expand.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub const fn nodes(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExceeded { nodes: limit }),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Admissible,
    Stable,
}

struct Dfs<'a, F> {
    sys: &'a ArgumentSystem,
    all: u64,
    goal: Goal,
    budget: &'a mut Budget,
    visit: F,
}

/// Node state: the chosen set, what it attacks, and what attacks it.
#[derive(Clone, Copy)]
struct Node {
    chosen: u64,
    hit: u64,
    threats: u64,
}

impl Node {
    fn add(self, sys: &ArgumentSystem, i: usize) -> Node {
        Node {
            chosen: self.chosen | 1 << i,
            hit: self.hit | sys.targets_of(i).bits(),
            threats: self.threats | sys.attackers_of(i).bits(),
        }
    }
}

impl<F> Dfs<'_, F>
where
    F: FnMut(ArgSet) -> ControlFlow<()>,
{
    fn run(&mut self, node: Node, depth: usize) -> Result<ControlFlow<()>> {
        self.budget.tick()?;
        let n = self.sys.len();
        let undecided = self.all & !low_mask(depth);
        let candidates = undecided & !node.chosen & !node.hit & !node.threats;
        let reach = node.chosen | candidates;

        match self.goal {
            Goal::Admissible => {
                // every unanswered threat needs a candidate able to answer it
                let unanswered = node.threats & !node.hit;
                for y in ArgSet::from_bits(unanswered) {
                    if self.sys.attackers_of(y).bits() & candidates == 0 {
                        return Ok(ControlFlow::Continue(()));
                    }
                }
            }
            Goal::Stable => {
                // everything that can no longer join must end up attacked
                let outside = self.all & !reach & !node.hit;
                for y in ArgSet::from_bits(outside) {
                    if self.sys.attackers_of(y).bits() & candidates == 0 {
                        return Ok(ControlFlow::Continue(()));
                    }
                }
            }
        }

        let Some(i) = (depth..n).find(|&i| candidates >> i & 1 == 1) else {
            let done = match self.goal {
                Goal::Admissible => node.threats & !node.hit == 0,
                Goal::Stable => (node.hit | node.chosen) == self.all,
            };
            if done {
                return Ok((self.visit)(ArgSet::from_bits(node.chosen)));
            }
            return Ok(ControlFlow::Continue(()));
        };

        if let ControlFlow::Break(()) = self.run(node, i + 1)? {
            return Ok(ControlFlow::Break(()));
        }
        self.run(node.add(self.sys, i), i + 1)
    }
}

fn drive<F>(
    sys: &ArgumentSystem,
    forced: ArgSet,
    goal: Goal,
    budget: &mut Budget,
    visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(ArgSet) -> ControlFlow<()>,
{
    sys.check_set(forced)?;
    if !sys.conflict_free_raw(forced) {
        return Ok(ControlFlow::Continue(()));
    }
    let node = forced.iter().fold(
        Node {
            chosen: 0,
            hit: 0,
            threats: 0,
        },
        |node, i| node.add(sys, i),
    );
    let mut dfs = Dfs {
        sys,
        all: low_mask(sys.len()),
        goal,
        budget,
        visit,
    };
    dfs.run(node, 0)
}

/// Visits every admissible superset of `forced`, in canonical order.
pub fn admissible_supersets<F>(
    sys: &ArgumentSystem,
    forced: ArgSet,
    budget: &mut Budget,
    visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(ArgSet) -> ControlFlow<()>,
{
    drive(sys, forced, Goal::Admissible, budget, visit)
}

/// Visits every stable superset of `forced`, in canonical order.
pub fn stable_supersets<F>(
    sys: &ArgumentSystem,
    forced: ArgSet,
    budget: &mut Budget,
    visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(ArgSet) -> ControlFlow<()>,
{
    drive(sys, forced, Goal::Stable, budget, visit)
}

/// Every admissible superset of `forced`, in canonical order.
pub fn collect_admissible(
    sys: &ArgumentSystem,
    forced: ArgSet,
    budget: &mut Budget,
) -> Result<alloc::vec::Vec<ArgSet>> {
    let mut out = alloc::vec::Vec::new();
    let _ = admissible_supersets(sys, forced, budget, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Every stable superset of `forced`, in canonical order.
pub fn collect_stable(
    sys: &ArgumentSystem,
    forced: ArgSet,
    budget: &mut Budget,
) -> Result<alloc::vec::Vec<ArgSet>> {
    let mut out = alloc::vec::Vec::new();
    let _ = stable_supersets(sys, forced, budget, |s| {
        out.push(s);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn collect_adm(sys: &ArgumentSystem, forced: ArgSet) -> Vec<ArgSet> {
        collect_admissible(sys, forced, &mut Budget::unlimited()).unwrap()
    }

    #[test]
    fn leaves_arrive_in_lex_order() {
        let iso = ArgumentSystem::with_default_names(3, []).unwrap();
        let got = collect_adm(&iso, ArgSet::EMPTY);
        assert_eq!(got.len(), 8);
        assert!(got.windows(2).all(|w| w[0].lex_cmp(w[1]).is_lt()));
    }

    #[test]
    fn budget_is_enforced() {
        let iso = ArgumentSystem::with_default_names(10, []).unwrap();
        let err = admissible_supersets(&iso, ArgSet::EMPTY, &mut Budget::nodes(5), |_| {
            ControlFlow::Continue(())
        });
        assert_eq!(err, Err(Error::BudgetExceeded { nodes: 5 }));
    }

    #[test]
    fn conflicting_forced_set_yields_nothing() {
        let h = ArgumentSystem::with_default_names(2, [(0, 1)]).unwrap();
        assert!(collect_adm(&h, ArgSet::full(2)).is_empty());
    }

    #[test]
    fn every_visited_set_is_admissible_and_all_are_found() {
        for idx in (0..4096u64).step_by(7) {
            let h = ArgumentSystem::from_relation_index(4, idx).unwrap();
            let got = collect_adm(&h, ArgSet::EMPTY);
            let want: Vec<ArgSet> = (0..16u64)
                .map(ArgSet::from_bits)
                .filter(|&s| h.is_admissible(s).unwrap())
                .collect();
            let mut sorted = want.clone();
            sorted.sort_by(|a, b| a.lex_cmp(*b));
            assert_eq!(got, sorted, "{h:?}");
        }
    }
}

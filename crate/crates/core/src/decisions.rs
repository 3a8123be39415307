//! The four extension decision problems, with and without the per-argument
//! credulous-acceptance vector.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::search::{stable_supersets, Budget};
use crate::semantics::{credulous, is_preferred_with};
use crate::set::ArgSet;
use crate::system::ArgumentSystem;

/// One bit per argument, in argument order; bit `i` is meant to say
/// whether `x_i` is credulously accepted. Whether it actually does is
/// checked by [`validate_alpha`], not by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AcceptanceVector {
    n: usize,
    bits: ArgSet,
}

impl AcceptanceVector {
    pub fn new(n: usize, accepted: ArgSet) -> Result<Self> {
        accepted.check_width(n)?;
        Ok(AcceptanceVector { n, bits: accepted })
    }

    pub fn from_bools(bools: &[bool]) -> Result<Self> {
        let bits = bools
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| i)
            .collect::<ArgSet>();
        Self::new(bools.len(), bits)
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    /// The accepted arguments as a set.
    pub fn accepted(&self) -> ArgSet {
        self.bits
    }

    pub fn all_false(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    fn check_width(&self, sys: &ArgumentSystem) -> Result<()> {
        if self.n == sys.len() {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: sys.len(),
                got: self.n,
            })
        }
    }
}

/// PREF-EXT: is `s` a preferred extension?
pub fn decide_pref_ext(sys: &ArgumentSystem, s: ArgSet) -> Result<bool> {
    is_preferred_with(sys, s, &mut Budget::unlimited())
}

/// STAB-EXT: does some stable extension contain `s`?
pub fn decide_stab_ext(sys: &ArgumentSystem, s: ArgSet) -> Result<bool> {
    decide_stab_ext_with(sys, s, &mut Budget::unlimited())
}

pub fn decide_stab_ext_with(sys: &ArgumentSystem, s: ArgSet, budget: &mut Budget) -> Result<bool> {
    sys.check_set(s)?;
    let flow = stable_supersets(sys, s, budget, |_| ControlFlow::Break(()))?;
    Ok(flow.is_break())
}

pub fn compute_alpha(sys: &ArgumentSystem) -> Result<AcceptanceVector> {
    let mut accepted = ArgSet::EMPTY;
    for x in 0..sys.len() {
        if credulous(sys, x)? {
            accepted.insert(x);
        }
    }
    AcceptanceVector::new(sys.len(), accepted)
}

/// Does `alpha` mark exactly the credulously accepted arguments?
pub fn validate_alpha(sys: &ArgumentSystem, alpha: &AcceptanceVector) -> Result<bool> {
    alpha.check_width(sys)?;
    Ok(compute_alpha(sys)?.bits == alpha.bits)
}

/// Which route produced an answer of the `-inf` procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionPath {
    /// `S = ∅` for PREF-EXT-INF: answered by looking for any accepted bit.
    EmptySetFastPath,
    /// No argument is credulously accepted, so no stable extension can
    /// exist unless the system is empty.
    AllFalseFastPath,
    /// Some member of `S` is not credulously accepted. This shortcut is an
    /// addition of this implementation: members of preferred (and so of
    /// stable) extensions are always credulously accepted.
    UnacceptedMemberFastPath,
    /// Fell through to the complete decision procedure.
    FullSearch,
}

impl DecisionPath {
    pub const fn name(self) -> &'static str {
        match self {
            DecisionPath::EmptySetFastPath => "empty-set-fast-path",
            DecisionPath::AllFalseFastPath => "all-false-fast-path",
            DecisionPath::UnacceptedMemberFastPath => "unaccepted-member-fast-path",
            DecisionPath::FullSearch => "full-search",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfAnswer {
    pub answer: bool,
    pub path: DecisionPath,
}

fn check_inf_instance(
    sys: &ArgumentSystem,
    s: ArgSet,
    alpha: &AcceptanceVector,
    trust: bool,
) -> Result<()> {
    sys.check_set(s)?;
    alpha.check_width(sys)?;
    if !trust && !validate_alpha(sys, alpha)? {
        return Err(Error::InvalidAlpha);
    }
    Ok(())
}

/// PREF-EXT-INF. With `trust == false` the vector is validated first and a
/// wrong vector is an error rather than an answer under a broken promise.
pub fn decide_pref_ext_inf(
    sys: &ArgumentSystem,
    s: ArgSet,
    alpha: &AcceptanceVector,
    trust: bool,
) -> Result<InfAnswer> {
    check_inf_instance(sys, s, alpha, trust)?;
    if s.is_empty() {
        return Ok(InfAnswer {
            answer: alpha.all_false(),
            path: DecisionPath::EmptySetFastPath,
        });
    }
    if !s.is_subset(alpha.accepted()) {
        return Ok(InfAnswer {
            answer: false,
            path: DecisionPath::UnacceptedMemberFastPath,
        });
    }
    Ok(InfAnswer {
        answer: decide_pref_ext(sys, s)?,
        path: DecisionPath::FullSearch,
    })
}

/// STAB-EXT-INF, with the same trust contract as [`decide_pref_ext_inf`].
pub fn decide_stab_ext_inf(
    sys: &ArgumentSystem,
    s: ArgSet,
    alpha: &AcceptanceVector,
    trust: bool,
) -> Result<InfAnswer> {
    check_inf_instance(sys, s, alpha, trust)?;
    if alpha.all_false() && !sys.is_empty() {
        return Ok(InfAnswer {
            answer: false,
            path: DecisionPath::AllFalseFastPath,
        });
    }
    if !s.is_subset(alpha.accepted()) {
        return Ok(InfAnswer {
            answer: false,
            path: DecisionPath::UnacceptedMemberFastPath,
        });
    }
    Ok(InfAnswer {
        answer: decide_stab_ext(sys, s)?,
        path: DecisionPath::FullSearch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::system_from_names;

    fn chain() -> ArgumentSystem {
        system_from_names(&["a", "b"], &[("a", "b")]).unwrap()
    }
    fn two_cycle() -> ArgumentSystem {
        system_from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap()
    }
    fn three_cycle() -> ArgumentSystem {
        system_from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }
    fn alpha(b: &[bool]) -> AcceptanceVector {
        AcceptanceVector::from_bools(b).unwrap()
    }

    #[test]
    fn plain_decisions() {
        assert!(decide_pref_ext(&chain(), ArgSet::singleton(0)).unwrap());
        assert!(!decide_pref_ext(&two_cycle(), ArgSet::EMPTY).unwrap());
        assert!(decide_pref_ext(&three_cycle(), ArgSet::EMPTY).unwrap());

        assert!(!decide_stab_ext(&three_cycle(), ArgSet::EMPTY).unwrap());
        assert!(decide_stab_ext(&two_cycle(), ArgSet::EMPTY).unwrap());
        assert!(!decide_stab_ext(&chain(), ArgSet::singleton(1)).unwrap());
        assert!(decide_stab_ext(&chain(), ArgSet::singleton(0)).unwrap());
    }

    #[test]
    fn alpha_computation_and_validation() {
        assert_eq!(compute_alpha(&three_cycle()).unwrap(), alpha(&[false; 3]));
        assert_eq!(compute_alpha(&two_cycle()).unwrap(), alpha(&[true, true]));
        let iso = ArgumentSystem::with_default_names(3, []).unwrap();
        assert_eq!(compute_alpha(&iso).unwrap(), alpha(&[true; 3]));

        assert!(validate_alpha(&two_cycle(), &alpha(&[true, true])).unwrap());
        assert!(!validate_alpha(&two_cycle(), &alpha(&[true, false])).unwrap());
        let empty = ArgumentSystem::with_default_names(0, []).unwrap();
        assert!(validate_alpha(&empty, &alpha(&[])).unwrap());
        assert!(matches!(
            validate_alpha(&two_cycle(), &alpha(&[true])),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn pref_inf_paths() {
        let r =
            decide_pref_ext_inf(&three_cycle(), ArgSet::EMPTY, &alpha(&[false; 3]), true).unwrap();
        assert_eq!(
            r,
            InfAnswer {
                answer: true,
                path: DecisionPath::EmptySetFastPath
            }
        );
        let r = decide_pref_ext_inf(
            &two_cycle(),
            ArgSet::singleton(0),
            &alpha(&[true, true]),
            false,
        )
        .unwrap();
        assert!(r.answer);
        assert_eq!(r.path, DecisionPath::FullSearch);
        let r = decide_pref_ext_inf(&chain(), ArgSet::singleton(1), &alpha(&[true, false]), true)
            .unwrap();
        assert_eq!(
            r,
            InfAnswer {
                answer: false,
                path: DecisionPath::UnacceptedMemberFastPath
            }
        );
    }

    #[test]
    fn stab_inf_paths() {
        let r =
            decide_stab_ext_inf(&three_cycle(), ArgSet::EMPTY, &alpha(&[false; 3]), true).unwrap();
        assert_eq!(
            r,
            InfAnswer {
                answer: false,
                path: DecisionPath::AllFalseFastPath
            }
        );
        let r = decide_stab_ext_inf(
            &two_cycle(),
            ArgSet::singleton(1),
            &alpha(&[true, true]),
            true,
        )
        .unwrap();
        assert!(r.answer);
        let empty = ArgumentSystem::with_default_names(0, []).unwrap();
        let r = decide_stab_ext_inf(&empty, ArgSet::EMPTY, &alpha(&[]), false).unwrap();
        assert!(r.answer);
    }

    #[test]
    fn untrusted_mode_rejects_broken_promise() {
        let bad = alpha(&[true, false]);
        assert_eq!(
            decide_pref_ext_inf(&two_cycle(), ArgSet::EMPTY, &bad, false),
            Err(Error::InvalidAlpha)
        );
        assert_eq!(
            decide_stab_ext_inf(&two_cycle(), ArgSet::EMPTY, &bad, false),
            Err(Error::InvalidAlpha)
        );
        // trusted mode answers under the stated promise
        assert!(decide_pref_ext_inf(&two_cycle(), ArgSet::EMPTY, &bad, true).is_ok());
    }
}

//! From a 3-CNF formula `Φ` to a PREF-EXT-INF instance whose answer is
//! "yes" iff `Φ` is unsatisfiable, plus the harness that checks it.

mod cnf;
mod gadget;

pub use cnf::{
    brute_sat, fixture_single_clause, fixture_unsat, random_corpus, Assignment, CnfFormula,
    Literal, BRUTE_MAX_VARS,
};
pub use gadget::{
    build_h_psi, build_psi, check_psi_properties, expected_attack_count, gadget_size,
    GadgetVariant, PsiReport, ReductionInstance, Role,
};

use crate::decisions::{decide_pref_ext, decide_stab_ext, validate_alpha};
use crate::error::Result;

/// Outcome of running one formula through the whole pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub variant: GadgetVariant,
    pub var_count: usize,
    pub clause_count: usize,
    pub arguments: usize,
    pub attacks: usize,
    /// `Φ` is satisfiable (brute force).
    pub sat: bool,
    /// The query set is a preferred extension of `H_Ψ`.
    pub pref: bool,
    /// The query set extends to a stable extension of `H_Ψ`.
    pub stab: bool,
    /// The claimed acceptance vector is the true one.
    pub alpha_ok: bool,
    /// For the first model of `Φ`: its induced set is preferred.
    pub induced_preferred: Option<bool>,
    pub pass: bool,
}

impl ReductionReport {
    /// Which of the four checks failed, by name.
    pub fn failures(&self) -> alloc::vec::Vec<&'static str> {
        let mut out = alloc::vec::Vec::new();
        if self.pref == self.sat {
            out.push("pref-iff-unsat");
        }
        if self.stab != self.sat {
            out.push("stab-iff-sat");
        }
        if !self.alpha_ok {
            out.push("alpha");
        }
        if self.induced_preferred == Some(false) {
            out.push("induced-extension");
        }
        out
    }
}

pub fn verify_reduction(phi: &CnfFormula, variant: GadgetVariant) -> Result<ReductionReport> {
    let inst = build_h_psi(phi, variant)?;
    let model = brute_sat(phi)?;
    let sys = &inst.system;
    let pref = decide_pref_ext(sys, inst.query)?;
    let stab = decide_stab_ext(sys, inst.query)?;
    let alpha_ok = validate_alpha(sys, &inst.alpha)?;
    let induced_preferred = match model {
        Some(a) => Some(decide_pref_ext(sys, inst.induced_extension(a)?)?),
        None => None,
    };
    let mut report = ReductionReport {
        variant,
        var_count: phi.var_count(),
        clause_count: phi.clause_count(),
        arguments: sys.len(),
        attacks: sys.attack_count(),
        sat: model.is_some(),
        pref,
        stab,
        alpha_ok,
        induced_preferred,
        pass: false,
    };
    report.pass = report.failures().is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repaired_gadget_passes_fixtures() {
        let r = verify_reduction(&fixture_single_clause(), GadgetVariant::Repaired).unwrap();
        assert!(r.sat && !r.pref && r.stab && r.alpha_ok && r.pass, "{r:?}");
        let r = verify_reduction(&fixture_unsat(), GadgetVariant::Repaired).unwrap();
        assert!(!r.sat && r.pref && !r.stab && r.alpha_ok && r.pass, "{r:?}");
    }

    #[test]
    fn published_gadget_fails_on_unsatisfiable_fixture() {
        let r = verify_reduction(&fixture_unsat(), GadgetVariant::Published).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failures(), ["pref-iff-unsat", "stab-iff-sat", "alpha"]);
    }

    #[test]
    fn reversed_gadget_fails_on_unsatisfiable_fixture() {
        let r = verify_reduction(&fixture_unsat(), GadgetVariant::Reversed).unwrap();
        assert!(!r.pass);
        assert!(r.failures().contains(&"pref-iff-unsat"));
    }
}

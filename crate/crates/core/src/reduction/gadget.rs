//! The formula `Ψ` and the argument system `H_Ψ` built from it.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::cnf::{Assignment, CnfFormula, Literal};
use crate::decisions::AcceptanceVector;
use crate::error::{Error, Result};
use crate::set::{ArgSet, MAX_ARGS};
use crate::system::ArgumentSystem;

/// `Ψ(X_n, x_{n+1}, x_{n+2})`: each clause `C_i` becomes
/// `C_i ∨ ¬x_{n+1} ∨ x_{n+2}` and `C_i ∨ x_{n+1} ∨ ¬x_{n+2}`.
pub fn build_psi(phi: &CnfFormula) -> CnfFormula {
    let n = phi.var_count() as u32;
    let (a, b) = (n + 1, n + 2);
    let mut clauses = Vec::with_capacity(2 * phi.clause_count());
    for c in phi.clauses() {
        let mut first = c.clone();
        first.extend([Literal::neg(a), Literal::pos(b)]);
        let mut second = c.clone();
        second.extend([Literal::pos(a), Literal::neg(b)]);
        clauses.push(first);
        clauses.push(second);
    }
    CnfFormula::general(phi.var_count() + 2, clauses).expect("variables stay in range")
}

/// Brute-force check of the three properties of `Ψ` the gadget relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiReport {
    /// Every variable is true in some model of `Ψ`.
    pub each_var_can_be_true: bool,
    /// Every variable is false in some model of `Ψ`.
    pub each_var_can_be_false: bool,
    /// `Ψ` has a model with `x_{n+1} = ⊤, x_{n+2} = ⊥`.
    pub has_query_model: bool,
    pub phi_satisfiable: bool,
}

impl PsiReport {
    /// The query model exists exactly when `Φ` is satisfiable.
    pub fn query_model_matches_phi(&self) -> bool {
        self.has_query_model == self.phi_satisfiable
    }

    pub fn holds(&self) -> bool {
        self.each_var_can_be_true && self.each_var_can_be_false && self.query_model_matches_phi()
    }
}

pub fn check_psi_properties(phi: &CnfFormula) -> Result<PsiReport> {
    let psi = build_psi(phi);
    let n = phi.var_count();
    let width = psi.var_count();
    let mut seen_true = 0u64;
    let mut seen_false = 0u64;
    let mut has_query_model = false;
    for a in psi.models()? {
        let bits: u64 = a
            .to_bools()
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &v)| acc | (v as u64) << i);
        seen_true |= bits;
        seen_false |= !bits;
        if a.get(n as u32 + 1) && !a.get(n as u32 + 2) {
            has_query_model = true;
        }
    }
    let all = (1u64 << width) - 1;
    Ok(PsiReport {
        each_var_can_be_true: seen_true & all == all,
        each_var_can_be_false: seen_false & all == all,
        has_query_model,
        phi_satisfiable: phi.models()?.next().is_some(),
    })
}

/// Which reading of the construction's attack tuples to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetVariant {
    /// Tuples read as `(attacker, target)`, exactly as listed.
    Published,
    /// Every tuple turned around, the `(target, attacker)` reading.
    Reversed,
    /// [`Published`](Self::Published) plus `χ → C_j^(k)` for every clause
    /// argument. Without these attacks `{x_{n+1}, x̄_{n+2}, χ, C_j^(1)}` is
    /// admissible (`χ` answers the literal attackers of `C_j^(1)`, which in
    /// turn answers `Ψ`), which defeats every claim about the gadget.
    Repaired,
}

impl GadgetVariant {
    pub const ALL: [GadgetVariant; 3] = [
        GadgetVariant::Published,
        GadgetVariant::Reversed,
        GadgetVariant::Repaired,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            GadgetVariant::Published => "published",
            GadgetVariant::Reversed => "reversed",
            GadgetVariant::Repaired => "repaired",
        }
    }
}

/// What an argument of `H_Ψ` stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Psi,
    Chi,
    /// `x_i`.
    Positive(u32),
    /// `x̄_i`.
    Negative(u32),
    /// `C_j^(k)`, `k ∈ {1, 2}`.
    Clause(u32, u8),
}

impl Role {
    pub fn name(self) -> String {
        match self {
            Role::Psi => "PSI".into(),
            Role::Chi => "CHI".into(),
            Role::Positive(i) => format!("p{i}"),
            Role::Negative(i) => format!("n{i}"),
            Role::Clause(j, k) => format!("c{j}_{k}"),
        }
    }
}

/// `⟨H_Ψ, {x_{n+1}, x̄_{n+2}}, α_CA⟩` together with the role of every
/// argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub system: ArgumentSystem,
    pub query: ArgSet,
    /// The claimed credulous-acceptance pattern: accepted exactly on `Ψ`
    /// and the literal arguments.
    pub alpha: AcceptanceVector,
    pub roles: Vec<Role>,
    pub variant: GadgetVariant,
    /// Variables of `Φ`.
    pub var_count: usize,
    /// Clauses of `Φ`.
    pub clause_count: usize,
}

/// Argument layout: `PSI, CHI, p1, n1, …, p{n+2}, n{n+2}, c1_1, c1_2, …`.
struct Layout {
    n: usize,
}

impl Layout {
    const PSI: usize = 0;
    const CHI: usize = 1;

    fn pos(&self, i: u32) -> usize {
        2 + 2 * (i as usize - 1)
    }

    fn neg(&self, i: u32) -> usize {
        3 + 2 * (i as usize - 1)
    }

    fn lit(&self, l: Literal) -> usize {
        if l.is_positive() {
            self.pos(l.var())
        } else {
            self.neg(l.var())
        }
    }

    fn clause(&self, j: usize, k: usize) -> usize {
        2 + 2 * (self.n + 2) + 2 * j + k
    }
}

/// `2(m + n + 3)` for `m` clauses over `n` variables.
pub fn gadget_size(phi: &CnfFormula) -> usize {
    2 * (phi.clause_count() + phi.var_count() + 3)
}

/// Attack count when no clause repeats a literal: `4n + 12m + 5`.
pub fn expected_attack_count(phi: &CnfFormula) -> usize {
    4 * phi.var_count() + 12 * phi.clause_count() + 5
}

pub fn build_h_psi(phi: &CnfFormula, variant: GadgetVariant) -> Result<ReductionInstance> {
    if !phi.is_three_cnf() {
        return Err(Error::InvalidFormula(
            "the gadget takes a 3-CNF formula".into(),
        ));
    }
    let size = gadget_size(phi);
    if size > MAX_ARGS {
        return Err(Error::cap("gadget argument count", MAX_ARGS, size));
    }
    let n = phi.var_count();
    let m = phi.clause_count();
    let lay = Layout { n };
    let top = n as u32 + 2;
    let (q1, q2) = (n as u32 + 1, n as u32 + 2);

    let mut roles = alloc::vec![Role::Psi, Role::Chi];
    for i in 1..=top {
        roles.push(Role::Positive(i));
        roles.push(Role::Negative(i));
    }
    for j in 1..=m as u32 {
        roles.push(Role::Clause(j, 1));
        roles.push(Role::Clause(j, 2));
    }
    debug_assert_eq!(roles.len(), size);

    let mut attacks = BTreeSet::new();
    // 1. x_i ↔ x̄_i
    for i in 1..=top {
        attacks.insert((lay.pos(i), lay.neg(i)));
        attacks.insert((lay.neg(i), lay.pos(i)));
    }
    // 2. χ attacks both literals of every original variable
    for i in 1..=n as u32 {
        attacks.insert((Layout::CHI, lay.neg(i)));
        attacks.insert((Layout::CHI, lay.pos(i)));
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let (c1, c2) = (lay.clause(j, 0), lay.clause(j, 1));
        // 3. each literal of C_j attacks both clause arguments
        for &l in clause {
            attacks.insert((lay.lit(l), c1));
            attacks.insert((lay.lit(l), c2));
        }
        // 4.
        attacks.insert((c1, Layout::PSI));
        attacks.insert((c2, Layout::PSI));
        // 5.
        attacks.insert((lay.neg(q1), c1));
        attacks.insert((lay.pos(q2), c1));
        // 6.
        attacks.insert((lay.pos(q1), c2));
        attacks.insert((lay.neg(q2), c2));
        if variant == GadgetVariant::Repaired {
            attacks.insert((Layout::CHI, c1));
            attacks.insert((Layout::CHI, c2));
        }
    }
    // 7.
    attacks.insert((Layout::PSI, Layout::CHI));

    let pairs: Vec<(usize, usize)> = match variant {
        GadgetVariant::Reversed => attacks.into_iter().map(|(a, t)| (t, a)).collect(),
        _ => attacks.into_iter().collect(),
    };
    let names = roles.iter().map(|r| r.name()).collect();
    let system = ArgumentSystem::new(names, pairs)?;

    let query = ArgSet::singleton(lay.pos(q1)).with(lay.neg(q2));
    let accepted = roles
        .iter()
        .enumerate()
        .filter(|(_, r)| !matches!(r, Role::Chi | Role::Clause(..)))
        .map(|(i, _)| i)
        .collect::<ArgSet>();
    let alpha = AcceptanceVector::new(size, accepted)?;

    Ok(ReductionInstance {
        system,
        query,
        alpha,
        roles,
        variant,
        var_count: n,
        clause_count: m,
    })
}

impl ReductionInstance {
    pub fn index_of(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|r| *r == role)
    }

    /// `S_α = {x_{n+1}, x̄_{n+2}, Ψ} ∪ {x_i : α_i = ⊤} ∪ {x̄_i : α_i = ⊥}`
    /// for an assignment `α` of the original variables.
    pub fn induced_extension(&self, assignment: Assignment) -> Result<ArgSet> {
        if assignment.width() != self.var_count {
            return Err(Error::WidthMismatch {
                expected: self.var_count,
                got: assignment.width(),
            });
        }
        let lay = Layout { n: self.var_count };
        let mut s = self.query.with(Layout::PSI);
        for i in 1..=self.var_count as u32 {
            s.insert(if assignment.get(i) {
                lay.pos(i)
            } else {
                lay.neg(i)
            });
        }
        Ok(s)
    }
}

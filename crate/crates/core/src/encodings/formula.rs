use alloc::boxed::Box;
use core::fmt;

use crate::reduction::Literal;
use crate::set::{ArgSet, ExtensionFamily};

/// A propositional formula in negation-normal form over `x_1..x_n`.
///
/// `True` and `False` only occur as a whole formula: the empty
/// conjunction (a minterm over zero variables) and the empty disjunction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Lit(Literal),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    /// Number of literal leaves.
    pub fn literal_count(&self) -> usize {
        match self {
            Formula::True | Formula::False => 0,
            Formula::Lit(_) => 1,
            Formula::And(a, b) | Formula::Or(a, b) => a.literal_count() + b.literal_count(),
        }
    }

    /// Value at the point whose bit `j - 1` is `x_j`.
    pub fn eval(&self, point: u64) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Lit(l) => (point >> (l.var() - 1) & 1 == 1) == l.is_positive(),
            Formula::And(a, b) => a.eval(point) && b.eval(point),
            Formula::Or(a, b) => a.eval(point) || b.eval(point),
        }
    }

    /// `x_1 ∧ … ∧ x_n` with each literal signed by membership in `s`.
    pub fn minterm(n: usize, s: ArgSet) -> Formula {
        (1..=n as u32)
            .map(|v| Formula::Lit(Literal::new(v, s.contains(v as usize - 1))))
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }
}

/// Disjunction of one full minterm per family member, in family order.
pub fn dnf_formula(family: &ExtensionFamily) -> Formula {
    family
        .iter()
        .map(|s| Formula::minterm(family.n(), s))
        .reduce(Formula::or)
        .unwrap_or(Formula::False)
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("⊤"),
            Formula::False => f.write_str("⊥"),
            Formula::Lit(l) => write!(f, "{l:?}"),
            Formula::And(a, b) => {
                let wrap = |g: &Formula| matches!(g, Formula::Or(..));
                write_side(f, a, wrap(a))?;
                f.write_str(" ∧ ")?;
                write_side(f, b, wrap(b))
            }
            Formula::Or(a, b) => {
                write!(f, "{a} ∨ ")?;
                write_side(f, b, matches!(**b, Formula::Or(..)))
            }
        }
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, g: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({g})")
    } else {
        write!(f, "{g}")
    }
}

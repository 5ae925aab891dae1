//! Fixpoint semantics for programs with default, weak and strict negation.
//!
//! `sigma(P, (I, J, K))` is the least model of the reduct that keeps a clause
//! when its `not`-atoms lie in `I`, its `~w`-atoms in `J` and its `~s`-atoms
//! in `K`. A pair `(T, F)` solves the semantic equations when
//!
//! ```text
//! T = sigma(P, (F, B\T, F))
//! F = B \ sigma(P, (B\T, B\T, F))
//! T ∩ F = ∅
//! ```
//!
//! The transformation is not monotone, so solutions are found by exhaustive
//! enumeration of disjoint pairs.

use serde::Serialize;

use crate::alternating::{least_model, strip_negations, DefiniteProgram};
use crate::enumerate::{self, Limits};
use crate::error::Result;
use crate::semantics::Interpretation;
use crate::syntax::{Atom, AtomSet, Clause, Literal, LiteralKind, Program};

/// Atom sets assumed for `not`, `~w` and `~s` literals respectively.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriReductArgs {
    pub default: AtomSet,
    pub weak: AtomSet,
    pub strict: AtomSet,
}

impl TriReductArgs {
    pub fn new(default: AtomSet, weak: AtomSet, strict: AtomSet) -> TriReductArgs {
        TriReductArgs {
            default,
            weak,
            strict,
        }
    }

    /// Positive literals are always admitted; a negative one when its atom
    /// is in the matching set.
    pub fn admits_literal(&self, lit: &Literal) -> bool {
        match lit.kind {
            LiteralKind::Pos => true,
            LiteralKind::Not => self.default.contains(&lit.atom),
            LiteralKind::Weak => self.weak.contains(&lit.atom),
            LiteralKind::Strict => self.strict.contains(&lit.atom),
        }
    }

    /// Whether the negative literals of `clause` are all satisfied by the assumptions.
    pub fn admits(&self, clause: &Clause) -> bool {
        clause.body.iter().all(|l| self.admits_literal(l))
    }
}

pub fn tri_reduct(p: &Program, args: &TriReductArgs) -> DefiniteProgram {
    DefiniteProgram::from_reduct(
        p.clauses()
            .iter()
            .filter(|c| args.admits(c))
            .map(strip_negations)
            .collect(),
    )
}

pub fn sigma(p: &Program, args: &TriReductArgs) -> AtomSet {
    least_model(p.clauses().iter().filter(|c| args.admits(c)))
}

/// `sigma(P, (F, B\T, F))`: the atoms the pair supports as true.
pub fn true_support(p: &Program, t: &AtomSet, f: &AtomSet) -> AtomSet {
    sigma(
        p,
        &TriReductArgs::new(f.clone(), p.complement(t), f.clone()),
    )
}

/// `sigma(P, (B\T, B\T, F))`: the atoms the pair leaves possibly true.
pub fn possible_support(p: &Program, t: &AtomSet, f: &AtomSet) -> AtomSet {
    let not_true = p.complement(t);
    sigma(
        p,
        &TriReductArgs::new(not_true.clone(), not_true, f.clone()),
    )
}

/// A disjoint pair satisfying both semantic equations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EquationSolution(Interpretation);

impl EquationSolution {
    pub fn interpretation(&self) -> &Interpretation {
        &self.0
    }

    pub fn into_interpretation(self) -> Interpretation {
        self.0
    }
}

/// Whether the disjoint pair `(t, f)` satisfies both semantic equations.
pub fn is_equation_solution(p: &Program, t: &AtomSet, f: &AtomSet) -> bool {
    t.is_disjoint(f)
        && &true_support(p, t, f) == t
        && &p.complement(&possible_support(p, t, f)) == f
}

pub fn solve_semantic_equations(p: &Program, limits: &Limits) -> Result<Vec<EquationSolution>> {
    let mut solutions = enumerate::disjoint_pairs(p.base(), limits, |t, f| {
        is_equation_solution(p, &t, &f)
            .then(|| EquationSolution(Interpretation::new_unchecked(t, f)))
    })?;
    solutions.sort();
    Ok(solutions)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Witness {
    Atom(Atom),
    Clause(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Condition {
    fn from_atom(witness: Option<&Atom>) -> Condition {
        Condition {
            holds: witness.is_none(),
            witness: witness.cloned().map(Witness::Atom),
        }
    }
}

/// Sufficient conditions for a pair `(T, F)` to be a 3-valued model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// (a) `T ∩ F = ∅`; witness: a shared atom.
    pub disjoint: Condition,
    /// (b) `sigma(P, (F, B\T, F)) = T`; witness: an atom in the symmetric difference.
    pub true_set_supported: Condition,
    /// (c) `sigma(P, (B\T, B\T, F))` avoids `F`; witness: an atom of `F` it contains.
    pub false_set_unsupported: Condition,
    /// (d) every clause with head in `F` has a positive atom in `F`, a `not` or
    /// `~w` atom in `T`, or a `~s` atom outside `F`; witness: the first clause that has none.
    pub false_heads_blocked: Condition,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.disjoint.holds
            && self.true_set_supported.holds
            && self.false_set_unsupported.holds
            && self.false_heads_blocked.holds
    }
}

/// Whether some literal of a clause with head in `f` blocks its body.
fn clause_blocked(clause: &Clause, t: &AtomSet, f: &AtomSet) -> bool {
    clause.body.iter().any(|l| match l.kind {
        LiteralKind::Pos => f.contains(&l.atom),
        LiteralKind::Not | LiteralKind::Weak => t.contains(&l.atom),
        LiteralKind::Strict => !f.contains(&l.atom),
    })
}

pub fn check_model_conditions(p: &Program, t: &AtomSet, f: &AtomSet) -> ConditionReport {
    let supported = true_support(p, t, f);
    let possible = possible_support(p, t, f);
    let unblocked = p
        .clauses()
        .iter()
        .find(|c| f.contains(&c.head) && !clause_blocked(c, t, f));
    ConditionReport {
        disjoint: Condition::from_atom(t.intersection(f).next()),
        true_set_supported: Condition::from_atom(supported.symmetric_difference(t).next()),
        false_set_unsupported: Condition::from_atom(possible.intersection(f).next()),
        false_heads_blocked: Condition {
            holds: unblocked.is_none(),
            witness: unblocked.map(|c| Witness::Clause(c.to_string())),
        },
    }
}

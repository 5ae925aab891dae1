//! Alternating fixpoint semantics for general logic programs.
//!
//! `s_p(P, K)` is the least model of the reduct `P[K]`, which keeps a clause
//! when all of its default-negated atoms are assumed false (members of `K`).
//! The alternating operator works on false sets:
//!
//! ```text
//! alternating_operator(P, K) = B_P \ s_p(P, B_P \ s_p(P, K))
//! ```
//!
//! and its least fixpoint `J*` gives the well-founded model `(s_p(P, J*), J*)`.

use std::ops::Deref;

use crate::enumerate::{self, Limits};
use crate::error::{Error, Result};
use crate::semantics::Interpretation;
use crate::syntax::{AtomSet, Clause, LiteralKind, Program};

/// A program whose clause bodies contain only positive literals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DefiniteProgram(Program);

impl DefiniteProgram {
    pub fn new(program: Program) -> Result<DefiniteProgram> {
        if let Some(c) = program
            .clauses()
            .iter()
            .find(|c| c.body.iter().any(|l| !l.is_positive()))
        {
            return Err(Error::NotDefinite {
                clause: c.to_string(),
            });
        }
        Ok(DefiniteProgram(program))
    }

    /// Clauses produced by a reduct are definite by construction.
    pub(crate) fn from_reduct(clauses: Vec<Clause>) -> DefiniteProgram {
        DefiniteProgram(Program::new(clauses))
    }

    pub fn into_program(self) -> Program {
        self.0
    }
}

impl Deref for DefiniteProgram {
    type Target = Program;

    fn deref(&self) -> &Program {
        &self.0
    }
}

/// A program using at most default negation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneralProgram(Program);

impl GeneralProgram {
    pub fn new(program: Program) -> Result<GeneralProgram> {
        if let Some(c) = program.first_non_general() {
            return Err(Error::NotGeneralProgram {
                clause: c.to_string(),
            });
        }
        Ok(GeneralProgram(program))
    }

    pub fn into_program(self) -> Program {
        self.0
    }
}

impl Deref for GeneralProgram {
    type Target = Program;

    fn deref(&self) -> &Program {
        &self.0
    }
}

/// Heads of the clauses whose bodies lie entirely in `j`.
pub fn immediate_consequence(q: &DefiniteProgram, j: &AtomSet) -> AtomSet {
    q.clauses()
        .iter()
        .filter(|c| c.body.iter().all(|l| j.contains(&l.atom)))
        .map(|c| c.head.clone())
        .collect()
}

/// Least fixpoint of the immediate consequence operator, iterated from the empty set.
pub fn lfp_definite(q: &DefiniteProgram) -> AtomSet {
    least_model(q.clauses())
}

/// Least model of a set of definite clauses. Negative literals, if any, are ignored.
pub(crate) fn least_model<'a>(clauses: impl IntoIterator<Item = &'a Clause>) -> AtomSet {
    let clauses: Vec<&Clause> = clauses.into_iter().collect();
    let mut model = AtomSet::new();
    loop {
        let next: AtomSet = clauses
            .iter()
            .filter(|c| c.body_atoms(LiteralKind::Pos).all(|a| model.contains(a)))
            .map(|c| c.head.clone())
            .collect();
        if next == model {
            return model;
        }
        model = next;
    }
}

/// Keeps the clauses whose default-negated atoms all lie in `k`, dropping the negated literals.
pub fn reduct(p: &GeneralProgram, k: &AtomSet) -> DefiniteProgram {
    DefiniteProgram::from_reduct(reduct_clauses(p, k).map(strip_negations).collect())
}

fn reduct_clauses<'a>(p: &'a GeneralProgram, k: &'a AtomSet) -> impl Iterator<Item = &'a Clause> {
    p.clauses()
        .iter()
        .filter(move |c| c.body_atoms(LiteralKind::Not).all(|a| k.contains(a)))
}

pub(crate) fn strip_negations(c: &Clause) -> Clause {
    Clause::new(
        c.head.clone(),
        c.body.iter().filter(|l| l.is_positive()).cloned().collect(),
    )
}

/// Atoms derivable when the atoms of `k` are taken as false.
pub fn s_p(p: &GeneralProgram, k: &AtomSet) -> AtomSet {
    least_model(reduct_clauses(p, k))
}

pub fn alternating_operator(p: &GeneralProgram, k: &AtomSet) -> AtomSet {
    let possibly_false = p.complement(&s_p(p, k));
    p.complement(&s_p(p, &possibly_false))
}

/// The single-complement composition `s_p(P, B_P \ s_p(P, K))`. Kept for
/// comparison only: its fixpoints do not describe stable models.
pub fn single_complement_operator(p: &GeneralProgram, k: &AtomSet) -> AtomSet {
    s_p(p, &p.complement(&s_p(p, k)))
}

/// All 3-valued stable models `(s_p(P, J), J)` where `J` is a fixpoint of
/// the alternating operator and the pair is consistent.
pub fn three_valued_stable_models(
    p: &GeneralProgram,
    limits: &Limits,
) -> Result<Vec<Interpretation>> {
    let mut models = enumerate::subsets(p.base(), limits, |j| {
        if alternating_operator(p, &j) != j {
            return None;
        }
        let t = s_p(p, &j);
        t.is_disjoint(&j)
            .then(|| Interpretation::new_unchecked(t, j))
    })?;
    models.sort();
    Ok(models)
}

/// Least fixpoint of `op` by iteration from the empty set.
fn least_fixpoint(mut op: impl FnMut(&AtomSet) -> AtomSet) -> AtomSet {
    let mut current = AtomSet::new();
    loop {
        let next = op(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

pub fn well_founded_model(p: &GeneralProgram) -> Interpretation {
    let false_set = least_fixpoint(|k| alternating_operator(p, k));
    let true_set = s_p(p, &false_set);
    Interpretation::new_unchecked(true_set, false_set)
}

//! Success and failure of goals under negation as failure, weak failure and
//! strict failure.
//!
//! The rules deriving `suc(G)` and `fail(G)` have two negative premises:
//! `~w A` succeeds when `A` does not succeed, and `~s A` fails when `A` does
//! not fail. [`closure_with_oracle`] fixes those two premises against a
//! candidate pair `(T, F)` and computes the least closure of the remaining
//! monotone rules. A candidate is admissible when the closure derives exactly
//! `(T, F)` back. Admissible pairs are found by enumeration; their
//! componentwise intersection answers queries skeptically.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::enumerate::{self, Limits};
use crate::equations::{possible_support, sigma, true_support, TriReductArgs};
use crate::error::{Error, Result};
use crate::semantics::{satisfies, Interpretation};
use crate::syntax::{Atom, AtomSet, Goal, Literal, LiteralKind, Program};

/// A goal with order and multiplicity erased.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CanonicalGoal(BTreeSet<Literal>);

impl CanonicalGoal {
    pub fn literals(&self) -> &BTreeSet<Literal> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when no literal is positive; the empty goal qualifies.
    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|l| !l.is_positive())
    }
}

impl From<&Goal> for CanonicalGoal {
    fn from(goal: &Goal) -> Self {
        goal.body.iter().cloned().collect()
    }
}

impl FromIterator<Literal> for CanonicalGoal {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        CanonicalGoal(iter.into_iter().collect())
    }
}

impl fmt::Display for CanonicalGoal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let goal = Goal::new(self.0.iter().cloned().collect());
        write!(f, "{goal}")
    }
}

/// Goals reachable from `?- a.` by SLD resolution that contain only negative literals.
pub fn n_res(p: &Program, a: &Atom) -> BTreeSet<CanonicalGoal> {
    let start: CanonicalGoal = std::iter::once(Literal::pos(a.clone())).collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(goal) = queue.pop_front() {
        for selected in goal.0.iter().filter(|l| l.is_positive()) {
            for clause in p.clauses_for(&selected.atom) {
                let mut next = goal.0.clone();
                next.remove(selected);
                next.extend(clause.body.iter().cloned());
                let next = CanonicalGoal(next);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter()
        .filter(CanonicalGoal::is_negative)
        .collect()
}

/// Checks that `a ∈ sigma(p, args)` exactly when some all-negative resolvent
/// of `?- a.` has its `not`, `~w` and `~s` atoms in the respective sets.
pub fn sigma_nres_equivalence(p: &Program, args: &TriReductArgs, a: &Atom) -> bool {
    let by_fixpoint = sigma(p, args).contains(a);
    let by_resolution = n_res(p, a)
        .iter()
        .any(|g| g.literals().iter().all(|l| args.admits_literal(l)));
    by_fixpoint == by_resolution
}

/// Atom-level success and failure derived under a fixed oracle for the two
/// negative premises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureState {
    oracle_true: AtomSet,
    oracle_false: AtomSet,
    pub suc_atoms: AtomSet,
    pub fail_atoms: AtomSet,
    /// Iterations performed, including the one that found no change.
    pub rounds: usize,
}

impl ClosureState {
    pub fn literal_succeeds(&self, lit: &Literal) -> bool {
        let a = &lit.atom;
        match lit.kind {
            LiteralKind::Pos => self.suc_atoms.contains(a),
            LiteralKind::Not | LiteralKind::Strict => self.fail_atoms.contains(a),
            LiteralKind::Weak => !self.oracle_true.contains(a),
        }
    }

    pub fn literal_fails(&self, lit: &Literal) -> bool {
        let a = &lit.atom;
        match lit.kind {
            LiteralKind::Pos => self.fail_atoms.contains(a),
            LiteralKind::Not | LiteralKind::Weak => self.suc_atoms.contains(a),
            LiteralKind::Strict => !self.oracle_false.contains(a),
        }
    }

    pub fn body_succeeds(&self, body: &[Literal]) -> bool {
        body.iter().all(|l| self.literal_succeeds(l))
    }

    pub fn body_fails(&self, body: &[Literal]) -> bool {
        body.iter().any(|l| self.literal_fails(l))
    }

    fn literals_over<'a>(&'a self, atoms: &'a AtomSet) -> impl Iterator<Item = Literal> + 'a {
        atoms
            .iter()
            .flat_map(|a| LiteralKind::ALL.map(|k| Literal::new(k, a.clone())))
    }

    /// Succeeding literals over `atoms`.
    pub fn suc_literals(&self, atoms: &AtomSet) -> BTreeSet<Literal> {
        self.literals_over(atoms)
            .filter(|l| self.literal_succeeds(l))
            .collect()
    }

    /// Failing literals over `atoms`.
    pub fn fail_literals(&self, atoms: &AtomSet) -> BTreeSet<Literal> {
        self.literals_over(atoms)
            .filter(|l| self.literal_fails(l))
            .collect()
    }

    pub fn verdict(&self, body: &[Literal]) -> Verdict {
        if self.body_succeeds(body) {
            Verdict::Succeeds
        } else if self.body_fails(body) {
            Verdict::Fails
        } else {
            Verdict::Unknown
        }
    }
}

pub fn closure_with_oracle(p: &Program, t: &AtomSet, f: &AtomSet) -> ClosureState {
    let mut state = ClosureState {
        oracle_true: t.clone(),
        oracle_false: f.clone(),
        suc_atoms: AtomSet::new(),
        fail_atoms: AtomSet::new(),
        rounds: 0,
    };
    loop {
        state.rounds += 1;
        let mut suc = AtomSet::new();
        let mut fail = AtomSet::new();
        for atom in p.base() {
            let mut clauses = p.clauses_for(atom).peekable();
            if clauses.peek().is_none() {
                fail.insert(atom.clone());
                continue;
            }
            let (mut any_succeeds, mut all_fail) = (false, true);
            for c in clauses {
                any_succeeds |= state.body_succeeds(&c.body);
                all_fail &= state.body_fails(&c.body);
            }
            if any_succeeds {
                suc.insert(atom.clone());
            }
            if all_fail {
                fail.insert(atom.clone());
            }
        }
        if suc == state.suc_atoms && fail == state.fail_atoms {
            return state;
        }
        state.suc_atoms = suc;
        state.fail_atoms = fail;
    }
}

/// Whether the closure under oracle `(t, f)` derives exactly `(t, f)`.
pub fn is_self_consistent(p: &Program, t: &AtomSet, f: &AtomSet) -> bool {
    let state = closure_with_oracle(p, t, f);
    &state.suc_atoms == t && &state.fail_atoms == f
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleSet {
    pub pairs: Vec<Interpretation>,
    /// Componentwise intersection of `pairs`; absent when there are none.
    pub canonical: Option<Interpretation>,
}

pub fn admissible_pairs(p: &Program, limits: &Limits) -> Result<AdmissibleSet> {
    let mut pairs = enumerate::disjoint_pairs(p.base(), limits, |t, f| {
        is_self_consistent(p, &t, &f).then(|| Interpretation::new_unchecked(t, f))
    })?;
    pairs.sort();
    let canonical = pairs.split_first().map(|(first, rest)| {
        let (mut t, mut f) = first.clone().into_sets();
        for pair in rest {
            t.retain(|a| pair.true_set().contains(a));
            f.retain(|a| pair.false_set().contains(a));
        }
        Interpretation::new_unchecked(t, f)
    });
    Ok(AdmissibleSet { pairs, canonical })
}

/// Self-consistent candidates whose true and false sets overlap. Expected to
/// be empty for every program.
pub fn overlapping_self_consistent(
    p: &Program,
    limits: &Limits,
) -> Result<Vec<(AtomSet, AtomSet)>> {
    enumerate::overlapping_pairs(p.base(), limits, |t, f| {
        is_self_consistent(p, &t, &f).then_some((t, f))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Succeeds,
    Fails,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Succeeds => "succeeds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub pair: Interpretation,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryOutcome {
    pub goal: String,
    pub verdict: Verdict,
    pub canonical: Interpretation,
    pub admissible_count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_pair: Vec<PairVerdict>,
}

/// Answers `goal` in every admissible closure. The combined verdict is
/// `succeeds` (or `fails`) only when every closure agrees, `unknown` otherwise.
/// Goal atoms outside the program's base have no clauses and so fail.
pub fn query(p: &Program, admissible: &AdmissibleSet, goal: &Goal) -> Result<QueryOutcome> {
    let canonical = admissible
        .canonical
        .clone()
        .ok_or(Error::NoAdmissibleClosure)?;
    let extra: AtomSet = goal
        .body
        .iter()
        .map(|l| &l.atom)
        .filter(|a| !p.base().contains(*a))
        .cloned()
        .collect();
    let per_pair: Vec<PairVerdict> = admissible
        .pairs
        .iter()
        .map(|pair| {
            let t = pair.true_set().clone();
            let f: AtomSet = pair.false_set().union(&extra).cloned().collect();
            let state = ClosureState {
                oracle_true: t.clone(),
                oracle_false: f.clone(),
                suc_atoms: t,
                fail_atoms: f,
                rounds: 0,
            };
            PairVerdict {
                pair: pair.clone(),
                verdict: state.verdict(&goal.body),
            }
        })
        .collect();
    let unanimous = |v: Verdict| per_pair.iter().all(|pv| pv.verdict == v);
    let verdict = if unanimous(Verdict::Succeeds) {
        Verdict::Succeeds
    } else if unanimous(Verdict::Fails) {
        Verdict::Fails
    } else {
        Verdict::Unknown
    };
    Ok(QueryOutcome {
        goal: goal.to_string(),
        verdict,
        canonical,
        admissible_count: admissible.pairs.len(),
        per_pair,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessViolation {
    pub pair: Interpretation,
    pub is_model: bool,
    pub true_set_supported: bool,
    pub false_set_unsupported: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub checked: usize,
    pub violations: Vec<SoundnessViolation>,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every admissible pair `(T, F)`: it is a model, `T` equals
/// `sigma(P, (F, B\T, F))`, and `F` avoids `sigma(P, (B\T, B\T, F))`.
pub fn soundness_report(p: &Program, admissible: &AdmissibleSet) -> SoundnessReport {
    let violations = admissible
        .pairs
        .iter()
        .filter_map(|pair| {
            let (t, f) = (pair.true_set(), pair.false_set());
            let v = SoundnessViolation {
                pair: pair.clone(),
                is_model: satisfies(pair, p),
                true_set_supported: &true_support(p, t, f) == t,
                false_set_unsupported: possible_support(p, t, f).is_disjoint(f),
            };
            (!(v.is_model && v.true_set_supported && v.false_set_unsupported)).then_some(v)
        })
        .collect();
    SoundnessReport {
        checked: admissible.pairs.len(),
        violations,
    }
}

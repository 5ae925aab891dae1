//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles here deliberately avoid the engine's reducts and alternating
//! operator; they only reuse the parsed program representation.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use trineg::generate::GeneratorConfig;
use trineg::semantics::{Interpretation, TruthValue};
use trineg::syntax::{parse_atom_list, parse_program, AtomSet, LiteralKind, Program};

pub const TWO_FIXPOINTS: &str = "p :- not q, ~w r.\nr :- ~w p, ~s s.\n";
pub const ONE_FIXPOINT: &str = "p :- not q, ~w r.\nr :- not r, ~s s.\n";
pub const NO_FIXPOINT: &str = "p :- ~w q.\nq :- p, ~s s.\n";
pub const STRICT_LOOP: &str = "p :- ~s q.\nq :- q.\n";

pub fn prog(text: &str) -> Program {
    parse_program(text).unwrap()
}

pub fn set(names: &str) -> AtomSet {
    parse_atom_list(names).unwrap()
}

pub fn interp(t: &str, f: &str) -> Interpretation {
    Interpretation::new(set(t), set(f)).unwrap()
}

/// Seeded corpus of random programs: each has 1..=max_atoms atoms,
/// 1..=max_clauses clauses and bodies of at most `max_body` literals.
pub fn corpus(
    seed: u64,
    count: usize,
    max_atoms: usize,
    max_clauses: usize,
    max_body: usize,
    mix: [u32; 4],
) -> Vec<Program> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            GeneratorConfig {
                atom_count: rng.gen_range(1..=max_atoms),
                clause_count: rng.gen_range(1..=max_clauses),
                max_body_len: max_body,
                negation_mix: mix,
                seed: rng.gen(),
            }
            .generate()
            .unwrap()
        })
        .collect()
}

pub fn random_subset(rng: &mut impl Rng, base: &AtomSet) -> AtomSet {
    base.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

pub fn all_subsets(base: &AtomSet) -> Vec<AtomSet> {
    let atoms: Vec<_> = base.iter().collect();
    (0u32..1 << atoms.len())
        .map(|code| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect()
}

pub fn all_disjoint_pairs(base: &AtomSet) -> Vec<(AtomSet, AtomSet)> {
    let subsets = all_subsets(base);
    let mut pairs = Vec::new();
    for t in &subsets {
        for f in &subsets {
            if t.is_disjoint(f) {
                pairs.push((t.clone(), f.clone()));
            }
        }
    }
    pairs
}

/// Well-founded model by iterating `I -> (T_P(I), GUS_P(I))` from the empty
/// interpretation, where GUS is the greatest unfounded set.
pub fn wfm_by_unfounded_sets(p: &Program) -> Interpretation {
    let base = p.base();
    let (mut t, mut f) = (AtomSet::new(), AtomSet::new());
    let lit_true = |t: &AtomSet, f: &AtomSet, kind: LiteralKind, a| match kind {
        LiteralKind::Pos => t.contains(a),
        LiteralKind::Not => f.contains(a),
        _ => unreachable!("general programs only"),
    };
    let lit_false = |t: &AtomSet, f: &AtomSet, kind: LiteralKind, a| match kind {
        LiteralKind::Pos => f.contains(a),
        LiteralKind::Not => t.contains(a),
        _ => unreachable!("general programs only"),
    };
    loop {
        let next_t: AtomSet = p
            .clauses()
            .iter()
            .filter(|c| c.body.iter().all(|l| lit_true(&t, &f, l.kind, &l.atom)))
            .map(|c| c.head.clone())
            .collect();
        // greatest unfounded set: shrink from the whole base
        let mut unfounded = base.clone();
        loop {
            let keep: AtomSet = unfounded
                .iter()
                .filter(|a| {
                    p.clauses().iter().filter(|c| &c.head == *a).all(|c| {
                        c.body.iter().any(|l| {
                            lit_false(&t, &f, l.kind, &l.atom)
                                || (l.kind == LiteralKind::Pos && unfounded.contains(&l.atom))
                        })
                    })
                })
                .cloned()
                .collect();
            if keep == unfounded {
                break;
            }
            unfounded = keep;
        }
        if next_t == t && unfounded == f {
            return Interpretation::new(t, f).unwrap();
        }
        t = next_t;
        f = unfounded;
    }
}

/// 3-valued stable models as fixpoints of the 3-valued Gelfond-Lifschitz
/// transformation: replace each `not a` by its value under the candidate,
/// then take the truth-least model of the resulting positive program.
pub fn stable_by_gl_reduct(p: &Program) -> Vec<Interpretation> {
    let mut found: Vec<Interpretation> = all_disjoint_pairs(p.base())
        .into_iter()
        .filter_map(|(t, f)| {
            let candidate = Interpretation::new(t.clone(), f.clone()).unwrap();
            // each clause becomes (head, positive atoms, constant from negated literals)
            let reduced: Vec<_> = p
                .clauses()
                .iter()
                .map(|c| {
                    let constant = c
                        .body
                        .iter()
                        .filter(|l| l.kind == LiteralKind::Not)
                        .map(|l| match candidate.atom_value(&l.atom) {
                            TruthValue::True => TruthValue::False,
                            TruthValue::False => TruthValue::True,
                            TruthValue::Undefined => TruthValue::Undefined,
                        })
                        .min()
                        .unwrap_or(TruthValue::True);
                    let positives: Vec<_> = c
                        .body
                        .iter()
                        .filter(|l| l.kind == LiteralKind::Pos)
                        .map(|l| l.atom.clone())
                        .collect();
                    (c.head.clone(), positives, constant)
                })
                .collect();
            let least = |threshold: TruthValue| {
                let mut derived = AtomSet::new();
                loop {
                    let next: AtomSet = reduced
                        .iter()
                        .filter(|(_, pos, k)| {
                            *k >= threshold && pos.iter().all(|a| derived.contains(a))
                        })
                        .map(|(h, _, _)| h.clone())
                        .collect();
                    if next == derived {
                        return derived;
                    }
                    derived = next;
                }
            };
            let certainly = least(TruthValue::True);
            let possibly = least(TruthValue::Undefined);
            let false_set: AtomSet = p.base().difference(&possibly).cloned().collect();
            (certainly == t && false_set == f).then_some(candidate)
        })
        .collect();
    found.sort();
    found
}

/// The double-negation table as printed in the source material, rows t, u, f;
/// columns `not ~w`, `~w not`, `not ~s`, `~s not`, `~w ~s`, `~s ~w`.
pub const PUBLISHED_NEGATION_TABLE: [[char; 6]; 3] = [
    ['t', 't', 't', 't', 't', 't'],
    ['f', 't', 't', 'f', 't', 'f'],
    ['f', 'f', 'f', 'f', 'f', 'f'],
];

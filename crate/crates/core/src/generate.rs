//! Seeded random ground programs for property sweeps.

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::syntax::{Atom, Clause, Literal, LiteralKind, Program};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub atom_count: usize,
    pub clause_count: usize,
    pub max_body_len: usize,
    /// Relative weights of positive, `not`, `~w` and `~s` literals.
    pub negation_mix: [u32; 4],
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            atom_count: 4,
            clause_count: 5,
            max_body_len: 3,
            negation_mix: [1, 1, 1, 1],
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    /// Mix restricted to positive and default-negated literals.
    pub const GENERAL_MIX: [u32; 4] = [1, 1, 0, 0];

    /// Same config + seed always yields the same program.
    pub fn generate(&self) -> Result<Program> {
        if self.atom_count == 0 && self.clause_count > 0 {
            return Err(Error::InvalidGenerator(
                "clauses requested with zero atoms".into(),
            ));
        }
        let kinds = match WeightedIndex::new(self.negation_mix) {
            Ok(kinds) => Some(kinds),
            Err(_) if self.max_body_len == 0 => None,
            Err(_) => {
                return Err(Error::InvalidGenerator(
                    "negation mix needs a positive weight".into(),
                ))
            }
        };
        let atoms: Vec<Atom> = (0..self.atom_count)
            .map(|i| Atom::new(&atom_name(i)).expect("generated names are valid"))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut clauses = Vec::with_capacity(self.clause_count);
        for _ in 0..self.clause_count {
            let head = atoms[rng.gen_range(0..atoms.len())].clone();
            let len = rng.gen_range(0..=self.max_body_len);
            let body = match &kinds {
                Some(kinds) => (0..len)
                    .map(|_| {
                        let kind = LiteralKind::ALL[kinds.sample(&mut rng)];
                        Literal::new(kind, atoms[rng.gen_range(0..atoms.len())].clone())
                    })
                    .collect(),
                None => Vec::new(),
            };
            clauses.push(Clause::new(head, body));
        }
        Ok(Program::new(clauses))
    }
}

/// `p`, `q`, ..., `z`, then `p26`, `p27`, ...
fn atom_name(i: usize) -> String {
    const LETTERS: &[u8] = b"pqrstuvwxyzabcdefghijklmno";
    match LETTERS.get(i) {
        Some(&c) => (c as char).to_string(),
        None => format!("p{i}"),
    }
}

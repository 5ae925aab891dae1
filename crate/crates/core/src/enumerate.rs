//! Exhaustive candidate enumeration over a Herbrand base, with a size guard
//! and optional data parallelism.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::syntax::{Atom, AtomSet};

/// Largest base for which 4^n candidates still fit a `u64` index.
const HARD_LIMIT: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum Herbrand base size accepted by brute-force enumeration.
    pub max_atoms: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: 12,
            jobs: 1,
        }
    }
}

impl Limits {
    pub fn with_max_atoms(max_atoms: usize) -> Limits {
        Limits {
            max_atoms,
            ..Limits::default()
        }
    }

    pub fn check(&self, base: &AtomSet) -> Result<()> {
        let limit = self.max_atoms.min(HARD_LIMIT);
        if base.len() > limit {
            return Err(Error::GuardExceeded {
                atoms: base.len(),
                limit,
            });
        }
        Ok(())
    }

    fn run<R, F>(&self, total: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        if self.jobs <= 1 {
            return (0..total).filter_map(f).collect();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
        {
            Ok(pool) => pool.install(|| (0..total).into_par_iter().filter_map(f).collect()),
            Err(_) => (0..total).filter_map(f).collect(),
        }
    }
}

/// Applies `f` to every subset of `base`; results come back in index order.
pub(crate) fn subsets<R, F>(base: &AtomSet, limits: &Limits, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(AtomSet) -> Option<R> + Sync + Send,
{
    limits.check(base)?;
    let atoms: Vec<&Atom> = base.iter().collect();
    let total = 1u64 << atoms.len();
    Ok(limits.run(total, |code| f(decode_subset(&atoms, code))))
}

/// Applies `f` to every disjoint pair `(t, f)` over `base` (3^n of them).
pub(crate) fn disjoint_pairs<R, F>(base: &AtomSet, limits: &Limits, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(AtomSet, AtomSet) -> Option<R> + Sync + Send,
{
    limits.check(base)?;
    let atoms: Vec<&Atom> = base.iter().collect();
    let total = 3u64.pow(atoms.len() as u32);
    Ok(limits.run(total, |mut code| {
        let (mut t, mut fs) = (AtomSet::new(), AtomSet::new());
        for atom in &atoms {
            match code % 3 {
                1 => {
                    t.insert((*atom).clone());
                }
                2 => {
                    fs.insert((*atom).clone());
                }
                _ => {}
            }
            code /= 3;
        }
        f(t, fs)
    }))
}

/// Applies `f` to every pair of subsets that share at least one atom.
pub(crate) fn overlapping_pairs<R, F>(base: &AtomSet, limits: &Limits, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(AtomSet, AtomSet) -> Option<R> + Sync + Send,
{
    limits.check(base)?;
    let atoms: Vec<&Atom> = base.iter().collect();
    let n = atoms.len();
    let total = 1u64 << (2 * n);
    Ok(limits.run(total, |code| {
        let (tc, fc) = (code & ((1 << n) - 1), code >> n);
        if tc & fc == 0 {
            return None;
        }
        f(decode_subset(&atoms, tc), decode_subset(&atoms, fc))
    }))
}

fn decode_subset(atoms: &[&Atom], code: u64) -> AtomSet {
    atoms
        .iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, a)| (*a).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_atom_list;

    #[test]
    fn counts() {
        let base = parse_atom_list("a, b, c").unwrap();
        let l = Limits::default();
        assert_eq!(subsets(&base, &l, Some).unwrap().len(), 8);
        let pairs = disjoint_pairs(&base, &l, |t, f| Some((t, f))).unwrap();
        assert_eq!(pairs.len(), 27);
        assert!(pairs.iter().all(|(t, f)| t.is_disjoint(f)));
        // 4^3 - 3^3 overlapping pairs
        assert_eq!(
            overlapping_pairs(&base, &l, |t, f| Some((t, f)))
                .unwrap()
                .len(),
            37
        );
    }

    #[test]
    fn guard_and_parallel_agree() {
        let base = parse_atom_list("a, b, c, d").unwrap();
        let err = subsets(&base, &Limits::with_max_atoms(3), Some).unwrap_err();
        assert_eq!(err, Error::GuardExceeded { atoms: 4, limit: 3 });
        let seq = disjoint_pairs(&base, &Limits::default(), |t, f| Some((t, f))).unwrap();
        let par = disjoint_pairs(
            &base,
            &Limits {
                max_atoms: 12,
                jobs: 4,
            },
            |t, f| Some((t, f)),
        )
        .unwrap();
        assert_eq!(seq, par);
    }
}

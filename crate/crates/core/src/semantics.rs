//! Three-valued evaluation of literals, bodies, clauses and programs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{self, Limits};
use crate::error::{Error, Result};
use crate::syntax::{Atom, AtomSet, Clause, Literal, LiteralKind, Program};

/// Truth values ordered `False < Undefined < True`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TruthValue {
    #[serde(rename = "f")]
    False,
    #[serde(rename = "u")]
    Undefined,
    #[serde(rename = "t")]
    True,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::True, TruthValue::Undefined, TruthValue::False];
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue::True => "t",
            TruthValue::Undefined => "u",
            TruthValue::False => "f",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NegationKind {
    /// `not`: Kleene negation.
    Default,
    /// `~w`: "not true".
    Weak,
    /// `~s`: "definitely false".
    Strict,
}

impl NegationKind {
    pub const ALL: [NegationKind; 3] = [
        NegationKind::Default,
        NegationKind::Weak,
        NegationKind::Strict,
    ];

    pub fn apply(self, v: TruthValue) -> TruthValue {
        use TruthValue::*;
        match (self, v) {
            (_, True) => False,
            (_, False) => True,
            (NegationKind::Default, Undefined) => Undefined,
            (NegationKind::Weak, Undefined) => True,
            (NegationKind::Strict, Undefined) => False,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            NegationKind::Default => "not",
            NegationKind::Weak => "~w",
            NegationKind::Strict => "~s",
        }
    }
}

impl LiteralKind {
    pub fn negation(self) -> Option<NegationKind> {
        match self {
            LiteralKind::Pos => None,
            LiteralKind::Not => Some(NegationKind::Default),
            LiteralKind::Weak => Some(NegationKind::Weak),
            LiteralKind::Strict => Some(NegationKind::Strict),
        }
    }
}

/// A 3-valued Herbrand interpretation: disjoint true and false sets.
/// Atoms in neither set are undefined.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawInterpretation")]
pub struct Interpretation {
    #[serde(rename = "true")]
    true_set: AtomSet,
    #[serde(rename = "false")]
    false_set: AtomSet,
}

#[derive(Deserialize)]
struct RawInterpretation {
    #[serde(rename = "true")]
    true_set: AtomSet,
    #[serde(rename = "false")]
    false_set: AtomSet,
}

impl TryFrom<RawInterpretation> for Interpretation {
    type Error = Error;

    fn try_from(raw: RawInterpretation) -> Result<Self> {
        Interpretation::new(raw.true_set, raw.false_set)
    }
}

impl Interpretation {
    pub fn new(true_set: AtomSet, false_set: AtomSet) -> Result<Interpretation> {
        let overlap: Vec<Atom> = true_set.intersection(&false_set).cloned().collect();
        if !overlap.is_empty() {
            return Err(Error::NotDisjoint { atoms: overlap });
        }
        Ok(Interpretation {
            true_set,
            false_set,
        })
    }

    /// Caller guarantees disjointness.
    pub(crate) fn new_unchecked(true_set: AtomSet, false_set: AtomSet) -> Interpretation {
        debug_assert!(true_set.is_disjoint(&false_set));
        Interpretation {
            true_set,
            false_set,
        }
    }

    pub fn true_set(&self) -> &AtomSet {
        &self.true_set
    }

    pub fn false_set(&self) -> &AtomSet {
        &self.false_set
    }

    pub fn into_sets(self) -> (AtomSet, AtomSet) {
        (self.true_set, self.false_set)
    }

    pub fn atom_value(&self, atom: &Atom) -> TruthValue {
        if self.true_set.contains(atom) {
            TruthValue::True
        } else if self.false_set.contains(atom) {
            TruthValue::False
        } else {
            TruthValue::Undefined
        }
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, set: &AtomSet) -> fmt::Result {
    f.write_str("{")?;
    for (i, atom) in set.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{atom}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T = ")?;
        write_set(f, &self.true_set)?;
        f.write_str("  F = ")?;
        write_set(f, &self.false_set)
    }
}

/// Formats an atom set as `{a, b}`.
pub fn render_set(set: &AtomSet) -> String {
    struct S<'a>(&'a AtomSet);
    impl fmt::Display for S<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_set(f, self.0)
        }
    }
    S(set).to_string()
}

/// Atoms outside both sets are undefined, including atoms unknown to the interpretation.
pub fn literal_truth(interp: &Interpretation, lit: &Literal) -> TruthValue {
    let v = interp.atom_value(&lit.atom);
    match lit.kind.negation() {
        None => v,
        Some(neg) => neg.apply(v),
    }
}

/// Minimum over the literals; the empty body is true.
pub fn body_truth(interp: &Interpretation, body: &[Literal]) -> TruthValue {
    body.iter()
        .map(|l| literal_truth(interp, l))
        .min()
        .unwrap_or(TruthValue::True)
}

/// Two-valued: true iff the head is at least as true as the body.
pub fn clause_truth(interp: &Interpretation, clause: &Clause) -> TruthValue {
    if interp.atom_value(&clause.head) >= body_truth(interp, &clause.body) {
        TruthValue::True
    } else {
        TruthValue::False
    }
}

/// Whether `interp` is a 3-valued model of `program`. The interpretation may
/// only mention atoms of the program's Herbrand base.
pub fn is_model(interp: &Interpretation, program: &Program) -> Result<bool> {
    if let Some(atom) = interp
        .true_set
        .iter()
        .chain(&interp.false_set)
        .find(|a| !program.base().contains(*a))
    {
        return Err(Error::BaseMismatch { atom: atom.clone() });
    }
    Ok(satisfies(interp, program))
}

pub(crate) fn satisfies(interp: &Interpretation, program: &Program) -> bool {
    program
        .clauses()
        .iter()
        .all(|c| clause_truth(interp, c) == TruthValue::True)
}

/// All 3-valued models over the program's base, in canonical order.
pub fn enumerate_models(program: &Program, limits: &Limits) -> Result<Vec<Interpretation>> {
    let mut models = enumerate::disjoint_pairs(program.base(), limits, |t, f| {
        let interp = Interpretation::new_unchecked(t, f);
        satisfies(&interp, program).then_some(interp)
    })?;
    models.sort();
    Ok(models)
}

/// `outer(inner(v))`, e.g. `(Default, Weak)` evaluates `not ~w A` with `A = v`.
pub fn negation_chain_truth(outer: NegationKind, inner: NegationKind, v: TruthValue) -> TruthValue {
    outer.apply(inner.apply(v))
}

/// Column order of the double-negation table.
pub const DOUBLE_NEGATIONS: [(NegationKind, NegationKind); 6] = [
    (NegationKind::Default, NegationKind::Weak),
    (NegationKind::Weak, NegationKind::Default),
    (NegationKind::Default, NegationKind::Strict),
    (NegationKind::Strict, NegationKind::Default),
    (NegationKind::Weak, NegationKind::Strict),
    (NegationKind::Strict, NegationKind::Weak),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegationTable {
    pub columns: Vec<String>,
    pub rows: Vec<NegationRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegationRow {
    pub value: TruthValue,
    pub cells: Vec<TruthValue>,
}

/// The double-negation truth table, rows `t, u, f`.
pub fn negation_table() -> NegationTable {
    let columns = DOUBLE_NEGATIONS
        .iter()
        .map(|(outer, inner)| format!("{} {} A", outer.symbol(), inner.symbol()))
        .collect();
    let rows = TruthValue::ALL
        .iter()
        .map(|&value| NegationRow {
            value,
            cells: DOUBLE_NEGATIONS
                .iter()
                .map(|&(outer, inner)| negation_chain_truth(outer, inner, value))
                .collect(),
        })
        .collect();
    NegationTable { columns, rows }
}

impl fmt::Display for NegationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A")?;
        for col in &self.columns {
            write!(f, "\t{col}")?;
        }
        writeln!(f)?;
        for row in &self.rows {
            write!(f, "{}", row.value)?;
            for cell in &row.cells {
                write!(f, "\t{cell}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

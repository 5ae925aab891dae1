use thiserror::Error;

use crate::syntax::Atom;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message} (found {found})")]
    Syntax {
        line: usize,
        column: usize,
        found: String,
        message: String,
    },

    #[error(
        "variables unsupported (ground programs only): `{name}` at line {line}, column {column}"
    )]
    VariablesUnsupported {
        line: usize,
        column: usize,
        name: String,
    },

    #[error("true and false sets overlap on {atoms:?}")]
    NotDisjoint { atoms: Vec<Atom> },

    #[error("atom `{atom}` is not in the Herbrand base of the program")]
    BaseMismatch { atom: Atom },

    #[error(
        "Herbrand base has {atoms} atoms, enumeration limit is {limit} (raise with --max-atoms)"
    )]
    GuardExceeded { atoms: usize, limit: usize },

    #[error("not a general logic program: clause `{clause}` uses weak or strict negation")]
    NotGeneralProgram { clause: String },

    #[error("not a definite program: clause `{clause}` has a negative literal")]
    NotDefinite { clause: String },

    #[error("no admissible rule closure exists for this program")]
    NoAdmissibleClosure,

    #[error("invalid generator configuration: {0}")]
    InvalidGenerator(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::VariablesUnsupported { .. }
            | Error::NotDisjoint { .. }
            | Error::BaseMismatch { .. }
            | Error::InvalidGenerator(_) => 2,
            Error::GuardExceeded { .. } => 3,
            Error::NotGeneralProgram { .. } | Error::NotDefinite { .. } => 4,
            Error::NoAdmissibleClosure => 5,
        }
    }
}

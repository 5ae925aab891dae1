//! C ABI over the `trineg` engine.
//!
//! Programs are opaque handles. Every fallible call returns a [`TrinegStatus`];
//! on failure the message is available from [`trineg_last_error_message`] on the
//! same thread. Strings handed out by this library must be released with
//! [`trineg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::json;
use trineg::alternating::{three_valued_stable_models, well_founded_model, GeneralProgram};
use trineg::equations::solve_semantic_equations;
use trineg::generate::GeneratorConfig;
use trineg::procedure::{admissible_pairs, query};
use trineg::semantics::{
    body_truth, enumerate_models, is_model, negation_chain_truth, Interpretation, NegationKind,
    TruthValue,
};
use trineg::syntax::{parse_atom_list, parse_body, parse_goal, parse_program, Program};
use trineg::{Error, Limits};

/// Status codes; the non-zero values match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrinegStatus {
    Ok = 0,
    /// Null pointer, invalid UTF-8 or otherwise unusable argument.
    InvalidArgument = 1,
    /// Syntax error, overlapping sets, atom outside the base, bad generator config.
    InvalidInput = 2,
    GuardExceeded = 3,
    /// The program uses negations the operation does not support.
    WrongProgramClass = 4,
    NoAdmissibleClosure = 5,
    /// A panic was caught at the boundary.
    Internal = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrinegTruth {
    False = 0,
    Undefined = 1,
    True = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrinegNegation {
    Default = 0,
    Weak = 1,
    Strict = 2,
}

/// Opaque parsed program.
pub struct TrinegProgram {
    program: Program,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

struct Failure(TrinegStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e.exit_code() {
            3 => TrinegStatus::GuardExceeded,
            4 => TrinegStatus::WrongProgramClass,
            5 => TrinegStatus::NoAdmissibleClosure,
            _ => TrinegStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(message: &str) -> Failure {
    Failure(TrinegStatus::InvalidArgument, message.to_string())
}

/// Runs `body`, records any failure and converts panics into [`TrinegStatus::Internal`].
fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> TrinegStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TrinegStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error: panic caught at the C boundary".into());
            TrinegStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not valid UTF-8")))
}

unsafe fn read_program<'a>(p: *const TrinegProgram) -> Result<&'a Program, Failure> {
    p.as_ref()
        .map(|h| &h.program)
        .ok_or_else(|| invalid("program handle is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    let s = CString::new(s).map_err(|_| invalid("output contains a NUL byte"))?;
    *out = s.into_raw();
    Ok(())
}

unsafe fn write_json(out: *mut *mut c_char, value: serde_json::Value) -> Result<(), Failure> {
    write_string(out, value.to_string())
}

fn limits(max_atoms: usize) -> Limits {
    match max_atoms {
        0 => Limits::default(),
        n => Limits::with_max_atoms(n),
    }
}

unsafe fn read_interpretation(
    t: *const c_char,
    f: *const c_char,
) -> Result<Interpretation, Failure> {
    let t = parse_atom_list(read_str(t, "true atoms")?)?;
    let f = parse_atom_list(read_str(f, "false atoms")?)?;
    Ok(Interpretation::new(t, f)?)
}

fn truth_to_c(v: TruthValue) -> TrinegTruth {
    match v {
        TruthValue::False => TrinegTruth::False,
        TruthValue::Undefined => TrinegTruth::Undefined,
        TruthValue::True => TrinegTruth::True,
    }
}

fn truth_from_c(v: TrinegTruth) -> TruthValue {
    match v {
        TrinegTruth::False => TruthValue::False,
        TrinegTruth::Undefined => TruthValue::Undefined,
        TrinegTruth::True => TruthValue::True,
    }
}

fn negation_from_c(n: TrinegNegation) -> NegationKind {
    match n {
        TrinegNegation::Default => NegationKind::Default,
        TrinegNegation::Weak => NegationKind::Weak,
        TrinegNegation::Strict => NegationKind::Strict,
    }
}

/// Message of the last failed call on this thread, or null. Valid until the next
/// failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn trineg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn trineg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn trineg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses program text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn trineg_program_parse(
    text: *const c_char,
    out: *mut *mut TrinegProgram,
) -> TrinegStatus {
    guarded(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let program = parse_program(read_str(text, "program text")?)?;
        *out = Box::into_raw(Box::new(TrinegProgram { program }));
        Ok(())
    })
}

/// Generates a seeded random program. `mix` points to four weights for
/// positive, `not`, `~w` and `~s` literals.
///
/// # Safety
/// `mix` must point to four readable `uint32_t` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_program_generate(
    atoms: usize,
    clauses: usize,
    max_body: usize,
    mix: *const u32,
    seed: u64,
    out: *mut *mut TrinegProgram,
) -> TrinegStatus {
    guarded(|| {
        if mix.is_null() || out.is_null() {
            return Err(invalid("null argument"));
        }
        let mut negation_mix = [0u32; 4];
        ptr::copy_nonoverlapping(mix, negation_mix.as_mut_ptr(), 4);
        let config = GeneratorConfig {
            atom_count: atoms,
            clause_count: clauses,
            max_body_len: max_body,
            negation_mix,
            seed,
        };
        let program = config.generate()?;
        *out = Box::into_raw(Box::new(TrinegProgram { program }));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn trineg_program_free(p: *mut TrinegProgram) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of atoms in the program's base, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trineg_program_base_len(p: *const TrinegProgram) -> usize {
    p.as_ref().map_or(0, |h| h.program.base().len())
}

/// Canonical program text, one clause per line.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_program_render(
    p: *const TrinegProgram,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let program = read_program(p)?;
        write_string(out, program.to_string())
    })
}

/// Truth value of a comma-separated literal body under `(true_atoms, false_atoms)`.
///
/// # Safety
/// All strings must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_eval(
    true_atoms: *const c_char,
    false_atoms: *const c_char,
    body: *const c_char,
    out: *mut TrinegTruth,
) -> TrinegStatus {
    guarded(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let interp = read_interpretation(true_atoms, false_atoms)?;
        let body = parse_body(read_str(body, "body")?)?;
        *out = truth_to_c(body_truth(&interp, &body));
        Ok(())
    })
}

/// Whether `(true_atoms, false_atoms)` is a 3-valued model of the program.
///
/// # Safety
/// `p` must be a live handle, strings NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_is_model(
    p: *const TrinegProgram,
    true_atoms: *const c_char,
    false_atoms: *const c_char,
    out: *mut bool,
) -> TrinegStatus {
    guarded(|| {
        let program = read_program(p)?;
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        let interp = read_interpretation(true_atoms, false_atoms)?;
        *out = is_model(&interp, program)?;
        Ok(())
    })
}

/// `outer(inner(v))`.
#[no_mangle]
pub extern "C" fn trineg_negation_chain(
    outer: TrinegNegation,
    inner: TrinegNegation,
    v: TrinegTruth,
) -> TrinegTruth {
    truth_to_c(negation_chain_truth(
        negation_from_c(outer),
        negation_from_c(inner),
        truth_from_c(v),
    ))
}

/// All 3-valued models as JSON `{"count": n, "models": [...]}`.
/// `max_atoms` of 0 uses the default enumeration guard.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_models_json(
    p: *const TrinegProgram,
    max_atoms: usize,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let models = enumerate_models(read_program(p)?, &limits(max_atoms))?;
        write_json(out, json!({ "count": models.len(), "models": models }))
    })
}

/// Solutions of the semantic equations as JSON `{"fixpoints": [...]}`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_semantic_fixpoints_json(
    p: *const TrinegProgram,
    max_atoms: usize,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let solutions = solve_semantic_equations(read_program(p)?, &limits(max_atoms))?;
        write_json(out, json!({ "fixpoints": solutions }))
    })
}

fn general(program: &Program) -> Result<GeneralProgram, Failure> {
    Ok(GeneralProgram::new(program.clone())?)
}

/// 3-valued stable models as JSON `{"stable_models": [...]}`; the program may
/// only use `not`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_stable_models_json(
    p: *const TrinegProgram,
    max_atoms: usize,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let lp = general(read_program(p)?)?;
        let models = three_valued_stable_models(&lp, &limits(max_atoms))?;
        write_json(out, json!({ "stable_models": models }))
    })
}

/// Well-founded model as JSON `{"well_founded": {"true": [...], "false": [...]}}`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_well_founded_json(
    p: *const TrinegProgram,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let lp = general(read_program(p)?)?;
        write_json(out, json!({ "well_founded": well_founded_model(&lp) }))
    })
}

/// Admissible closure pairs and their componentwise intersection as JSON
/// `{"pairs": [...], "canonical": {...} | null}`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_admissible_json(
    p: *const TrinegProgram,
    max_atoms: usize,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let admissible = admissible_pairs(read_program(p)?, &limits(max_atoms))?;
        let value = serde_json::to_value(&admissible).map_err(|e| invalid(&e.to_string()))?;
        write_json(out, value)
    })
}

/// Answers a goal such as `"?- p, ~w q."` with the verdict JSON
/// `{"goal", "verdict", "canonical", "admissible_count", "per_pair"}`.
///
/// # Safety
/// `p` must be a live handle, `goal` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn trineg_query_json(
    p: *const TrinegProgram,
    goal: *const c_char,
    max_atoms: usize,
    out: *mut *mut c_char,
) -> TrinegStatus {
    guarded(|| {
        let program = read_program(p)?;
        let goal = parse_goal(read_str(goal, "goal")?)?;
        let admissible = admissible_pairs(program, &limits(max_atoms))?;
        let outcome = query(program, &admissible, &goal)?;
        let value = serde_json::to_value(&outcome).map_err(|e| invalid(&e.to_string()))?;
        write_json(out, value)
    })
}

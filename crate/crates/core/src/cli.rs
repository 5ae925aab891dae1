//! Command-line front end. `main.rs` only parses arguments and calls [`run`].

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alternating::{
    single_complement_operator, three_valued_stable_models, well_founded_model, GeneralProgram,
};
use crate::enumerate::Limits;
use crate::equations::{check_model_conditions, solve_semantic_equations};
use crate::error::Error;
use crate::generate::GeneratorConfig;
use crate::procedure::{
    admissible_pairs, closure_with_oracle, overlapping_self_consistent, query, soundness_report,
};
use crate::semantics::{
    body_truth, enumerate_models, is_model, negation_table, render_set, Interpretation, TruthValue,
};
use crate::syntax::{parse_atom_list, parse_body, parse_goal, parse_program, AtomSet, Program};

const SEMANTIC_EQUATION_NOTE: &str =
    "note: false set solved as F = B \\ sigma(B\\T, B\\T, F) (complement restored in the second semantic equation)";
const ALTERNATING_NOTE: &str =
    "note: alternating operator applied as K -> B \\ S(B \\ S(K)) (outer complement restored)";
const CLOSURE_NOTE: &str =
    "note: a candidate (T, F) is admissible when its induced rule closure derives exactly (T, F)";

#[derive(Debug, Parser)]
#[command(
    name = "trineg",
    version,
    about = "Ground logic programs with default, weak and strict negation"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest Herbrand base accepted by brute-force enumeration.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_atoms: usize,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Seed for `generate`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Suppress notices.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Truth value of a literal sequence (or of the whole program) under an interpretation.
    Eval {
        #[arg(long)]
        program: Option<PathBuf>,
        #[arg(long = "true", default_value = "")]
        true_atoms: String,
        #[arg(long = "false", default_value = "")]
        false_atoms: String,
        /// Literals such as `p, not q` or a goal `?- p.`; omit to evaluate the program.
        expr: Option<String>,
    },
    /// All 3-valued models.
    Models { file: Option<PathBuf> },
    /// Solutions of the semantic equations.
    SemanticFixpoints { file: Option<PathBuf> },
    /// 3-valued stable models of a general program.
    Stable {
        file: Option<PathBuf>,
        /// Also list fixpoints of the single-complement operator.
        #[arg(long)]
        single_complement: bool,
    },
    /// Well-founded model of a general program.
    Wfm { file: Option<PathBuf> },
    /// Admissible rule closures, or the closure under one oracle pair.
    Closure {
        file: Option<PathBuf>,
        #[arg(long = "true")]
        true_atoms: Option<String>,
        #[arg(long = "false")]
        false_atoms: Option<String>,
        /// Also sweep candidates whose true and false sets overlap.
        #[arg(long)]
        include_overlapping: bool,
    },
    /// Skeptical verdict for a goal.
    Query {
        file: Option<PathBuf>,
        #[arg(long)]
        goal: String,
        /// Show the verdict in each admissible closure.
        #[arg(long)]
        verbose: bool,
    },
    /// Truth table of the double negations.
    Negtable,
    /// Random program.
    Generate {
        #[arg(long, default_value_t = 4)]
        atoms: usize,
        #[arg(long, default_value_t = 5)]
        clauses: usize,
        #[arg(long, default_value_t = 3)]
        max_body: usize,
        /// Weights for positive, not, ~w, ~s literals.
        #[arg(long, default_value = "1,1,1,1")]
        mix: String,
    },
    /// Model-condition report for a pair, plus the soundness report.
    Check {
        file: Option<PathBuf>,
        #[arg(long = "true")]
        true_atoms: Option<String>,
        #[arg(long = "false")]
        false_atoms: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Models { .. } => "models",
            Command::SemanticFixpoints { .. } => "semantic-fixpoints",
            Command::Stable { .. } => "stable",
            Command::Wfm { .. } => "wfm",
            Command::Closure { .. } => "closure",
            Command::Query { .. } => "query",
            Command::Negtable => "negtable",
            Command::Generate { .. } => "generate",
            Command::Check { .. } => "check",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(e) => e.exit_code(),
            CliError::Io { .. } | CliError::Usage(_) => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub elapsed_ms: f64,
    pub result: Value,
    pub warnings: Vec<String>,
}

struct Output {
    text: String,
    json: Value,
    warnings: Vec<&'static str>,
}

impl Output {
    fn new(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            warnings: Vec::new(),
        }
    }

    fn note(mut self, note: &'static str) -> Output {
        self.warnings.push(note);
        self
    }
}

/// Runs one command and returns its exit status. Errors go to `err`.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let started = Instant::now();
    let output = match execute(cli, stdin) {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let warnings: Vec<String> = if cli.quiet {
        Vec::new()
    } else {
        output.warnings.iter().map(|w| w.to_string()).collect()
    };
    let written = match cli.format {
        Format::Text => {
            for w in &warnings {
                let _ = writeln!(err, "{w}");
            }
            out.write_all(output.text.as_bytes())
        }
        Format::Json => {
            let report = RunReport {
                command: cli.command.name().to_string(),
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
                result: output.json,
                warnings,
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(out, "{text}")
        }
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read_program(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Program, CliError> {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?
        }
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| CliError::Io {
                path: "<stdin>".into(),
                message: e.to_string(),
            })?;
            text
        }
    };
    Ok(parse_program(&text)?)
}

fn read_pair(
    t: &Option<String>,
    f: &Option<String>,
) -> Result<Option<(AtomSet, AtomSet)>, CliError> {
    if t.is_none() && f.is_none() {
        return Ok(None);
    }
    let parse = |s: &Option<String>| parse_atom_list(s.as_deref().unwrap_or(""));
    Ok(Some((parse(t)?, parse(f)?)))
}

fn interp_lines(items: &[Interpretation], empty: &str) -> String {
    if items.is_empty() {
        return format!("{empty}\n");
    }
    items.iter().map(|i| format!("{i}\n")).collect()
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("result serializes")
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let limits = Limits {
        max_atoms: cli.max_atoms,
        jobs: cli.jobs.max(1),
    };
    match &cli.command {
        Command::Eval {
            program,
            true_atoms,
            false_atoms,
            expr,
        } => {
            let interp =
                Interpretation::new(parse_atom_list(true_atoms)?, parse_atom_list(false_atoms)?)?;
            let program = match program {
                Some(_) => Some(read_program(program, stdin)?),
                None => None,
            };
            let (label, value) = match (expr, &program) {
                (Some(expr), _) => {
                    let body = if expr.trim_start().starts_with("?-") {
                        parse_goal(expr)?.body
                    } else {
                        parse_body(expr)?
                    };
                    if let Some(p) = &program {
                        is_model(&interp, p)?;
                    }
                    (expr.clone(), body_truth(&interp, &body))
                }
                (None, Some(p)) => {
                    let holds = is_model(&interp, p)?;
                    (
                        "program".to_string(),
                        if holds {
                            TruthValue::True
                        } else {
                            TruthValue::False
                        },
                    )
                }
                (None, None) => {
                    return Err(CliError::Usage(
                        "eval needs an expression or --program".into(),
                    ))
                }
            };
            Ok(Output::new(
                format!("{value}\n"),
                json!({ "expression": label, "interpretation": interp, "value": value }),
            ))
        }
        Command::Models { file } => {
            let p = read_program(file, stdin)?;
            let models = enumerate_models(&p, &limits)?;
            Ok(Output::new(
                interp_lines(&models, "no model"),
                json!({ "count": models.len(), "models": models }),
            ))
        }
        Command::SemanticFixpoints { file } => {
            let p = read_program(file, stdin)?;
            let solutions: Vec<Interpretation> = solve_semantic_equations(&p, &limits)?
                .into_iter()
                .map(|s| s.into_interpretation())
                .collect();
            Ok(Output::new(
                interp_lines(&solutions, "no fixpoint"),
                json!({ "fixpoints": solutions }),
            )
            .note(SEMANTIC_EQUATION_NOTE))
        }
        Command::Stable {
            file,
            single_complement,
        } => {
            let p = GeneralProgram::new(read_program(file, stdin)?)?;
            let models = three_valued_stable_models(&p, &limits)?;
            let mut text = interp_lines(&models, "no stable model");
            let mut payload = json!({ "stable_models": models });
            if *single_complement {
                let fixed: Vec<AtomSet> = crate::enumerate::subsets(p.base(), &limits, |k| {
                    (single_complement_operator(&p, &k) == k).then_some(k)
                })?;
                for k in &fixed {
                    let _ = writeln!(text, "single-complement fixpoint: {}", render_set(k));
                }
                payload["single_complement_fixpoints"] = to_json(&fixed);
            }
            Ok(Output::new(text, payload).note(ALTERNATING_NOTE))
        }
        Command::Wfm { file } => {
            let p = GeneralProgram::new(read_program(file, stdin)?)?;
            let wfm = well_founded_model(&p);
            Ok(
                Output::new(format!("{wfm}\n"), json!({ "well_founded": wfm }))
                    .note(ALTERNATING_NOTE),
            )
        }
        Command::Closure {
            file,
            true_atoms,
            false_atoms,
            include_overlapping,
        } => {
            let p = read_program(file, stdin)?;
            if let Some((t, f)) = read_pair(true_atoms, false_atoms)? {
                if let Some(a) = t.iter().chain(&f).find(|a| !p.base().contains(*a)) {
                    return Err(Error::BaseMismatch { atom: a.clone() }.into());
                }
                let state = closure_with_oracle(&p, &t, &f);
                let consistent = state.suc_atoms == t && state.fail_atoms == f;
                let text = format!(
                    "suc = {}  fail = {}\nrounds: {}\nself-consistent: {}\n",
                    render_set(&state.suc_atoms),
                    render_set(&state.fail_atoms),
                    state.rounds,
                    consistent
                );
                let payload = json!({
                    "oracle": { "true": t, "false": f },
                    "suc": state.suc_atoms,
                    "fail": state.fail_atoms,
                    "rounds": state.rounds,
                    "self_consistent": consistent,
                });
                return Ok(Output::new(text, payload).note(CLOSURE_NOTE));
            }
            let admissible = admissible_pairs(&p, &limits)?;
            let mut text = String::new();
            for pair in &admissible.pairs {
                let _ = writeln!(text, "admissible: {pair}");
            }
            match &admissible.canonical {
                Some(c) => {
                    let _ = writeln!(text, "canonical: {c}");
                }
                None => text.push_str("no admissible closure\n"),
            }
            let mut payload = to_json(&admissible);
            if *include_overlapping {
                let overlapping = overlapping_self_consistent(&p, &limits)?;
                let _ = writeln!(
                    text,
                    "overlapping self-consistent candidates: {}",
                    overlapping.len()
                );
                payload["overlapping_self_consistent"] = to_json(&overlapping);
            }
            Ok(Output::new(text, payload).note(CLOSURE_NOTE))
        }
        Command::Query {
            file,
            goal,
            verbose,
        } => {
            let p = read_program(file, stdin)?;
            let goal = parse_goal(goal)?;
            let admissible = admissible_pairs(&p, &limits)?;
            let mut outcome = query(&p, &admissible, &goal)?;
            let mut text = format!("{}\n", outcome.verdict);
            if *verbose {
                let _ = writeln!(text, "canonical: {}", outcome.canonical);
                for pv in &outcome.per_pair {
                    let _ = writeln!(text, "{}: {}", pv.pair, pv.verdict);
                }
            } else {
                outcome.per_pair.clear();
            }
            Ok(Output::new(text, to_json(&outcome)))
        }
        Command::Negtable => {
            let table = negation_table();
            Ok(Output::new(table.to_string(), to_json(&table)))
        }
        Command::Generate {
            atoms,
            clauses,
            max_body,
            mix,
        } => {
            let weights: Vec<u32> = mix
                .split(',')
                .map(|w| w.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| {
                    CliError::Usage(format!("bad --mix `{mix}`: expected four integers"))
                })?;
            let negation_mix: [u32; 4] = weights.try_into().map_err(|_| {
                CliError::Usage(format!("bad --mix `{mix}`: expected four integers"))
            })?;
            let config = GeneratorConfig {
                atom_count: *atoms,
                clause_count: *clauses,
                max_body_len: *max_body,
                negation_mix,
                seed: cli.seed,
            };
            let program = config.generate()?;
            let text = program.to_string();
            Ok(Output::new(
                text.clone(),
                json!({ "config": config, "program": text }),
            ))
        }
        Command::Check {
            file,
            true_atoms,
            false_atoms,
        } => {
            let p = read_program(file, stdin)?;
            let mut text = String::new();
            let mut payload = json!({});
            if let Some((t, f)) = read_pair(true_atoms, false_atoms)? {
                let report = check_model_conditions(&p, &t, &f);
                let flag =
                    |c: &crate::equations::Condition| if c.holds { "holds" } else { "fails" };
                let _ = writeln!(text, "(a) disjoint: {}", flag(&report.disjoint));
                let _ = writeln!(
                    text,
                    "(b) true set supported: {}",
                    flag(&report.true_set_supported)
                );
                let _ = writeln!(
                    text,
                    "(c) false set unsupported: {}",
                    flag(&report.false_set_unsupported)
                );
                let _ = writeln!(
                    text,
                    "(d) false heads blocked: {}",
                    flag(&report.false_heads_blocked)
                );
                if report.all_hold() {
                    text.push_str("all conditions hold: the pair is a model\n");
                }
                payload["conditions"] = to_json(&report);
            }
            let admissible = admissible_pairs(&p, &limits)?;
            let soundness = soundness_report(&p, &admissible);
            let _ = writeln!(
                text,
                "soundness: {} admissible pair(s) checked, {} violation(s)",
                soundness.checked,
                soundness.violations.len()
            );
            payload["soundness"] = to_json(&soundness);
            Ok(Output::new(text, payload))
        }
    }
}

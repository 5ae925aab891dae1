//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p trineg --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use common::*;
use trineg::alternating::{
    alternating_operator, s_p, three_valued_stable_models, well_founded_model, GeneralProgram,
};
use trineg::equations::{check_model_conditions, sigma, solve_semantic_equations, TriReductArgs};
use trineg::generate::GeneratorConfig;
use trineg::procedure::{admissible_pairs, closure_with_oracle, n_res, soundness_report};
use trineg::semantics::{is_model, Interpretation};
use trineg::syntax::{Atom, AtomSet, Program};
use trineg::Limits;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Check);

const ALL_KINDS: [u32; 4] = [1, 1, 1, 1];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs the CLI with `program` on stdin and returns the `result` field of its JSON report.
fn cli_json(args: &[&str], program: &str) -> Result<Value, String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trineg"))
        .args(["--format", "json", "--quiet"])
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(program.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok(report["result"].clone())
}

fn fixpoints_via_cli(program: &str) -> Result<Vec<Interpretation>, String> {
    let result = cli_json(&["semantic-fixpoints"], program)?;
    serde_json::from_value(result["fixpoints"].clone()).map_err(|e| e.to_string())
}

fn ac1_two_fixpoints() -> Check {
    let got = fixpoints_via_cli(TWO_FIXPOINTS)?;
    let want = vec![interp("p", "q, r, s"), interp("r", "p, q, s")];
    ensure(got == want, || format!("got {got:?}"))?;
    let lib = solve_semantic_equations(&prog(TWO_FIXPOINTS), &Limits::default()).unwrap();
    ensure(lib.len() == 2, || "library disagrees with CLI".into())?;
    Ok("({p},{q,r,s}) and ({r},{p,q,s})".into())
}

fn ac2a_one_fixpoint() -> Check {
    let got = fixpoints_via_cli(ONE_FIXPOINT)?;
    ensure(got.contains(&interp("p", "q, s")), || {
        format!("got {got:?}")
    })?;
    Ok(format!(
        "{} fixpoint(s), includes ({{p}},{{q,s}})",
        got.len()
    ))
}

fn ac2b_no_fixpoint() -> Check {
    let got = fixpoints_via_cli(NO_FIXPOINT)?;
    ensure(got.is_empty(), || format!("got {got:?}"))?;
    Ok("empty".into())
}

fn ac3_negation_table() -> Check {
    let result = cli_json(&["negtable"], "")?;
    let rows = result["rows"].as_array().ok_or("no rows")?;
    ensure(rows.len() == 3, || format!("{} rows", rows.len()))?;
    let mut cells = 0;
    for (row, published) in rows.iter().zip(PUBLISHED_NEGATION_TABLE) {
        let got: Vec<char> = row["cells"]
            .as_array()
            .ok_or("no cells")?
            .iter()
            .map(|c| c.as_str().unwrap_or("?").chars().next().unwrap_or('?'))
            .collect();
        ensure(got == published, || {
            format!("row {}: {got:?} vs {published:?}", row["value"])
        })?;
        cells += got.len();
    }
    ensure(cells == 18, || format!("{cells} cells"))?;
    Ok("18/18 cells".into())
}

fn ac4_strict_loop() -> Check {
    let p = prog(STRICT_LOOP);
    let admissible = admissible_pairs(&p, &Limits::default()).map_err(|e| e.to_string())?;
    ensure(admissible.pairs == vec![interp("", "p")], || {
        format!("pairs {:?}", admissible.pairs)
    })?;
    let (p_atom, q_atom) = (Atom::new("p").unwrap(), Atom::new("q").unwrap());
    for pair in &admissible.pairs {
        let state = closure_with_oracle(&p, pair.true_set(), pair.false_set());
        ensure(!state.suc_atoms.contains(&p_atom), || {
            "suc(p) derived".into()
        })?;
        ensure(!state.fail_atoms.contains(&q_atom), || {
            "fail(q) derived".into()
        })?;
    }
    ensure(is_model(&interp("p", "q"), &p).unwrap(), || {
        "({p},{q}) is not a model".into()
    })?;
    Ok("pairs = {(∅,{p})}; no suc(p), no fail(q); ({p},{q}) is a model".into())
}

fn model_corpus() -> Vec<Program> {
    corpus(0x5eed_0005, 500, 5, 6, 3, ALL_KINDS)
}

fn ac5_fixpoints_are_models() -> Check {
    let limits = Limits::default();
    let (mut solutions, mut programs_with_solution) = (0, 0);
    for p in model_corpus() {
        let found = solve_semantic_equations(&p, &limits).unwrap();
        programs_with_solution += usize::from(!found.is_empty());
        for s in found {
            solutions += 1;
            ensure(is_model(s.interpretation(), &p).unwrap(), || {
                format!("{} is not a model of\n{p}", s.interpretation())
            })?;
        }
    }
    Ok(format!(
        "500 programs, {solutions} fixpoints in {programs_with_solution} programs, 0 violations"
    ))
}

fn ac6_conditions_imply_model() -> Check {
    let mut qualifying = 0;
    for p in model_corpus() {
        for (t, f) in all_disjoint_pairs(p.base()) {
            if check_model_conditions(&p, &t, &f).all_hold() {
                qualifying += 1;
                let i = Interpretation::new(t, f).unwrap();
                ensure(is_model(&i, &p).unwrap(), || {
                    format!("{i} not a model of\n{p}")
                })?;
            }
        }
    }
    Ok(format!("{qualifying} qualifying pairs, 0 violations"))
}

fn ac7_closures_sound() -> Check {
    let limits = Limits::default();
    let (mut checked, mut with_pairs) = (0, 0);
    for p in corpus(0x5eed_0007, 500, 5, 6, 3, ALL_KINDS) {
        let admissible = admissible_pairs(&p, &limits).unwrap();
        let report = soundness_report(&p, &admissible);
        ensure(report.is_sound(), || {
            format!("{:?} for\n{p}", report.violations)
        })?;
        checked += report.checked;
        with_pairs += usize::from(report.checked > 0);
    }
    Ok(format!(
        "500 programs ({with_pairs} with admissible pairs), {checked} pairs, 0 violations"
    ))
}

fn ac8_resolvents_match_sigma() -> Check {
    let mut cases = 0u64;
    for p in corpus(0x5eed_0008, 100, 4, 6, 3, ALL_KINDS) {
        let subsets = all_subsets(p.base());
        let resolvents: Vec<(Atom, Vec<_>)> = p
            .base()
            .iter()
            .map(|a| (a.clone(), n_res(&p, a).into_iter().collect()))
            .collect();
        for i in &subsets {
            for j in &subsets {
                for k in &subsets {
                    let args = TriReductArgs::new(i.clone(), j.clone(), k.clone());
                    let derived = sigma(&p, &args);
                    for (a, goals) in &resolvents {
                        cases += 1;
                        let by_resolution =
                            goals.iter().any(|g: &trineg::procedure::CanonicalGoal| {
                                g.literals().iter().all(|l| args.admits_literal(l))
                            });
                        ensure(derived.contains(a) == by_resolution, || {
                            format!("atom {a} args {args:?} program\n{p}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "100 programs, {cases} (triple, atom) cases, 0 violations"
    ))
}

fn ac9_general_program_coherence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let limits = Limits::default();
    for p in corpus(0x5eed_0009, 200, 6, 6, 3, GeneratorConfig::GENERAL_MIX) {
        let lp = GeneralProgram::new(p.clone()).unwrap();
        for _ in 0..50 {
            let (i, j, k) = (
                random_subset(&mut rng, p.base()),
                random_subset(&mut rng, p.base()),
                random_subset(&mut rng, p.base()),
            );
            let via_sigma = sigma(&p, &TriReductArgs::new(i.clone(), j, k));
            ensure(via_sigma == s_p(&lp, &i), || {
                format!("sigma != s_p at {i:?} for\n{p}")
            })?;
        }
        let wfm = well_founded_model(&lp);
        let stable = three_valued_stable_models(&lp, &limits).unwrap();
        ensure(stable.contains(&wfm), || {
            format!("{wfm} not stable for\n{p}")
        })?;
        let oracle = wfm_by_unfounded_sets(&p);
        ensure(wfm == oracle, || {
            format!("{wfm} vs unfounded-set {oracle} for\n{p}")
        })?;
        let gl = stable_by_gl_reduct(&p);
        ensure(stable == gl, || {
            format!("{stable:?} vs reduct oracle {gl:?} for\n{p}")
        })?;
    }
    Ok("200 programs x 50 samples, well-founded model agrees with both oracles".into())
}

/// Random `(small, large)` with `small ⊆ large ⊆ base`.
fn nested_pair(rng: &mut impl Rng, base: &AtomSet) -> (AtomSet, AtomSet) {
    let large = random_subset(rng, base);
    let small = random_subset(rng, &large);
    (small, large)
}

fn ac10_monotonicity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let lps = corpus(0x5eed_1010, 100, 6, 6, 3, GeneratorConfig::GENERAL_MIX);
    let programs = corpus(0x5eed_2010, 100, 6, 6, 3, ALL_KINDS);
    for n in 0..1000 {
        let lp = GeneralProgram::new(lps[n % lps.len()].clone()).unwrap();
        let (k1, k2) = nested_pair(&mut rng, lp.base());
        ensure(s_p(&lp, &k1).is_subset(&s_p(&lp, &k2)), || {
            format!("s_p at {k1:?} ⊆ {k2:?}")
        })?;
        let (k1, k2) = nested_pair(&mut rng, lp.base());
        ensure(
            alternating_operator(&lp, &k1).is_subset(&alternating_operator(&lp, &k2)),
            || format!("alternating operator at {k1:?} ⊆ {k2:?}"),
        )?;
        let p = &programs[n % programs.len()];
        let (i1, i2) = nested_pair(&mut rng, p.base());
        let (j1, j2) = nested_pair(&mut rng, p.base());
        let (s1, s2) = nested_pair(&mut rng, p.base());
        ensure(
            sigma(p, &TriReductArgs::new(i1, j1, s1))
                .is_subset(&sigma(p, &TriReductArgs::new(i2, j2, s2))),
            || "sigma not monotone".into(),
        )?;
    }
    // growing T shrinks the supported true set: T0 = ∅ ⊆ T1 = {q}, F = ∅
    let witness = prog("p :- ~w q.");
    let support = |t: &str| {
        sigma(
            &witness,
            &TriReductArgs::new(set(""), witness.complement(&set(t)), set("")),
        )
    };
    let (from_t0, from_t1) = (support(""), support("q"));
    ensure(from_t1.is_subset(&from_t0) && from_t1 != from_t0, || {
        format!("no strict decrease: {from_t1:?} vs {from_t0:?}")
    })?;
    Ok("3 x 1000 monotone samples; non-monotone witness {p} ⊋ ∅".into())
}

fn ac11_stable_sanity() -> Check {
    let limits = Limits::default();
    for (text, want) in [
        ("p :- not q.", vec![interp("p", "q")]),
        ("p :- not p.", vec![interp("", "")]),
    ] {
        let lp = GeneralProgram::new(prog(text)).unwrap();
        let got = three_valued_stable_models(&lp, &limits).unwrap();
        ensure(got == want, || format!("{text}: {got:?}"))?;
        let oracle = stable_by_gl_reduct(&lp);
        ensure(oracle == want, || format!("{text}: oracle {oracle:?}"))?;
        // brute-force restatement of the stable-model condition over all subsets
        let brute: BTreeSet<Interpretation> = all_subsets(lp.base())
            .into_iter()
            .filter(|j| &alternating_operator(&lp, j) == j && s_p(&lp, j).is_disjoint(j))
            .map(|j| Interpretation::new(s_p(&lp, &j), j).unwrap())
            .collect();
        ensure(brute.into_iter().collect::<Vec<_>>() == want, || {
            format!("{text}: brute force disagrees")
        })?;
    }
    Ok("{p :- not q.} -> {({p},{q})}; {p :- not p.} -> {(∅,∅)}".into())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "1",
            "two-fixpoint program: semantic-fixpoints output",
            Duration::from_secs(1),
            ac1_two_fixpoints,
        ),
        (
            "2a",
            "one-fixpoint program: output contains ({p},{q,s})",
            Duration::from_secs(1),
            ac2a_one_fixpoint,
        ),
        (
            "2b",
            "no-fixpoint program: output empty",
            Duration::from_secs(1),
            ac2b_no_fixpoint,
        ),
        (
            "3",
            "negtable matches the published double-negation table",
            Duration::from_secs(5),
            ac3_negation_table,
        ),
        (
            "4",
            "strict-negation loop: admissible pairs and model",
            Duration::from_secs(5),
            ac4_strict_loop,
        ),
        (
            "5",
            "every semantic-equation fixpoint is a model",
            Duration::from_secs(60),
            ac5_fixpoints_are_models,
        ),
        (
            "6",
            "model conditions (a)-(d) imply model",
            Duration::from_secs(60),
            ac6_conditions_imply_model,
        ),
        (
            "7",
            "admissible closures pass the soundness report",
            Duration::from_secs(120),
            ac7_closures_sound,
        ),
        (
            "8",
            "sigma membership agrees with all-negative resolvents",
            Duration::from_secs(120),
            ac8_resolvents_match_sigma,
        ),
        (
            "9",
            "general-program coherence and well-founded oracles",
            Duration::from_secs(120),
            ac9_general_program_coherence,
        ),
        (
            "10",
            "monotonicity suites and non-monotone witness",
            Duration::from_secs(120),
            ac10_monotonicity,
        ),
        (
            "11",
            "stable-model sanity",
            Duration::from_secs(5),
            ac11_stable_sanity,
        ),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => {
                Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "[PASS] AC{id:<3} {name} ({} ms): {detail}",
                elapsed.as_millis()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "[FAIL] AC{id:<3} {name} ({} ms): {why}",
                    elapsed.as_millis()
                );
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}

//! The `trilie` command line: JSON inputs, deterministic reports, exit
//! codes.
//!
//! Exit code contract: `0` — every check passed or the construction
//! succeeded; `1` — a mathematical check failed (the report carries the
//! residuals); `2` — malformed input, dimension mismatch, or an exceeded
//! search budget. Reports are emitted on stdout with sorted keys and
//! rationals as strings, so identical inputs (and seed) produce identical
//! bytes; wall-clock timing goes to stderr only.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{adjoint_representation, check_representation_capped};
use crate::cochain::from_bracket;
use crate::corpus::ExampleId;
use crate::format;
use crate::homotopy::{
    check_derivation_conditions_capped, check_linf_identities_capped, check_truncation,
    DerivedBracketSystem, HomCochain,
};
use crate::linalg::Vector;
use crate::ooperator::{
    enumerate_o_operators, is_o_operator_capped, reproduce_example, GridSearch, MatrixShape,
    OOperatorCandidate,
};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::split::{decompose_by_bidegree, SplitSpace};
use crate::twilled::analyze_capped;
use crate::twisting::{twist, twist_components, TwistInput};
use crate::Error;

#[derive(Parser)]
#[command(name = "trilie", version)]
#[command(about = "Exact verification and construction for ternary Lie brackets")]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on recorded violations per report
    #[arg(long, global = true, default_value_t = 32)]
    max_failures: usize,

    /// Seed for randomized probe batches
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Fundamental Identity of an algebra file
    CheckFi { algebra: PathBuf },

    /// Check the representation equations of a representation file
    CheckRep { rep: PathBuf },

    /// Analyze a split structure: closure, seven conditions, strictness
    Twilled {
        algebra: PathBuf,
        /// Dimension of the first summand
        #[arg(long)]
        split: usize,
    },

    /// Emit the five homogeneous components of a split structure
    Decompose {
        algebra: PathBuf,
        #[arg(long)]
        split: usize,
    },

    /// Verify the derived-bracket identities of a twilled split
    Linf {
        algebra: PathBuf,
        #[arg(long)]
        split: usize,
        /// Seed for the degree-1 probe batch (defaults to --seed)
        #[arg(long)]
        probe_seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
    },

    /// Evaluate the Maurer-Cartan value of a map g2 -> g1
    Mc {
        algebra: PathBuf,
        #[arg(long)]
        split: usize,
        #[arg(long)]
        map: PathBuf,
    },

    /// Twist a split structure by a map g2 -> g1
    Twist {
        algebra: PathBuf,
        #[arg(long)]
        split: usize,
        #[arg(long)]
        map: PathBuf,
        /// Also emit the five twisted components
        #[arg(long)]
        components: bool,
    },

    /// O-operator verification and search
    Oop {
        #[command(subcommand)]
        cmd: OopCommand,
    },

    /// Rebuild a bundled example table and diff against the frozen copy
    Reproduce {
        /// Example id: 5.6 or 5.7
        id: String,
    },
}

#[derive(Subcommand)]
enum OopCommand {
    /// Verify one operator matrix
    Check {
        algebra: PathBuf,
        /// "adjoint" or a representation file path
        #[arg(long, default_value = "adjoint")]
        rep: String,
        #[arg(long)]
        map: PathBuf,
    },

    /// Enumerate operators over an exact grid
    Search {
        algebra: PathBuf,
        #[arg(long, default_value = "adjoint")]
        rep: String,
        /// Comma-separated rational grid, e.g. "-1,0,1"
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// diagonal | upper | full
        #[arg(long, default_value = "diagonal")]
        shape: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u128,
    },
}

struct Outcome {
    passed: bool,
    payload: Value,
    text: String,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version on stdout with success
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Ok(threads) = std::env::var("TRILIE_THREADS") {
        if threads.parse::<usize>().map(|n| n == 0).unwrap_or(true) {
            eprintln!("# ignoring invalid TRILIE_THREADS={threads:?}");
        }
    }
    let start = Instant::now();
    let result = dispatch(&cli);
    let elapsed = start.elapsed().as_millis();
    match result {
        Ok(outcome) => {
            emit(&cli, &outcome);
            eprintln!("# elapsed_ms: {elapsed}");
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(err) => {
            let code = match &err {
                Error::Precondition { report, .. } => {
                    eprintln!("error: {err}");
                    if let Some(r) = report {
                        eprintln!("{}", r.to_text().trim_end());
                    }
                    1
                }
                _ => {
                    eprintln!("error: {err}");
                    2
                }
            };
            eprintln!("# elapsed_ms: {elapsed}");
            code
        }
    }
}

fn digest(path: &Path) -> Result<(String, String), Error> {
    let bytes = std::fs::read(path)?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok((path.display().to_string(), hex(&hasher.finalize())))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn envelope(command: &str, inputs: &[(String, String)], passed: bool, body: Value) -> Value {
    let digests: serde_json::Map<String, Value> = inputs
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    json!({
        "command": command,
        "tool_version": env!("CARGO_PKG_VERSION"),
        "inputs": digests,
        "verdict": if passed { "pass" } else { "fail" },
        "report": body,
    })
}

fn emit(cli: &Cli, outcome: &Outcome) {
    match cli.format {
        Format::Json => print!("{}", format::to_canonical_string(&outcome.payload)),
        Format::Text => print!("{}", outcome.text),
    }
}

fn report_value(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serialization")
}

fn load_rep(
    selector: &str,
    algebra: &crate::algebra::ThreeLieAlgebra,
) -> Result<crate::algebra::Representation, Error> {
    if selector == "adjoint" {
        Ok(adjoint_representation(algebra))
    } else {
        let (rep_algebra, rep) = format::load_representation(Path::new(selector))?;
        if rep_algebra.table() != algebra.table() {
            return Err(Error::invalid_input(
                "representation file is over a different algebra",
            ));
        }
        Ok(rep)
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let cap = cli.max_failures;
    match &cli.command {
        Command::CheckFi { algebra } => {
            let a = format::load_algebra(algebra)?;
            let report =
                crate::algebra::check_fundamental_identity_capped(&a, cap);
            let inputs = vec![digest(algebra)?];
            Ok(Outcome {
                passed: report.passed(),
                payload: envelope("check-fi", &inputs, report.passed(), report_value(&report)),
                text: report.to_text(),
            })
        }

        Command::CheckRep { rep } => {
            let (a, r) = format::load_representation(rep)?;
            let report = check_representation_capped(&a, &r, cap)?;
            let inputs = vec![digest(rep)?];
            Ok(Outcome {
                passed: report.passed(),
                payload: envelope("check-rep", &inputs, report.passed(), report_value(&report)),
                text: report.to_text(),
            })
        }

        Command::Twilled { algebra, split } => {
            let a = format::load_algebra(algebra)?;
            let sp = split_of(&a, *split)?;
            let verdict = analyze_capped(&a, &sp, cap)?;
            let passed = verdict.is_twilled;
            let body = json!({
                "is_3lie": verdict.is_3lie,
                "is_twilled": verdict.is_twilled,
                "is_strict": verdict.is_strict,
                "cross_check_ok": verdict.cross_check_ok,
                "closure": report_value(&verdict.closure),
                "seven_conditions": report_value(&verdict.seven_conditions),
            });
            let text = format!(
                "3-Lie: {}\ntwilled: {}\nstrict: {}\ncross-check: {}\n{}{}",
                verdict.is_3lie,
                verdict.is_twilled,
                verdict.is_strict,
                if verdict.cross_check_ok { "ok" } else { "MISMATCH" },
                verdict.closure.to_text(),
                verdict.seven_conditions.to_text(),
            );
            let inputs = vec![digest(algebra)?];
            Ok(Outcome {
                passed,
                payload: envelope("twilled", &inputs, passed, body),
                text,
            })
        }

        Command::Decompose { algebra, split } => {
            let a = format::load_algebra(algebra)?;
            let sp = split_of(&a, *split)?;
            let dec = decompose_by_bidegree(&from_bracket(&a), &sp)?;
            let mut body = serde_json::Map::new();
            let mut text = String::new();
            for (label, c, (l, k)) in dec.components() {
                body.insert(label.to_string(), format::cochain_dump(c));
                text.push_str(&format!(
                    "{label} ({l}|{k}): {} nonzero canonical entries\n",
                    c.support_len()
                ));
            }
            let inputs = vec![digest(algebra)?];
            Ok(Outcome {
                passed: true,
                payload: envelope("decompose", &inputs, true, Value::Object(body)),
                text,
            })
        }

        Command::Linf {
            algebra,
            split,
            probe_seed,
            max_arity,
        } => {
            let a = format::load_algebra(algebra)?;
            let sp = split_of(&a, *split)?;
            let verdict = analyze_capped(&a, &sp, cap)?;
            if !verdict.is_twilled {
                return Err(Error::precondition_with(
                    "derived brackets need a twilled structure",
                    verdict.closure,
                ));
            }
            let sys = DerivedBracketSystem::new(&verdict.decomposition)?;
            let seed = probe_seed.unwrap_or(cli.seed);
            let probes = linf_probe_set(&sp, seed);
            let jacobi = check_linf_identities_capped(&sys, *max_arity, &probes, cap)?;
            let truncation = check_truncation(&sys, &probes)?;
            let derivations =
                check_derivation_conditions_capped(&sys, &derivation_probe_set(&sp, seed), cap)?;
            let passed = jacobi.passed() && truncation.passed() && derivations.passed();
            let body = json!({
                "probe_seed": seed,
                "tuples_checked": jacobi.tuples_checked,
                "tuples_skipped": jacobi.tuples_skipped,
                "jacobi": report_value(&jacobi.report),
                "truncation": report_value(&truncation),
                "derivations": report_value(&derivations),
            });
            let text = format!(
                "probe seed {seed}; {} tuples checked, {} beyond degree window\n{}{}{}",
                jacobi.tuples_checked,
                jacobi.tuples_skipped,
                jacobi.report.to_text(),
                truncation.to_text(),
                derivations.to_text(),
            );
            let inputs = vec![digest(algebra)?];
            Ok(Outcome {
                passed,
                payload: envelope("linf", &inputs, passed, body),
                text,
            })
        }

        Command::Mc {
            algebra,
            split,
            map,
        } => {
            let a = format::load_algebra(algebra)?;
            let sp = split_of(&a, *split)?;
            let verdict = analyze_capped(&a, &sp, cap)?;
            if !verdict.is_twilled {
                return Err(Error::precondition_with(
                    "the Maurer-Cartan value needs a twilled structure",
                    verdict.closure,
                ));
            }
            let sys = DerivedBracketSystem::new(&verdict.decomposition)?;
            let h = format::load_matrix(map)?;
            let value = sys.mc_value(&h)?;
            let mut report = VerificationReport::new("maurer-cartan", cap);
            for (key, v) in value.lift().entries() {
                report.check_zero("mc-value", key, v);
            }
            let passed = report.passed();
            let body = json!({
                "is_maurer_cartan": passed,
                "value": format::cochain_dump(value.lift()),
                "residuals": report_value(&report),
            });
            let inputs = vec![digest(algebra)?, digest(map)?];
            Ok(Outcome {
                passed,
                payload: envelope("mc", &inputs, passed, body),
                text: format!("maurer-cartan: {passed}\n{}", report.to_text()),
            })
        }

        Command::Twist {
            algebra,
            split,
            map,
            components,
        } => {
            let a = format::load_algebra(algebra)?;
            let sp = split_of(&a, *split)?;
            let h = format::load_matrix(map)?;
            let input = TwistInput::new(sp, from_bracket(&a), h.clone())?;
            let twisted = twist(&input)?;
            let mut body = serde_json::Map::new();
            body.insert("twisted".into(), format::cochain_dump(&twisted));
            // also in algebra-file form, so the result can be piped back
            // into `twilled`, `linf`, `decompose`, …
            body.insert(
                "twisted_algebra".into(),
                format::algebra_to_json(&crate::cochain::to_bracket(&twisted)?),
            );
            let mut text = render_table(&twisted);
            if *components {
                let dec = decompose_by_bidegree(&from_bracket(&a), &sp)?;
                let tdec = twist_components(&dec, &h)?;
                let mut parts = serde_json::Map::new();
                for (label, c, _) in tdec.components() {
                    parts.insert(label.to_string(), format::cochain_dump(c));
                    text.push_str(&format!(
                        "{label}: {} nonzero canonical entries\n",
                        c.support_len()
                    ));
                }
                body.insert("components".into(), Value::Object(parts));
            }
            let inputs = vec![digest(algebra)?, digest(map)?];
            Ok(Outcome {
                passed: true,
                payload: envelope("twist", &inputs, true, Value::Object(body)),
                text,
            })
        }

        Command::Oop { cmd } => match cmd {
            OopCommand::Check { algebra, rep, map } => {
                let a = format::load_algebra(algebra)?;
                let r = load_rep(rep, &a)?;
                let t = format::load_matrix(map)?;
                let candidate = OOperatorCandidate::new(a, r, t)?;
                let report = is_o_operator_capped(&candidate, cap)?;
                let mut inputs = vec![digest(algebra)?, digest(map)?];
                if rep != "adjoint" {
                    inputs.push(digest(Path::new(rep))?);
                }
                Ok(Outcome {
                    passed: report.passed(),
                    payload: envelope(
                        "oop-check",
                        &inputs,
                        report.passed(),
                        report_value(&report),
                    ),
                    text: report.to_text(),
                })
            }
            OopCommand::Search {
                algebra,
                rep,
                grid,
                shape,
                budget,
            } => {
                let a = format::load_algebra(algebra)?;
                let r = load_rep(rep, &a)?;
                let grid_values: Result<Vec<Scalar>, Error> =
                    grid.split(',').map(|s| Scalar::parse(s.trim())).collect();
                let shape = MatrixShape::parse(shape).ok_or_else(|| {
                    Error::invalid_input(format!("unknown shape {shape:?}"))
                })?;
                let mut cfg = GridSearch::new(grid_values?, shape);
                cfg.budget = *budget;
                let found = enumerate_o_operators(&a, &r, &cfg)?;
                let body = json!({
                    "count": found.len(),
                    "found": found.iter().map(format::matrix_to_json).collect::<Vec<_>>(),
                });
                let mut text = format!("{} operator(s) found\n", found.len());
                for m in &found {
                    text.push_str(&format!("{m:?}\n"));
                }
                let mut inputs = vec![digest(algebra)?];
                if rep != "adjoint" {
                    inputs.push(digest(Path::new(rep))?);
                }
                Ok(Outcome {
                    passed: true,
                    payload: envelope("oop-search", &inputs, true, body),
                    text,
                })
            }
        },

        Command::Reproduce { id } => {
            let id = ExampleId::parse(id)
                .ok_or_else(|| Error::invalid_input(format!("unknown example id {id:?}")))?;
            let outcome = reproduce_example(id)?;
            let passed = outcome.matches();
            let rows: Vec<Value> = outcome
                .computed
                .iter()
                .map(|(k, v)| {
                    let out: std::collections::BTreeMap<String, String> = v
                        .support()
                        .map(|(i, c)| ((i + 1).to_string(), c.to_string()))
                        .collect();
                    json!({ "in": [k[0] + 1, k[1] + 1, k[2] + 1], "out": out })
                })
                .collect();
            let diff: Vec<Value> = outcome
                .diff
                .iter()
                .map(|d| {
                    json!({
                        "triple": [d.triple[0] + 1, d.triple[1] + 1, d.triple[2] + 1],
                        "expected": d.expected.to_strings(),
                        "actual": d.actual.to_strings(),
                    })
                })
                .collect();
            let body = json!({
                "id": id.label(),
                "rows": rows,
                "diff": diff,
            });
            let mut text = format!("example {}: {} nonzero rows\n", id.label(), rows.len());
            for (k, v) in &outcome.computed {
                text.push_str(&format!(
                    "  [{}, {}, {}] = {}\n",
                    k[0] + 1,
                    k[1] + 1,
                    k[2] + 1,
                    render_vector(v)
                ));
            }
            text.push_str(if passed {
                "diff: empty\n"
            } else {
                "diff: NONEMPTY\n"
            });
            Ok(Outcome {
                passed,
                payload: envelope("reproduce", &[], passed, body),
                text,
            })
        }
    }
}

fn split_of(a: &crate::algebra::ThreeLieAlgebra, dim1: usize) -> Result<SplitSpace, Error> {
    if dim1 == 0 || dim1 >= a.dim() {
        return Err(Error::invalid_input(format!(
            "--split must be between 1 and {}",
            a.dim() - 1
        )));
    }
    SplitSpace::new(dim1, a.dim() - dim1)
}

fn render_vector(v: &Vector) -> String {
    let parts: Vec<String> = v
        .support()
        .map(|(i, c)| {
            if c.is_one() {
                format!("e{}", i + 1)
            } else {
                format!("{c} e{}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn render_table(c: &crate::cochain::Cochain) -> String {
    let mut out = String::new();
    for (key, v) in c.entries() {
        let ix: Vec<String> = key.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&format!("[{}] = {}\n", ix.join(", "), render_vector(v)));
    }
    if out.is_empty() {
        out.push_str("zero structure\n");
    }
    out
}

/// Probe set for the derived-bracket suite: every degree-0 basis map plus a
/// seeded batch of degree-1 elements.
fn linf_probe_set(split: &SplitSpace, seed: u64) -> Vec<HomCochain> {
    let mut probes = HomCochain::basis_maps(*split);
    let mut rng = crate::random::rng(seed);
    for _ in 0..4 {
        let mut g = HomCochain::zero(*split, 1);
        if split.dim2() >= 3 {
            use rand::Rng;
            let a = rng.gen_range(0..split.dim2() - 2);
            let b = rng.gen_range(a + 1..split.dim2() - 1);
            let c = rng.gen_range(b + 1..split.dim2());
            let v = crate::random::random_vector(&mut rng, split.dim1());
            if !v.is_zero() {
                g.add_value_local(&[[a, b]], c, &v).expect("local tuple");
            }
        }
        if !g.is_zero() {
            probes.push(g);
        }
    }
    probes
}

/// Spanning probes for the derivation conditions: all degree-0 basis maps
/// of the full space plus a seeded degree-1 cochain.
fn derivation_probe_set(split: &SplitSpace, seed: u64) -> Vec<crate::cochain::Cochain> {
    let dim = split.total();
    let mut probes = Vec::new();
    for s in 0..dim {
        for t in 0..dim {
            let mut f = crate::cochain::Cochain::zero(0, dim);
            f.add_value(&[], t, &Vector::basis(dim, s)).expect("index");
            probes.push(f);
        }
    }
    let mut rng = crate::random::rng(seed);
    probes.push(crate::random::random_degree_one(&mut rng, dim, 3));
    probes
}

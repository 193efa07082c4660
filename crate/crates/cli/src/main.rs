//! `pts`: validate probabilistic transition systems, dump their linear
//! representation, evaluate trace measures and check trace equivalence.
//!
//! Exit status: 0 success or equivalent, 1 not equivalent, 2 input or
//! validation error, 3 inconclusive, 4 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pts_core::{
    build_rep, format_rational, measure, parse_pts, parse_pts_unchecked, Algorithm, Checker,
    Config, EquivResult, GenSet, OutputKind, Pts, Report, StepAction, ViolationKind,
};
use serde::Serialize;

const EXIT_NOT_EQUIVALENT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "pts",
    version,
    about = "Exact trace measures and trace equivalence for probabilistic transition systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that every state's distribution is well formed.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the determinized linear representation as JSON.
    Rep { file: PathBuf },
    /// Evaluate the trace measure of a state on a set of words.
    Eval {
        file: PathBuf,
        #[arg(long)]
        state: String,
        /// empty | word:W | cone:W | infcone:W | finite | infinite | all
        #[arg(long)]
        query: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two states induce the same trace measure.
    Equiv {
        file: PathBuf,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = Algo::HkcInf)]
        algo: Algo,
        /// Extraction budget; required for naive and hk, rejected otherwise.
        #[arg(long)]
        max_steps: Option<usize>,
        /// Include every extracted pair in the output.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Naive,
    Hk,
    HkcFinite,
    HkcInf,
}

enum Failure {
    Input(String),
    Usage(String),
}

impl From<pts_core::Error> for Failure {
    fn from(e: pts_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((code, out)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Pts, Failure> {
    Ok(parse_pts(&read(path)?)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serialization cannot fail")
}

fn run(command: Command) -> Result<(u8, String), Failure> {
    match command {
        Command::Validate { file, json } => validate(&file, json),
        Command::Rep { file } => Ok((0, build_rep(&load(&file)?).to_json())),
        Command::Eval {
            file,
            state,
            query,
            json,
        } => {
            let rep = build_rep(&load(&file)?);
            let set = GenSet::parse(&query, rep.alphabet())?;
            let value = format_rational(&measure(&rep, &rep.dirac(&state)?, &set)?);
            if json {
                #[derive(Serialize)]
                struct Eval<'a> {
                    state: &'a str,
                    query: &'a str,
                    value: &'a str,
                }
                Ok((
                    0,
                    to_json(&Eval {
                        state: &state,
                        query: &query,
                        value: &value,
                    }),
                ))
            } else {
                Ok((0, value))
            }
        }
        Command::Equiv {
            file,
            x,
            y,
            algo,
            max_steps,
            trace,
        } => {
            let algorithm = match (algo, max_steps) {
                (Algo::Naive, Some(max_steps)) => Algorithm::Naive { max_steps },
                (Algo::Hk, Some(max_steps)) => Algorithm::Hk { max_steps },
                (Algo::Naive | Algo::Hk, None) => {
                    return Err(Failure::Usage(
                        "--max-steps is required for naive and hk".into(),
                    ))
                }
                (Algo::HkcFinite | Algo::HkcInf, Some(_)) => {
                    return Err(Failure::Usage(
                        "--max-steps only applies to naive and hk".into(),
                    ))
                }
                (Algo::HkcFinite, None) => Algorithm::HkcFinite,
                (Algo::HkcInf, None) => Algorithm::HkcInf,
            };
            if max_steps == Some(0) {
                return Err(Failure::Usage("--max-steps must be at least 1".into()));
            }
            let rep = build_rep(&load(&file)?);
            let report = Checker::new(&rep, algorithm).trace(trace).run(&x, &y)?;
            let code = match report.result {
                EquivResult::Equivalent { .. } => 0,
                EquivResult::NotEquivalent { .. } => EXIT_NOT_EQUIVALENT,
                EquivResult::Inconclusive { .. } => EXIT_INCONCLUSIVE,
            };
            Ok((
                code,
                to_json(&EquivOutput::new(&rep, algorithm, &report, trace)),
            ))
        }
    }
}

fn validate(file: &Path, json: bool) -> Result<(u8, String), Failure> {
    let pts = parse_pts_unchecked(&read(file)?)?;
    let violations = pts.validate();
    let code = if violations.is_empty() { 0 } else { EXIT_INPUT };
    if json {
        #[derive(Serialize)]
        struct Item {
            state: String,
            kind: &'static str,
            message: String,
        }
        #[derive(Serialize)]
        struct Validation {
            valid: bool,
            violations: Vec<Item>,
        }
        let items = violations
            .iter()
            .map(|v| Item {
                state: v.state.clone(),
                kind: match v.kind {
                    ViolationKind::ProbabilityOutOfRange { .. } => "probability_out_of_range",
                    ViolationKind::DistributionSumViolation { .. } => "distribution_sum_violation",
                },
                message: v.to_string(),
            })
            .collect();
        let out = Validation {
            valid: violations.is_empty(),
            violations: items,
        };
        return Ok((code, to_json(&out)));
    }
    if violations.is_empty() {
        Ok((0, "ok".into()))
    } else {
        let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Ok((code, lines.join("\n")))
    }
}

#[derive(Serialize)]
struct EquivOutput {
    result: &'static str,
    algorithm: &'static str,
    iterations: usize,
    relation_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<OutputKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceOutput>>,
}

#[derive(Serialize)]
struct TraceOutput {
    word: String,
    lhs: Vec<String>,
    rhs: Vec<String>,
    action: &'static str,
}

fn weights(c: &Config) -> Vec<String> {
    c.weights().iter().map(format_rational).collect()
}

impl EquivOutput {
    fn new(rep: &pts_core::LinearRep, algorithm: Algorithm, report: &Report, trace: bool) -> Self {
        let mut out = EquivOutput {
            result: "equivalent",
            algorithm: algorithm.name(),
            iterations: report.iterations,
            relation_size: report.relation_size,
            witness: None,
            output: None,
            lhs: None,
            rhs: None,
            trace: None,
        };
        match &report.result {
            EquivResult::Equivalent { .. } => {}
            EquivResult::NotEquivalent {
                witness,
                output,
                lhs,
                rhs,
            } => {
                out.result = "not_equivalent";
                out.witness = Some(rep.alphabet().format_word(witness));
                out.output = Some(*output);
                out.lhs = Some(format_rational(lhs));
                out.rhs = Some(format_rational(rhs));
            }
            EquivResult::Inconclusive { .. } => out.result = "inconclusive",
        }
        if trace {
            out.trace = Some(
                report
                    .trace
                    .iter()
                    .map(|step| TraceOutput {
                        word: rep.alphabet().format_word(&step.word),
                        lhs: weights(&step.lhs),
                        rhs: weights(&step.rhs),
                        action: match step.action {
                            StepAction::Skipped => "skipped",
                            StepAction::Mismatch(_) => "mismatch",
                            StepAction::Expanded => "expanded",
                        },
                    })
                    .collect(),
            );
        }
        out
    }
}

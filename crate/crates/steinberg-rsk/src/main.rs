//! Thin command-line front end: JSON in on stdin (or `--in FILE`), JSON out
//! on stdout. Exit codes: 0 success, 1 verification or genericity failure,
//! 2 malformed input. Every command is an adapter over the library; with a
//! fixed `--seed` all output is reproducible bit for bit.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use steinberg_rsk::correspondence::{self, CorrespondenceTriple, PartialPermutation};
use steinberg_rsk::error::Error;
use steinberg_rsk::rsk::{MarginMatrix, VariantRsk};
use steinberg_rsk::signed::{enumerate_syd, Signature, SignedYoungDiagram};
use steinberg_rsk::tableau::RowStandardTableau;
use steinberg_rsk::verify::{run_all, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "steinberg-rsk",
    about = "Robinson-Schensted type correspondence for partial permutations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for every randomized (oracle) computation.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Independent trials per genericity certificate.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Read the input document from a file instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<String>,
    /// Refuse underspecified randomized runs (requires --seed with --trials).
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Partial permutation -> (diagram, tableau, tableau) triple.
    Map,
    /// Triple -> partial permutation.
    Unmap,
    /// The projectively dual partial permutation.
    Dual,
    /// The bordered margin matrix of a partial permutation.
    Tauhat,
    /// Variant RSK of a margin matrix (JSON object or CSV rows).
    Rsk,
    /// Evacuation of a row-standard tableau.
    Evac,
    /// Jeu-de-taquin rectification of a tableau quotient.
    Rect {
        /// Chain index to quotient by (0 returns the input).
        #[arg(long)]
        index: usize,
    },
    /// All signed Young diagrams of a signature.
    EnumSyd {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
        /// List only the admissible diagrams.
        #[arg(long)]
        admissible: bool,
    },
    /// All partial permutations of a size.
    EnumPp {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// The census identity report for one size.
    Census {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Run the full invariant suite; exits nonzero naming any failure.
    Verify {
        #[arg(long, default_value_t = 3)]
        pmax: usize,
        #[arg(long, default_value_t = 3)]
        qmax: usize,
    },
    /// Hasse diagram of the closure order on one signature class.
    Poset {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    VerificationFailure,
    InputError,
}

/// Result envelope: on success the payload document is printed to stdout;
/// on error the payload is absent and the diagnostics (never empty) go to
/// stderr, with the status mapped to the exit code.
struct CommandResult {
    status: Status,
    payload: Option<Value>,
    diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: Status::Ok,
            payload: Some(payload),
            diagnostics: Vec::new(),
        }
    }

    fn failure(status: Status, diagnostics: Vec<String>) -> Self {
        debug_assert!(!diagnostics.is_empty());
        CommandResult {
            status,
            payload: None,
            diagnostics,
        }
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::IncomparableSizes { .. }
            | Error::InvalidPartition(_)
            | Error::InvalidComposition(_)
            | Error::InvalidTableau(_)
            | Error::IndexOutOfRange { .. }
            | Error::NotColumnStrip(_)
            | Error::SignatureMismatch(..)
            | Error::InvalidDiagram(_)
            | Error::InvalidPermutation(_)
            | Error::InvalidMatrix(_)
            | Error::NotPrime(_)
            | Error::NoPreimage(_)
            | Error::InvalidInput(_) => Status::InputError,
            Error::CountOverflow(_)
            | Error::NonNilpotent
            | Error::FlagViolation { .. }
            | Error::Genericity(_)
            | Error::Inconsistent(_) => Status::VerificationFailure,
        };
        CommandResult::failure(status, vec![e.to_string()])
    }
}

fn read_input(common: &Common) -> Result<String, Error> {
    match &common.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}"))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Margin matrices arrive as the JSON object or as CSV rows of integers.
fn parse_margin_matrix(text: &str) -> Result<MarginMatrix, Error> {
    if text.trim_start().starts_with('{') {
        return parse(text);
    }
    let entries = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            line.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad CSV entry {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    MarginMatrix::new(entries)
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Inconsistent(format!("serialization: {e}")))
}

fn execute(cli: &Cli) -> Result<CommandResult, Error> {
    let common = &cli.common;
    if common.strict && common.trials.is_some() && common.seed.is_none() {
        return Err(Error::InvalidInput(
            "--strict requires --seed whenever --trials is given".into(),
        ));
    }
    let seed = common.seed.unwrap_or(0);
    let trials = common.trials.unwrap_or(steinberg_rsk::oracle::DEFAULT_TRIALS);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rsk = VariantRsk::new()?.with_trials(trials);
    let result = match &cli.command {
        Command::Map => {
            let t: PartialPermutation = parse(&read_input(common)?)?;
            CommandResult::ok(to_value(&correspondence::forward(&t, &mut rsk, &mut rng)?)?)
        }
        Command::Unmap => {
            let tr: CorrespondenceTriple = parse(&read_input(common)?)?;
            CommandResult::ok(to_value(&correspondence::inverse(&tr, &mut rsk, &mut rng)?)?)
        }
        Command::Dual => {
            let t: PartialPermutation = parse(&read_input(common)?)?;
            CommandResult::ok(to_value(&correspondence::dual(&t, &mut rsk, &mut rng)?)?)
        }
        Command::Tauhat => {
            let t: PartialPermutation = parse(&read_input(common)?)?;
            CommandResult::ok(to_value(&correspondence::bordered_matrix(&t))?)
        }
        Command::Rsk => {
            let m = parse_margin_matrix(&read_input(common)?)?;
            let (q, p) = rsk.variant_rsk(&m, &mut rng)?;
            CommandResult::ok(json!({ "q": q, "p": p }))
        }
        Command::Evac => {
            let t: RowStandardTableau = parse(&read_input(common)?)?;
            CommandResult::ok(to_value(&t.evacuate()?)?)
        }
        Command::Rect { index } => {
            let t: RowStandardTableau = parse(&read_input(common)?)?;
            CommandResult::ok(to_value(&t.rectify(*index)?)?)
        }
        Command::EnumSyd { q, p, admissible } => {
            let sig = Signature { q: *q, p: *p };
            let diagrams: Vec<SignedYoungDiagram> = enumerate_syd(sig)
                .into_iter()
                .filter(|d| !*admissible || d.is_admissible())
                .collect();
            let listed: Vec<Value> = diagrams
                .iter()
                .map(|d| Ok(json!({ "diagram": to_value(d)?, "admissible": d.is_admissible() })))
                .collect::<Result<_, Error>>()?;
            CommandResult::ok(json!({
                "signature": sig,
                "count": listed.len(),
                "diagrams": listed,
            }))
        }
        Command::EnumPp { p, q } => {
            let items = correspondence::enumerate_pp(*p, *q);
            CommandResult::ok(json!({ "p": p, "q": q, "count": items.len(), "items": items }))
        }
        Command::Census { p, q } => {
            let report = correspondence::census(*p, *q, &mut rsk, &mut rng)?;
            if report.identity_holds {
                CommandResult::ok(to_value(&report)?)
            } else {
                CommandResult::failure(Status::VerificationFailure, report.failures.clone())
            }
        }
        Command::Verify { pmax, qmax } => {
            let cfg = VerifyConfig {
                pmax: *pmax,
                qmax: *qmax,
                seed,
                trials,
            };
            let checks = run_all(&cfg);
            if checks.iter().all(|c| c.ok) {
                CommandResult::ok(json!({
                    "pmax": pmax,
                    "qmax": qmax,
                    "seed": seed,
                    "trials": trials,
                    "checks": checks,
                    "all_ok": true,
                }))
            } else {
                CommandResult::failure(
                    Status::VerificationFailure,
                    checks
                        .iter()
                        .filter(|c| !c.ok)
                        .map(|c| format!("{}: {}", c.name, c.detail))
                        .collect(),
                )
            }
        }
        Command::Poset { q, p } => {
            let sig = Signature { q: *q, p: *p };
            let mut nodes = enumerate_syd(sig);
            nodes.sort_by_key(|d| d.render());
            let n = nodes.len();
            let mut leq = vec![vec![false; n]; n];
            for (i, a) in nodes.iter().enumerate() {
                for (j, b) in nodes.iter().enumerate() {
                    leq[i][j] = a.closure_leq(b)?;
                }
            }
            // cover relations only
            let mut edges = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j && leq[i][j] {
                        let covered =
                            (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
                        if !covered {
                            edges.push((i, j));
                        }
                    }
                }
            }
            edges.sort_unstable();
            CommandResult::ok(json!({
                "signature": sig,
                "nodes": nodes,
                "edges": edges,
            }))
        }
    };
    Ok(result)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).unwrap_or_else(CommandResult::from);
    if let Some(payload) = &result.payload {
        match serde_json::to_string_pretty(payload) {
            Ok(doc) => println!("{doc}"),
            Err(e) => {
                eprintln!("error: serialization failed: {e}");
                return ExitCode::from(1);
            }
        }
    }
    for line in &result.diagnostics {
        eprintln!("error: {line}");
    }
    ExitCode::from(match result.status {
        Status::Ok => 0,
        Status::VerificationFailure => 1,
        Status::InputError => 2,
    })
}

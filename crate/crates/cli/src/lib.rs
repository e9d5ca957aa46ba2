//! Command-line front end: law suites, a matrix calculator, bounded-hop
//! shortest paths and adjunction round trips.
//!
//! [`run`] does all the work and returns the buffered output, so the
//! binary only has to print it and exit.

pub mod graph;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lawvere::adjunctions::{run_roundtrip, run_suite, Adjunction, MonoidTag, Suite, SuiteConfig, SuiteReport};
use lawvere::matcat::{render_mat, DynMatrix};
use lawvere::{Error, SemiringTag};

pub use graph::{adjacency, parse_graph, shortest_paths, GraphSpec};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a law is violated.
pub const EXIT_VIOLATION: i32 = 1;
/// Exit status for usage, parse and dimension errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lawvere", version, about = "Exact semiring algebra: law suites, matrices and shortest paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a named law suite and print its report.
    Laws {
        /// monad-laws, additivity, commutativity, matcat-laws, dagger, freetheory, kleisli-iso or adjunction-roundtrips
        #[arg(long)]
        suite: String,
        /// nat, bool, tropical, rational or gaussian
        #[arg(long, default_value = "nat")]
        semiring: String,
        /// Run over the action monad of this monoid: free-words or <semiring>-mul
        #[arg(long)]
        monoid: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Compose, tensor or dagger matrices read from .mat files.
    Matmul {
        #[arg(long, value_enum)]
        op: MatOp,
        #[arg(short = 'A', value_name = "FILE")]
        a: PathBuf,
        #[arg(short = 'B', value_name = "FILE")]
        b: Option<PathBuf>,
    },
    /// Minimum path weights over paths of at most k edges, in the min-plus semiring.
    ShortestPath {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "K")]
        max_hops: usize,
    },
    /// Transpose sampled maps through an adjunction and back, checking laws on the way.
    Roundtrip {
        /// mon-e, srng-e or mat-h
        #[arg(long)]
        adjunction: String,
        #[arg(long, default_value = "nat")]
        semiring: String,
        /// Also check that the transposes commute with the involutions.
        #[arg(long)]
        involutive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatOp {
    Compose,
    Tensor,
    Dagger,
}

/// Buffered result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }

    fn report(report: SuiteReport) -> Self {
        let code = if report.passed() { EXIT_OK } else { EXIT_VIOLATION };
        Outcome { code, stdout: report.to_string(), stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Laws { suite, semiring, monoid, seed, cases } => {
            laws(&suite, &semiring, monoid.as_deref(), seed, cases).map_err(|e| e.to_string())
        }
        Command::Matmul { op, a, b } => matmul(op, &a, b.as_deref()),
        Command::ShortestPath { graph, max_hops } => shortest_path(&graph, max_hops),
        Command::Roundtrip { adjunction, semiring, involutive, seed, cases } => {
            roundtrip(&adjunction, &semiring, involutive, seed, cases).map_err(|e| e.to_string())
        }
    };
    result.unwrap_or_else(Outcome::usage)
}

fn laws(suite: &str, semiring: &str, monoid: Option<&str>, seed: u64, cases: usize) -> Result<Outcome, Error> {
    let config = SuiteConfig {
        suite: suite.parse::<Suite>()?,
        semiring: semiring.parse::<SemiringTag>()?,
        monoid: monoid.map(str::parse::<MonoidTag>).transpose()?,
        seed,
        cases,
    };
    Ok(Outcome::report(run_suite(&config)?))
}

fn roundtrip(adjunction: &str, semiring: &str, involutive: bool, seed: u64, cases: usize) -> Result<Outcome, Error> {
    let adjunction: Adjunction = adjunction.parse()?;
    let semiring: SemiringTag = semiring.parse()?;
    Ok(Outcome::report(run_roundtrip(adjunction, semiring, involutive, seed, cases)?))
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn with_file<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, Error>) -> Result<T, String> {
    parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn matmul(op: MatOp, a: &Path, b: Option<&Path>) -> Result<Outcome, String> {
    let lhs = with_file(a, DynMatrix::parse)?;
    let rhs = match (op, b) {
        (MatOp::Dagger, None) => None,
        (MatOp::Dagger, Some(_)) => return Err("dagger takes a single matrix; drop -B".into()),
        (_, None) => return Err(format!("{op:?} needs a second matrix; pass -B <file.mat>").to_lowercase()),
        (_, Some(path)) => Some(with_file(path, DynMatrix::parse)?),
    };
    let result = match (op, rhs) {
        (MatOp::Compose, Some(rhs)) => lhs.compose(&rhs),
        (MatOp::Tensor, Some(rhs)) => lhs.tensor(&rhs),
        _ => lhs.dagger(),
    };
    result.map(|m| Outcome::ok(m.render())).map_err(|e| e.to_string())
}

fn shortest_path(path: &Path, max_hops: usize) -> Result<Outcome, String> {
    let graph = with_file(path, parse_graph)?;
    let distances = shortest_paths(&adjacency(&graph), max_hops).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(render_mat(&distances)))
}

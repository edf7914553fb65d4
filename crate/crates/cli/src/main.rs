mod commands;
mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

use ecc_spectra::theorems::{SearchMode, Tolerances};
use ecc_spectra::Error;

use commands::{Family, OpName};
use input::InputArgs;
use output::Format;

const EXIT_PARSE: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_NO_CONVERGENCE: u8 = 4;
const EXIT_BAD_OP: u8 = 5;
const EXIT_VERIFICATION: u8 = 6;

/// Eccentricity matrices, spectra and closed-form checks for central-graph operations.
#[derive(Debug, Parser)]
#[command(name = "ecc-spectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Predicted-vs-computed comparison tolerance.
    #[arg(long, global = true, value_name = "X", value_parser = positive)]
    tol: Option<f64>,

    /// Jacobi off-diagonal threshold.
    #[arg(long, global = true, value_name = "X", value_parser = positive)]
    eig_tol: Option<f64>,

    /// Eigenvalue grouping tolerance.
    #[arg(long, global = true, value_name = "X", value_parser = positive)]
    group_tol: Option<f64>,

    /// Zero threshold for inertia (default: relative to the spectral radius).
    #[arg(long, global = true, value_name = "X", value_parser = positive)]
    zero_tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    out: Format,

    /// Worker threads; ECC_SPECTRA_JOBS takes precedence.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eccentricity matrix, spectrum, energy, inertia, Wiener index and irreducibility.
    Compute(InputArgs),
    /// Build a graph operation and print it as graph6 with block offsets.
    Op {
        #[arg(value_enum)]
        op: OpName,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check closed-form theorems against the numerical oracle.
    Verify {
        /// Theorem id, or `all`.
        #[arg(long, value_name = "ID", required_unless_present = "all")]
        theorem: Option<String>,
        /// Same as `--theorem all`.
        #[arg(long, conflicts_with = "theorem")]
        all: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Evaluate the Wiener-index, radius and energy bounds.
    Bounds(InputArgs),
    /// Find pairs with equal eccentricity spectra or energies.
    Search {
        #[arg(long, value_name = "ID", default_value = "ecc", value_parser = parse_mode)]
        mode: SearchMode,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print an enumerated graph family as graph6 lines.
    Corpus {
        #[arg(value_enum)]
        family: Family,
        /// Number of vertices.
        n: usize,
        /// Degree, for the regular family.
        degree: Option<usize>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A fatal error with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    pub fn op(message: impl Into<String>) -> Self {
        Failure { code: EXIT_BAD_OP, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected { .. } => EXIT_DISCONNECTED,
            Error::NoConvergence { .. } => EXIT_NO_CONVERGENCE,
            Error::MalformedGraph6(_) | Error::MalformedEdgeList { .. } | Error::BadParams(_) => EXIT_PARSE,
            _ => EXIT_BAD_OP,
        };
        Failure { code, message: e.to_string() }
    }
}

impl Cli {
    fn tolerances(&self) -> Tolerances {
        let d = Tolerances::default();
        Tolerances {
            eig: self.eig_tol.unwrap_or(d.eig),
            group: self.group_tol.unwrap_or(d.group),
            compare: self.tol.unwrap_or(d.compare),
            zero: self.zero_tol,
        }
    }

    fn jobs(&self) -> Result<Option<usize>, Failure> {
        match std::env::var("ECC_SPECTRA_JOBS") {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) if n > 0 => Ok(Some(n)),
                _ => Err(Failure::parse(format!("ECC_SPECTRA_JOBS must be a positive integer, got {v:?}"))),
            },
            Err(_) => match self.jobs {
                Some(0) => Err(Failure::parse("--jobs must be positive")),
                other => Ok(other),
            },
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    if let Some(n) = cli.jobs()? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::parse(format!("thread pool: {e}")))?;
    }
    let tol = cli.tolerances();
    let mut code = 0;
    let out = match &cli.command {
        Command::Compute(input) => commands::compute(&input.load()?, &tol)?,
        Command::Op { op, input } => commands::op(*op, &input.load()?)?,
        Command::Verify { theorem, all, input } => {
            let selector = if *all { "all" } else { theorem.as_deref().unwrap_or("all") };
            let (out, failed) = commands::verify_cmd(selector, &input.load()?, &tol)?;
            if failed > 0 {
                eprintln!("{failed} verification instance(s) failed");
                code = EXIT_VERIFICATION;
            }
            out
        }
        Command::Bounds(input) => commands::bounds(&input.load()?, &tol)?,
        Command::Search { mode, input } => commands::search(*mode, &input.load()?, &tol)?,
        Command::Corpus { family, n, degree } => commands::corpus(*family, *n, *degree)?,
    };
    Ok((output::render(&out, cli.out), code))
}

impl Command {
    fn input_mut(&mut self) -> Option<&mut InputArgs> {
        match self {
            Command::Compute(input) | Command::Bounds(input) => Some(input),
            Command::Op { input, .. } | Command::Verify { input, .. } | Command::Search { input, .. } => Some(input),
            Command::Corpus { .. } => None,
        }
    }
}

fn parse_cli() -> Cli {
    let matches = Cli::command().get_matches();
    let mut cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    if let (Some((_, sub)), Some(input)) = (matches.subcommand(), cli.command.input_mut()) {
        input.regroup(sub);
    }
    cli
}

fn main() -> ExitCode {
    let cli = parse_cli();
    match run(&cli) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

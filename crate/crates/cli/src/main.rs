//! `lseries-vanish`: decide whether `L(1,f)` vanishes for a rational periodic `f`.
//!
//! Exit codes: 0 vanishing or success, 1 nonvanishing, 2 pole, 64 parse error,
//! 65 precondition violation, 70 internal cross-route disagreement.

mod commands;
mod report;
mod selftest;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const MAX_PRECISION: u32 = 16384;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Core(#[from] lseries_core::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 64,
            CliError::Precondition(_) => 65,
            CliError::Core(lseries_core::Error::Pole { .. }) => 2,
            CliError::Core(lseries_core::Error::LengthMismatch { .. }) => 64,
            CliError::Core(_) => 65,
            CliError::Internal(_) => 70,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Okada,
    Theorem1,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Digamma,
    Hurwitz,
    FourierLog,
    PartialSum,
}

#[derive(Debug, Parser)]
#[command(name = "lseries-vanish", version, about = "Decide whether L(1,f) vanishes for rational periodic f")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide L(1,f) = 0 for the function in a function file (`-` reads stdin).
    Decide {
        path: PathBuf,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
    },
    /// Print the dimension and canonical basis of the vanishing subspace mod q.
    Kernel {
        #[arg(long)]
        q: u64,
    },
    /// Evaluate L(s,f) as a certified ball.
    Eval {
        path: PathBuf,
        /// Rational s > 0, e.g. `2` or `3/2`.
        #[arg(long, default_value = "1")]
        s: String,
        #[arg(long, default_value_t = 128)]
        precision: u32,
        /// Evaluation method at s = 1.
        #[arg(long, value_enum, default_value = "digamma")]
        method: MethodArg,
    },
    /// Print epsilon(r, p) for one triple, or the full table when --r and --p are omitted.
    Epsilon {
        #[arg(long)]
        q: u64,
        #[arg(long, requires = "p")]
        r: Option<u64>,
        #[arg(long, requires = "r")]
        p: Option<u64>,
    },
    /// Print the finite Fourier coefficients of f.
    Fourier { path: PathBuf },
    /// List the Dirichlet characters mod q with their value tables.
    Characters {
        #[arg(long)]
        q: u64,
    },
    /// Run the invariant suites; larger levels use larger moduli.
    Selftest {
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
}

pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub code: u8,
}

fn check_precision(p: u32) -> Result<u32, CliError> {
    if (16..=MAX_PRECISION).contains(&p) {
        Ok(p)
    } else {
        Err(CliError::Precondition(format!("--precision must lie in 16..={MAX_PRECISION}, got {p}")))
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Decide { path, precision, route } => {
            commands::decide(&input::read_function(&path)?, check_precision(precision)?, route)
        }
        Command::Kernel { q } => commands::kernel(q),
        Command::Eval { path, s, precision, method } => {
            let s = input::parse_rational(&s)?;
            commands::eval(&input::read_function(&path)?, &s, check_precision(precision)?, method)
        }
        Command::Epsilon { q, r, p } => commands::epsilon(q, r.zip(p)),
        Command::Fourier { path } => commands::fourier(&input::read_function(&path)?),
        Command::Characters { q } => commands::characters(q),
        Command::Selftest { level } => selftest::run(level),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("lseries-vanish: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

mod commands;
mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use crate::commands::{enumerate, selftest, series, smooth, staircase};
use crate::output::{Format, Output};

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Schubert variety smoothness and enumeration for the affine symmetric group")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for enumerate and selftest (default: available cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Wall-clock budget for enumerate and selftest.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smoothness, rational smoothness and twisted-spiral tests for one element.
    Smooth(smooth::SmoothArgs),
    /// Complete BP decomposition of an element of `W^J`.
    Decompose(smooth::DecomposeArgs),
    /// List or count the smooth elements of one period.
    Enumerate(enumerate::EnumerateArgs),
    /// Coefficients of the generating functions.
    Series(series::SeriesArgs),
    /// Staircase diagram tools.
    #[command(subcommand)]
    Staircase(staircase::StaircaseCommand),
    /// Run the acceptance checks.
    Selftest(selftest::SelftestArgs),
}

/// Shared settings passed to every command.
pub struct Context {
    pub format: Option<Format>,
    pub workers: usize,
    pub deadline: Option<Instant>,
}

#[derive(Debug)]
pub enum CliError {
    /// Exit code 1.
    Invalid(String),
    /// Exit code 2.
    CrossCheck(String),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

impl From<affine_schubert::Error> for CliError {
    fn from(e: affine_schubert::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn context(cli: &Cli) -> Result<Context, CliError> {
    let workers = match cli.workers {
        Some(0) => return Err(CliError::invalid("--workers must be positive")),
        Some(w) => w,
        None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    };
    let deadline = match cli.budget_seconds {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return Err(CliError::invalid("--budget-seconds must be a positive number"))
        }
        Some(s) => Some(Instant::now() + Duration::from_secs_f64(s)),
        None => None,
    };
    Ok(Context { format: cli.format, workers, deadline })
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let ctx = context(&cli)?;
    match cli.command {
        Command::Smooth(args) => smooth::smooth(&ctx, &args),
        Command::Decompose(args) => smooth::decompose(&ctx, &args),
        Command::Enumerate(args) => enumerate::run(&ctx, &args),
        Command::Series(args) => series::run(&ctx, &args),
        Command::Staircase(cmd) => staircase::run(&ctx, &cmd),
        Command::Selftest(args) => selftest::run(&ctx, &args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.body.as_bytes());
            let _ = stdout.flush();
            if let Some(msg) = &out.diagnostic {
                eprintln!("schubert: {msg}");
            }
            ExitCode::from(out.code)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("schubert: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::CrossCheck(msg)) => {
            eprintln!("schubert: cross-check failed: {msg}");
            ExitCode::from(2)
        }
    }
}

//! The `mqsolve` command-line front end.
//!
//! [`dispatch`] parses an argument vector, runs one subcommand and writes
//! results to `out` and diagnostics to `err`. Exit codes: 0 on success, 1
//! on a domain error (unreadable input, parse failures, unsatisfiable
//! parameters), 2 on a usage error.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

/// Failure of a subcommand after argument parsing.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Domain(_) => 1,
        }
    }

    pub(crate) fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mqsolve", version, about = "Solve and analyse Boolean quadratic systems")]
pub struct Cli {
    /// Worker threads for the parallel specialization loop.
    #[arg(long, global = true, env = "MQSOLVE_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random quadratic system, optionally with a planted root.
    Gen(GenArgs),
    /// Find all roots with the hybrid classical solver.
    Solve(SolveArgs),
    /// Simulate the Grover-accelerated solver and sample stage-1 shots.
    Grover(GroverArgs),
    /// Report the Macaulay matrix of a (specialized) system.
    Macaulay(MacaulayArgs),
    /// Count the gates of a reversible arithmetic circuit.
    Gatecount(GatecountArgs),
    /// Evaluate complexity exponents and security parameters.
    Estimate(EstimateArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Adjust constant terms so that a random point is a root.
    #[arg(long)]
    pub plant: bool,
    /// Output file; the system goes to standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Det,
    Lv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BackendArg {
    Dense,
    Sparse,
    CrossCheck,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RuleArg {
    Floor,
    Ceiling,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SettingArg {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CircuitArg {
    Equality,
    InnerProduct,
    Matvec,
    Matmul,
    Qrs,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Number of variables to specialize.
    #[arg(long, conflicts_with = "auto_k")]
    pub k: Option<usize>,
    /// Choose k from the optimal specialization ratio (the default).
    #[arg(long)]
    pub auto_k: bool,
    #[arg(long, value_enum, default_value = "det")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "dense")]
    pub backend: BackendArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
    /// Include the wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct GroverArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Stage-1 measurements to sample from the final state.
    #[arg(long, default_value_t = 16)]
    pub shots: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "floor")]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value = "dense")]
    pub backend: BackendArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MacaulayArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Number of trailing variables to specialize.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Values of the last k variables as a bitstring, first of them
    /// leftmost; all zero when omitted.
    #[arg(long)]
    pub tail: Option<String>,
    /// Matrix degree; the witness degree when omitted.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Write the matrix in triplet format to PATH, or `-` for standard output.
    #[arg(long, value_name = "PATH")]
    pub triplets: Option<String>,
    /// Also look for a consistency certificate.
    #[arg(long)]
    pub certificate: bool,
    #[arg(long, value_enum, default_value = "dense")]
    pub backend: BackendArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GatecountArgs {
    #[arg(long, value_enum)]
    pub circuit: CircuitArg,
    #[arg(long, default_value_t = 1)]
    pub n: u64,
    /// Degree of the annihilating polynomial for `qrs`; defaults to n.
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = mqsolve_core::solver::DEFAULT_THETA)]
    pub theta: f64,
    #[arg(long, value_enum, default_value = "det")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "classical")]
    pub setting: SettingArg,
    /// Target security levels in bits; repeatable.
    #[arg(long, value_name = "S")]
    pub security: Vec<u32>,
    /// Compare attack costs for n = m = N.
    #[arg(long, value_name = "N")]
    pub compare_n: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

/// Runs the command line `args` (program name first).
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };

    let mut buffer = Vec::new();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build() {
            Ok(pool) => pool.install(|| commands::run(&cli.command, &mut buffer)),
            Err(e) => Err(CliError::domain(e)),
        },
        None => commands::run(&cli.command, &mut buffer),
    };
    let result = result.and_then(|()| out.write_all(&buffer).map_err(|e| CliError::io("<stdout>", e)));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "mqsolve: {e}");
            e.exit_code()
        }
    }
}

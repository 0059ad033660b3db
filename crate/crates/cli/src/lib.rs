//! Command-line front end: every closed form next to its numerical oracle,
//! one row per parameter point.

pub mod commands;
pub mod sweep;
pub mod table;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use thiserror::Error;

use commands::{CryptoArgs, DiscriminateArgs, EstimateArgs, FiberArgs, InterfereArgs};
use sweep::RangeSpec;
use table::Table;

/// Seed used when neither `--seed` nor `CVENTLAB_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_240_607;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<cventlab::Error> for CliError {
    fn from(e: cventlab::Error) -> Self {
        match e {
            cventlab::Error::Domain { .. } | cventlab::Error::InvalidMode(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cventlab", version, about = "Twin-beam protocols: closed forms against numerical oracles")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; standard output when omitted.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Seed for every Monte Carlo routine.
    #[arg(long, global = true, env = "CVENTLAB_SEED")]
    pub seed: Option<u64>,

    /// Sweep a parameter, `key=start:stop:steps`; repeat for a grid.
    #[arg(long = "range", global = true, value_name = "KEY=START:STOP:STEPS")]
    pub ranges: Vec<RangeSpec>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Displacement estimation with vacuum and twin-beam probes.
    Estimate(EstimateArgs),
    /// Minimum-error discrimination of two unitaries from their eigenphases.
    Discriminate(DiscriminateArgs),
    /// Neyman–Pearson detection of a small phase.
    Interfere(InterfereArgs),
    /// Secret-key transmission: error probabilities and protocol simulation.
    Crypto(CryptoArgs),
    /// Separability time of a twin-beam in noisy fibers.
    Fiber(FiberArgs),
}

impl Cli {
    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

/// Builds the table for a parsed command line.
pub fn run(cli: &Cli) -> Result<Table, CliError> {
    let seed = cli.seed();
    match &cli.command {
        Command::Estimate(a) => commands::run_experiment(a, &cli.ranges, seed),
        Command::Discriminate(a) => commands::run_experiment(a, &cli.ranges, seed),
        Command::Interfere(a) => commands::run_experiment(a, &cli.ranges, seed),
        Command::Crypto(a) => commands::run_experiment(a, &cli.ranges, seed),
        Command::Fiber(a) => commands::run_experiment(a, &cli.ranges, seed),
    }
}

/// Renders the table in the requested format.
pub fn render(cli: &Cli, table: &Table) -> String {
    match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

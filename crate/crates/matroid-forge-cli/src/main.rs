//! Command-line harness: instance files in, result documents out.
//!
//! Exit codes: 0 success/verified, 1 usage or parse error, 2 verification
//! failure, 3 capacity exceeded.

mod commands;
mod selftest;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use matroid_forge::{Error as LibError, Thresholds};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "matroid-forge", version, about = "Finite matroid toolkit and certified intersection solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CommonOpts {
    /// Instance document to read.
    #[arg(long)]
    input: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Override for the brute-force ground-size threshold.
    #[arg(long)]
    threshold_brute: Option<usize>,
    /// Override for the exhaustive spanned-parts search threshold.
    #[arg(long)]
    threshold_theta: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an intersection witness with its certificate and compare it
    /// against the augmenting-path oracle.
    Intersect {
        #[command(flatten)]
        common: CommonOpts,
        /// Record the per-phase search trace in the output.
        #[arg(long)]
        trace: bool,
        /// Seed for the randomized improvement heuristic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the classical augmenting-path intersection alone.
    Edmonds {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify a witness document against an instance.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Witness document ({"I":[...],"I_M":[...],"I_N":[...]}).
        #[arg(long)]
        witness: PathBuf,
    },
    /// Check the independence axioms of both instance matroids.
    CheckAxioms {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Classify the instance matroid as free, uniform of some rank, or not
    /// uniform (with witness).
    ClassifyUniform {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Generate a seeded random instance document.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// uniform | graphic | linear_gf2 | explicit
        #[arg(long, default_value = "uniform")]
        family: String,
        /// Element count (vertex count for graphic instances).
        #[arg(long, default_value_t = 8)]
        size: usize,
        /// Maximum number of partition parts.
        #[arg(long, default_value_t = 3)]
        parts: usize,
        #[arg(long, default_value_t = 0)]
        cap_min: usize,
        #[arg(long, default_value_t = usize::MAX)]
        cap_max: usize,
        /// Edge probability for graphic instances.
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        /// Vector dimension for linear_gf2 instances.
        #[arg(long, default_value_t = 4)]
        dim: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in exhaustive small-scale suites.
    Selftest {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Intersect { common, trace, seed } => commands::intersect(&common, trace, seed),
        Command::Edmonds { common } => commands::edmonds(&common),
        Command::Verify { common, witness } => commands::verify(&common, &witness),
        Command::CheckAxioms { common } => commands::check_axioms(&common),
        Command::ClassifyUniform { common } => commands::classify_uniform(&common),
        Command::Gen { seed, family, size, parts, cap_min, cap_max, edge_prob, dim, out } => {
            commands::gen(seed, &family, size, parts, cap_min, cap_max, edge_prob, dim, out.as_deref())
        }
        Command::Selftest { format } => Ok(selftest::run(format)),
    }
}

impl CommonOpts {
    fn thresholds(&self) -> Result<Thresholds, CliError> {
        let mut thresholds = Thresholds::from_env().map_err(CliError::Lib)?;
        if let Some(brute) = self.threshold_brute {
            thresholds.brute_force = brute;
        }
        if let Some(theta) = self.threshold_theta {
            thresholds.theta = theta;
        }
        Ok(thresholds)
    }

    fn read_input(&self) -> Result<String, CliError> {
        std::fs::read_to_string(&self.input)
            .map_err(|e| CliError::Io(format!("{}: {e}", self.input.display())))
    }
}

#[derive(Debug)]
enum CliError {
    Lib(LibError),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> CliError {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(LibError::CapacityExceeded { .. }) => ExitCode::from(3),
            _ => ExitCode::from(1),
        }
    }
}

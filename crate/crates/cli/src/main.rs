//! `invcorr`: check, compute, verify and compare finite inverse-semigroup
//! structures stored as JSON files.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use invcorr::adjointable::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "invcorr", version, about = "Finite inverse semigroups, inverse sets and their correspondences")]
struct Cli {
    /// Search budget for enumerations (maps, RM candidates).
    #[arg(long, global = true, env = "INVCORR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the axiom suite matching a file's kind.
    Check {
        path: PathBuf,
        /// semigroup, set, correspondence, morita or mcalister; detected when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Build a construction. Arguments are files or fixture names; a fixture
    /// name stands for the semigroup acting on itself.
    Compute {
        construction: String,
        args: Vec<String>,
        /// Write the result here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem suite over fixtures and/or files.
    Verify {
        /// all, semigroup-core, inverse-set, adjointable, correspondence,
        /// bicategory-morita, multiplier or rees.
        #[arg(long, default_value = "all")]
        scope: String,
        /// Include the built-in fixtures (the default when no files are given).
        #[arg(long)]
        fixtures: bool,
        paths: Vec<PathBuf>,
    },
    /// Search for an isomorphism between two structures of the same kind.
    Iso { first: String, second: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let command_echo: Vec<String> = std::env::args().skip(1).collect();
    let result = match &cli.command {
        Command::Check { path, kind } => commands::check(command_echo, cli.budget, path, kind.as_deref()),
        Command::Compute { construction, args, out } => {
            commands::compute(command_echo, cli.budget, construction, args, out.as_deref())
        }
        Command::Verify { scope, fixtures, paths } => {
            commands::verify(command_echo, cli.budget, scope, *fixtures, paths)
        }
        Command::Iso { first, second } => commands::iso(command_echo, cli.budget, first, second),
    };
    let code = match result {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => print!("{}", report.to_structured()),
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("{}: {}", e.code(), e);
            e.exit_code()
        }
    };
    if cli.timing {
        eprintln!("time: {} ms", start.elapsed().as_millis());
    }
    ExitCode::from(code as u8)
}

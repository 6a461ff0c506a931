use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qehrhart_cli::{
    cmd_compute, cmd_examples, cmd_verify, load, max_box_from_env, parse_polynomial_json, CliError, ComputeOptions,
    ExampleFilter, Family, Format, Outcome,
};

#[derive(Parser)]
#[command(name = "qehrhart", version, about = "q-weighted Ehrhart polynomials of lattice and rational polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomial (or its constituents) for a polytope document.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Print every constituent even for a lattice polytope.
        #[arg(long)]
        constituents: bool,
        /// Also print the value at x = 1/(1 - q).
        #[arg(long)]
        limit: bool,
        /// Print the cyclotomic factorization of each coefficient's denominator.
        #[arg(long)]
        poles: bool,
    },
    /// Check the polynomial against brute-force enumeration and its structural identities.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        tmax: u64,
        /// Check this polynomial JSON (as written by `compute --format json`)
        /// instead of computing one.
        #[arg(long)]
        polynomial: Option<PathBuf>,
    },
    /// Run the closed-form corpus.
    Examples {
        #[arg(long, value_enum)]
        only: Option<Family>,
        /// Largest size parameter to run.
        #[arg(long)]
        n: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Compute {
            file,
            format,
            constituents,
            limit,
            poles,
        } => {
            let doc = load(&file)?;
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Latex => Format::Latex,
                FormatArg::Json => Format::Json,
            };
            cmd_compute(
                &doc,
                &ComputeOptions {
                    format,
                    constituents,
                    limit,
                    poles,
                },
            )
        }
        Command::Verify { file, tmax, polynomial } => {
            let doc = load(&file)?;
            let supplied = match polynomial {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
                    Some(parse_polynomial_json(&text)?)
                }
                None => None,
            };
            cmd_verify(&doc, tmax, supplied, max_box_from_env()?)
        }
        Command::Examples { only, n } => Ok(cmd_examples(&ExampleFilter { only, n })),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! Command-line front end for active sums and cellularity certificates.

mod commands;

use std::process::ExitCode;

use clap::builder::TypedValueParser as _;
use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "active-sum", version, about = "Active sums of subgroup families and C_n-cellularity certificates")]
struct Cli {
    #[command(flatten)]
    run: RunOptions,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every command.
#[derive(Args, Debug, Clone)]
pub struct RunOptions {
    /// Maximum number of live cosets during enumeration.
    #[arg(long, global = true, env = "ACTIVESUM_BUDGET", default_value_t = active_sum::limits::DEFAULT_COSET_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub budget: usize,
    /// Largest group order for which elements are listed.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub element_cutoff: u64,
    /// Largest number of family members.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub family_cap: usize,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize the active sum of a family and the canonical map onto the group.
    ActiveSum(commands::ActiveSumArgs),
    /// Certify that the active sum of a family is C_n-cellular.
    Certify(commands::CertifyArgs),
    /// Check the divisor properties of C_n-equivalences over catalog homomorphisms.
    #[command(alias = "sweep")]
    PropertySweep(commands::SweepArgs),
    /// Enumerate cosets of a presentation.
    Enumerate(commands::EnumerateArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::ActiveSum(a) => commands::active_sum(a, &cli.run),
        Command::Certify(a) => commands::certify(a, &cli.run),
        Command::PropertySweep(a) => commands::property_sweep(a, &cli.run),
        Command::Enumerate(a) => commands::enumerate(a, &cli.run),
    };
    match result.and_then(|out| commands::emit(&out, &cli.run)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use cleanideal::commands::{run, Command, Options};
use cleanideal::report::Format;

/// Decide cleanness and pretty-cleanness of monomial ideals, and build and
/// check prime filtrations and Stanley decompositions.
#[derive(Debug, Parser)]
#[command(name = "cleanideal", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Ideal, filtration or decomposition file (not used by random-audit).
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest exponent of random generators.
    #[arg(long, default_value_t = 4)]
    max_degree: u32,
    /// Number of random ideals.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Number of variables of random ideals.
    #[arg(long, default_value_t = 3)]
    vars: usize,
    /// Largest number of generators of random ideals.
    #[arg(long, default_value_t = 8)]
    max_gens: usize,
    /// Also write the witness (filtration or decomposition file) here.
    #[arg(long)]
    witness: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        format: cli.format,
        seed: cli.seed,
        max_degree: cli.max_degree,
        count: cli.count,
        vars: cli.vars,
        max_generators: cli.max_gens,
        witness: cli.witness,
    };
    let outcome = run(cli.command, cli.input.as_deref(), &opts);
    print!("{}", outcome.output);
    ExitCode::from(outcome.exit_code as u8)
}

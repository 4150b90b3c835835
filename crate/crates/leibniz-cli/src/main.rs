//! Command-line front door: load algebra files, run analyses, emit reports,
//! generate corpora and run the theorem suite.
//!
//! Exit codes: 0 success, 1 negative mathematical verdict, 2 usage/parse
//! error, 3 gated-capability error (infinite field, too-small field,
//! enumeration budget).

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use leibniz::error::Error;
use leibniz::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(
    name = "leibniz",
    about = "Exact computation with finite-dimensional left Leibniz algebras",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Candidate budget for enumeration-based operations
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Seed for seeded generators
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identity of an algebra file
    Verify { file: PathBuf },

    /// Analyze an algebra file and print a report
    Analyze(AnalyzeArgs),

    /// Run the theorem suite over a corpus directory
    Theorems {
        corpus_dir: PathBuf,
        /// Only run checks whose name contains this string (e.g. th-minE)
        #[arg(long)]
        filter: Option<String>,
    },

    /// Generate verified algebra files
    Generate(GenerateArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Lower central and derived series
    #[arg(long)]
    series: bool,
    /// Left centre and the Lie quotient check
    #[arg(long)]
    centres: bool,
    /// Normalizers of a subspace: elements separated by ';', e.g. "u;n" or "1,0,0,0;0,1,0,0"
    #[arg(long, value_name = "SUBSPACE")]
    normalizer: Option<String>,
    /// Engel subalgebra of an element, e.g. "n" or "0,1,0,0"
    #[arg(long, value_name = "ELEMENT")]
    engel: Option<String>,
    /// Cartan subalgebra by minimal-Engel descent
    #[arg(long)]
    cartan: bool,
    /// Socle (finite fields only)
    #[arg(long)]
    socle: bool,
    /// Frattini subalgebra (finite fields only)
    #[arg(long)]
    frattini: bool,
    /// Primitivity certificate and complement census (finite fields only)
    #[arg(long)]
    primitive: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// One of: split, cyclic, random-nilpotent, paper-example, corpus
    kind: String,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
    /// Field: Q or Fp with p prime, e.g. F5
    #[arg(long, default_value = "Q")]
    field: String,
    /// Dimension for cyclic / random-nilpotent
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Module dimension for split
    #[arg(long, default_value_t = 1)]
    module_dim: usize,
    /// Right-action mode for split: zero or minus-t
    #[arg(long, default_value = "zero")]
    s_mode: String,
    /// Module kind for split: scalar, companion or jordan
    #[arg(long, default_value = "scalar")]
    rep: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InfiniteField
        | Error::FieldTooSmall { .. }
        | Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Verify { file } => report::cmd_verify(file, cli.json),
        Command::Analyze(args) => report::cmd_analyze(args, cli.json, cli.budget),
        Command::Theorems { corpus_dir, filter } => {
            report::cmd_theorems(corpus_dir, filter.as_deref(), cli.json, cli.budget)
        }
        Command::Generate(args) => report::cmd_generate(args, cli.json, cli.seed),
    }
}

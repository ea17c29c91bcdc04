//! `c2coh` command-line front end.
//!
//! Ring documents are TOML; reports are JSON on stdout. Exit status is 0 on
//! success, 1 when a verdict fails, 2 on malformed input.

mod commands;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "c2coh", version, about = "Ext algebras of C2-algebras of vertex operator algebras")]
struct Cli {
    /// Add wall-clock timing to JSON reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy, Default)]
pub struct Bounds {
    /// Highest homological degree.
    #[arg(long = "p", short = 'p')]
    pub p: Option<usize>,
    /// Highest internal degree.
    #[arg(long = "d", short = 'd')]
    pub d: Option<u32>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    ShiftedChainMap,
    Composition,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ring documents.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Betti table of the minimal resolution of the residue field.
    Resolve {
        file: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Yoneda algebra structure constants.
    Ext {
        file: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
        /// Compare dimensions with the complete-intersection target built from the relations.
        #[arg(long)]
        lower_bound: bool,
        /// Check that the degree-2 classes dual to the relations generate a polynomial algebra.
        #[arg(long, value_name = "R")]
        witness: Option<usize>,
        #[arg(long, value_enum, default_value = "shifted-chain-map")]
        convention: Convention,
    },
    /// Tate complex verification and Clifford presentation of a complete intersection.
    Tate {
        file: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Emit the C2-algebra of a vertex operator algebra as a ring document.
    Voa {
        #[command(subcommand)]
        command: VoaCommand,
    },
    /// `N_k = dim L(kθ)` via the Weyl dimension formula.
    Nk {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, conflicts_with = "symbolic")]
        level: Option<u64>,
        #[arg(long)]
        symbolic: bool,
    },
    /// Combine ring documents.
    Compose {
        #[command(subcommand)]
        command: ComposeCommand,
    },
}

#[derive(Subcommand, Debug)]
enum RingCommand {
    /// Parse a document and report Hilbert function, minimality and CI status.
    Check {
        file: PathBuf,
        #[command(flatten)]
        bounds: Bounds,
    },
}

#[derive(Args, Debug)]
struct Output {
    /// Write the document here instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum VoaCommand {
    Affine {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: u64,
        #[command(flatten)]
        out: Output,
    },
    Virasoro {
        #[arg(long = "p", required_unless_present = "generic", requires = "q")]
        p: Option<u64>,
        #[arg(long = "q", requires = "p")]
        q: Option<u64>,
        #[arg(long, conflicts_with_all = ["p", "q"])]
        generic: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
enum ComposeCommand {
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Ring { command: RingCommand::Check { file, bounds } } => commands::ring_check(&file, bounds, cli.timing),
        Command::Resolve { file, bounds } => commands::resolve(&file, bounds, cli.timing),
        Command::Ext { file, bounds, lower_bound, witness, convention } => {
            commands::ext(&file, bounds, lower_bound, witness, convention, cli.timing)
        }
        Command::Tate { file, bounds } => commands::tate(&file, bounds, cli.timing),
        Command::Voa { command: VoaCommand::Affine { root_type, rank, level, out } } => {
            commands::voa_affine(&root_type, rank, level, out.output.as_deref())
        }
        Command::Voa { command: VoaCommand::Virasoro { p, q, generic, out } } => {
            commands::voa_virasoro(p.zip(q), generic, out.output.as_deref())
        }
        Command::Nk { root_type, rank, level, symbolic: _ } => commands::nk(&root_type, rank, level, cli.timing),
        Command::Compose { command: ComposeCommand::Tensor { left, right, out } } => {
            commands::compose_tensor(&left, &right, out.output.as_deref())
        }
    };
    match result {
        Ok(commands::Status::Success) => ExitCode::SUCCESS,
        Ok(commands::Status::VerdictFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.to_string().replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

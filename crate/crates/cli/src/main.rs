//! `sasm`: command-line front end for `asm-groups`.

mod commands;
mod io;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit status for malformed or invalid input.
const EXIT_INVALID: u8 = 1;
/// Exit status for a request refused by a resource guard.
const EXIT_GUARD: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "sasm", version, about = "Singular alternating sign matrices and their groups")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Flags shared by every subcommand. Flags override `SASM_*` variables,
/// which override the defaults.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, env = "SASM_FORMAT", default_value = "text")]
    pub format: OutputFormat,
    /// Largest order searched for.
    #[arg(long, global = true, env = "SASM_ORDER_CAP", default_value_t = 64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub order_cap: u64,
    /// Entry size at which power iteration gives up.
    #[arg(long, global = true, env = "SASM_MAGNITUDE_BOUND", default_value_t = 1_000_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub magnitude_bound: u64,
    /// Largest group a closure may produce.
    #[arg(long, global = true, env = "SASM_CLOSURE_MAX", default_value_t = 256,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub closure_max: u64,
    /// Worker threads for enumeration. Defaults to the number of CPUs.
    #[arg(long, global = true, env = "SASM_JOBS",
          value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the ASM conditions and report reduced form, negatives, rank and nullity.
    Verify(InputArg),
    /// Multiplicative order of one matrix.
    Order(InputArg),
    /// Group generated by a list of matrices.
    Closure(InputArg),
    /// Build one of the explicit constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Stream every n x n ASM.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Write the matrices here and print only the count.
        #[arg(long)]
        emit: Option<std::path::PathBuf>,
    },
    /// Count singular ASMs of finite order by order.
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Maximal groups of singular ASMs, grouped by identity.
    Atlas {
        #[arg(long)]
        n: usize,
    },
    /// Idempotents with their reduced forms, and order-2 square roots.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Kronecker product of the groups generated by two matrix lists.
    Kron {
        #[arg(long)]
        left: std::path::PathBuf,
        #[arg(long)]
        right: std::path::PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Matrix file in text or JSON form; stdin when omitted or `-`.
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "n-plus-4")]
    NPlus4,
    LowRank,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Frame around a permutation, size n+4.
    Frame {
        /// One-line notation, e.g. `2,3,1`.
        #[arg(long)]
        perm: String,
        #[arg(long, default_value = "A")]
        variant: String,
    },
    /// The idempotent E_k of size 4k+1.
    Ek {
        #[arg(long)]
        k: usize,
    },
    /// Generators of a copy of S_n.
    Symn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "n-plus-4")]
        family: Family,
    },
    /// P E_k for a permutation of 1..4k+1 fixing the odd indices.
    Theta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        perm: String,
    },
    /// Kronecker product of two matrices.
    Kron {
        #[arg(long)]
        left: std::path::PathBuf,
        #[arg(long)]
        right: std::path::PathBuf,
    },
    /// Replace the central permutation block of a frame.
    ExpandCenter {
        #[arg(long)]
        base: std::path::PathBuf,
        #[arg(long)]
        perm: String,
    },
}

/// A failure with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        let code = match e.downcast_ref::<asm_groups::Error>() {
            Some(asm_groups::Error::ResourceGuard { .. }) => EXIT_GUARD,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: format!("{e:#}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INVALID)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! `ctacp`: batch queries over specification files.
//!
//! Exit status 0 means success or an affirmative verdict, 1 a negative
//! verdict, 2 a usage or specification error and 3 an exhausted budget.

mod commands;
mod lint;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ctacp_core::limits::{DEFAULT_EXPANSION_CAP, DEFAULT_STATE_BUDGET};
use ctacp_core::logic::DEFAULT_ATOM_CAP;
use ctacp_core::Limits;

use commands::Verdict;

#[derive(Parser, Debug)]
#[command(
    name = "ctacp",
    version,
    about = "Contradiction-tolerant process algebra toolkit"
)]
struct Cli {
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Maximum number of atomic propositions.
    #[arg(long, global = true, env = "CTACP_ATOM_CAP", default_value_t = DEFAULT_ATOM_CAP)]
    atom_cap: usize,
    /// Maximum number of reachable states.
    #[arg(long, global = true, env = "CTACP_STATE_BUDGET", default_value_t = DEFAULT_STATE_BUDGET)]
    state_budget: usize,
    /// Maximum valuations × states of an expanded system.
    #[arg(long, global = true, env = "CTACP_EXPANSION_CAP", default_value_t = DEFAULT_EXPANSION_CAP)]
    expansion_cap: usize,
}

impl From<&LimitArgs> for Limits {
    fn from(a: &LimitArgs) -> Self {
        Limits {
            atom_cap: a.atom_cap,
            state_budget: a.state_budget,
            expansion_cap: a.expansion_cap,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a specification.
    Check { file: PathBuf },
    /// Is the formula designated under every valuation?
    Taut {
        file: PathBuf,
        #[arg(short = 'e', long = "expr")]
        formula: String,
    },
    /// Are two formulas logically equivalent?
    Equiv {
        file: PathBuf,
        #[arg(short = 'e', long = "expr", num_args = 1, required = true)]
        formulas: Vec<String>,
    },
    /// Is the formula never valued both?
    Consistent {
        file: PathBuf,
        #[arg(short = 'e', long = "expr")]
        formula: String,
    },
    /// Do the premises entail the goal?
    Entails {
        file: PathBuf,
        /// Premise; repeat for several.
        #[arg(short = 'e', long = "expr")]
        premises: Vec<String>,
        #[arg(short = 'g', long)]
        goal: String,
    },
    /// Print the root signal of a process.
    Signal {
        file: PathBuf,
        /// A process name defined in the file, or a process term.
        #[arg(short = 'p', long = "proc")]
        process: String,
    },
    /// Print the basic form of a process.
    Normalize {
        file: PathBuf,
        #[arg(short = 'p', long = "proc")]
        process: String,
        /// Skip canonicalization of guards and summands.
        #[arg(long)]
        raw: bool,
    },
    /// Build the transition system of a process.
    Lts {
        file: PathBuf,
        #[arg(short = 'p', long = "proc")]
        process: String,
        /// Write JSON here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write Graphviz DOT here (`-` for standard output).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide splitting bisimilarity of two processes.
    Bisim {
        file: PathBuf,
        #[arg(short = 'p', long = "proc")]
        left: String,
        #[arg(short = 'q')]
        right: String,
    },
    /// Decide equality of two recursion-free processes from the axioms.
    Eq {
        file: PathBuf,
        #[arg(short = 'p', long = "proc")]
        left: String,
        #[arg(short = 'q')]
        right: String,
    },
    /// Check random instances of every axiom for bisimilarity.
    Axioms {
        file: PathBuf,
        #[arg(long, default_value_t = ctacp_core::syntax::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = ctacp_core::syntax::DEFAULT_SIZE)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full report as JSON here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Report suspicious declarations and the linear forms of recursive
    /// specifications.
    Lint { file: PathBuf },
    /// Run the queries written in the file.
    Run { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from(&cli.limits);
    let mut out = String::new();
    let result = commands::execute(&cli.command, limits, &mut out);
    print!("{out}");
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(f) => {
            eprintln!("ctacp: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn arguments_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn flags_parse() {
        let cli = Cli::try_parse_from([
            "ctacp",
            "equiv",
            "f.ct",
            "-e",
            "P",
            "-e",
            "~~P",
            "--atom-cap",
            "3",
        ])
        .unwrap();
        assert_eq!(cli.limits.atom_cap, 3);
        match cli.command {
            Command::Equiv { formulas, .. } => assert_eq!(formulas, ["P", "~~P"]),
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["ctacp", "bisim", "f.ct", "-p", "A"]).is_err());
    }
}

//! `lmn`: evaluate, tabulate, check and synthesize terms of the standard
//! n-nuanced Łukasiewicz–Moisil algebras, and report on their free algebras.
//!
//! Exit codes: 0 success, 1 negative mathematical result (not
//! representable, mismatch, failed check), 2 usage or I/O error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lmn", version, about = "Terms, representability and free algebras over the standard LM_n-algebras")]
pub struct Cli {
    /// Worker threads for table enumeration (0 = one per core).
    #[arg(short = 'j', long, global = true, default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, clap::Args)]
pub struct Valence {
    /// The n of LM_n; the carrier is {0, 1/n, ..., 1}.
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(2..))]
    pub n: u32,
}

#[derive(Debug, clap::Args)]
pub struct Budget {
    /// Refuse to enumerate more than this many tuples ((n+1)^r).
    #[arg(long, default_value_t = 1_000_000)]
    pub max_table: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the De Morgan and LM_n axioms exhaustively on the standard algebra.
    Axioms {
        #[command(flatten)]
        valence: Valence,
    },
    /// Evaluate a term under an assignment.
    Eval {
        #[command(flatten)]
        valence: Valence,
        term: String,
        /// Variable binding such as x1=3/4 or x1=3 (repeatable).
        #[arg(long = "set", value_name = "xK=VALUE")]
        set: Vec<String>,
    },
    /// Write the truth table of a term.
    Table {
        #[command(flatten)]
        valence: Valence,
        /// Number of variables.
        #[arg(short = 'r', value_parser = clap::value_parser!(u32).range(1..))]
        arity: u32,
        term: String,
        /// Output file (standard output if omitted).
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
    /// Decide whether a table is representable by a term.
    Check {
        /// Table file (JSON, or CSV when the name ends in .csv; - for stdin).
        table: PathBuf,
        /// Input format; guessed from the file name if omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print the normal-form representing term of a table.
    Synthesize {
        table: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Remove zero disjuncts and unit conjuncts from the result.
        #[arg(long)]
        simplify: bool,
        /// Also write the term to this file.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Check that a term represents a table.
    Verify {
        /// Term text (omit when using --term-file).
        #[arg(required_unless_present = "term_file")]
        term: Option<String>,
        /// Table file.
        #[arg(long, short = 't')]
        table: PathBuf,
        /// Read the term from a file instead.
        #[arg(long, conflicts_with = "term")]
        term_file: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// List all subalgebras of the standard algebra.
    Subalgebras {
        #[command(flatten)]
        valence: Valence,
    },
    /// Report the structure and size of the free algebra on r generators.
    Free {
        #[command(flatten)]
        valence: Valence,
        #[arg(short = 'r', value_parser = clap::value_parser!(u32).range(1..))]
        arity: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
    /// Show that the Łukasiewicz implication escapes the subalgebra {0, 1/n, (n-1)/n, 1}.
    DemoImplication {
        #[command(flatten)]
        valence: Valence,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("lmn: {err}");
            ExitCode::from(2)
        }
    }
}

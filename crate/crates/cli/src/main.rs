//! Command-line surface for the liealg toolkit.
//!
//! Exit codes: 0 success, 1 validation or parse failure (including bad
//! usage), 2 unsupported field or operation, 3 proven-property violation
//! detected, 4 enumeration budget exceeded.

mod ops;

use clap::{Parser, Subcommand};
use liealg_core::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(
    name = "liealg",
    version,
    about = "Exact invariants and mechanical verification for finite-dimensional Lie algebras",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print the machine-readable report instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration. Output is identical for any value.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra document and check the Jacobi identity.
    Validate { file: String },

    /// Structural summary: series, flags, center, nilradical, Frattini.
    Info { file: String },

    /// Largest abelian subalgebra and ideal dimensions, with witnesses.
    Invariants {
        file: String,
        /// Exact values by certified search (default over finite fields).
        #[arg(long)]
        exact: bool,
        /// Certified bounds only (default over the rationals).
        #[arg(long, conflicts_with = "exact")]
        bounds: bool,
        /// Search order: bnb (branch and bound) or exhaustive.
        #[arg(long, value_parser = ["bnb", "exhaustive"], default_value = "bnb")]
        strategy: String,
        /// Enumeration budget in subspace visits, per search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },

    /// Place a solvable algebra with a codimension-two abelian witness
    /// into one of the three structure cases.
    Classify {
        file: String,
        /// Abelian subalgebra of dimension n - 2, for example "e1,e2+e3".
        #[arg(long)]
        witness: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },

    /// Run property checkers against one algebra.
    Verify {
        file: String,
        /// Comma-separated property tokens, for example "P2.1,T3.5".
        #[arg(long)]
        props: Option<String>,
        /// "all" runs every property.
        #[arg(long)]
        suite: Option<String>,
        /// Witness for the T3.5 classification report, when requested.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumeration budget in subspace visits, per computation.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Random vectors sampled by the extension checker.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },

    /// List the built-in algebras or emit one as a document.
    Catalog {
        #[arg(long)]
        list: bool,
        /// Entry name, for example "heisenberg" or "example-4.1".
        #[arg(long, value_name = "NAME")]
        emit: Option<String>,
        /// Field: "Q" or "Fp:P" with P prime.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Entry parameters, for example "n=3" or "m=2,k=4". Repeatable.
        #[arg(long)]
        params: Vec<String>,
    },

    /// Generate a seeded random algebra from one of the testing classes.
    Random {
        /// nilpotent, supersolvable, or metabelian-split.
        #[arg(long = "type", value_name = "TYPE",
              value_parser = ["nilpotent", "supersolvable", "metabelian-split"])]
        kind: String,
        #[arg(long)]
        dim: usize,
        /// Field characteristic (prime).
        #[arg(long)]
        p: u64,
        #[arg(long)]
        seed: u64,
        /// Abelian ideal dimension for metabelian-split (default dim/2).
        #[arg(long)]
        split: Option<usize>,
        /// Print the algebra document instead of the summary.
        #[arg(long)]
        emit: bool,
    },

    /// Search seeded random algebras for a counterexample to a probe.
    Fuzz {
        /// OQ1, OQ2i, or OQ2ii.
        #[arg(long)]
        question: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Enumeration budget in subspace visits, per computation.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random vectors sampled by the extension checker.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{e}");
                    std::process::exit(1);
                }
            }
        }
    };

    let json = cli.json;
    let command = cli.command;
    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| ops::dispatch(&command)),
            Err(e) => Err(ops::CliError::Input(format!(
                "cannot build a pool of {n} threads: {e}"
            ))),
        },
        None => ops::dispatch(&command),
    };

    match outcome {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            std::process::exit(report.code);
        }
        Err(err) => {
            eprintln!("{}", err.message());
            std::process::exit(err.code());
        }
    }
}

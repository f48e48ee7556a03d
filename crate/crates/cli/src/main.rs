//! `hopfeq`: check operators against the Hopf, pentagonal and Yang-Baxter
//! equations and build the bialgebras they determine.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hopfeq::Error;

#[derive(Parser)]
#[command(name = "hopfeq", version, about = "Exact computations around the Hopf equation R23 R13 R12 = R12 R23")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Source {
    /// Built-in operator, e.g. `char2`, `r_q:1`, `takesaki_c3` (see `fixtures`).
    #[arg(long, conflicts_with = "input")]
    pub fixture: Option<String>,
    /// Matrix document `{"field", "n", "matrix"}`.
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
    /// `q` or `fp:<p>`. Defaults to the document's field, or `q`.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the Hopf, pentagon, QYBE, commutativity and bijectivity conditions.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Build and complete the presentation of B(R).
    Frt {
        #[command(flatten)]
        source: Source,
        /// Also adjoin all generator commutators.
        #[arg(long)]
        commutative: bool,
        #[arg(long, default_value_t = hopfeq::rewrite::DEFAULT_MAX_DEGREE)]
        max_deg: usize,
        /// Proceed even when R is not a (commutative) Hopf solution.
        #[arg(long)]
        force: bool,
        /// Print multiplication, comultiplication and counit tables.
        #[arg(long)]
        tables: bool,
        /// Basis for the tables: `preferred` (fixture's own, if any) or `irreducible`.
        #[arg(long, default_value = "preferred")]
        basis: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the identities for the obstructions that hold for every R.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Check this many random operators instead of one input.
        #[arg(long, conflicts_with_all = ["fixture", "input"])]
        random: Option<usize>,
        /// Dimension of V for --random.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List every solution over a small prime field.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        field: String,
        /// hopf, pentagon or qybe.
        #[arg(long, default_value = "hopf")]
        eq: String,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Largest number of candidate matrices to scan.
        #[arg(long, default_value_t = hopfeq::enumerate::DEFAULT_CAP)]
        cap: u128,
        /// Print every solution.
        #[arg(long)]
        dump: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in operators.
    Fixtures,
}

/// Exit codes: 2 malformed input, 3 bad field, 4 unmet precondition,
/// 5 enumeration cap.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MalformedField(_) | Error::NonPrimeModulus(_) | Error::FieldMismatch(_) => 3,
        Error::NotHopfSolution | Error::NotCommutative | Error::MissingAntipode => 4,
        Error::CapExceeded { .. } => 5,
        _ => 2,
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`hopfeq ... | head`) instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { source, json } => commands::check(&source, json),
        Command::Frt { source, commutative, max_deg, force, tables, basis, json } => {
            commands::frt(&source, &commands::FrtOptions { commutative, max_deg, force, tables, basis, json })
        }
        Command::Verify { source, random, n, seed, json } => commands::verify(&source, random, n, seed, json),
        Command::Enumerate { n, field, eq, jobs, cap, dump, json } => {
            commands::enumerate(n, &field, &eq, jobs, cap, dump, json)
        }
        Command::Fixtures => {
            commands::fixtures();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(commands::Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(commands::Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

//! `zeta4`: verification harness for the two families of linear forms in
//! `1` and `ζ(4)`.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "zeta4", version, about = "Exact verification of linear forms in 1 and zeta(4)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MMode {
    /// Every 0 <= m <= n.
    All,
    /// Only m = 0.
    Zero,
    /// Only m = 1 (n >= 1).
    One,
    /// Only m = n.
    Diagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Main,
    BoundaryM0,
    BoundaryZr,
    ClosedForms,
    BinomIdentity,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Z_l(n,m) = Z_r(n,m) on a grid of cells.
    VerifyIdentity {
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "all")]
        m_mode: MMode,
        #[arg(long, env = "ZETA4_JOBS")]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also write a CSV view (c0, c4 and pass flags).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Record per-cell timing in the report.
        #[arg(long)]
        profile: bool,
    },
    /// Run recurrence, closed-form and identity checks.
    VerifyRecurrences {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: u32,
        #[arg(long, env = "ZETA4_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the exact form of one cell and its decimal value.
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compare printed, generated and oracle summand values at random points.
    SummandAudit {
        #[arg(long)]
        n_max: u32,
        /// Sample points per cell.
        #[arg(long)]
        samples: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, env = "ZETA4_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::VerifyIdentity { n_max, m_mode, jobs, json, csv, profile } => {
            commands::verify_identity(n_max, m_mode, jobs, json.as_deref(), csv.as_deref(), profile)
        }
        Command::VerifyRecurrences { suite, n_max, jobs, json } => {
            commands::verify_recurrences(suite, n_max, jobs, json.as_deref())
        }
        Command::Eval { n, m, digits, json } => commands::eval(n, m, digits, json),
        Command::SummandAudit { n_max, samples, seed, jobs, json } => {
            commands::summand_audit(n_max, samples, seed, jobs, json.as_deref())
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

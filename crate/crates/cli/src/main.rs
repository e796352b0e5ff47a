//! `dutchbook`: games, exact zero-sum solving and coherence checks from the shell.
//!
//! Exit codes: 0 success, 1 Dutch book found, 2 input error, 3 analysis error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dutchbook_core::bets::DEFAULT_MULTIPLIER_BUDGET;

use commands::{Ctx, Failure};

#[derive(Parser)]
#[command(name = "dutchbook", version, about = "Exact game values, zero-sum solving and Dutch book detection")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Also print standard parts of field values.
    #[arg(long = "std", global = true)]
    standard_parts: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Status, canonical form, stops, mean, temperature and thermograph of a game.
    Eval { expr: String },
    /// Compare two games: <, >, = or ‖.
    Cmp { left: String, right: String },
    /// Solve a payoff matrix as a zero-sum game.
    Solve { file: PathBuf },
    /// Coherence witness or Dutch book for a payoff matrix.
    Coherence {
        file: PathBuf,
        /// Add a bookmaker paying 0 on every outcome.
        #[arg(long)]
        bank: bool,
    },
    /// Mean-value trichotomy for a matrix of games.
    Classify {
        file: PathBuf,
        /// Largest multiplier tried.
        #[arg(long, default_value_t = DEFAULT_MULTIPLIER_BUDGET)]
        budget: u64,
    },
    /// Lower prevision of a target event from accepted bets.
    LowerPrevision { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ctx = Ctx {
        standard_parts: cli.standard_parts,
    };
    let outcome = match &cli.command {
        Command::Eval { expr } => commands::eval(expr).map(|r| (r, false)),
        Command::Cmp { left, right } => commands::cmp(left, right).map(|r| (r, false)),
        Command::Solve { file } => commands::solve(&ctx, file).map(|r| (r, false)),
        Command::Coherence { file, bank } => commands::coherence(&ctx, file, *bank),
        Command::Classify { file, budget } => commands::classify(file, *budget),
        Command::LowerPrevision { file } => commands::lower_prevision(&ctx, file).map(|r| (r, false)),
    };
    match outcome {
        Ok((report, dutch_book)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.human());
            }
            ExitCode::from(if dutch_book { 1 } else { 0 })
        }
        Err(failure) => fail(failure),
    }
}

fn fail(failure: Failure) -> ExitCode {
    eprintln!("error: {}", failure.message());
    ExitCode::from(failure.exit_code() as u8)
}

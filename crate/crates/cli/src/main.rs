//! `qcard` — trace the one-step quantum query, audit it for entanglement,
//! and compare card-game strategies exactly or by seeded simulation.
//!
//! Exit status: 0 on success (for `entanglement`, only when the state is
//! separable at every stage), 2 on usage or parse errors, 1 on internal
//! invariant failures.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qcard::{StrategySpec, UpperRow};
use qcard_cli::{
    run_analyze_command, run_entanglement_command, run_play_command, run_query_command, CliError,
    OutputFormat, StrategyArg,
};

#[derive(Parser)]
#[command(name = "qcard", version, about = "Three-card game: quantum query tracing and payoff analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the one-step query circuit against the oracle for a card row
    Query {
        /// Upper row as three bits over {0,1}, e.g. 001 (circle=0, dot=1)
        #[arg(long, value_parser = parse_cards)]
        cards: UpperRow,
        /// Seed for the measurement stream (the query itself is deterministic)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print the state after every circuit stage
        #[arg(long)]
        show_stages: bool,
        /// Output encoding
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Audit every stage of the query circuit for entanglement
    Entanglement {
        /// Upper row as three bits over {0,1}, e.g. 110
        #[arg(long, value_parser = parse_cards)]
        cards: UpperRow,
        /// Seed for the measurement stream (the query itself is deterministic)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output encoding
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Exact win/lose/refuse probabilities for a strategy
    Analyze {
        /// Bob's strategy
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        /// Output encoding
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Seeded Monte Carlo estimate of a strategy's payoff
    Play {
        /// Bob's strategy
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        /// Number of rounds to simulate
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rounds: u64,
        /// Master seed; round i uses an independent substream derived from it
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output encoding (csv is defined for this command only)
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn parse_cards(s: &str) -> Result<UpperRow, String> {
    s.parse().map_err(|e| format!("{e}; card rows are three characters over {{0,1}}, e.g. 001"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let outcome = match cli.command {
        Command::Query { cards, seed, show_stages, format } => {
            run_query_command(cards, seed, show_stages, format).map(|report| (report, true))
        }
        Command::Entanglement { cards, seed, format } => {
            run_entanglement_command(cards, seed, format)
        }
        Command::Analyze { strategy, format } => {
            run_analyze_command(StrategySpec::from(strategy), format).map(|report| (report, true))
        }
        Command::Play { strategy, rounds, seed, format } => {
            run_play_command(StrategySpec::from(strategy), rounds, seed, format)
                .map(|report| (report, true))
        }
    };

    match outcome {
        Ok((report, success)) => {
            println!("{report}");
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error @ CliError::UnsupportedCsv { .. }) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(1)
        }
    }
}

//! Report construction for the `qcard` binary.
//!
//! Every report is built as a complete string with a fixed key order and
//! fixed number formatting (ten significant digits, negative zero folded to
//! zero), so identical inputs produce byte-identical output across runs and
//! across serial/parallel execution.

use std::fmt::Write as _;

use qcard::{
    exact_analysis, monte_carlo, run_query, separability_report, ExactResult, PayoffSummary,
    PhaseOracle, QueryTranscript, Rational64, SeparabilityReport, StrategySpec, UpperRow,
    DEFAULT_SEPARABILITY_TOLERANCE,
};

/// Output encodings. CSV is defined for `play` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Strategy names as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum StrategyArg {
    Naive,
    AlwaysRefuse,
    PeekSame,
    PeekOther,
    Quantum,
}

impl From<StrategyArg> for StrategySpec {
    fn from(arg: StrategyArg) -> StrategySpec {
        match arg {
            StrategyArg::Naive => StrategySpec::Naive,
            StrategyArg::AlwaysRefuse => StrategySpec::AlwaysRefuse,
            StrategyArg::PeekSame => StrategySpec::PeekSame,
            StrategyArg::PeekOther => StrategySpec::PeekOther,
            StrategyArg::Quantum => StrategySpec::Quantum,
        }
    }
}

/// Errors surfaced by the command runners.
#[derive(Debug, PartialEq)]
pub enum CliError {
    /// CSV was requested for a command that does not define it.
    UnsupportedCsv { command: &'static str },
    /// An internal library invariant failed.
    Game(qcard::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::UnsupportedCsv { command } => {
                write!(f, "csv output is only defined for the play command, not {command}")
            }
            CliError::Game(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<qcard::Error> for CliError {
    fn from(e: qcard::Error) -> Self {
        CliError::Game(e)
    }
}

/// Formats a double with ten significant digits in plain positional
/// notation. Zero (including negative zero) prints as `0`.
pub fn format_significant(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn amplitude_pair(re: f64, im: f64, json: bool) -> String {
    if json {
        format!("[{},{}]", format_significant(re), format_significant(im))
    } else {
        format!("[{}, {}]", format_significant(re), format_significant(im))
    }
}

fn ratio_decimal(r: &Rational64) -> String {
    format_significant(*r.numer() as f64 / *r.denom() as f64)
}

// ---------------------------------------------------------------------------
// query
// ---------------------------------------------------------------------------

/// Builds the `query` report. Text shows the result row, plus all four
/// stage states when `show_stages` is set; JSON always carries the stages.
pub fn query_report(
    cards: UpperRow,
    transcript: &QueryTranscript,
    show_stages: bool,
    format: OutputFormat,
) -> Result<String, CliError> {
    match format {
        OutputFormat::Text => Ok(query_text(cards, transcript, show_stages)),
        OutputFormat::Json => Ok(query_json(cards, transcript)),
        OutputFormat::Csv => Err(CliError::UnsupportedCsv { command: "query" }),
    }
}

fn query_text(cards: UpperRow, transcript: &QueryTranscript, show_stages: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cards: {cards}");
    if show_stages {
        for (index, state) in transcript.stage_states().iter().enumerate() {
            let amps: Vec<String> = state
                .amplitudes()
                .iter()
                .map(|a| amplitude_pair(a.re, a.im, false))
                .collect();
            let _ = writeln!(out, "stage {index}: {}", amps.join(" "));
        }
    }
    let _ = write!(out, "result: {}", transcript.result());
    out
}

fn query_json(cards: UpperRow, transcript: &QueryTranscript) -> String {
    let stages: Vec<String> = transcript
        .stage_states()
        .iter()
        .map(|state| {
            let amps: Vec<String> = state
                .amplitudes()
                .iter()
                .map(|a| amplitude_pair(a.re, a.im, true))
                .collect();
            format!("[{}]", amps.join(","))
        })
        .collect();
    format!(
        "{{\"cards\":\"{cards}\",\"result\":\"{}\",\"stages\":[{}]}}",
        transcript.result(),
        stages.join(",")
    )
}

/// Runs the query circuit for a row and renders the report.
pub fn run_query_command(
    cards: UpperRow,
    seed: u64,
    show_stages: bool,
    format: OutputFormat,
) -> Result<String, CliError> {
    let mut oracle = PhaseOracle::new(cards);
    let mut rng = qcard::rng::round_rng(seed, 0);
    let transcript = run_query(&mut oracle, &mut rng)?;
    query_report(cards, &transcript, show_stages, format)
}

// ---------------------------------------------------------------------------
// entanglement
// ---------------------------------------------------------------------------

/// Builds the `entanglement` report.
pub fn entanglement_report(
    cards: UpperRow,
    report: &SeparabilityReport,
    format: OutputFormat,
) -> Result<String, CliError> {
    match format {
        OutputFormat::Text => Ok(entanglement_text(cards, report)),
        OutputFormat::Json => Ok(entanglement_json(cards, report)),
        OutputFormat::Csv => Err(CliError::UnsupportedCsv { command: "entanglement" }),
    }
}

fn entanglement_text(cards: UpperRow, report: &SeparabilityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cards: {cards}");
    for (index, stage) in report.per_stage.iter().enumerate() {
        let purities: Vec<String> =
            stage.purities.iter().map(|&p| format_significant(p)).collect();
        let _ = writeln!(
            out,
            "stage {index}: purities [{}] separable: {}",
            purities.join(", "),
            stage.separable
        );
    }
    let _ = write!(out, "separable: {}", report.separable);
    out
}

fn entanglement_json(cards: UpperRow, report: &SeparabilityReport) -> String {
    let stages: Vec<String> = report
        .per_stage
        .iter()
        .map(|stage| {
            let purities: Vec<String> =
                stage.purities.iter().map(|&p| format_significant(p)).collect();
            format!(
                "{{\"purities\":[{}],\"separable\":{}}}",
                purities.join(","),
                stage.separable
            )
        })
        .collect();
    format!(
        "{{\"cards\":\"{cards}\",\"stages\":[{}],\"separable\":{}}}",
        stages.join(","),
        report.separable
    )
}

/// Runs the query circuit, audits each stage for entanglement, and renders
/// the report. The boolean is the overall separability verdict.
pub fn run_entanglement_command(
    cards: UpperRow,
    seed: u64,
    format: OutputFormat,
) -> Result<(String, bool), CliError> {
    let mut oracle = PhaseOracle::new(cards);
    let mut rng = qcard::rng::round_rng(seed, 0);
    let transcript = run_query(&mut oracle, &mut rng)?;
    let report = separability_report(&transcript, DEFAULT_SEPARABILITY_TOLERANCE);
    let rendered = entanglement_report(cards, &report, format)?;
    Ok((rendered, report.separable))
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

/// Builds the `analyze` report: exact fractions, with decimal
/// approximations in text mode.
pub fn analyze_report(result: &ExactResult, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Text => Ok(analyze_text(result)),
        OutputFormat::Json => Ok(analyze_json(result)),
        OutputFormat::Csv => Err(CliError::UnsupportedCsv { command: "analyze" }),
    }
}

/// One-line commentary on the classical-query models, text output only.
fn strategy_note(strategy: StrategySpec) -> Option<&'static str> {
    match strategy {
        StrategySpec::PeekSame => Some(
            "peeks one slot and draws that same card; no decision rule of the peeked \
             pattern beats refusing every round, so refusal is built in",
        ),
        StrategySpec::PeekOther => Some(
            "peeks one slot and draws a different card; playing only on a pattern match \
             already breaks even, so this classical query matches the quantum payoff at \
             a lower play rate",
        ),
        StrategySpec::Quantum => Some(
            "reads the full row in one query and refuses only certain losses; plays two \
             rounds in three and wins half of those plays",
        ),
        _ => None,
    }
}

fn analyze_text(result: &ExactResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "strategy: {}", result.strategy);
    let _ = writeln!(out, "p_alice_win: {} ({})", result.p_alice_win, ratio_decimal(&result.p_alice_win));
    let _ = writeln!(out, "p_bob_win: {} ({})", result.p_bob_win, ratio_decimal(&result.p_bob_win));
    let _ = writeln!(out, "p_refuse: {} ({})", result.p_refuse, ratio_decimal(&result.p_refuse));
    let _ = write!(
        out,
        "alice_expected_payoff: {} ({})",
        result.alice_expected_payoff,
        ratio_decimal(&result.alice_expected_payoff)
    );
    if let Some(note) = strategy_note(result.strategy) {
        let _ = write!(out, "\nnote: {note}");
    }
    out
}

fn analyze_json(result: &ExactResult) -> String {
    format!(
        "{{\"strategy\":\"{}\",\"p_alice_win\":\"{}\",\"p_bob_win\":\"{}\",\"p_refuse\":\"{}\",\"alice_expected_payoff\":\"{}\"}}",
        result.strategy,
        result.p_alice_win,
        result.p_bob_win,
        result.p_refuse,
        result.alice_expected_payoff
    )
}

/// Enumerates a strategy exactly and renders the report.
pub fn run_analyze_command(
    strategy: StrategySpec,
    format: OutputFormat,
) -> Result<String, CliError> {
    analyze_report(&exact_analysis(strategy), format)
}

// ---------------------------------------------------------------------------
// play
// ---------------------------------------------------------------------------

/// Builds the `play` report in any of the three formats.
pub fn play_report(summary: &PayoffSummary, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => play_text(summary),
        OutputFormat::Json => play_json(summary),
        OutputFormat::Csv => play_csv(summary),
    }
}

fn play_text(summary: &PayoffSummary) -> String {
    format!(
        "strategy: {}\nrounds: {}\nseed: {}\nalice_wins: {}\nbob_wins: {}\nrefusals: {}\nalice_mean_payoff: {}",
        summary.strategy,
        summary.rounds,
        summary.seed,
        summary.alice_wins,
        summary.bob_wins,
        summary.refusals,
        format_significant(summary.alice_mean_payoff)
    )
}

fn play_json(summary: &PayoffSummary) -> String {
    format!(
        "{{\"strategy\":\"{}\",\"rounds\":{},\"seed\":{},\"alice_wins\":{},\"bob_wins\":{},\"refusals\":{},\"alice_mean_payoff\":{}}}",
        summary.strategy,
        summary.rounds,
        summary.seed,
        summary.alice_wins,
        summary.bob_wins,
        summary.refusals,
        format_significant(summary.alice_mean_payoff)
    )
}

fn play_csv(summary: &PayoffSummary) -> String {
    format!(
        "strategy,rounds,seed,alice_wins,bob_wins,refusals,alice_mean_payoff\n{},{},{},{},{},{},{}",
        summary.strategy,
        summary.rounds,
        summary.seed,
        summary.alice_wins,
        summary.bob_wins,
        summary.refusals,
        format_significant(summary.alice_mean_payoff)
    )
}

/// Runs a seeded Monte Carlo estimate and renders the summary.
pub fn run_play_command(
    strategy: StrategySpec,
    rounds: u64,
    seed: u64,
    format: OutputFormat,
) -> Result<String, CliError> {
    let summary = monte_carlo(strategy, rounds, seed)?;
    Ok(play_report(&summary, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(0.0), "0");
        assert_eq!(format_significant(-0.0), "0");
        assert_eq!(format_significant(1.0), "1.000000000");
        assert_eq!(format_significant(0.35355339059327373), "0.3535533906");
        assert_eq!(format_significant(-0.35355339059327373), "-0.3535533906");
        assert_eq!(format_significant(2.0 / 3.0), "0.6666666667");
        assert_eq!(format_significant(0.5), "0.5000000000");
        assert_eq!(format_significant(0.00084), "0.0008400000000");
    }

    #[test]
    fn play_reports_are_stable() {
        let summary = PayoffSummary {
            strategy: StrategySpec::Quantum,
            rounds: 10,
            seed: 42,
            alice_wins: 3,
            bob_wins: 3,
            refusals: 4,
            alice_mean_payoff: 0.0,
        };
        assert_eq!(
            play_report(&summary, OutputFormat::Csv),
            "strategy,rounds,seed,alice_wins,bob_wins,refusals,alice_mean_payoff\nquantum,10,42,3,3,4,0"
        );
        assert_eq!(
            play_report(&summary, OutputFormat::Json),
            "{\"strategy\":\"quantum\",\"rounds\":10,\"seed\":42,\"alice_wins\":3,\"bob_wins\":3,\"refusals\":4,\"alice_mean_payoff\":0}"
        );
    }

    #[test]
    fn analyze_json_uses_fraction_strings() {
        let report =
            run_analyze_command(StrategySpec::Naive, OutputFormat::Json).unwrap();
        assert_eq!(
            report,
            "{\"strategy\":\"naive\",\"p_alice_win\":\"2/3\",\"p_bob_win\":\"1/3\",\"p_refuse\":\"0\",\"alice_expected_payoff\":\"1/3\"}"
        );
    }

    #[test]
    fn csv_is_rejected_outside_play() {
        let cards: UpperRow = "001".parse().unwrap();
        assert_eq!(
            run_query_command(cards, 0, false, OutputFormat::Csv),
            Err(CliError::UnsupportedCsv { command: "query" })
        );
        assert!(matches!(
            run_analyze_command(StrategySpec::Naive, OutputFormat::Csv),
            Err(CliError::UnsupportedCsv { command: "analyze" })
        ));
    }
}

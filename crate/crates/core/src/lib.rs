//! Exact and sampled analysis of the three-card guessing game.
//!
//! The unfair classical game — Alice boxes a circle/circle card, a dot/dot
//! card, and a mixed card; Bob draws one and bets the hidden face matches
//! the shown face — becomes fair when Bob replaces his single classical
//! peek with a single quantum query. This crate contains everything needed
//! to study that claim end to end:
//!
//! - [`qsim`]: a dense state-vector simulator for a handful of qubits
//!   (single-qubit gates, uniform gate layers, Born-rule measurement).
//! - [`oracle`]: the single-use phase oracle encoding the box's upper row
//!   as diagonal phases, with an enforced one-query budget.
//! - [`query`]: the Hadamard–oracle–Hadamard circuit that reads the full
//!   row in one query, plus its closed-form reference.
//! - [`entanglement`]: single-qubit marginals and purity, certifying that
//!   no stage of the query circuit is entangled.
//! - [`game`]: card physics, strategies, exact rational enumeration, and
//!   seeded Monte Carlo estimation (rayon-parallel by default, sequential
//!   fallback without the `parallel` feature).
//! - [`rng`]: the documented draw primitives and per-round substreams that
//!   make every sampled result reproducible from a 64-bit seed.

pub mod entanglement;
pub mod error;
pub mod game;
pub mod oracle;
pub mod qsim;
pub mod query;
pub mod rng;

#[cfg(test)]
mod test_util;

pub use entanglement::{
    check_product, purity, reduce_to_qubit, separability_report, DensityMatrix1Q,
    SeparabilityReport, StageSeparability, DEFAULT_SEPARABILITY_TOLERANCE,
};
pub use error::{Error, Result};
pub use game::{
    decide_quantum, exact_analysis, monte_carlo, monte_carlo_serial, play_round, shuffle,
    BobInfo, BoxArrangement, CardKind, CardPlacement, Decision, ExactResult, Pattern,
    PayoffSummary, RoundOutcome, StrategySpec,
};
pub use oracle::{phase_factor_gate, PhaseOracle, UpperRow};
pub use qsim::{Amplitude, Gate1Q, PureState};
pub use query::{expected_stage_states, query_gate_closed_form, run_query, QueryTranscript};

// Re-exported so downstream code can name the exact probability type.
pub use num_rational::Rational64;

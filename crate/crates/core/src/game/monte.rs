//! Seeded Monte Carlo estimation of round statistics.
//!
//! Round `i` of a run owns the substream [`round_rng`]`(seed, i)`, so the
//! estimate is a sum of independent per-round tallies and does not depend on
//! execution order. With the `parallel` feature (on by default) rounds fan
//! out across a rayon pool; the sequential fallback and the parallel path
//! produce bit-identical summaries.

use super::{play_round, RoundOutcome, StrategySpec};
use crate::error::{Error, Result};
use crate::rng::round_rng;

/// Aggregated results of a seeded Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PayoffSummary {
    pub strategy: StrategySpec,
    pub rounds: u64,
    pub seed: u64,
    pub alice_wins: u64,
    pub bob_wins: u64,
    pub refusals: u64,
    /// `(alice_wins - bob_wins) / rounds`, computed once at aggregation.
    pub alice_mean_payoff: f64,
}

#[derive(Clone, Copy, Default)]
struct Tally {
    alice_wins: u64,
    bob_wins: u64,
    refusals: u64,
}

impl Tally {
    fn of(outcome: &RoundOutcome) -> Tally {
        match outcome.alice_payoff {
            1 => Tally { alice_wins: 1, ..Tally::default() },
            -1 => Tally { bob_wins: 1, ..Tally::default() },
            _ => Tally { refusals: 1, ..Tally::default() },
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            alice_wins: self.alice_wins + other.alice_wins,
            bob_wins: self.bob_wins + other.bob_wins,
            refusals: self.refusals + other.refusals,
        }
    }
}

fn run_one(strategy: StrategySpec, seed: u64, round: u64) -> Tally {
    let mut rng = round_rng(seed, round);
    Tally::of(&play_round(strategy, &mut rng))
}

fn summarize(strategy: StrategySpec, rounds: u64, seed: u64, tally: Tally) -> PayoffSummary {
    let net = tally.alice_wins as i64 - tally.bob_wins as i64;
    PayoffSummary {
        strategy,
        rounds,
        seed,
        alice_wins: tally.alice_wins,
        bob_wins: tally.bob_wins,
        refusals: tally.refusals,
        alice_mean_payoff: net as f64 / rounds as f64,
    }
}

/// Runs `rounds` independent rounds on the substreams of `seed`.
///
/// With the `parallel` feature the rounds are evaluated on a rayon pool; the
/// tallies are a commutative integer sum, so any schedule yields the same
/// summary as [`monte_carlo_serial`].
#[cfg(feature = "parallel")]
pub fn monte_carlo(strategy: StrategySpec, rounds: u64, seed: u64) -> Result<PayoffSummary> {
    use rayon::prelude::*;

    if rounds == 0 {
        return Err(Error::EmptyRun);
    }
    let tally = (0..rounds)
        .into_par_iter()
        .map(|round| run_one(strategy, seed, round))
        .reduce(Tally::default, Tally::merge);
    Ok(summarize(strategy, rounds, seed, tally))
}

/// Sequential fallback used when the `parallel` feature is disabled.
#[cfg(not(feature = "parallel"))]
pub fn monte_carlo(strategy: StrategySpec, rounds: u64, seed: u64) -> Result<PayoffSummary> {
    monte_carlo_serial(strategy, rounds, seed)
}

/// The strictly sequential estimator. Always available; used as the
/// reference point for the parallel path in tests and benchmarks.
pub fn monte_carlo_serial(strategy: StrategySpec, rounds: u64, seed: u64) -> Result<PayoffSummary> {
    if rounds == 0 {
        return Err(Error::EmptyRun);
    }
    let mut tally = Tally::default();
    for round in 0..rounds {
        tally = tally.merge(run_one(strategy, seed, round));
    }
    Ok(summarize(strategy, rounds, seed, tally))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_rounds_is_rejected() {
        assert_eq!(monte_carlo(StrategySpec::Naive, 0, 0), Err(Error::EmptyRun));
        assert_eq!(monte_carlo_serial(StrategySpec::Naive, 0, 0), Err(Error::EmptyRun));
    }

    #[test]
    fn counts_partition_the_rounds() {
        for strategy in StrategySpec::ALL {
            let summary = monte_carlo(strategy, 5000, 17).unwrap();
            assert_eq!(summary.alice_wins + summary.bob_wins + summary.refusals, summary.rounds);
        }
    }

    #[test]
    fn always_refuse_refuses_everything() {
        let summary = monte_carlo(StrategySpec::AlwaysRefuse, 1234, 99).unwrap();
        assert_eq!(summary.refusals, 1234);
        assert_eq!(summary.alice_mean_payoff, 0.0);
    }

    #[test]
    fn serial_and_parallel_agree_exactly() {
        for strategy in StrategySpec::ALL {
            let parallel = monte_carlo(strategy, 20_000, 7).unwrap();
            let serial = monte_carlo_serial(strategy, 20_000, 7).unwrap();
            assert_eq!(parallel, serial);
        }
    }

    #[test]
    fn same_seed_reproduces_the_summary() {
        let a = monte_carlo(StrategySpec::Quantum, 10_000, 3).unwrap();
        let b = monte_carlo(StrategySpec::Quantum, 10_000, 3).unwrap();
        assert_eq!(a, b);
        let c = monte_carlo(StrategySpec::Quantum, 10_000, 4).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn mean_payoff_matches_the_counts() {
        let summary = monte_carlo(StrategySpec::Naive, 50_000, 5).unwrap();
        let expected =
            (summary.alice_wins as i64 - summary.bob_wins as i64) as f64 / summary.rounds as f64;
        assert_eq!(summary.alice_mean_payoff, expected);
    }
}

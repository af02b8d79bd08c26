//! Exact enumeration analyzer: closed-form win/lose/refuse probabilities.
//!
//! Every probability is an exact rational, accumulated over the 12
//! equiprobable arrangements and every uniform choice the strategy makes
//! (peek slot, draw slot). No floating point enters the probabilities.

use num_rational::Rational64;
use num_traits::Zero;

use super::{decide, other_slots, settle, BobInfo, BoxArrangement, StrategySpec};

/// Exact round statistics for one strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub strategy: StrategySpec,
    pub p_alice_win: Rational64,
    pub p_bob_win: Rational64,
    pub p_refuse: Rational64,
    /// Alice's expected payoff, `p_alice_win - p_bob_win`.
    pub alice_expected_payoff: Rational64,
}

/// Exhaustively enumerates one strategy's round distribution.
pub fn exact_analysis(strategy: StrategySpec) -> ExactResult {
    let mut p_alice_win = Rational64::zero();
    let mut p_bob_win = Rational64::zero();
    let mut p_refuse = Rational64::zero();

    let per_arrangement = Rational64::new(1, 12);
    let third = Rational64::new(1, 3);
    let half = Rational64::new(1, 2);

    let mut tally = |weight: Rational64, arrangement: &BoxArrangement, info: &BobInfo, slot: usize| {
        let (shown, down) = arrangement.draw(slot).expect("enumerated slots are in range");
        let decision = decide(strategy, info, shown);
        match settle(decision, shown, down) {
            1 => p_alice_win += weight,
            -1 => p_bob_win += weight,
            _ => p_refuse += weight,
        }
    };

    for arrangement in BoxArrangement::all() {
        match strategy {
            StrategySpec::Naive | StrategySpec::AlwaysRefuse | StrategySpec::Quantum => {
                // The quantum query is deterministic (verified elsewhere), so
                // enumeration can take the row as known without simulating.
                let info = match strategy {
                    StrategySpec::Quantum => BobInfo::FullRow(arrangement.upper_row()),
                    _ => BobInfo::Nothing,
                };
                for slot in 0..3 {
                    tally(per_arrangement * third, &arrangement, &info, slot);
                }
            }
            StrategySpec::PeekSame => {
                for peek in 0..3 {
                    let info = BobInfo::Peeked {
                        slot: peek,
                        pattern: arrangement.slots()[peek].up_face,
                    };
                    tally(per_arrangement * third, &arrangement, &info, peek);
                }
            }
            StrategySpec::PeekOther => {
                for peek in 0..3 {
                    let info = BobInfo::Peeked {
                        slot: peek,
                        pattern: arrangement.slots()[peek].up_face,
                    };
                    for &slot in &other_slots(peek) {
                        tally(per_arrangement * third * half, &arrangement, &info, slot);
                    }
                }
            }
        }
    }

    ExactResult {
        strategy,
        p_alice_win,
        p_bob_win,
        p_refuse,
        alice_expected_payoff: p_alice_win - p_bob_win,
    }
}

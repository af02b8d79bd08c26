//! Seeded statistical checks: Born-rule frequencies, shuffle uniformity,
//! and agreement between Monte Carlo estimates and the exact analyzer.
//!
//! Every bound is five binomial standard deviations wide, so a correct
//! implementation fails with probability well under 1e-6 per check — and
//! the seeds are fixed anyway.

use num_traits::ToPrimitive;
use qcard::{
    exact_analysis, monte_carlo, shuffle, BoxArrangement, Gate1Q, PureState, StrategySpec,
};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

fn five_sigma(p: f64, n: u64) -> f64 {
    5.0 * (p * (1.0 - p) / n as f64).sqrt()
}

#[test]
fn uniform_superposition_measures_uniformly() {
    let state = PureState::basis_state(&[0, 0, 0])
        .unwrap()
        .apply_layer(&Gate1Q::hadamard())
        .unwrap();
    let samples = 80_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut counts = [0u64; 8];
    for _ in 0..samples {
        let bits = state.measure_all(&mut rng).unwrap();
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        counts[index] += 1;
    }
    let bound = five_sigma(0.125, samples);
    for (index, &count) in counts.iter().enumerate() {
        let frequency = count as f64 / samples as f64;
        assert!(
            (frequency - 0.125).abs() < bound,
            "outcome {index}: frequency {frequency} vs 0.125 +/- {bound}"
        );
    }
}

#[test]
fn shuffle_hits_all_twelve_arrangements_uniformly() {
    let samples = 120_000u64;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let arrangements = BoxArrangement::all();
    let mut counts = [0u64; 12];
    for _ in 0..samples {
        let drawn = shuffle(&mut rng);
        let position = arrangements.iter().position(|a| *a == drawn).unwrap();
        counts[position] += 1;
        let weight = drawn.upper_row().hamming_weight();
        assert!(weight == 1 || weight == 2);
    }
    let p = 1.0 / 12.0;
    let bound = five_sigma(p, samples);
    for (index, &count) in counts.iter().enumerate() {
        let frequency = count as f64 / samples as f64;
        assert!(
            (frequency - p).abs() < bound,
            "arrangement {index}: frequency {frequency} vs {p} +/- {bound}"
        );
    }
}

#[test]
fn monte_carlo_matches_exact_analysis_for_every_strategy() {
    let rounds = 100_000u64;
    for strategy in StrategySpec::ALL {
        let exact = exact_analysis(strategy);
        let sampled = monte_carlo(strategy, rounds, 1301).unwrap();

        let checks = [
            ("alice win", exact.p_alice_win.to_f64().unwrap(), sampled.alice_wins),
            ("bob win", exact.p_bob_win.to_f64().unwrap(), sampled.bob_wins),
            ("refusal", exact.p_refuse.to_f64().unwrap(), sampled.refusals),
        ];
        for (label, p, count) in checks {
            let frequency = count as f64 / rounds as f64;
            if p == 0.0 || p == 1.0 {
                assert_eq!(frequency, p, "{strategy}: {label} must be degenerate");
            } else {
                let bound = five_sigma(p, rounds);
                assert!(
                    (frequency - p).abs() < bound,
                    "{strategy}: {label} frequency {frequency} vs {p} +/- {bound}"
                );
            }
        }
    }
}

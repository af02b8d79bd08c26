//! The one-step query circuit: a Hadamard layer, the phase oracle, and a
//! second Hadamard layer, run on `|000>`.
//!
//! A single run reads out the complete hidden row. The final state is always
//! a basis state, so the measurement takes the deterministic fast path and
//! consumes no randomness.

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::oracle::{PhaseOracle, UpperRow};
use crate::qsim::{Amplitude, Gate1Q, PureState};

/// Record of one query-circuit run: the state at each of the four stages
/// (initial, after the first Hadamard layer, after the oracle, after the
/// second Hadamard layer) and the measured row.
#[derive(Clone, Debug)]
pub struct QueryTranscript {
    stage_states: [PureState; 4],
    result: UpperRow,
}

impl QueryTranscript {
    /// The four stage states in circuit order.
    pub fn stage_states(&self) -> &[PureState; 4] {
        &self.stage_states
    }

    /// The row read out by the final measurement.
    pub fn result(&self) -> UpperRow {
        self.result
    }

    /// Assembles a transcript from raw parts without running the circuit.
    ///
    /// No validation is performed; [`run_query`] is the canonical producer.
    /// This constructor exists for diagnostics and negative-control tests.
    pub fn from_parts(stage_states: [PureState; 4], result: UpperRow) -> Self {
        QueryTranscript { stage_states, result }
    }
}

/// Runs the query circuit on `|000>`, spending the oracle's single query,
/// and measures the output.
///
/// The measurement goes through the standard readout path even though the
/// outcome is deterministic; the fast path guarantees `rng` is not advanced.
pub fn run_query<R: RngCore>(oracle: &mut PhaseOracle, rng: &mut R) -> Result<QueryTranscript> {
    let hadamard = Gate1Q::hadamard();
    let initial = PureState::basis_state(&[0, 0, 0])?;
    let superposed = initial.apply_layer(&hadamard)?;
    let phased = oracle.apply(&superposed)?;
    let output = phased.apply_layer(&hadamard)?;
    let bits = output.measure_all(rng)?;
    let result = UpperRow::from_bits(&bits)?;
    Ok(QueryTranscript { stage_states: [initial, superposed, phased, output], result })
}

/// Closed form of the per-qubit query transfer matrix: the composition of a
/// Hadamard, the phase factor for `bit`, and another Hadamard.
///
/// Evaluates `(1/2) [[1+e, 1-e], [1-e, 1+e]]` with `e = e^{i*pi*bit}` taken
/// as the exact value +1/-1, which collapses to the identity for 0 and the
/// bit flip for 1.
pub fn query_gate_closed_form(bit: u8) -> Result<Gate1Q> {
    if bit > 1 {
        return Err(Error::InvalidBit { value: bit });
    }
    let e = if bit == 1 { -1.0 } else { 1.0 };
    let p = Amplitude::new((1.0 + e) / 2.0, 0.0);
    let m = Amplitude::new((1.0 - e) / 2.0, 0.0);
    Ok(Gate1Q::new([p, m, m, p]))
}

/// The closed-form states after each circuit layer, built directly as
/// tensor products of single-qubit factors (independently of the gate
/// machinery):
///
/// 1. the uniform superposition,
/// 2. the phase-marked product state with factor
///    `(|0> + e^{i*pi*r_k} |1>)/sqrt(2)` on qubit `k`,
/// 3. the basis state `|r0 r1 r2>`.
pub fn expected_stage_states(row: UpperRow) -> [PureState; 3] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let plus = [Amplitude::new(r, 0.0), Amplitude::new(r, 0.0)];
    let marked = |bit: u8| {
        let sign = if bit == 1 { -r } else { r };
        [Amplitude::new(r, 0.0), Amplitude::new(sign, 0.0)]
    };
    let bit_state = |bit: u8| {
        let mut factor = [Amplitude::new(0.0, 0.0); 2];
        factor[bit as usize] = Amplitude::new(1.0, 0.0);
        factor
    };

    [
        product_of_three([plus, plus, plus]),
        product_of_three([marked(row.bit(0)), marked(row.bit(1)), marked(row.bit(2))]),
        product_of_three([bit_state(row.bit(0)), bit_state(row.bit(1)), bit_state(row.bit(2))]),
    ]
}

/// Explicit tensor product of three single-qubit states, qubit 0 as the
/// most significant index bit.
fn product_of_three(factors: [[Amplitude; 2]; 3]) -> PureState {
    let mut amps = Vec::with_capacity(8);
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                amps.push(factors[0][a] * factors[1][b] * factors[2][c]);
            }
        }
    }
    PureState::from_amplitudes(amps).expect("product of normalized factors is normalized")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::round_rng;
    use crate::test_util::CountingRng;

    #[test]
    fn closed_form_gate_for_zero_is_identity() {
        let gate = query_gate_closed_form(0).unwrap();
        assert_eq!(gate, Gate1Q::identity());
    }

    #[test]
    fn closed_form_gate_for_one_is_the_bit_flip() {
        let gate = query_gate_closed_form(1).unwrap();
        let x = Gate1Q::new([
            Amplitude::new(0.0, 0.0),
            Amplitude::new(1.0, 0.0),
            Amplitude::new(1.0, 0.0),
            Amplitude::new(0.0, 0.0),
        ]);
        assert_eq!(gate, x);
        assert_eq!(query_gate_closed_form(2), Err(Error::InvalidBit { value: 2 }));
    }

    #[test]
    fn closed_form_matches_numerical_composition() {
        let h = Gate1Q::hadamard();
        for bit in [0u8, 1] {
            let composed = h
                .matmul(&crate::oracle::phase_factor_gate(bit).unwrap())
                .matmul(&h);
            let closed = query_gate_closed_form(bit).unwrap();
            for (a, b) in composed.entries().iter().zip(closed.entries().iter()) {
                assert!((a - b).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn run_query_returns_the_hidden_row() {
        for row in UpperRow::all() {
            let mut oracle = PhaseOracle::new(row);
            let mut rng = round_rng(0, row.basis_index() as u64);
            let transcript = run_query(&mut oracle, &mut rng).unwrap();
            assert_eq!(transcript.result(), row);
            assert_eq!(oracle.queries_remaining(), 0);
        }
    }

    #[test]
    fn run_query_consumes_no_randomness() {
        let mut oracle = PhaseOracle::new("101".parse().unwrap());
        let mut rng = CountingRng::new(round_rng(0, 0));
        run_query(&mut oracle, &mut rng).unwrap();
        assert_eq!(rng.total_draws(), 0);
    }

    #[test]
    fn run_query_propagates_a_spent_budget() {
        let mut oracle = PhaseOracle::new("011".parse().unwrap());
        let mut rng = round_rng(0, 0);
        run_query(&mut oracle, &mut rng).unwrap();
        let second = run_query(&mut oracle, &mut rng);
        assert_eq!(second.err(), Some(Error::OracleAlreadyConsumed));
    }

    #[test]
    fn transcript_starts_at_zero_and_ends_at_the_result() {
        for row in UpperRow::all() {
            let mut oracle = PhaseOracle::new(row);
            let mut rng = round_rng(1, row.basis_index() as u64);
            let transcript = run_query(&mut oracle, &mut rng).unwrap();

            let zero = PureState::basis_state(&[0, 0, 0]).unwrap();
            assert_eq!(transcript.stage_states()[0], zero);

            let target = transcript.result().basis_state();
            let overlap = target.inner_product(&transcript.stage_states()[3]).unwrap();
            assert!((overlap.norm() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn simulated_stages_match_the_closed_forms() {
        for row in UpperRow::all() {
            let mut oracle = PhaseOracle::new(row);
            let mut rng = round_rng(2, row.basis_index() as u64);
            let transcript = run_query(&mut oracle, &mut rng).unwrap();
            let expected = expected_stage_states(row);
            for (stage, target) in transcript.stage_states()[1..].iter().zip(expected.iter()) {
                for index in 0..8 {
                    assert!(
                        (stage.amplitude(index) - target.amplitude(index)).norm() <= 1e-12,
                        "row {row}, index {index}"
                    );
                }
            }
        }
    }

    #[test]
    fn expected_stage_states_examples() {
        // No dots: the oracle is the identity, so the phase-marked stage is
        // still the uniform superposition.
        let flat = expected_stage_states("000".parse().unwrap());
        for index in 0..8 {
            assert!((flat[0].amplitude(index) - flat[1].amplitude(index)).norm() <= 1e-15);
        }

        // One dot on the last card: the output is |001>.
        let row: UpperRow = "001".parse().unwrap();
        let stages = expected_stage_states(row);
        assert!((stages[2].amplitude(1).re - 1.0).abs() <= 1e-15);
    }
}

//! The single-use phase oracle hiding the upper row of the boxed cards.
//!
//! The row `(r0, r1, r2)` is packaged as three diagonal single-qubit gates
//! `diag(1, e^{i*pi*r_k})`, i.e. identity for 0 and Pauli-Z for 1. The phase
//! is stored as the exact value +1/-1 rather than evaluated through
//! transcendental functions, so no spurious imaginary parts appear.
//!
//! An oracle may be applied exactly once. The one-query budget is enforced
//! at runtime: a second application fails with
//! [`Error::OracleAlreadyConsumed`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qsim::{Gate1Q, PureState};

/// The three visible upper faces of the boxed cards, encoded as bits
/// (circle = 0, dot = 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UpperRow {
    bits: [u8; 3],
}

impl UpperRow {
    /// Builds a row from three bits.
    pub fn new(r0: u8, r1: u8, r2: u8) -> Result<Self> {
        for value in [r0, r1, r2] {
            if value > 1 {
                return Err(Error::InvalidBit { value });
            }
        }
        Ok(UpperRow { bits: [r0, r1, r2] })
    }

    /// Builds a row from a three-element bit slice.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.len() != 3 {
            return Err(Error::InvalidArity);
        }
        UpperRow::new(bits[0], bits[1], bits[2])
    }

    /// All eight rows, ordered by basis index.
    pub fn all() -> [UpperRow; 8] {
        std::array::from_fn(|index| UpperRow {
            bits: [(index >> 2 & 1) as u8, (index >> 1 & 1) as u8, (index & 1) as u8],
        })
    }

    /// Bit `k` of the row.
    pub fn bit(&self, k: usize) -> u8 {
        self.bits[k]
    }

    /// The bits as an array `(r0, r1, r2)`.
    pub fn bits(&self) -> [u8; 3] {
        self.bits
    }

    /// Basis index of `|r0 r1 r2>`: `4*r0 + 2*r1 + r2`.
    pub fn basis_index(&self) -> usize {
        (self.bits[0] as usize) << 2 | (self.bits[1] as usize) << 1 | self.bits[2] as usize
    }

    /// Number of set bits (dots showing).
    pub fn hamming_weight(&self) -> u32 {
        self.bits.iter().map(|&b| b as u32).sum()
    }

    /// The corresponding basis state `|r0 r1 r2>`.
    pub fn basis_state(&self) -> PureState {
        PureState::basis_state(&self.bits).expect("row bits are 0/1")
    }
}

impl FromStr for UpperRow {
    type Err = Error;

    /// Parses a three-character string over `{0, 1}`, e.g. `"001"`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 3 {
            return Err(Error::InvalidArity);
        }
        let mut bits = [0u8; 3];
        for (k, c) in chars.iter().enumerate() {
            bits[k] = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::InvalidBit { value: *c as u8 }),
            };
        }
        Ok(UpperRow { bits })
    }
}

impl fmt::Display for UpperRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.bits[0], self.bits[1], self.bits[2])
    }
}

/// The diagonal phase gate `diag(1, e^{i*pi*r_k})`: identity for `r_k = 0`,
/// Pauli-Z for `r_k = 1`.
pub fn phase_factor_gate(bit: u8) -> Result<Gate1Q> {
    match bit {
        0 => Ok(Gate1Q::identity()),
        1 => Ok(Gate1Q::pauli_z()),
        value => Err(Error::InvalidBit { value }),
    }
}

/// The phase oracle `U0 (x) U1 (x) U2` for a hidden row, with a one-query
/// budget.
///
/// The hidden row is stored for bookkeeping but is not reachable through the
/// query-facing interface; callers learn the row only by running the query
/// circuit and measuring.
///
/// An oracle instance belongs to exactly one logical flow: applying it takes
/// `&mut self`, so the budget decrement cannot race.
#[derive(Clone, Debug)]
pub struct PhaseOracle {
    factors: [Gate1Q; 3],
    hidden_row: UpperRow,
    queries_remaining: u8,
}

impl PhaseOracle {
    /// Builds the oracle for a row, with one query available.
    pub fn new(row: UpperRow) -> Self {
        let factors =
            std::array::from_fn(|k| phase_factor_gate(row.bit(k)).expect("row bits are 0/1"));
        PhaseOracle { factors, hidden_row: row, queries_remaining: 1 }
    }

    /// How many queries remain (1 or 0).
    pub fn queries_remaining(&self) -> u8 {
        self.queries_remaining
    }

    pub(crate) fn hidden_row(&self) -> UpperRow {
        self.hidden_row
    }

    /// Applies factor `k` to qubit `k` of a three-qubit state, spending the
    /// single query.
    pub fn apply(&mut self, state: &PureState) -> Result<PureState> {
        if self.queries_remaining == 0 {
            return Err(Error::OracleAlreadyConsumed);
        }
        if state.num_qubits() != 3 {
            return Err(Error::DimensionMismatch { left: 3, right: state.num_qubits() });
        }
        self.queries_remaining = 0;
        let mut out = state.clone();
        for (qubit, factor) in self.factors.iter().enumerate() {
            out = out.apply_gate(factor, qubit)?;
        }
        Ok(out)
    }
}

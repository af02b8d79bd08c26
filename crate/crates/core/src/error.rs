//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by simulator, oracle, and game operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A bit-sequence argument was empty.
    #[error("bit sequence must contain at least one bit")]
    InvalidArity,

    /// A value expected to be 0 or 1 was something else.
    #[error("expected a bit (0 or 1), got {value}")]
    InvalidBit { value: u8 },

    /// A qubit index was outside the register.
    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitIndexOutOfRange { index: usize, num_qubits: usize },

    /// A gate failed the unitarity check.
    #[error("gate is not unitary within tolerance")]
    NonUnitaryGate,

    /// A state failed the normalization check.
    #[error("state is not normalized: L2 norm is {norm}")]
    UnnormalizedState { norm: f64 },

    /// Two states (or a state and an operator) had incompatible dimensions.
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    /// The single query granted by the oracle has already been spent.
    #[error("oracle already consumed its one-query budget")]
    OracleAlreadyConsumed,

    /// A matrix failed the density-matrix validity checks.
    #[error("invalid density matrix: {reason}")]
    InvalidDensityMatrix { reason: &'static str },

    /// A card slot index was outside 0..3.
    #[error("slot {slot} out of range (boxes hold three cards)")]
    SlotOutOfRange { slot: usize },

    /// A row with no minority pattern was given to the quantum decision rule.
    #[error("row contains a single pattern; no minority pattern exists")]
    AmbiguousRow,

    /// A Monte Carlo run was requested with zero rounds.
    #[error("round count must be at least 1")]
    EmptyRun,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

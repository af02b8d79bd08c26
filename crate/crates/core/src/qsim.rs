//! Minimal exact pure-state simulator for a handful of qubits.
//!
//! States are dense vectors of `2^n` complex amplitudes. Qubit 0 is the
//! *most significant* bit of the basis index, so the three-qubit basis state
//! `|r0 r1 r2>` lives at index `4*r0 + 2*r1 + r2`. Only single-qubit gates
//! and uniform single-gate layers are supported; that is all the query
//! circuit needs.
//!
//! All operations are pure functions returning new states. The one exception
//! is [`PureState::measure_all`], which advances the supplied random stream
//! (by exactly one [`unit_f64`] draw, or zero when the outcome is already
//! deterministic).

use num_complex::Complex64;
use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::rng::unit_f64;

/// Complex amplitude stored in double precision.
pub type Amplitude = Complex64;

/// Tolerance for algebraic identities on 2x2 gates (unitarity, matrix
/// equality). Gates are built from a couple of exact constants, so
/// near-machine precision is expected.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

/// Tolerance for state norms, allowing for a few layers of accumulated
/// double-precision arithmetic.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Measurement fast path: when one outcome has squared magnitude at least
/// `1 - DETERMINISTIC_MEASUREMENT_TOLERANCE`, the outcome is returned without
/// consuming randomness. Keeps deterministic circuits draw-free, so Monte
/// Carlo draw counts do not depend on which strategy ran the circuit.
pub const DETERMINISTIC_MEASUREMENT_TOLERANCE: f64 = 1e-12;

const ZERO: Amplitude = Complex64::new(0.0, 0.0);
const ONE: Amplitude = Complex64::new(1.0, 0.0);

/// A 2x2 complex matrix in row-major order: `[a00, a01, a10, a11]`.
///
/// Construction does not validate; operations that apply a gate check
/// unitarity and reject with [`Error::NonUnitaryGate`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gate1Q {
    entries: [Amplitude; 4],
}

impl Gate1Q {
    /// Wraps a row-major entry array as a gate.
    pub fn new(entries: [Amplitude; 4]) -> Self {
        Gate1Q { entries }
    }

    /// The Hadamard gate `(1/sqrt(2)) [[1, 1], [1, -1]]`.
    pub fn hadamard() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Gate1Q::new([h, h, h, -h])
    }

    /// The identity gate.
    pub fn identity() -> Self {
        Gate1Q::new([ONE, ZERO, ZERO, ONE])
    }

    /// The Pauli-Z gate `diag(1, -1)`.
    pub fn pauli_z() -> Self {
        Gate1Q::new([ONE, ZERO, ZERO, -ONE])
    }

    /// Row-major entries `[a00, a01, a10, a11]`.
    pub fn entries(&self) -> &[Amplitude; 4] {
        &self.entries
    }

    /// Entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[2 * row + col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let [a, b, c, d] = self.entries;
        Gate1Q::new([a.conj(), c.conj(), b.conj(), d.conj()])
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Gate1Q) -> Gate1Q {
        let l = &self.entries;
        let r = &rhs.entries;
        Gate1Q::new([
            l[0] * r[0] + l[1] * r[2],
            l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2],
            l[2] * r[1] + l[3] * r[3],
        ])
    }

    /// Whether `G^dagger G = I` holds entrywise within `tol`.
    ///
    /// Non-finite entries fail the check, so NaN/Inf gates are rejected by
    /// the same path as non-unitary ones.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let product = self.adjoint().matmul(self);
        let identity = Gate1Q::identity();
        product
            .entries
            .iter()
            .zip(identity.entries.iter())
            .all(|(p, i)| (p - i).norm() <= tol)
    }
}

/// A normalized pure state of `num_qubits` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amps: Vec<Amplitude>,
}

impl PureState {
    /// The computational basis state for the given bits, qubit 0 first.
    ///
    /// `basis_state(&[r0, r1, r2])` puts amplitude 1 at index
    /// `4*r0 + 2*r1 + r2`.
    pub fn basis_state(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidArity);
        }
        let mut index = 0usize;
        for &bit in bits {
            if bit > 1 {
                return Err(Error::InvalidBit { value: bit });
            }
            index = (index << 1) | bit as usize;
        }
        let mut amps = vec![ZERO; 1 << bits.len()];
        amps[index] = ONE;
        Ok(PureState { num_qubits: bits.len(), amps })
    }

    /// Builds a state from raw amplitudes, validating length and norm.
    pub fn from_amplitudes(amps: Vec<Amplitude>) -> Result<Self> {
        if amps.len() < 2 || !amps.len().is_power_of_two() {
            return Err(Error::InvalidArity);
        }
        let state = PureState { num_qubits: amps.len().trailing_zeros() as usize, amps };
        let norm = state.norm();
        if !((norm - 1.0).abs() <= NORM_TOLERANCE) {
            return Err(Error::UnnormalizedState { norm });
        }
        Ok(state)
    }

    /// Builds a state without the norm check.
    ///
    /// Operations that require normalization (measurement, marginals) still
    /// validate and reject unnormalized input; this constructor exists so
    /// such rejection paths can be exercised.
    ///
    /// # Panics
    /// If the amplitude count is not a power of two of at least 2.
    pub fn from_amplitudes_unchecked(amps: Vec<Amplitude>) -> Self {
        assert!(amps.len() >= 2 && amps.len().is_power_of_two(), "amplitude count must be 2^n");
        PureState { num_qubits: amps.len().trailing_zeros() as usize, amps }
    }

    /// Number of qubits in the register.
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// The full amplitude vector, basis index order.
    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    /// Amplitude at a basis index.
    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    /// L2 norm of the amplitude vector.
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Applies a single-qubit gate to qubit `qubit`, leaving the others
    /// untouched.
    pub fn apply_gate(&self, gate: &Gate1Q, qubit: usize) -> Result<Self> {
        if qubit >= self.num_qubits {
            return Err(Error::QubitIndexOutOfRange { index: qubit, num_qubits: self.num_qubits });
        }
        if !gate.is_unitary(UNITARITY_TOLERANCE) {
            return Err(Error::NonUnitaryGate);
        }
        // Qubit 0 is the most significant bit of the index.
        let stride = 1usize << (self.num_qubits - 1 - qubit);
        let [a00, a01, a10, a11] = *gate.entries();
        let mut amps = self.amps.clone();
        for base in (0..amps.len()).step_by(2 * stride) {
            for offset in 0..stride {
                let lo = base + offset;
                let hi = lo + stride;
                let x = amps[lo];
                let y = amps[hi];
                amps[lo] = a00 * x + a01 * y;
                amps[hi] = a10 * x + a11 * y;
            }
        }
        Ok(PureState { num_qubits: self.num_qubits, amps })
    }

    /// Applies the same gate to every qubit in turn (qubit 0 first).
    ///
    /// For same-gate layers the per-qubit factors commute, so the order is
    /// immaterial.
    pub fn apply_layer(&self, gate: &Gate1Q) -> Result<Self> {
        let mut state = self.clone();
        for qubit in 0..self.num_qubits {
            state = state.apply_gate(gate, qubit)?;
        }
        Ok(state)
    }

    /// Measures every qubit in the computational basis, returning the
    /// outcome bits (qubit 0 first).
    ///
    /// Consumes exactly one [`unit_f64`] draw, except when one outcome has
    /// squared magnitude at least `1 - DETERMINISTIC_MEASUREMENT_TOLERANCE`:
    /// then that outcome is returned and no randomness is used.
    pub fn measure_all<R: RngCore>(&self, rng: &mut R) -> Result<Vec<u8>> {
        let norm = self.norm();
        if !((norm - 1.0).abs() <= NORM_TOLERANCE) {
            return Err(Error::UnnormalizedState { norm });
        }

        let mut max_index = 0;
        let mut max_prob = 0.0;
        for (index, amp) in self.amps.iter().enumerate() {
            let p = amp.norm_sqr();
            if p > max_prob {
                max_prob = p;
                max_index = index;
            }
        }
        if max_prob >= 1.0 - DETERMINISTIC_MEASUREMENT_TOLERANCE {
            return Ok(self.index_to_bits(max_index));
        }

        let u = unit_f64(rng);
        let mut acc = 0.0;
        for (index, amp) in self.amps.iter().enumerate() {
            acc += amp.norm_sqr();
            if u < acc {
                return Ok(self.index_to_bits(index));
            }
        }
        // Rounding can leave acc a hair under 1; the draw then belongs to
        // the last outcome with nonzero probability.
        Ok(self.index_to_bits(self.amps.len() - 1))
    }

    /// Inner product `<self|other>` with `self` conjugated.
    pub fn inner_product(&self, other: &PureState) -> Result<Amplitude> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn index_to_bits(&self, index: usize) -> Vec<u8> {
        (0..self.num_qubits)
            .map(|k| ((index >> (self.num_qubits - 1 - k)) & 1) as u8)
            .collect()
    }
}

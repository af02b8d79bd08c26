//! Separability checks for the query circuit via single-qubit marginals.
//!
//! For a globally pure state, every single-qubit reduced density matrix has
//! purity 1 exactly when the state is a full tensor product of single-qubit
//! states. That makes marginal purity a complete, quantitative witness for
//! the absence of entanglement here: compute the three marginals, take
//! `tr(rho^2)`, and compare against `1 - tol`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qsim::{Amplitude, PureState, NORM_TOLERANCE};
use crate::query::QueryTranscript;

/// Tolerance for density-matrix validity checks (hermiticity, unit trace,
/// positive spectrum).
pub const DENSITY_TOLERANCE: f64 = 1e-12;

/// Default tolerance for the product-state verdict, sized for a few layers
/// of double-precision arithmetic.
pub const DEFAULT_SEPARABILITY_TOLERANCE: f64 = 1e-10;

/// A validated single-qubit density matrix: Hermitian, unit trace,
/// nonnegative spectrum (all within [`DENSITY_TOLERANCE`]).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix1Q {
    entries: [[Amplitude; 2]; 2],
}

impl DensityMatrix1Q {
    /// Validates and wraps a 2x2 matrix.
    pub fn new(entries: [[Amplitude; 2]; 2]) -> Result<Self> {
        let finite = entries
            .iter()
            .flatten()
            .all(|a| a.re.is_finite() && a.im.is_finite());
        if !finite {
            return Err(Error::InvalidDensityMatrix { reason: "non-finite entry" });
        }
        let hermitian = entries[0][0].im.abs() <= DENSITY_TOLERANCE
            && entries[1][1].im.abs() <= DENSITY_TOLERANCE
            && (entries[0][1] - entries[1][0].conj()).norm() <= DENSITY_TOLERANCE;
        if !hermitian {
            return Err(Error::InvalidDensityMatrix { reason: "not Hermitian" });
        }
        let trace = entries[0][0].re + entries[1][1].re;
        if (trace - 1.0).abs() > DENSITY_TOLERANCE {
            return Err(Error::InvalidDensityMatrix { reason: "trace differs from 1" });
        }
        // Smallest eigenvalue of a 2x2 Hermitian matrix.
        let det = entries[0][0].re * entries[1][1].re - entries[0][1].norm_sqr();
        let disc = (trace * trace - 4.0 * det).max(0.0);
        let lambda_min = (trace - disc.sqrt()) / 2.0;
        if lambda_min < -DENSITY_TOLERANCE {
            return Err(Error::InvalidDensityMatrix { reason: "negative eigenvalue" });
        }
        Ok(DensityMatrix1Q { entries })
    }

    /// The matrix entries.
    pub fn entries(&self) -> &[[Amplitude; 2]; 2] {
        &self.entries
    }

    /// Entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row][col]
    }

    /// Matrix trace.
    pub fn trace(&self) -> Amplitude {
        self.entries[0][0] + self.entries[1][1]
    }
}

/// The reduced density matrix of qubit `qubit`, obtained by tracing out the
/// other qubits:
/// `rho[a][b] = sum over the other qubits of psi(a at qubit) * conj(psi(b at qubit))`.
///
/// The sum is divided by the squared state norm, so the unit-trace invariant
/// holds exactly even for states at the edge of the norm tolerance.
pub fn reduce_to_qubit(state: &PureState, qubit: usize) -> Result<DensityMatrix1Q> {
    if qubit >= state.num_qubits() {
        return Err(Error::QubitIndexOutOfRange { index: qubit, num_qubits: state.num_qubits() });
    }
    let norm = state.norm();
    if !((norm - 1.0).abs() <= NORM_TOLERANCE) {
        return Err(Error::UnnormalizedState { norm });
    }

    let position = state.num_qubits() - 1 - qubit;
    let mask = 1usize << position;
    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (index, amp) in state.amplitudes().iter().enumerate() {
        let a = (index >> position) & 1;
        for b in 0..2 {
            let partner = (index & !mask) | (b << position);
            rho[a][b] += amp * state.amplitude(partner).conj();
        }
    }
    let norm_sqr = norm * norm;
    for row in rho.iter_mut() {
        for entry in row.iter_mut() {
            *entry /= norm_sqr;
        }
    }
    DensityMatrix1Q::new(rho)
}

/// Purity `tr(rho^2)` of a single-qubit density matrix. Lies in
/// `[1/2, 1]`, reaching 1 exactly for pure marginals.
pub fn purity(rho: &DensityMatrix1Q) -> f64 {
    let d0 = rho.entry(0, 0).re;
    let d1 = rho.entry(1, 1).re;
    d0 * d0 + d1 * d1 + 2.0 * rho.entry(0, 1).norm_sqr()
}

/// Whether a three-qubit pure state is a full product of single-qubit
/// states: true iff all three marginal purities reach `1 - tol`. Returns the
/// verdict together with the three purities.
pub fn check_product(state: &PureState, tol: f64) -> Result<(bool, [f64; 3])> {
    let mut purities = [0.0; 3];
    for (qubit, slot) in purities.iter_mut().enumerate() {
        *slot = purity(&reduce_to_qubit(state, qubit)?);
    }
    Ok((purities.iter().all(|&p| p >= 1.0 - tol), purities))
}

/// Per-stage purities and product verdict for one circuit stage.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StageSeparability {
    pub purities: [f64; 3],
    pub separable: bool,
}

/// Separability audit of a full query transcript: three purities per stage,
/// a verdict per stage, and the conjunction overall.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparabilityReport {
    pub per_stage: [StageSeparability; 4],
    pub separable: bool,
}

/// Audits all four stages of a transcript at tolerance `tol`.
pub fn separability_report(transcript: &QueryTranscript, tol: f64) -> SeparabilityReport {
    let per_stage = std::array::from_fn(|stage| {
        let (separable, purities) = check_product(&transcript.stage_states()[stage], tol)
            .expect("transcript states are normalized three-qubit states");
        StageSeparability { purities, separable }
    });
    let separable = per_stage.iter().all(|stage: &StageSeparability| stage.separable);
    SeparabilityReport { per_stage, separable }
}

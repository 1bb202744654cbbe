//! State-vector simulation of continuous-time quantum walks `e^{iLt}`, their
//! ancilla-controlled powers, and the phase-estimation circuit that turns them
//! into an exact phase shift about the uniform superposition `|π⟩`.
//!
//! Joint states live on `ancilla ⊗ vertex` with index `a·n + v`, where the
//! ancilla integer is `a = Σ_i j_i 2^i` and qubit `i` controls the walk for
//! time `2^i·t`.

mod ancilla;
mod ciqw;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectral::Spectrum;

pub use ancilla::{apply_ancilla, qft, AncillaBlock, UNITARITY_TOLERANCE};
pub use ciqw::{run_ciqw, CiqwSchedule};

/// Norm of the non-zero ancilla sectors tolerated before a circuit that
/// expects `|0^s⟩` refuses to run.
pub const ANCILLA_RESET_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires a {expected} state")]
    LayoutMismatch { expected: &'static str },
    #[error("register length {0} is not a power of two")]
    NonPowerOfTwo(usize),
    #[error("ancilla block is not unitary (defect {0:e})")]
    NonUnitary(f64),
    #[error("ancilla register not in |0^s⟩ (residue {0:e})")]
    AncillaNotReset(f64),
    #[error("schedule has {blocks} ancilla blocks for {times} walk times; expected one more block than times")]
    ScheduleShape { blocks: usize, times: usize },
    #[error("ancilla count {0} too large")]
    TooManyAncillas(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Layout {
    Vertex { n: usize },
    /// `2^ancillas · n` amplitudes.
    Joint { ancillas: u32, n: usize },
}

impl Layout {
    pub fn dimension(&self) -> usize {
        match *self {
            Layout::Vertex { n } => n,
            Layout::Joint { ancillas, n } => n << ancillas,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    layout: Layout,
    amplitudes: Vec<Complex64>,
}

const MAX_ANCILLAS: u32 = 24;

impl StateVector {
    pub fn from_amplitudes(layout: Layout, amplitudes: Vec<Complex64>) -> Result<Self, WalkError> {
        if let Layout::Joint { ancillas, .. } = layout {
            if ancillas > MAX_ANCILLAS {
                return Err(WalkError::TooManyAncillas(ancillas));
            }
        }
        if amplitudes.len() != layout.dimension() {
            return Err(WalkError::DimensionMismatch {
                expected: layout.dimension(),
                found: amplitudes.len(),
            });
        }
        Ok(Self { layout, amplitudes })
    }

    /// Vertex basis state `|v⟩`.
    pub fn basis(n: usize, v: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n];
        amplitudes[v] = Complex64::new(1.0, 0.0);
        Self {
            layout: Layout::Vertex { n },
            amplitudes,
        }
    }

    /// `|π⟩ = N^{-1/2} Σ_v |v⟩`.
    pub fn uniform(n: usize) -> Self {
        let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        Self {
            layout: Layout::Vertex { n },
            amplitudes: vec![amp; n],
        }
    }

    /// `|a⟩ ⊗ ψ` on `s` ancilla qubits.
    pub fn joint(s: u32, a: usize, vertex: &StateVector) -> Result<Self, WalkError> {
        let Layout::Vertex { n } = vertex.layout else {
            return Err(WalkError::LayoutMismatch { expected: "vertex" });
        };
        if s > MAX_ANCILLAS {
            return Err(WalkError::TooManyAncillas(s));
        }
        let dim = 1usize << s;
        if a >= dim {
            return Err(WalkError::DimensionMismatch { expected: dim, found: a });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n * dim];
        amplitudes[a * n..(a + 1) * n].copy_from_slice(&vertex.amplitudes);
        Ok(Self {
            layout: Layout::Joint { ancillas: s, n },
            amplitudes,
        })
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    /// Vertex count `n` for either layout.
    pub fn n_vertices(&self) -> usize {
        match self.layout {
            Layout::Vertex { n } | Layout::Joint { n, .. } => n,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub(crate) fn joint_dims(&self) -> Result<(u32, usize), WalkError> {
        match self.layout {
            Layout::Joint { ancillas, n } => Ok((ancillas, n)),
            Layout::Vertex { .. } => Err(WalkError::LayoutMismatch { expected: "joint" }),
        }
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest amplitude difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    /// Measurement distribution over vertices, marginalizing any ancilla.
    pub fn vertex_distribution(&self) -> Vec<f64> {
        let n = self.n_vertices();
        let mut p = vec![0.0; n];
        for (i, a) in self.amplitudes.iter().enumerate() {
            p[i % n] += a.norm_sqr();
        }
        p
    }

    /// Norm of the component whose ancilla differs from `|0^s⟩`; zero for
    /// vertex states.
    pub fn ancilla_residue(&self) -> f64 {
        let n = self.n_vertices();
        self.amplitudes[n..].iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// The vertex state in the `|0^s⟩` ancilla sector (the whole state for a
    /// vertex layout).
    pub fn zero_ancilla_part(&self) -> StateVector {
        let n = self.n_vertices();
        StateVector {
            layout: Layout::Vertex { n },
            amplitudes: self.amplitudes[..n].to_vec(),
        }
    }
}

/// Running totals of controlled-walk usage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct WalkCounters {
    /// Calls to a singly-controlled `c-e^{iLτ}` block.
    pub ctqw_calls: u64,
    /// Sum of `|τ|` over those calls.
    pub evolution_time: f64,
}

/// Ancilla size and base walk time for exact phase estimation of `e^{iLt0}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseEstimationConfig {
    pub s: u32,
    pub t0: f64,
}

impl PhaseEstimationConfig {
    /// Smallest `s` with `2^s > λ_max`, and `t0 = 2π/2^s` so that an integer
    /// eigenvalue `λ` becomes the eigenphase `2πλ/2^s`.
    pub fn for_largest_eigenvalue(lambda_max: f64) -> Self {
        let mut s = 0u32;
        while ((1u64 << s) as f64) <= lambda_max {
            s += 1;
        }
        Self {
            s,
            t0: 2.0 * PI / (1u64 << s) as f64,
        }
    }

    /// Evolution time spent by one phase-shift circuit: `4π(1 - 2^{-s})`.
    pub fn reflection_time(&self) -> f64 {
        4.0 * PI * (1.0 - 1.0 / (1u64 << self.s) as f64)
    }
}

fn check_dim(sp: &Spectrum, n: usize) -> Result<(), WalkError> {
    if sp.dim() != n {
        return Err(WalkError::DimensionMismatch {
            expected: sp.dim(),
            found: n,
        });
    }
    Ok(())
}

/// `ψ <- V diag(e^{iλt}) Vᵀ ψ` on a block of `n` amplitudes.
fn evolve_block(block: &mut [Complex64], sp: &Spectrum, t: f64) {
    let n = block.len();
    let v = &sp.eigenvectors;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    for (j, coeff) in coeffs.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (r, amp) in block.iter().enumerate() {
            acc += amp * v[(r, j)];
        }
        *coeff = acc * Complex64::from_polar(1.0, sp.eigenvalues[j] * t);
    }
    for (r, amp) in block.iter_mut().enumerate() {
        *amp = coeffs.iter().enumerate().map(|(j, c)| c * v[(r, j)]).sum();
    }
}

/// Continuous-time quantum walk `e^{iLt}` on a vertex state.
pub fn evolve(state: &mut StateVector, sp: &Spectrum, t: f64) -> Result<(), WalkError> {
    let Layout::Vertex { n } = state.layout else {
        return Err(WalkError::LayoutMismatch { expected: "vertex" });
    };
    check_dim(sp, n)?;
    evolve_block(&mut state.amplitudes, sp, t);
    Ok(())
}

/// `Σ_l |l⟩⟨l| ⊗ e^{ilLt}` on a joint state, realized as one `c-e^{iLt·2^j}`
/// per ancilla qubit `j`. Adds `s` calls and `(2^s - 1)|t|` time to `counters`.
pub fn controlled_evolve(
    joint: &mut StateVector,
    sp: &Spectrum,
    t: f64,
    counters: &mut WalkCounters,
) -> Result<(), WalkError> {
    let (s, n) = joint.joint_dims()?;
    check_dim(sp, n)?;
    for qubit in 0..s {
        let power = (1u64 << qubit) as f64;
        for a in (0..1usize << s).filter(|a| a >> qubit & 1 == 1) {
            evolve_block(&mut joint.amplitudes[a * n..(a + 1) * n], sp, t * power);
        }
        counters.ctqw_calls += 1;
        counters.evolution_time += t.abs() * power;
    }
    Ok(())
}

/// `e^{iβ|π⟩⟨π|} = I - (1 - e^{iβ})|π⟩⟨π|` applied directly.
pub fn reflection_exact(state: &mut StateVector, beta: f64) -> Result<(), WalkError> {
    let Layout::Vertex { n } = state.layout else {
        return Err(WalkError::LayoutMismatch { expected: "vertex" });
    };
    let overlap: Complex64 = state.amplitudes.iter().sum::<Complex64>() / (n as f64).sqrt();
    let shift = (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, beta)) * overlap / (n as f64).sqrt();
    state.amplitudes.iter_mut().for_each(|a| *a -= shift);
    Ok(())
}

/// The forward half of phase estimation: `H^{⊗s}`, controlled powers of
/// `e^{iLt0}`, then the inverse QFT.
pub fn phase_estimation(
    joint: &mut StateVector,
    sp: &Spectrum,
    cfg: &PhaseEstimationConfig,
    counters: &mut WalkCounters,
) -> Result<(), WalkError> {
    apply_ancilla(joint, &AncillaBlock::HadamardAll)?;
    controlled_evolve(joint, sp, cfg.t0, counters)?;
    apply_ancilla(joint, &AncillaBlock::InverseQft)
}

/// Phase shift `e^{iβ|π⟩⟨π|}` by phase estimation: estimate, phase the
/// all-zeros ancilla pattern, then uncompute.
///
/// Exact only when every eigenvalue of `sp` is an integer below `2^s`; the
/// caller certifies that. With a non-integral spectrum the ancilla is left
/// partly excited, which shows up in [`StateVector::ancilla_residue`].
pub fn reflection_circuit(
    joint: &mut StateVector,
    sp: &Spectrum,
    cfg: &PhaseEstimationConfig,
    beta: f64,
    counters: &mut WalkCounters,
) -> Result<(), WalkError> {
    let (s, _) = joint.joint_dims()?;
    if s != cfg.s {
        return Err(WalkError::DimensionMismatch {
            expected: cfg.s as usize,
            found: s as usize,
        });
    }
    let residue = joint.ancilla_residue();
    if residue > ANCILLA_RESET_TOLERANCE {
        return Err(WalkError::AncillaNotReset(residue));
    }
    reflection_circuit_unchecked(joint, sp, cfg, beta, counters)
}

/// [`reflection_circuit`] without the ancilla-reset precondition, for
/// studying how leakage accumulates over repeated applications.
pub fn reflection_circuit_unchecked(
    joint: &mut StateVector,
    sp: &Spectrum,
    cfg: &PhaseEstimationConfig,
    beta: f64,
    counters: &mut WalkCounters,
) -> Result<(), WalkError> {
    let (s, _) = joint.joint_dims()?;
    if s != cfg.s {
        return Err(WalkError::DimensionMismatch {
            expected: cfg.s as usize,
            found: s as usize,
        });
    }
    phase_estimation(joint, sp, cfg, counters)?;
    apply_ancilla(joint, &AncillaBlock::ZeroControlledPhase { beta })?;
    apply_ancilla(joint, &AncillaBlock::Qft)?;
    controlled_evolve(joint, sp, -cfg.t0, counters)?;
    apply_ancilla(joint, &AncillaBlock::HadamardAll)
}

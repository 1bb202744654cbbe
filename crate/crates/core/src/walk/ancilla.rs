//! Unitaries acting on the ancilla register of a joint state.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{StateVector, WalkError};
use crate::matrix::ComplexMatrix;

/// Explicit ancilla blocks must be unitary to this precision.
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

/// A named ancilla-register unitary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AncillaBlock {
    Identity,
    /// H on every ancilla qubit.
    HadamardAll,
    /// `|x⟩ -> 2^{-s/2} Σ_j e^{2πi jx/2^s} |j⟩`.
    Qft,
    InverseQft,
    /// Multiplies the all-zeros ancilla pattern by `e^{iβ}`.
    ZeroControlledPhase { beta: f64 },
    /// A `2^s × 2^s` unitary.
    Explicit { matrix: ComplexMatrix },
}

impl AncillaBlock {
    /// Transforms a single register vector of length `2^s` in place.
    pub fn apply_register(&self, register: &mut [Complex64]) -> Result<(), WalkError> {
        let dim = register.len();
        if !dim.is_power_of_two() {
            return Err(WalkError::NonPowerOfTwo(dim));
        }
        match self {
            AncillaBlock::Identity => {}
            AncillaBlock::HadamardAll => walsh_hadamard(register),
            AncillaBlock::Qft => qft(register, false)?,
            AncillaBlock::InverseQft => qft(register, true)?,
            AncillaBlock::ZeroControlledPhase { beta } => register[0] *= Complex64::from_polar(1.0, *beta),
            AncillaBlock::Explicit { matrix } => {
                if matrix.dim() != dim {
                    return Err(WalkError::DimensionMismatch {
                        expected: dim,
                        found: matrix.dim(),
                    });
                }
                let input = register.to_vec();
                matrix.apply(&input, register);
            }
        }
        Ok(())
    }

    /// The block as a dense `2^s × 2^s` matrix.
    pub fn matrix(&self, s: u32) -> Result<ComplexMatrix, WalkError> {
        let dim = 1usize << s;
        let mut failure = None;
        let m = ComplexMatrix::from_columns_fn(dim, |col, _| {
            if let Err(e) = self.apply_register(col) {
                failure = Some(e);
            }
        });
        failure.map_or(Ok(m), Err)
    }

    pub(crate) fn validate(&self, s: u32) -> Result<(), WalkError> {
        if let AncillaBlock::Explicit { matrix } = self {
            let dim = 1usize << s;
            if matrix.dim() != dim {
                return Err(WalkError::DimensionMismatch {
                    expected: dim,
                    found: matrix.dim(),
                });
            }
            let defect = matrix.unitarity_defect();
            if defect > UNITARITY_TOLERANCE {
                return Err(WalkError::NonUnitary(defect));
            }
        }
        Ok(())
    }
}

/// Quantum Fourier transform on a register of length `2^s`, in place.
/// `inverse` applies the conjugate transpose.
pub fn qft(register: &mut [Complex64], inverse: bool) -> Result<(), WalkError> {
    let dim = register.len();
    if !dim.is_power_of_two() {
        return Err(WalkError::NonPowerOfTwo(dim));
    }
    let sign = if inverse { -1.0 } else { 1.0 };
    let norm = 1.0 / (dim as f64).sqrt();
    let input = register.to_vec();
    for (j, out) in register.iter_mut().enumerate() {
        *out = input
            .iter()
            .enumerate()
            .map(|(x, amp)| {
                // (j*x) mod dim keeps the phase argument small.
                let phase = sign * 2.0 * PI * ((j * x) % dim) as f64 / dim as f64;
                amp * Complex64::from_polar(1.0, phase)
            })
            .sum::<Complex64>()
            * norm;
    }
    Ok(())
}

fn walsh_hadamard(register: &mut [Complex64]) {
    let dim = register.len();
    let mut half = 1;
    while half < dim {
        for start in (0..dim).step_by(2 * half) {
            for i in start..start + half {
                let (a, b) = (register[i], register[i + half]);
                register[i] = a + b;
                register[i + half] = a - b;
            }
        }
        half *= 2;
    }
    let norm = 1.0 / (dim as f64).sqrt();
    register.iter_mut().for_each(|x| *x *= norm);
}

/// Applies `block ⊗ I` to a joint state.
pub fn apply_ancilla(joint: &mut StateVector, block: &AncillaBlock) -> Result<(), WalkError> {
    let (s, n) = joint.joint_dims()?;
    let dim = 1usize << s;
    let mut register = vec![Complex64::new(0.0, 0.0); dim];
    let amps = joint.amplitudes_mut();
    for v in 0..n {
        for a in 0..dim {
            register[a] = amps[a * n + v];
        }
        block.apply_register(&mut register)?;
        for a in 0..dim {
            amps[a * n + v] = register[a];
        }
    }
    Ok(())
}

//! Laplacian spectra: numeric eigendecomposition, integrality certification,
//! closed-form family spectra, and the depth of an integral spectrum.

mod analytic;
mod depth;
mod jacobi;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::GraphError;
use crate::matrix::RealMatrix;

pub use analytic::analytic_spectrum;
pub use depth::{depth, DepthResult, DepthStep};

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop, relative to ‖L‖_F.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
/// Default distance-to-integer accepted by [`certify_integral`].
pub const DEFAULT_INTEGRALITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric (max |a_ij - a_ji| = {0:e})")]
    NotSymmetric(f64),
    #[error("Jacobi iteration did not converge")]
    NoConvergence,
    #[error("integrality tolerance {0} outside (0, 0.5)")]
    InvalidTolerance(f64),
    #[error("no closed-form spectrum for family `{0}`")]
    UnsupportedFamily(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("eigenvalue set does not contain 0")]
    MissingZero,
}

/// Eigenvalues in ascending order with orthonormal eigenvectors stored as the
/// columns of `eigenvectors` (column `j` belongs to `eigenvalues[j]`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: RealMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn eigenvector(&self, j: usize) -> Vec<f64> {
        self.eigenvectors.column(j)
    }

    /// `V diag(λ) Vᵀ`.
    pub fn reconstruct(&self) -> RealMatrix {
        let n = self.dim();
        let mut out = RealMatrix::zeros(n);
        for (j, &lambda) in self.eigenvalues.iter().enumerate() {
            for r in 0..n {
                let vr = self.eigenvectors[(r, j)] * lambda;
                if vr == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += vr * self.eigenvectors[(c, j)];
                }
            }
        }
        out
    }

    /// Max-entry deviation of `VᵀV` from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let v = &self.eigenvectors;
        v.transpose()
            .matmul(v)
            .max_abs_diff(&RealMatrix::identity(self.dim()))
    }
}

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
pub fn eigendecompose(matrix: &RealMatrix) -> Result<Spectrum, SpectralError> {
    let scale = matrix.max_abs().max(1.0);
    let asym = matrix.asymmetry();
    if asym > 1e-12 * scale {
        return Err(SpectralError::NotSymmetric(asym));
    }
    let (values, vectors) = jacobi::cyclic_jacobi(matrix, JACOBI_TOLERANCE).ok_or(SpectralError::NoConvergence)?;
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let n = values.len();
    let mut eigenvectors = RealMatrix::zeros(n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            eigenvectors[(r, dst)] = vectors[(r, src)];
        }
    }
    Ok(Spectrum {
        eigenvalues: order.iter().map(|&i| values[i]).collect(),
        eigenvectors,
    })
}

/// Distinct nonnegative integer eigenvalues with multiplicities, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralSpectrum {
    values: Vec<u64>,
    multiplicities: Vec<usize>,
}

impl IntegralSpectrum {
    /// Groups `(value, multiplicity)` pairs, summing repeated values and
    /// dropping zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, usize)>) -> Self {
        let mut grouped = std::collections::BTreeMap::new();
        for (v, m) in pairs {
            if m > 0 {
                *grouped.entry(v).or_insert(0) += m;
            }
        }
        Self {
            values: grouped.keys().copied().collect(),
            multiplicities: grouped.values().copied().collect(),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn multiplicity_of(&self, value: u64) -> usize {
        self.values
            .iter()
            .position(|&v| v == value)
            .map_or(0, |i| self.multiplicities[i])
    }

    pub fn largest(&self) -> u64 {
        self.values.last().copied().unwrap_or(0)
    }

    /// Sum of multiplicities, i.e. the matrix dimension.
    pub fn dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// `Σ value·multiplicity`, which equals the degree sum for a Laplacian.
    pub fn trace(&self) -> u128 {
        self.values
            .iter()
            .zip(&self.multiplicities)
            .map(|(&v, &m)| v as u128 * m as u128)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OffendingEigenvalue {
    pub value: f64,
    pub distance: f64,
}

/// Eigenvalues too far from any nonnegative integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegralityRejection {
    pub offending: Vec<OffendingEigenvalue>,
}

impl std::fmt::Display for IntegralityRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "non-integral eigenvalues:")?;
        for o in &self.offending {
            write!(f, " {:.12} (distance {:.3e})", o.value, o.distance)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Certification {
    Integral(IntegralSpectrum),
    Rejected(IntegralityRejection),
}

impl Certification {
    pub fn integral(&self) -> Option<&IntegralSpectrum> {
        match self {
            Certification::Integral(s) => Some(s),
            Certification::Rejected(_) => None,
        }
    }
}

/// Rounds every eigenvalue to the nearest integer if all lie within `tol`
/// of a nonnegative integer; otherwise reports the ones that do not.
pub fn certify_integral(sp: &Spectrum, tol: f64) -> Result<Certification, SpectralError> {
    if !(tol > 0.0 && tol < 0.5) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let mut offending = Vec::new();
    let mut rounded = Vec::with_capacity(sp.dim());
    for &value in &sp.eigenvalues {
        let nearest = value.round();
        let distance = (value - nearest).abs();
        if distance > tol || nearest < 0.0 {
            offending.push(OffendingEigenvalue { value, distance });
        } else {
            rounded.push((nearest as u64, 1));
        }
    }
    Ok(if offending.is_empty() {
        Certification::Integral(IntegralSpectrum::from_pairs(rounded))
    } else {
        Certification::Rejected(IntegralityRejection { offending })
    })
}

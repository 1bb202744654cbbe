//! Marked vertex sets and the phase oracles that recognize them.

use num_complex::Complex64;
use num_rational::Ratio;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::walk::{Layout, StateVector};

/// A nonempty set of marked vertices out of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSet {
    n: usize,
    members: Vec<usize>,
}

impl MarkedSet {
    /// Sorts and deduplicates `members`.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, SearchError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(SearchError::EmptyMarkedSet);
        }
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(SearchError::MarkedOutOfRange { vertex: v, n });
        }
        Ok(Self { n, members })
    }

    /// `count` distinct vertices chosen by a partial Fisher–Yates shuffle of
    /// `0..n` driven by SplitMix64 seeded with `seed`: step `i` swaps
    /// position `i` with `i + (next_u64 mod (n - i))`. The result is a pure
    /// function of `(seed, n, count)`.
    pub fn seeded(n: usize, count: usize, seed: u64) -> Result<Self, SearchError> {
        if count == 0 {
            return Err(SearchError::EmptyMarkedSet);
        }
        if count > n {
            return Err(SearchError::MarkedOutOfRange { vertex: count - 1, n });
        }
        let mut rng = SplitMix64::seed_from_u64(seed);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..count {
            let j = i + (rng.next_u64() % (n - i) as u64) as usize;
            pool.swap(i, j);
        }
        Self::new(n, pool.into_iter().take(count))
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// `|M| / N`, reduced.
    pub fn epsilon(&self) -> Ratio<u64> {
        Ratio::new(self.members.len() as u64, self.n as u64)
    }
}

/// `e^{iαΠ_M}`: multiplies the amplitude of every marked vertex by `e^{iα}`.
/// On a joint state it acts on the vertex index of every ancilla sector.
pub fn oracle_phase(state: &mut StateVector, marked: &MarkedSet, alpha: f64) -> Result<(), SearchError> {
    let n = state.n_vertices();
    if n != marked.n {
        return Err(SearchError::MarkedSizeMismatch {
            marked: marked.n,
            graph: n,
        });
    }
    let phase = Complex64::from_polar(1.0, alpha);
    for sector in state.amplitudes_mut().chunks_mut(n) {
        for &v in &marked.members {
            sector[v] *= phase;
        }
    }
    Ok(())
}

/// Standard oracle `O_M|b⟩|v⟩ = |b ⊕ f(v)⟩|v⟩` on a flag ⊗ vertex state.
fn standard_oracle(amps: &mut [Complex64], n: usize, marked: &MarkedSet) {
    for &v in &marked.members {
        amps.swap(v, n + v);
    }
}

/// The general oracle built from two standard-oracle queries around
/// `R_z(θ) = diag(e^{-iθ/2}, e^{iθ/2})` on the flag qubit. Acts as
/// `e^{-iθ/2} e^{iθΠ_M}` on the vertex register and returns the flag to `|0⟩`.
///
/// `joint` must have a single flag qubit (`Layout::Joint { ancillas: 1, .. }`)
/// prepared in `|0⟩`.
pub fn oracle_via_standard(joint: &mut StateVector, marked: &MarkedSet, theta: f64) -> Result<(), SearchError> {
    let Layout::Joint { ancillas: 1, n } = joint.layout() else {
        return Err(SearchError::InvalidInput("flag oracle needs a joint state with one flag qubit".into()));
    };
    if n != marked.n {
        return Err(SearchError::MarkedSizeMismatch {
            marked: marked.n,
            graph: n,
        });
    }
    let residue = joint.ancilla_residue();
    if residue > crate::walk::ANCILLA_RESET_TOLERANCE {
        return Err(SearchError::FlagNotReset(residue));
    }
    let amps = joint.amplitudes_mut();
    standard_oracle(amps, n, marked);
    let (down, up) = (Complex64::from_polar(1.0, -theta / 2.0), Complex64::from_polar(1.0, theta / 2.0));
    amps[..n].iter_mut().for_each(|a| *a *= down);
    amps[n..].iter_mut().for_each(|a| *a *= up);
    standard_oracle(amps, n, marked);
    Ok(())
}

//! Exact amplitude amplification with matched phases.

use std::f64::consts::PI;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::SearchError;

/// Slack on `sin(π/(4k+2)) <= √ε`, so that the boundary case ε = 1/4, k = 1
/// is not lost to rounding.
const BOUNDARY_SLACK: f64 = 1e-12;
/// Ratios this close to 1 are taken as 1; `asin` would otherwise turn a
/// one-ulp error into an `O(1e-8)` phase error.
const UNIT_SNAP: f64 = 4.0 * f64::EPSILON;

/// Iteration count and phases of the generalized Grover iteration
/// `G(α, β) = e^{iβ|π⟩⟨π|} e^{iαΠ_M}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroverParams {
    pub epsilon: Ratio<u64>,
    pub k: u64,
    pub alpha: f64,
    pub beta: f64,
}

pub(crate) fn epsilon_f64(epsilon: Ratio<u64>) -> f64 {
    *epsilon.numer() as f64 / *epsilon.denom() as f64
}

/// `π/(4 arcsin √ε) - 1/2`.
pub fn k_opt(epsilon: Ratio<u64>) -> f64 {
    PI / (4.0 * epsilon_f64(epsilon).sqrt().asin()) - 0.5
}

/// Smallest `k >= 1` with `sin(π/(4k+2)) <= √ε`, and
/// `α = β = 2 arcsin(sin(π/(4k+2)) / √ε)`. With these, `k` iterations of
/// `G(α, α)` starting from `|π⟩` land exactly in the marked subspace.
pub fn long_params(epsilon: Ratio<u64>) -> Result<GroverParams, SearchError> {
    if *epsilon.numer() == 0 || epsilon > Ratio::from_integer(1) {
        return Err(SearchError::InvalidEpsilon(format!("{epsilon} not in (0, 1]")));
    }
    let root = epsilon_f64(epsilon).sqrt();
    let angle = |k: u64| (PI / (4 * k + 2) as f64).sin();
    let k = (1..).find(|&k| angle(k) <= root + BOUNDARY_SLACK).expect("sin(π/(4k+2)) -> 0");
    let ratio = angle(k) / root;
    let ratio = if ratio >= 1.0 - UNIT_SNAP { 1.0 } else { ratio };
    let alpha = 2.0 * ratio.asin();
    Ok(GroverParams {
        epsilon,
        k,
        alpha,
        beta: alpha,
    })
}

/// `⌈π/(4√ε)⌉ + 1`, the bound `long_params` keeps `k` under.
pub fn iteration_bound(epsilon: Ratio<u64>) -> u64 {
    (PI / (4.0 * epsilon_f64(epsilon).sqrt())).ceil() as u64 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    /// Independent oracle: run G(α, β)^k on the two-dimensional span of
    /// |M⟩ and |M⊥⟩ and return |⟨M|G^k|π⟩|².
    fn two_level_success(eps: f64, k: u64, alpha: f64, beta: f64) -> f64 {
        let (a, b) = (eps.sqrt(), (1.0 - eps).sqrt());
        let pi = [Complex64::new(a, 0.0), Complex64::new(b, 0.0)];
        let mut psi = pi;
        for _ in 0..k {
            psi[0] *= Complex64::from_polar(1.0, alpha);
            let overlap = pi[0] * psi[0] + pi[1] * psi[1];
            let shift = (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, beta)) * overlap;
            psi[0] -= shift * pi[0];
            psi[1] -= shift * pi[1];
        }
        psi[0].norm_sqr()
    }

    #[test]
    fn half_marked() {
        let p = long_params(Ratio::new(1, 2)).unwrap();
        assert_eq!(p.k, 1);
        assert!((p.alpha - FRAC_PI_2).abs() < 1e-12);
        assert_eq!(p.alpha, p.beta);
        assert!((two_level_success(0.5, p.k, p.alpha, p.beta) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quarter_marked_is_classical_grover() {
        let p = long_params(Ratio::new(1, 4)).unwrap();
        assert_eq!(p.k, 1);
        assert_eq!(p.alpha, PI);
        assert!((two_level_success(0.25, 1, p.alpha, p.beta) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn all_marked() {
        let p = long_params(Ratio::from_integer(1)).unwrap();
        assert_eq!(p.k, 1);
        assert!((p.alpha - FRAC_PI_3).abs() < 1e-12);
    }

    #[test]
    fn epsilon_range() {
        assert!(long_params(Ratio::new(0, 3)).is_err());
        assert!(long_params(Ratio::new(5, 4)).is_err());
    }

    #[test]
    fn k_not_below_k_opt() {
        for den in 1..200u64 {
            let eps = Ratio::new(1, den);
            let p = long_params(eps).unwrap();
            assert!(p.k as f64 >= k_opt(eps) - 1e-9, "ε=1/{den}");
            assert!(p.k <= iteration_bound(eps), "ε=1/{den}");
            // Minimality: one fewer iteration cannot satisfy the constraint.
            if p.k > 1 {
                let prev = (PI / (4 * (p.k - 1) + 2) as f64).sin();
                assert!(prev > (1.0 / den as f64).sqrt());
            }
        }
    }

    proptest! {
        #[test]
        fn exact_in_two_level_model(num in 1u64..50, extra in 0u64..400) {
            let eps = Ratio::new(num, num + extra);
            let p = long_params(eps).unwrap();
            let success = two_level_success(epsilon_f64(eps), p.k, p.alpha, p.beta);
            prop_assert!((success - 1.0).abs() < 1e-9, "ε={} k={} success={}", eps, p.k, success);
        }
    }
}

//! Gate-count estimates for simulating `e^{iHt}` by product formulas.

use serde::{Deserialize, Serialize};

use super::SearchError;

/// Number of exponentials for an order-`2k` Suzuki product formula, with
/// whether the inputs satisfy `ε <= 1 <= 2m·5^{k-1}·‖H‖t`, the regime in
/// which the bound is proven.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrotterEstimate {
    pub exponentials: f64,
    pub within_validity: bool,
}

fn positive(x: f64) -> bool {
    x.is_finite() && x > 0.0
}

/// `2m²·5^{2k}·‖H‖t·(m‖H‖t/ε)^{1/(2k)}` for `H` a sum of `m` terms.
pub fn trotter_bound(m: u64, norm_ht: f64, epsilon: f64, order: u32) -> Result<TrotterEstimate, SearchError> {
    if m == 0 || order == 0 || !positive(norm_ht) || !positive(epsilon) {
        return Err(SearchError::InvalidInput(format!(
            "trotter bound needs positive inputs (m={m}, norm_ht={norm_ht}, epsilon={epsilon}, k={order})"
        )));
    }
    let m = m as f64;
    let k = order as i32;
    let exponentials = 2.0 * m * m * 5f64.powi(2 * k) * norm_ht * (m * norm_ht / epsilon).powf(1.0 / (2 * k) as f64);
    let within_validity = epsilon <= 1.0 && 2.0 * m * 5f64.powi(k - 1) * norm_ht >= 1.0;
    Ok(TrotterEstimate {
        exponentials,
        within_validity,
    })
}

/// Gate estimate for one `e^{iLt}` on `n` vertices with largest Laplacian
/// eigenvalue `lambda_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GateEstimate {
    pub gates: f64,
    pub trotter: TrotterEstimate,
    pub gates_per_exponential: f64,
}

/// Splits `L` into `n²` one-sparse terms, takes `‖L‖t = λ_N·t`, target
/// error 1/2, second-order formula, and charges `log₂ n` gates (at least
/// one) per exponential. The result grows as `t^{3/2}`.
pub fn ctqw_gate_estimate(lambda_n: u64, t: f64, n: u64) -> Result<GateEstimate, SearchError> {
    if lambda_n == 0 || n == 0 || !positive(t) {
        return Err(SearchError::InvalidInput(format!(
            "gate estimate needs positive inputs (lambda_n={lambda_n}, t={t}, n={n})"
        )));
    }
    let trotter = trotter_bound(n * n, lambda_n as f64 * t, 0.5, 1)?;
    let gates_per_exponential = (n as f64).log2().max(1.0);
    Ok(GateEstimate {
        gates: trotter.exponentials * gates_per_exponential,
        trotter,
        gates_per_exponential,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reference_value() {
        let e = trotter_bound(2, 1.0, 0.1, 1).unwrap();
        assert!((e.exponentials - 200.0 * 20f64.sqrt()).abs() < 1e-9);
        assert!((e.exponentials - 894.43).abs() < 0.01);
        assert!(e.within_validity);
    }

    #[test]
    fn validity_flag() {
        assert!(!trotter_bound(1, 0.1, 0.1, 1).unwrap().within_validity);
        assert!(!trotter_bound(2, 1.0, 2.0, 1).unwrap().within_validity);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(trotter_bound(0, 1.0, 0.1, 1).is_err());
        assert!(trotter_bound(2, 0.0, 0.1, 1).is_err());
        assert!(trotter_bound(2, 1.0, -0.1, 1).is_err());
        assert!(trotter_bound(2, 1.0, 0.1, 0).is_err());
        assert!(trotter_bound(2, f64::NAN, 0.1, 1).is_err());
        assert!(ctqw_gate_estimate(4, 0.0, 4).is_err());
    }

    #[test]
    fn gate_estimate_reference() {
        // m = 16, ‖L‖t = 4: 2·256·25·4·√(64/0.5), times log₂ 4.
        let g = ctqw_gate_estimate(4, 1.0, 4).unwrap();
        let want = 2.0 * 256.0 * 25.0 * 4.0 * 128f64.sqrt() * 2.0;
        assert!((g.gates - want).abs() / want < 1e-12);
    }

    #[test]
    fn doubling_time_scales_by_two_root_two() {
        let a = ctqw_gate_estimate(6, 0.7, 9).unwrap().gates;
        let b = ctqw_gate_estimate(6, 1.4, 9).unwrap().gates;
        assert!((b / a - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn monotone_in_time_and_norm(m in 1u64..20, x in 0.01f64..10.0, dx in 0.01f64..10.0, k in 1u32..4) {
            let lo = trotter_bound(m, x, 0.3, k).unwrap().exponentials;
            let hi = trotter_bound(m, x + dx, 0.3, k).unwrap().exponentials;
            prop_assert!(hi > lo);
        }

        #[test]
        fn gate_estimate_monotone(lambda in 1u64..50, t in 0.01f64..5.0, dt in 0.01f64..5.0, n in 2u64..64) {
            let lo = ctqw_gate_estimate(lambda, t, n).unwrap().gates;
            let hi = ctqw_gate_estimate(lambda, t + dt, n).unwrap().gates;
            prop_assert!(hi > lo);
        }
    }
}

//! Closed-form Laplacian spectra of the supported families.

use super::{IntegralSpectrum, SpectralError};
use crate::combinatorics::{binomial, gaussian_binomial, q_integer};
use crate::graphs::GraphSpec;

/// Eigenvalues and multiplicities from the family formulas, with
/// `C(n, -1) = 0`. Coinciding values from different branches are merged.
pub fn analytic_spectrum(spec: &GraphSpec) -> Result<IntegralSpectrum, SpectralError> {
    spec.validate()?;
    let pairs: Vec<(i128, u128)> = match *spec {
        GraphSpec::Complete { n } => {
            let n = n as i128;
            vec![(0, 1), (n, (n - 1) as u128)]
        }
        GraphSpec::Johnson { n, k } => {
            let (n, k) = (n as i64, k as i64);
            (0..=k.min(n - k))
                .map(|i| ((i * (n + 1 - i)) as i128, binomial(n, i) - binomial(n, i - 1)))
                .collect()
        }
        GraphSpec::Kneser { n, k } => {
            let (n, k) = (n as i64, k as i64);
            (0..=k)
                .map(|i| {
                    let sign: i128 = if i % 2 == 0 { 1 } else { -1 };
                    let value = binomial(n - k, k) as i128 - sign * binomial(n - k - i, k - i) as i128;
                    (value, binomial(n, i) - binomial(n, i - 1))
                })
                .collect()
        }
        GraphSpec::Hamming { d, q } => {
            let (d, q) = (d as i64, q as u128);
            (0..=d)
                .map(|i| ((q as i128) * i as i128, binomial(d, i) * (q - 1).pow(i as u32)))
                .collect()
        }
        GraphSpec::Grassmann { q, n, k } => {
            let (n, k, q) = (n as i64, k as i64, q as u64);
            let qi = |m: i64| q_integer(m, q) as i128;
            let degree = q as i128 * qi(k) * qi(n - k);
            (0..=k.min(n - k))
                .map(|i| {
                    let value = degree - (q as i128).pow(i as u32 + 1) * qi(k - i) * qi(n - k - i) + qi(i);
                    (value, gaussian_binomial(n, i, q) - gaussian_binomial(n, i - 1, q))
                })
                .collect()
        }
        GraphSpec::Rook { m, n } => {
            let (m, n) = (m as i128, n as i128);
            vec![
                (0, 1),
                (n, (n - 1) as u128),
                (m, (m - 1) as u128),
                (n + m, ((m - 1) * (n - 1)) as u128),
            ]
        }
        GraphSpec::CompleteSquare { n } => {
            let n = n as i128;
            let r = (n - 1) as u128;
            vec![(0, 1), (2, 2), (4, 1), (n, r), (n + 2, 2 * r), (n + 4, r)]
        }
        GraphSpec::CocktailParty { n } => {
            let n = n as i128;
            vec![(0, 1), (2 * n - 2, n as u128), (2 * n, (n - 1) as u128)]
        }
        GraphSpec::CompleteMultipartite { n, k } => {
            let (n, k) = (n as i128, k as i128);
            vec![(0, 1), (n - n / k, (n - k) as u128), (n, (k - 1) as u128)]
        }
        GraphSpec::Star { n } => {
            let n = n as i128;
            vec![(0, 1), (1, (n - 1) as u128), (n + 1, 1)]
        }
        GraphSpec::Antiregular { n } => {
            let missing = (n as i128 + 1) / 2;
            (0..=n as i128).filter(|&v| v != missing).map(|v| (v, 1)).collect()
        }
        GraphSpec::Custom { .. } => return Err(SpectralError::UnsupportedFamily("custom")),
    };
    Ok(IntegralSpectrum::from_pairs(pairs.into_iter().map(|(v, m)| {
        assert!(v >= 0, "closed-form Laplacian eigenvalue {v} is negative for {spec}");
        (v as u64, m as usize)
    })))
}

use serde::{Deserialize, Serialize};

use super::{IntegralSpectrum, SpectralError};

/// One level of the filtering chain: the surviving eigenvalues and, for every
/// level but the last, the gcd of their nonzero members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthStep {
    pub values: Vec<u64>,
    pub gcd: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthResult {
    pub depth: usize,
    pub chain: Vec<DepthStep>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Depth of an integral spectrum: starting from the distinct eigenvalues,
/// repeatedly keep those whose quotient by the gcd of the nonzero members is
/// even, until only 0 is left. The depth is the number of filtering steps.
pub fn depth(isp: &IntegralSpectrum) -> Result<DepthResult, SpectralError> {
    if !isp.values().contains(&0) {
        return Err(SpectralError::MissingZero);
    }
    let mut current: Vec<u64> = isp.values().to_vec();
    let mut chain = Vec::new();
    loop {
        let g = current.iter().copied().filter(|&v| v != 0).fold(0, gcd);
        if g == 0 {
            chain.push(DepthStep { values: current, gcd: None });
            break;
        }
        let next = current.iter().copied().filter(|&v| (v / g) % 2 == 0).collect();
        chain.push(DepthStep {
            values: std::mem::replace(&mut current, next),
            gcd: Some(g),
        });
    }
    Ok(DepthResult {
        depth: chain.len() - 1,
        chain,
    })
}

//! Integer helpers shared by the family builders and the closed-form spectra.

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `[m]_q = (q^m - 1)/(q - 1) = 1 + q + ... + q^(m-1)`; zero for `m <= 0`.
pub fn q_integer(m: i64, q: u64) -> u128 {
    if m <= 0 {
        return 0;
    }
    (0..m).map(|i| (q as u128).pow(i as u32)).sum()
}

/// Gaussian binomial `[n choose k]_q`, the number of k-dimensional subspaces
/// of F_q^n. Zero when `k < 0` or `k > n`.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k as u32 {
        num *= q.pow(n as u32 - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// All k-subsets of `{1, ..., n}` in lexicographic order, each sorted.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(current.clone());
        // Rightmost position that can still advance.
        let Some(i) = (0..k).rev().find(|&i| current[i] < (n - k + i + 1) as u32) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
    out
}

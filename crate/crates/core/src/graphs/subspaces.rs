//! Subspaces of F_q^n for prime q, represented by reduced row echelon bases.

/// Every k-dimensional subspace of F_q^n as a k×n RREF basis matrix.
pub(crate) fn rref_subspaces(q: u32, n: usize, k: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for pivots in crate::combinatorics::combinations(n, k) {
        let pivots: Vec<usize> = pivots.iter().map(|&p| p as usize - 1).collect();
        // Free cells: right of the row's pivot and outside every pivot column.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut basis = vec![vec![0u32; n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                basis[r][p] = 1;
            }
            for (&(r, c), &d) in free.iter().zip(&digits) {
                basis[r][c] = d;
            }
            out.push(basis);
            // Odometer increment over the free cells.
            let Some(pos) = digits.iter().rposition(|&d| d + 1 < q) else {
                break;
            };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        }
    }
    out
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

/// Rank over F_q (q prime) of the given rows.
pub(crate) fn rank_mod(mut rows: Vec<Vec<u32>>, q: u32) -> usize {
    let q64 = q as u64;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c] as u64, q64 - 2, q64);
        for x in rows[rank].iter_mut() {
            *x = ((*x as u64 * inv) % q64) as u32;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let factor = row[c] as u64;
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                let sub = factor * p as u64 % q64;
                *x = ((*x as u64 + q64 - sub) % q64) as u32;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::gaussian_binomial;

    #[test]
    fn counts_match_gaussian_binomials() {
        for (q, n, k) in [(2, 3, 1), (2, 4, 2), (3, 3, 1), (3, 3, 2), (5, 2, 1), (2, 3, 3)] {
            assert_eq!(
                rref_subspaces(q, n, k).len() as u128,
                gaussian_binomial(n as i64, k as i64, q as u64),
                "q={q} n={n} k={k}"
            );
        }
    }

    #[test]
    fn rref_bases_have_full_rank_and_are_distinct() {
        let subs = rref_subspaces(3, 3, 2);
        for b in &subs {
            assert_eq!(rank_mod(b.clone(), 3), 2);
        }
        let mut sorted = subs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), subs.len());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_mod(vec![vec![1, 1], vec![2, 2]], 3), 1);
        assert_eq!(rank_mod(vec![vec![1, 1], vec![1, 2]], 3), 2);
        assert_eq!(rank_mod(vec![vec![0, 0]], 2), 0);
    }
}

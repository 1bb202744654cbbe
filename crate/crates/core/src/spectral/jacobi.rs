use crate::matrix::RealMatrix;

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver for a symmetric matrix.
///
/// Returns unsorted eigenvalues (the final diagonal) and the accumulated
/// rotation matrix whose columns are the eigenvectors, or `None` if the
/// off-diagonal mass failed to drop below `rel_tol * ‖A‖_F` within the sweep
/// limit.
pub(super) fn cyclic_jacobi(matrix: &RealMatrix, rel_tol: f64) -> Option<(Vec<f64>, RealMatrix)> {
    let n = matrix.dim();
    let mut a = matrix.clone();
    let mut v = RealMatrix::identity(n);
    let threshold = rel_tol * matrix.frobenius_norm();

    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            let eigenvalues = (0..n).map(|i| a[(i, i)]).collect();
            return Some((eigenvalues, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
    }
    None
}

/// `A <- Pᵀ A P`, `V <- V P` for the plane rotation in (p, q).
fn rotate(a: &mut RealMatrix, v: &mut RealMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.dim();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

fn off_diagonal_norm(a: &RealMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

//! Small dense complex linear algebra: LU with partial pivoting.

use num_complex::Complex64;

type Matrix = Vec<Vec<Complex64>>;

/// In-place LU factorization; returns the row permutation and its sign, or
/// `None` when a pivot is exactly zero.
fn lu(a: &mut Matrix) -> Option<(Vec<usize>, f64)> {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for k in 0..n {
        let (p, best) = (k..n)
            .map(|i| (i, a[i][k].norm()))
            .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best == 0.0 {
            return None;
        }
        if p != k {
            a.swap(p, k);
            perm.swap(p, k);
            sign = -sign;
        }
        let pivot = a[k][k];
        for i in k + 1..n {
            let factor = a[i][k] / pivot;
            a[i][k] = factor;
            for j in k + 1..n {
                let akj = a[k][j];
                a[i][j] -= factor * akj;
            }
        }
    }
    Some((perm, sign))
}

/// Solves `a·x = b`; `None` if `a` is numerically singular to the last bit.
pub fn solve(a: &[Vec<Complex64>], b: &[Complex64]) -> Option<Vec<Complex64>> {
    let mut m = a.to_vec();
    let (perm, _) = lu(&mut m)?;
    let n = m.len();
    let mut y: Vec<Complex64> = perm.iter().map(|&i| b[i]).collect();
    for i in 0..n {
        for j in 0..i {
            let t = m[i][j] * y[j];
            y[i] -= t;
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            let t = m[i][j] * y[j];
            y[i] -= t;
        }
        y[i] /= m[i][i];
    }
    if y.iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
        Some(y)
    } else {
        None
    }
}

pub fn determinant(a: &[Vec<Complex64>]) -> Complex64 {
    if a.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    let mut m = a.to_vec();
    match lu(&mut m) {
        None => Complex64::new(0.0, 0.0),
        Some((_, sign)) => (0..m.len()).fold(Complex64::new(sign, 0.0), |acc, i| acc * m[i][i]),
    }
}

/// Approximate null vector of `a − shift·I` by a few steps of inverse
/// iteration (the shift is an approximate eigenvalue).
pub fn inverse_iteration(a: &[Vec<Complex64>], shift: Complex64, steps: usize) -> Vec<Complex64> {
    let n = a.len();
    let scale = a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    let mut shifted: Matrix = a.to_vec();
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] -= shift;
    }
    let mut v: Vec<Complex64> = (0..n).map(|i| Complex64::new(1.0, 0.1 * i as f64)).collect();
    for _ in 0..steps {
        let next = solve(&shifted, &v).or_else(|| {
            // exact singularity: nudge the shift
            let mut nudged = shifted.clone();
            for (i, row) in nudged.iter_mut().enumerate() {
                row[i] -= Complex64::new(scale * 1e-14, 0.0);
            }
            solve(&nudged, &v)
        });
        let Some(next) = next else { break };
        let norm = next.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            break;
        }
        v = next.into_iter().map(|z| z / norm).collect();
    }
    v
}

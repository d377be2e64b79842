//! Simultaneous (Aberth–Ehrlich) root finding for univariate polynomials.

use num_complex::Complex64;

/// Horner evaluation of `p` and `p'`; `coeffs[i]` multiplies `z^i`.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Starting points on circles whose radii come from the upper convex hull
/// of `(i, log|a_i|)`, so roots of very different sizes start near their
/// own scale.
fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let pts: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(i, c)| (i, c.norm().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    // roots at zero are impossible here: callers strip them
    let offset = 0.4;
    for w in hull.windows(2) {
        let (i, li) = w[0];
        let (j, lj) = w[1];
        let k = j - i;
        let r = ((li - lj) / k as f64).exp();
        for m in 0..k {
            let theta = 2.0 * std::f64::consts::PI * (m as f64) / (k as f64) + offset + i as f64;
            out.push(Complex64::from_polar(r, theta));
        }
    }
    out
}

/// All complex roots of the polynomial with the given coefficients
/// (constant term first). Multiple roots are returned with multiplicity but
/// converge slowly; callers pass squarefree input.
pub fn polynomial_roots(coeffs: &[Complex64], max_iter: usize) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().map(|x| x.norm() == 0.0).unwrap_or(false) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut zeros = 0;
    while c[0].norm() == 0.0 {
        c.remove(0);
        zeros += 1;
    }
    let lead = *c.last().unwrap();
    let c: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let mut z = if c.len() > 1 { initial_guesses(&c) } else { Vec::new() };
    let n = z.len();
    for _ in 0..max_iter {
        let mut done = true;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(&c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    sum += (z[k] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[k] -= step;
            if step.norm() > 1e-15 * z[k].norm().max(f64::MIN_POSITIVE) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    // final Newton polish
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(&c, *zk);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.re.is_finite() {
                break;
            }
            *zk -= step;
        }
    }
    z.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zeros));
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn contains(roots: &[Complex64], z: Complex64, tol: f64) -> bool {
        roots.iter().any(|r| (r - z).norm() < tol)
    }

    #[test]
    fn quadratic_and_cubic() {
        // z^2 - 2
        let r = polynomial_roots(&[c(-2.0), c(0.0), c(1.0)], 200);
        assert_eq!(r.len(), 2);
        assert!(contains(&r, c(2f64.sqrt()), 1e-13) && contains(&r, c(-(2f64.sqrt())), 1e-13));
        // (z-1)(z-2)(z-3)
        let r = polynomial_roots(&[c(-6.0), c(11.0), c(-6.0), c(1.0)], 200);
        for x in [1.0, 2.0, 3.0] {
            assert!(contains(&r, c(x), 1e-12));
        }
    }

    #[test]
    fn widely_separated_magnitudes() {
        // (z - 1e-4)(z - 1)(z + 100)
        let a = 1e-4;
        let coeffs = [c(100.0 * a), c(-(100.0 * (1.0 + a)) + a), c(99.0 - a), c(1.0)];
        let r = polynomial_roots(&coeffs, 500);
        assert!(contains(&r, c(a), 1e-12));
        assert!(contains(&r, c(1.0), 1e-10));
        assert!(contains(&r, c(-100.0), 1e-8));
    }

    #[test]
    fn zero_roots_are_kept() {
        let r = polynomial_roots(&[c(0.0), c(0.0), c(-1.0), c(1.0)], 100);
        assert_eq!(r.iter().filter(|z| z.norm() == 0.0).count(), 2);
        assert!(contains(&r, c(1.0), 1e-14));
    }

    #[test]
    fn roots_of_unity() {
        let mut coeffs = vec![c(0.0); 8];
        coeffs[0] = c(-1.0);
        coeffs[7] = c(1.0);
        let r = polynomial_roots(&coeffs, 500);
        for k in 0..7 {
            let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 7.0);
            assert!(contains(&r, w, 1e-12));
        }
    }
}

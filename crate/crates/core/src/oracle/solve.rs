//! Zero-dimensional polynomial systems: exact Gröbner basis and
//! multiplication matrix, floating-point eigenvalues and eigenvectors, then
//! Newton polishing.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg;
use super::roots::polynomial_roots;
use crate::algebra::{rational_to_f64, Monomial, Polynomial, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::ideal::{quotient_basis_of, Ideal, IdealEngine};

const SEPARATOR_SEED: u64 = 0x5e_ed0f_5011;

/// Characteristic polynomial of an exact square matrix: Hessenberg
/// reduction by similarity, then the standard recurrence.
pub(crate) fn characteristic_polynomial(m: &[Vec<Rational>]) -> UniPoly {
    let n = m.len();
    let mut h: Vec<Vec<Rational>> = m.to_vec();
    for col in 0..n.saturating_sub(2) {
        let row = col + 1;
        let Some(piv) = (row..n).find(|&i| !h[i][col].is_zero()) else { continue };
        if piv != row {
            h.swap(piv, row);
            for r in h.iter_mut() {
                r.swap(piv, row);
            }
        }
        for i in row + 1..n {
            if h[i][col].is_zero() {
                continue;
            }
            let u = &h[i][col] / &h[row][col];
            for j in 0..n {
                let t = &u * &h[row][j];
                h[i][j] -= t;
            }
            for r in h.iter_mut() {
                let t = &u * &r[i];
                r[row] += t;
            }
        }
    }
    let x = UniPoly::new(vec![Rational::zero(), Rational::one()]);
    let mut p: Vec<UniPoly> = vec![UniPoly::constant(Rational::one())];
    for k in 1..=n {
        let diag = UniPoly::constant(h[k - 1][k - 1].clone());
        let mut next = x.sub(&diag).mul(&p[k - 1]);
        let mut t = Rational::one();
        for i in (1..k).rev() {
            t *= &h[i][i - 1];
            if t.is_zero() {
                break;
            }
            let c = &h[i - 1][k - 1] * &t;
            next = next.sub(&p[i - 1].scale(&c));
        }
        p.push(next);
    }
    p.pop().expect("nonempty")
}

/// Coordinates of a normal form in the standard-monomial basis.
fn coordinates(nf: &Polynomial, index: &BTreeMap<Monomial, usize>, dim: usize) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::zero(); dim];
    for (m, c) in nf.terms() {
        let i = index
            .get(m)
            .ok_or_else(|| Error::Internal("normal form leaves the standard monomials".into()))?;
        out[*i] = c.clone();
    }
    Ok(out)
}

/// All complex common zeros of a zero-dimensional system, without
/// polishing. Distinct zeros are found through a random separating linear
/// form; multiple zeros appear once.
pub fn solve_zero_dimensional(engine: &IdealEngine, system: &[Polynomial], nvars: usize) -> Result<Vec<Vec<Complex64>>> {
    let gb = engine.basis(&Ideal::new(nvars, system.iter().cloned()))?;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let basis = quotient_basis_of(&gb).ok_or(Error::NotFinite)?;
    let dim = basis.len();
    let index: BTreeMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let one = index[&Monomial::one(nvars)];

    let mut rng = ChaCha8Rng::seed_from_u64(SEPARATOR_SEED);
    let sep = (0..nvars).fold(Polynomial::zero(nvars), |acc, i| {
        let c: i64 = rng.gen_range(1..=37) * if rng.gen_bool(0.5) { 1 } else { -1 };
        &acc + &Polynomial::var(nvars, i).scale(&Rational::from_integer(c.into()))
    });

    // column j holds the coordinates of sep·b_j
    let mut mult = vec![vec![Rational::zero(); dim]; dim];
    for (j, b) in basis.iter().enumerate() {
        let nf = gb.normal_form(&sep.mul_monomial(b, &Rational::one()));
        for (i, c) in coordinates(&nf, &index, dim)?.into_iter().enumerate() {
            mult[i][j] = c;
        }
    }
    let xs: Vec<Vec<f64>> = (0..nvars)
        .map(|i| {
            let nf = gb.normal_form(&Polynomial::var(nvars, i));
            coordinates(&nf, &index, dim).map(|v| v.iter().map(rational_to_f64).collect())
        })
        .collect::<Result<_>>()?;

    let charpoly = characteristic_polynomial(&mult).squarefree();
    let eigenvalues = polynomial_roots(&charpoly.to_complex(), 1000);
    // evaluation functionals are left eigenvectors: w·M = s(p)·w
    let transposed: Vec<Vec<Complex64>> = (0..dim)
        .map(|i| (0..dim).map(|j| Complex64::new(rational_to_f64(&mult[j][i]), 0.0)).collect())
        .collect();
    let mut points = Vec::with_capacity(eigenvalues.len());
    for mu in eigenvalues {
        let w = linalg::inverse_iteration(&transposed, mu, 3);
        if w[one].norm() == 0.0 {
            continue;
        }
        let w: Vec<Complex64> = w.iter().map(|z| z / w[one]).collect();
        points.push(
            xs.iter()
                .map(|row| row.iter().zip(&w).map(|(c, z)| z * c).sum())
                .collect(),
        );
    }
    Ok(points)
}

pub(crate) fn residual(system: &[Polynomial], point: &[Complex64]) -> f64 {
    system.iter().map(|p| p.evaluate_complex(point).norm()).fold(0.0, f64::max)
}

/// Newton iteration for a square system with its symbolic Jacobian.
/// Returns the final point and its residual.
pub(crate) fn newton_polish(
    system: &[Polynomial],
    jacobian: &[Vec<Polynomial>],
    start: &[Complex64],
    iters: usize,
    tol: f64,
) -> (Vec<Complex64>, f64) {
    let mut x = start.to_vec();
    let mut res = residual(system, &x);
    for _ in 0..iters {
        if res < tol * 1e-3 {
            break;
        }
        let j: Vec<Vec<Complex64>> =
            jacobian.iter().map(|row| row.iter().map(|p| p.evaluate_complex(&x)).collect()).collect();
        let rhs: Vec<Complex64> = system.iter().map(|p| -p.evaluate_complex(&x)).collect();
        let Some(dx) = linalg::solve(&j, &rhs) else { break };
        let candidate: Vec<Complex64> = x.iter().zip(&dx).map(|(a, b)| a + b).collect();
        let new_res = residual(system, &candidate);
        if !new_res.is_finite() || new_res >= res {
            break;
        }
        x = candidate;
        res = new_res;
    }
    (x, res)
}

pub(crate) fn jacobian_of(system: &[Polynomial], nvars: usize) -> Vec<Vec<Polynomial>> {
    system.iter().map(|p| (0..nvars).map(|j| p.derivative(j)).collect()).collect()
}

/// Common zeros of two polynomials in two variables, Newton-polished.
pub fn solve_bivariate(engine: &IdealEngine, system: &[Polynomial]) -> Result<Vec<[Complex64; 2]>> {
    if system.len() != 2 || system.iter().any(|p| p.nvars() != 2) {
        return Err(Error::Input("solve_bivariate expects two polynomials in two variables".into()));
    }
    let jac = jacobian_of(system, 2);
    let raw = solve_zero_dimensional(engine, system, 2)?;
    Ok(raw
        .into_iter()
        .map(|p| {
            let (x, _) = newton_polish(system, &jac, &p, 50, 1e-14);
            [x[0], x[1]]
        })
        .collect())
}

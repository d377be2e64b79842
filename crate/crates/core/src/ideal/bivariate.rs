//! Bivariate gcd over `Q[u][v]` and squarefree parts of plane curves.

use num_traits::Zero;

use super::groebner::divide_exact;
use crate::algebra::{Monomial, Polynomial, Rational, UniPoly};

/// Coefficients in `Q[u]` indexed by the power of `v`.
type Dense = Vec<UniPoly>;

fn to_dense(p: &Polynomial) -> Dense {
    assert_eq!(p.nvars(), 2, "bivariate polynomial expected");
    let dv = p.degree_in(1).unwrap_or(0) as usize;
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); dv + 1];
    for (m, c) in p.terms() {
        let (a, b) = (m.exps()[0] as usize, m.exps()[1] as usize);
        if rows[b].len() <= a {
            rows[b].resize(a + 1, Rational::zero());
        }
        rows[b][a] = c.clone();
    }
    let mut out: Dense = rows.into_iter().map(UniPoly::new).collect();
    trim(&mut out);
    out
}

fn from_dense(d: &Dense) -> Polynomial {
    let mut terms = Vec::new();
    for (b, row) in d.iter().enumerate() {
        for (a, c) in row.coeffs().iter().enumerate() {
            terms.push((Monomial::new(vec![a as u32, b as u32]), c.clone()));
        }
    }
    Polynomial::from_terms(2, terms)
}

fn trim(d: &mut Dense) {
    while d.last().map(UniPoly::is_zero).unwrap_or(false) {
        d.pop();
    }
}

fn content(d: &Dense) -> UniPoly {
    d.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
}

fn primitive(d: &Dense) -> Dense {
    let c = content(d);
    if c.is_zero() {
        return Vec::new();
    }
    d.iter().map(|x| x.div_rem(&c).0).collect()
}

/// Pseudo-remainder of `a` by `b` in `v` (up to a nonzero factor in `Q[u]`).
fn pseudo_rem(a: &Dense, b: &Dense) -> Dense {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Dense = r.iter().map(|c| c.mul(&lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] = next[j + shift].sub(&bc.mul(&lr));
        }
        trim(&mut next);
        r = next;
    }
    r
}

/// Greatest common divisor of two polynomials in `(u, v)`, up to a rational
/// scalar, via content/primitive-part splitting and a primitive remainder
/// sequence in `v` over `Q[u]`.
pub fn bivariate_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive_integer();
    }
    if b.is_zero() {
        return a.primitive_integer();
    }
    let (da, db) = (to_dense(a), to_dense(b));
    let cont = content(&da).gcd(&content(&db));
    let (mut x, mut y) = (primitive(&da), primitive(&db));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    // x is primitive; a constant in v means the primitive parts are coprime
    let g: Dense = if x.len() <= 1 {
        vec![cont]
    } else {
        x.iter().map(|c| c.mul(&cont)).collect()
    };
    from_dense(&g).primitive_integer()
}

/// Product of the distinct irreducible factors: `G / gcd(G, ∂G/∂u, ∂G/∂v)`,
/// content-normalized.
pub fn squarefree_part(g: &Polynomial) -> Polynomial {
    assert!(!g.is_zero(), "squarefree part of zero");
    if g.is_constant() {
        return Polynomial::one(2);
    }
    let d = bivariate_gcd(&bivariate_gcd(g, &g.derivative(0)), &g.derivative(1));
    let q = divide_exact(g, &d).expect("gcd divides its argument");
    q.primitive_integer()
}

//! Gröbner-basis machinery: completion, normal forms, quotients,
//! saturation, elimination, dimension and bivariate squarefree parts.

mod bivariate;
mod groebner;

use std::collections::BTreeSet;

pub use bivariate::{bivariate_gcd, squarefree_part};
pub use groebner::{buchberger, divide_exact, GbLimits, GroebnerBasis};

use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// A finitely generated ideal of a polynomial ring.
///
/// Zero generators are dropped on construction, so an ideal with no
/// generators is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Polynomial>) -> Self {
        let generators: Vec<Polynomial> = generators
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "ring mismatch"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { nvars, generators }
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal { nvars, generators: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal { nvars, generators: vec![Polynomial::one(nvars)] }
    }

    /// The maximal ideal of the origin, `(x_1, ..., x_N)`.
    pub fn origin(nvars: usize) -> Self {
        Ideal::new(nvars, (0..nvars).map(|i| Polynomial::var(nvars, i)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of ideals.
    pub fn plus(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        Ideal::new(self.nvars, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        Ideal::new(self.nvars, self.generators.iter().cloned().chain(extra))
    }

    /// Embeds into a ring with `extra` more trailing variables.
    pub fn extend(&self, extra: usize) -> Ideal {
        Ideal::new(self.nvars + extra, self.generators.iter().map(|g| g.extend(extra)))
    }

    /// Whether every generator vanishes at the origin.
    pub fn vanishes_at_origin(&self) -> bool {
        self.generators.iter().all(|g| num_traits::Zero::is_zero(&g.constant_term()))
    }
}

/// Gröbner-based ideal operations under a fixed resource budget.
#[derive(Clone, Debug, Default)]
pub struct IdealEngine {
    pub limits: GbLimits,
}

impl IdealEngine {
    pub fn new(limits: GbLimits) -> Self {
        IdealEngine { limits }
    }

    pub fn groebner(&self, ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
        buchberger(ideal.nvars, &ideal.generators, order, &self.limits)
    }

    /// Reduced grevlex basis, the default for membership and dimension.
    pub fn basis(&self, ideal: &Ideal) -> Result<GroebnerBasis> {
        self.groebner(ideal, &MonomialOrder::GrevLex)
    }

    pub fn contains(&self, ideal: &Ideal, p: &Polynomial) -> Result<bool> {
        Ok(self.basis(ideal)?.contains(p))
    }

    /// `a == b` by mutual membership of generators.
    pub fn ideals_equal(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        let ga = self.basis(a)?;
        let gb = self.basis(b)?;
        Ok(b.generators.iter().all(|p| ga.contains(p)) && a.generators.iter().all(|p| gb.contains(p)))
    }

    /// `I ∩ k[remaining variables]`, the generators free of the `front` variables.
    ///
    /// The result stays in the same ring. A zero result is returned as the
    /// zero ideal; callers decide what that means.
    pub fn eliminate(&self, ideal: &Ideal, front: &[usize]) -> Result<Ideal> {
        if front.len() >= ideal.nvars {
            return Err(Error::Input("cannot eliminate every variable".into()));
        }
        let order = MonomialOrder::eliminating(ideal.nvars, front);
        let gb = self.groebner(ideal, &order)?;
        Ok(Ideal::new(
            ideal.nvars,
            gb.basis().iter().filter(|g| front.iter().all(|&i| g.is_free_of(i))).cloned(),
        ))
    }

    /// `I ∩ J` through `t·I + (1 - t)·J` and elimination of `t`.
    pub fn intersection(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        assert_eq!(a.nvars, b.nvars, "ring mismatch");
        if a.is_zero() || b.is_zero() {
            return Ok(Ideal::zero(a.nvars));
        }
        let n = a.nvars;
        let t = Polynomial::var(n + 1, n);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let gens = a
            .generators
            .iter()
            .map(|g| &g.extend(1) * &t)
            .chain(b.generators.iter().map(|g| &g.extend(1) * &one_minus_t));
        let elim = self.eliminate(&Ideal::new(n + 1, gens), &[n])?;
        let keep: Vec<usize> = (0..n).collect();
        Ok(Ideal::new(
            n,
            elim.generators.iter().map(|g| g.restrict(&keep).expect("free of t")),
        ))
    }

    /// `(I : h) = {p : p·h ∈ I}`.
    pub fn ideal_quotient(&self, ideal: &Ideal, h: &Polynomial) -> Result<Ideal> {
        if h.is_zero() {
            return Err(Error::Input("ideal quotient by the zero polynomial".into()));
        }
        let inter = self.intersection(ideal, &Ideal::new(ideal.nvars, [h.clone()]))?;
        let gens = inter
            .generators
            .iter()
            .map(|g| divide_exact(g, h).ok_or_else(|| Error::Internal("intersection generator not divisible".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ideal.nvars, gens))
    }

    /// `(I : h^∞)`, iterating quotients until the ideal stops growing.
    pub fn saturate_by(&self, ideal: &Ideal, h: &Polynomial) -> Result<Ideal> {
        if h.is_zero() {
            return Err(Error::Input("saturation by the zero polynomial".into()));
        }
        if h.is_constant() {
            return Ok(ideal.clone());
        }
        let mut current = ideal.clone();
        loop {
            let next = self.ideal_quotient(&current, h)?;
            // next ⊇ current always holds
            let gb = self.basis(&current)?;
            if next.generators.iter().all(|p| gb.contains(p)) {
                return canonical(self, &current);
            }
            current = next;
        }
    }

    /// `(I : J^∞) = ∩_j (I : h_j^∞)` over the generators `h_j` of `J`.
    pub fn saturation(&self, ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
        if by.is_zero() {
            return Err(Error::Input("saturation by the zero ideal".into()));
        }
        if by.generators.iter().any(Polynomial::is_constant) {
            return Ok(ideal.clone());
        }
        let mut acc: Option<Ideal> = None;
        for h in &by.generators {
            let s = self.saturate_by(ideal, h)?;
            acc = Some(match acc {
                None => s,
                Some(a) => self.intersection(&a, &s)?,
            });
        }
        canonical(self, &acc.expect("nonempty generator list"))
    }

    /// Krull dimension of `R/I`: the largest set of variables containing no
    /// leading monomial of a Gröbner basis; −1 for the unit ideal.
    pub fn krull_dimension(&self, ideal: &Ideal) -> Result<i32> {
        let gb = self.basis(ideal)?;
        Ok(krull_dimension_of(&gb))
    }

    /// Standard monomials of a zero-dimensional ideal, `None` otherwise.
    pub fn quotient_basis(&self, ideal: &Ideal) -> Result<Option<Vec<Monomial>>> {
        let gb = self.basis(ideal)?;
        Ok(quotient_basis_of(&gb))
    }
}

/// Replaces the generators by the reduced grevlex basis.
fn canonical(engine: &IdealEngine, ideal: &Ideal) -> Result<Ideal> {
    let gb = engine.basis(ideal)?;
    Ok(Ideal::new(ideal.nvars, gb.basis().iter().cloned()))
}

pub fn krull_dimension_of(gb: &GroebnerBasis) -> i32 {
    if gb.is_unit() {
        return -1;
    }
    let n = gb.nvars();
    let supports: Vec<u64> = gb
        .leading_monomials()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as i32;
        if size <= best {
            continue;
        }
        // independent: no leading monomial lives entirely inside the subset
        if supports.iter().all(|s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

pub fn quotient_basis_of(gb: &GroebnerBasis) -> Option<Vec<Monomial>> {
    let n = gb.nvars();
    if gb.is_unit() {
        return Some(Vec::new());
    }
    let lms: Vec<Monomial> = gb.leading_monomials().cloned().collect();
    let mut bounds = vec![0u32; n];
    for (i, bound) in bounds.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| m.support().all(|j| j == i) && !m.is_one())
            .map(|m| m.exps()[i])
            .min()?;
        *bound = pure;
    }
    let mut out = BTreeSet::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            out.insert(m);
        }
        // odometer over the box
        let mut k = 0;
        loop {
            if k == n {
                let mut v: Vec<Monomial> = out.into_iter().collect();
                v.sort_by(|a, b| MonomialOrder::GrevLex.cmp(a, b));
                return Some(v);
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

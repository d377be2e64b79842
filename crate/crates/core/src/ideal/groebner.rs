use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};

/// Bounds on a single basis computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbLimits {
    /// Maximum number of S-pairs processed.
    pub max_pairs: usize,
    /// Maximum total degree of any basis element.
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_pairs: 20_000, max_degree: 60 }
    }
}

/// Terms sorted in decreasing order for a fixed monomial order.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    pub(crate) terms: Vec<(Monomial, Rational)>,
}

impl Sorted {
    pub(crate) fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        Sorted { terms: p.sorted_terms(order) }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.recip();
                for t in &mut self.terms {
                    t.1 = &t.1 * &inv;
                }
            }
        }
    }
}

/// `a - c * m * g`, merging two descending term lists.
fn sub_scaled(
    a: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    g: &[(Monomial, Rational)],
    order: &MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < g.len() {
        if j == g.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let gm = g[j].0.mul(m);
        if i == a.len() {
            out.push((gm, -(c * &g[j].1)));
            j += 1;
            continue;
        }
        match order.cmp(&a[i].0, &gm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].1 - c * &g[j].1;
                if !s.is_zero() {
                    out.push((gm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `p` modulo monic `basis`.
pub(crate) fn reduce(p: &Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut rest = p.terms.clone();
    let mut rem = Vec::new();
    while !rest.is_empty() {
        let (m, c) = rest[0].clone();
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm());
                let lc = &g.terms[0].1;
                let coeff = if lc.is_one() { c } else { c / lc };
                rest = sub_scaled(&rest, &coeff, &q, &g.terms, order);
            }
            None => {
                rem.push(rest.remove(0));
            }
        }
    }
    Sorted { terms: rem }
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let l = f.lm().lcm(g.lm());
    let mf = l.div(f.lm());
    let mg = l.div(g.lm());
    let fm: Vec<_> = f.terms.iter().map(|(m, c)| (m.mul(&mf), c / &f.terms[0].1)).collect();
    Sorted { terms: sub_scaled(&fm, &g.terms[0].1.recip(), &mg, &g.terms, order) }
}

/// A reduced, monic Gröbner basis for a fixed monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sorted: Vec<Sorted>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.order == other.order && self.basis == other.basis
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// True for the zero ideal.
    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(Sorted::lm)
    }

    /// Remainder of `p` on multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars, "ring mismatch");
        reduce(&Sorted::from_poly(p, &self.order), &self.sorted, &self.order).to_poly(self.nvars)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Buchberger completion with the coprime and chain criteria and
/// normal-strategy pair selection (smallest lcm first).
pub fn buchberger(
    nvars: usize,
    generators: &[Polynomial],
    order: &MonomialOrder,
    limits: &GbLimits,
) -> Result<GroebnerBasis> {
    let mut g: Vec<Sorted> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |g: &mut Vec<Sorted>, pending: &mut BTreeSet<(usize, usize)>, mut s: Sorted| -> Result<()> {
        s.make_monic();
        let deg = s.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if deg > limits.max_degree {
            return Err(Error::cap(
                "groebner",
                format!("basis element of degree {deg} exceeds cap {}", limits.max_degree),
            ));
        }
        let k = g.len();
        for i in 0..k {
            pending.insert((i, k));
        }
        g.push(s);
        Ok(())
    };

    for p in generators {
        assert_eq!(p.nvars(), nvars, "ring mismatch");
        let r = reduce(&Sorted::from_poly(p, order), &g, order);
        if !r.is_zero() {
            push(&mut g, &mut pending, r)?;
        }
    }

    let mut processed = 0usize;
    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = g[a.0].lm().lcm(g[a.1].lm());
        let lb = g[b.0].lm().lcm(g[b.1].lm());
        order.cmp(&la, &lb).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        if g[i].lm().is_coprime(g[j].lm()) {
            continue;
        }
        let l = g[i].lm().lcm(g[j].lm());
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].lm().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::cap("groebner", format!("more than {} S-pairs", limits.max_pairs)));
        }
        let s = s_polynomial(&g[i], &g[j], order);
        let r = reduce(&s, &g, order);
        if !r.is_zero() {
            push(&mut g, &mut pending, r)?;
        }
    }

    Ok(reduce_basis(nvars, g, order))
}

fn reduce_basis(nvars: usize, g: Vec<Sorted>, order: &MonomialOrder) -> GroebnerBasis {
    // minimal basis: drop elements whose leading monomial is a multiple of another's
    let mut keep: Vec<Sorted> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, q)| {
            j != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut reduced: Vec<Sorted> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Sorted> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s.clone()).collect();
        let head = keep[i].terms[0].clone();
        let tail = Sorted { terms: keep[i].terms[1..].to_vec() };
        let mut r = reduce(&tail, &others, order);
        r.terms.insert(0, head);
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    GroebnerBasis {
        nvars,
        order: order.clone(),
        basis: reduced.iter().map(|s| s.to_poly(nvars)).collect(),
        sorted: reduced,
    }
}

/// Exact quotient `p / h`, or `None` if `h` does not divide `p`.
pub fn divide_exact(p: &Polynomial, h: &Polynomial) -> Option<Polynomial> {
    assert!(!h.is_zero(), "division by zero polynomial");
    let order = MonomialOrder::GrevLex;
    let hs = Sorted::from_poly(h, &order);
    let mut rest = p.sorted_terms(&order);
    let mut q = Polynomial::zero(p.nvars());
    while !rest.is_empty() {
        let (m, c) = rest[0].clone();
        if !hs.lm().divides(&m) {
            return None;
        }
        let mq = m.div(hs.lm());
        let cq = c / &hs.terms[0].1;
        rest = sub_scaled(&rest, &cq, &mq, &hs.terms, &order);
        q = &q + &Polynomial::monomial(mq, cq);
    }
    Some(q)
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Exact coefficient field.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Ordered variable names of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            let valid = n
                .chars()
                .next()
                .map(|c| c.is_ascii_alphabetic() || c == '_')
                .unwrap_or(false)
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Input(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Input(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The two target coordinates of the plane `(u, v)`.
    pub fn target_plane() -> Self {
        Self { names: vec!["u".into(), "v".into()] }
    }
}

/// Dense exponent vector, one natural per ring variable.
///
/// The derived `Ord` is the lexicographic order with variable 0 largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub fn fmt_with(&self, vars: &VariableSet) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                if *e == 1 {
                    vars.name(i).to_string()
                } else {
                    format!("{}^{}", vars.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Order of vanishing of a bivariate polynomial along one coordinate axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisOrder {
    Finite(u32),
    /// The restriction is identically zero: the other coordinate divides the polynomial.
    Infinite,
}

impl AxisOrder {
    pub fn finite(self) -> Option<u32> {
        match self {
            AxisOrder::Finite(n) => Some(n),
            AxisOrder::Infinite => None,
        }
    }
}

impl fmt::Display for AxisOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisOrder::Finite(n) => write!(f, "{n}"),
            AxisOrder::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Which coordinate is set to zero in [`Polynomial::axis_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// Restrict to `{v = 0}` and take the order in `u`.
    SetVZero,
    /// Restrict to `{u = 0}` and take the order in `v`.
    SetUZero,
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor, mostly for tests.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), rat(*c))),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Whether every term is free of the variable.
    pub fn is_free_of(&self, var: usize) -> bool {
        self.terms.keys().all(|m| m.0[var] == 0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c * rat(e as i64));
        }
        out
    }

    /// Ring homomorphism: variable `i` is replaced by `images[i]`.
    ///
    /// All images must live in the same (target) ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable required");
        let target = images.first().map(Polynomial::nvars).unwrap_or(0);
        assert!(images.iter().all(|p| p.nvars == target), "images in different rings");
        // powers[i][e] = images[i]^e, filled lazily
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.nvars];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Simultaneous substitution of some variables within the same ring.
    pub fn substitute_vars(&self, bindings: &BTreeMap<usize, Polynomial>) -> Polynomial {
        let images: Vec<Polynomial> = (0..self.nvars)
            .map(|i| {
                bindings
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(|| Polynomial::var(self.nvars, i))
            })
            .collect();
        self.substitute(&images)
    }

    /// Moves the polynomial into a ring with `target_nvars` variables, sending
    /// variable `i` to variable `map[i]`.
    pub fn remap(&self, target_nvars: usize, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; target_nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Polynomial::from_terms(target_nvars, terms)
    }

    /// Embeds into a larger ring by appending `extra` variables at the end.
    pub fn extend(&self, extra: usize) -> Polynomial {
        let map: Vec<usize> = (0..self.nvars).collect();
        self.remap(self.nvars + extra, &map)
    }

    /// Restricts to the subring spanned by `keep` (in that order), if the
    /// polynomial only involves those variables.
    pub fn restrict(&self, keep: &[usize]) -> Option<Polynomial> {
        let mut out = Polynomial::zero(keep.len());
        for (m, c) in &self.terms {
            let involved: usize = m.support().filter(|i| !keep.contains(i)).count();
            if involved > 0 {
                return None;
            }
            out.add_term(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        Some(out)
    }

    pub fn evaluate_rational(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Floating complex evaluation.
    ///
    /// Powers of each coordinate are built once by repeated multiplication and
    /// shared across terms.
    pub fn evaluate_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars);
        let mut powers: Vec<Vec<Complex64>> = point.iter().map(|_| vec![Complex64::new(1.0, 0.0)]).collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(rational_to_f64(c), 0.0);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * point[i];
                    powers[i].push(next);
                }
                t *= powers[i][e as usize];
            }
            acc += t;
        }
        acc
    }

    /// Terms sorted in decreasing order for `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Divides by the leading coefficient for `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Scales to integer coefficients with gcd 1 and a positive leading
    /// coefficient for the lexicographic order.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let n = (c * Rational::from_integer(den.clone())).to_integer();
            content = content.gcd(&n);
        }
        let lead_negative = self.terms.iter().next_back().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let mut factor = Rational::new(den, content);
        if lead_negative {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Order of `G(u, 0)` in `u` (or `G(0, v)` in `v`) for a polynomial in
    /// two variables `(u, v)`.
    pub fn axis_order(&self, axis: Axis) -> AxisOrder {
        assert_eq!(self.nvars, 2, "axis_order expects a bivariate polynomial");
        let (kept, zeroed) = match axis {
            Axis::SetVZero => (0, 1),
            Axis::SetUZero => (1, 0),
        };
        self.terms
            .keys()
            .filter(|m| m.0[zeroed] == 0)
            .map(|m| m.0[kept])
            .min()
            .map(AxisOrder::Finite)
            .unwrap_or(AxisOrder::Infinite)
    }

    /// Human-readable form that [`super::parse_polynomial`] reads back.
    pub fn fmt_with(&self, vars: &VariableSet) -> String {
        assert_eq!(vars.len(), self.nvars, "variable set does not match ring");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(&MonomialOrder::DegLex).iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.fmt_with(vars));
            } else {
                out.push_str(&format!("{}*{}", abs, m.fmt_with(vars)));
            }
        }
        out
    }
}

pub(crate) fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Polynomial, Polynomial) {
        (Polynomial::var(2, 0), Polynomial::var(2, 1))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        let p = (&x + &y) * (&x - &y);
        assert_eq!(p, Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn adding_zero_is_identity() {
        let f = Polynomial::from_int_terms(2, &[(&[2, 2], 1), (&[3, 0], 1)]);
        assert_eq!(&f + &Polynomial::zero(2), f);
    }

    #[test]
    fn monomial_product() {
        let a = Polynomial::from_int_terms(2, &[(&[2, 1], 1)]);
        let b = Polynomial::from_int_terms(2, &[(&[1, 0], 1)]);
        assert_eq!(&a * &b, Polynomial::from_int_terms(2, &[(&[3, 1], 1)]));
    }

    #[test]
    fn derivatives() {
        let f = Polynomial::from_int_terms(2, &[(&[2, 2], 1), (&[3, 0], 1)]);
        assert_eq!(
            f.derivative(0),
            Polynomial::from_int_terms(2, &[(&[1, 2], 2), (&[2, 0], 3)])
        );
        let cube = Polynomial::from_int_terms(2, &[(&[3, 0], 1)]);
        assert!(cube.derivative(1).is_zero());
        let d4 = Polynomial::from_int_terms(2, &[(&[4, 1], 1)]);
        assert_eq!(d4.derivative(0), Polynomial::from_int_terms(2, &[(&[3, 1], 4)]));
    }

    #[test]
    fn axis_orders_of_cubic_image() {
        // 27v - 4u^3
        let g = Polynomial::from_int_terms(2, &[(&[0, 1], 27), (&[3, 0], -4)]);
        assert_eq!(g.axis_order(Axis::SetVZero), AxisOrder::Finite(3));
        assert_eq!(g.axis_order(Axis::SetUZero), AxisOrder::Finite(1));
        let uv = Polynomial::from_int_terms(2, &[(&[1, 1], 1)]);
        assert_eq!(uv.axis_order(Axis::SetVZero), AxisOrder::Infinite);
        assert_eq!(uv.axis_order(Axis::SetUZero), AxisOrder::Infinite);
    }

    #[test]
    fn substitution_along_polar_line() {
        // x^2*y with x -> 2t, y -> t gives 4t^3
        let f = Polynomial::from_int_terms(2, &[(&[2, 1], 1)]);
        let t = Polynomial::var(1, 0);
        let img = f.substitute(&[t.scale(&rat(2)), t.clone()]);
        assert_eq!(img, Polynomial::from_int_terms(1, &[(&[3], 4)]));

        let mut b = BTreeMap::new();
        b.insert(0, Polynomial::var(2, 0));
        assert_eq!(f.substitute_vars(&b), f);
    }

    #[test]
    fn substitution_builds_the_morsification() {
        // v - lambda*u with u -> x + y, v -> x^3, lambda = 1/10
        let g = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![0, 1]), rat(1)),
                (Monomial::new(vec![1, 0]), rat_frac(-1, 10)),
            ],
        );
        let (x, y) = xy();
        let f = x.pow(3);
        let ell = &x + &y;
        let out = g.substitute(&[ell.clone(), f.clone()]);
        assert_eq!(out, &f - &ell.scale(&rat_frac(1, 10)));
    }

    #[test]
    fn complex_evaluation() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let p = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        assert!(p.evaluate_complex(&[one, i]).norm() < 1e-15);
        let q = Polynomial::from_int_terms(2, &[(&[2, 1], 1)]);
        assert!((q.evaluate_complex(&[one, one]) - one).norm() < 1e-15);
        let j = Polynomial::from_int_terms(2, &[(&[2, 2], 1), (&[3, 0], 1)]);
        assert!(j.evaluate_complex(&[-one, one]).norm() < 1e-15);
    }

    #[test]
    fn primitive_integer_normalization() {
        let p = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![0, 1]), rat_frac(-27, 2)),
                (Monomial::new(vec![3, 0]), rat(2)),
            ],
        );
        assert_eq!(
            p.primitive_integer(),
            Polynomial::from_int_terms(2, &[(&[3, 0], 4), (&[0, 1], -27)])
        );
        assert_eq!(p.scale(&rat(-3)).primitive_integer(), p.primitive_integer());
    }

    #[test]
    fn restrict_and_remap() {
        let p = Polynomial::from_int_terms(4, &[(&[0, 0, 3, 0], 4), (&[0, 0, 0, 1], -27)]);
        let q = p.restrict(&[2, 3]).unwrap();
        assert_eq!(q, Polynomial::from_int_terms(2, &[(&[3, 0], 4), (&[0, 1], -27)]));
        assert_eq!(q.remap(4, &[2, 3]), p);
        assert!(p.restrict(&[0, 1]).is_none());
    }
}

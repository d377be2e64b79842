//! Polar curves of `(ℓ, f)` on user-supplied strata.
//!
//! A stratum `V` is given by the ideal of its closure (a complete
//! intersection `g_1 = … = g_k = 0`) and the ideal of its boundary `V̄ \ V`.
//! The polar curve `Γ_V(ℓ, f)` is the closure of the rank-deficiency locus of
//! `Jac(g, ℓ, f)` on `V` with the critical locus of `f|_V` removed, computed
//! as a saturation.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{parse_polynomial, Monomial, Polynomial, Rational, VariableSet};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealEngine};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    label: String,
    closure: Ideal,
    boundary: Ideal,
}

impl Stratum {
    /// The open stratum `C^N \ {0}` of a smooth ambient space.
    pub fn ambient(nvars: usize) -> Self {
        Stratum { label: "ambient".into(), closure: Ideal::zero(nvars), boundary: Ideal::origin(nvars) }
    }

    /// `closure` lists the complete-intersection equations of `V̄`; their
    /// number is the codimension.
    pub fn new(label: impl Into<String>, closure: Vec<Polynomial>, boundary: Ideal) -> Result<Self> {
        let n = boundary.nvars();
        if closure.iter().any(|g| g.nvars() != n) {
            return Err(Error::Input("stratum equations live in different rings".into()));
        }
        if closure.iter().any(Polynomial::is_zero) {
            return Err(Error::Input("zero polynomial among closure equations".into()));
        }
        if closure.len() >= n {
            return Err(Error::Input(format!(
                "stratum of codimension {} in {n} variables is not positive dimensional",
                closure.len()
            )));
        }
        if boundary.is_zero() {
            return Err(Error::Input("boundary ideal must be nonzero".into()));
        }
        Ok(Stratum { label: label.into(), closure: Ideal::new(n, closure), boundary })
    }

    /// Parses closure and boundary equations. An empty boundary list means
    /// the closure is smooth away from the origin.
    pub fn parse(label: &str, closure: &[String], boundary: &[String], vars: &VariableSet) -> Result<Self> {
        let c = closure.iter().map(|s| parse_polynomial(s, vars)).collect::<Result<Vec<_>>>()?;
        let b = if boundary.is_empty() {
            Ideal::origin(vars.len())
        } else {
            Ideal::new(
                vars.len(),
                boundary.iter().map(|s| parse_polynomial(s, vars)).collect::<Result<Vec<_>>>()?,
            )
        };
        Stratum::new(label, c, b)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn closure(&self) -> &Ideal {
        &self.closure
    }

    pub fn boundary(&self) -> &Ideal {
        &self.boundary
    }

    pub fn codim(&self) -> usize {
        self.closure.generators().len()
    }

    pub fn nvars(&self) -> usize {
        self.boundary.nvars()
    }

    pub fn is_ambient(&self) -> bool {
        self.codim() == 0
    }
}

/// A homogeneous linear form `ℓ = Σ c_i x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
    seed: Option<u64>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.iter().all(Zero::is_zero) {
            return Err(Error::Input("linear form is identically zero".into()));
        }
        Ok(LinearForm { coefficients, seed: None })
    }

    pub fn from_integers(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Reads an explicit override such as `"x + 2*y"`.
    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        let p = parse_polynomial(text, vars)?;
        Self::from_polynomial(&p)
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let mut coefficients = vec![Rational::zero(); p.nvars()];
        for (m, c) in p.terms() {
            if m.degree() != 1 {
                return Err(Error::Input("linear form must be homogeneous of degree one".into()));
            }
            let i = m.support().next().expect("degree one");
            coefficients[i] = c.clone();
        }
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars();
        Polynomial::from_terms(
            n,
            self.coefficients.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn fmt_with(&self, vars: &VariableSet) -> String {
        self.to_polynomial().fmt_with(vars)
    }
}

/// Reproducible random linear form with coefficients in `[-9, 9] \ {0}`.
pub fn draw_generic_linear(seed: u64, nvars: usize) -> LinearForm {
    assert!(nvars >= 1, "need at least one variable");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coefficients = (0..nvars)
        .map(|_| loop {
            let c: i64 = rng.gen_range(-9..=9);
            if c != 0 {
                break Rational::from_integer(c.into());
            }
        })
        .collect();
    LinearForm { coefficients, seed: Some(seed) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolarStatus {
    Curve,
    Empty,
    Degenerate,
}

impl PolarStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PolarStatus::Curve => "CURVE",
            PolarStatus::Empty => "EMPTY",
            PolarStatus::Degenerate => "DEGENERATE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarCurve {
    pub ideal: Ideal,
    pub stratum: String,
    pub status: PolarStatus,
    /// Krull dimension of the saturated ideal (−1 for the unit ideal).
    pub dimension: i32,
}

/// Gradient rows of `polys`: `rows[i][j] = ∂polys[i]/∂x_j`.
fn jacobian(polys: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    polys
        .iter()
        .map(|p| (0..p.nvars()).map(|j| p.derivative(j)).collect())
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub(crate) fn determinant(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = m.len();
    match n {
        0 => Polynomial::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Polynomial::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All maximal minors of the Jacobian matrix of `polys`.
pub fn jacobian_minors(polys: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = polys.first() else { return Vec::new() };
    let nvars = first.nvars();
    let rows = jacobian(polys);
    column_subsets(nvars, polys.len())
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Polynomial>> =
                rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
            determinant(&sub, nvars)
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// Ideal of `Sing(f|_V)` inside `V̄`: the closure equations plus the
/// `(k+1)`-minors of `Jac(g_1, …, g_k, f)`.
pub fn sing_f_ideal(f: &Polynomial, stratum: &Stratum) -> Ideal {
    let mut rows: Vec<Polynomial> = stratum.closure.generators().to_vec();
    rows.push(f.clone());
    stratum.closure.with(jacobian_minors(&rows))
}

/// Ideal of the critical locus of `(ℓ, f)|_V` before removing `Sing f`.
pub fn critical_ideal(f: &Polynomial, ell: &LinearForm, stratum: &Stratum) -> Ideal {
    let mut rows: Vec<Polynomial> = stratum.closure.generators().to_vec();
    rows.push(ell.to_polynomial());
    rows.push(f.clone());
    stratum.closure.with(jacobian_minors(&rows))
}

/// Whether the differential of `f|_V` vanishes identically on `V̄`
/// (every minor lies in the radical of the closure ideal).
pub fn differential_vanishes_on(engine: &IdealEngine, f: &Polynomial, stratum: &Stratum) -> Result<bool> {
    let mut rows: Vec<Polynomial> = stratum.closure.generators().to_vec();
    rows.push(f.clone());
    let n = f.nvars();
    for h in jacobian_minors(&rows) {
        // h ∈ rad(I) ⟺ 1 ∈ I + (1 - t·h)
        let t = Polynomial::var(n + 1, n);
        let rab = &Polynomial::one(n + 1) - &(&t * &h.extend(1));
        let gb = engine.basis(&stratum.closure.extend(1).with([rab]))?;
        if !gb.is_unit() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polar curve of `f` with respect to `ℓ` on one stratum.
///
/// The critical ideal is saturated first by `Sing f|_V`, then by the
/// boundary. The germ at the origin is `EMPTY` when the result is the unit
/// ideal or does not pass through the origin; a one-dimensional result is a
/// `CURVE`; anything larger is `DEGENERATE` (ℓ is not generic).
pub fn polar_ideal(
    engine: &IdealEngine,
    f: &Polynomial,
    ell: &LinearForm,
    stratum: &Stratum,
) -> Result<PolarCurve> {
    if ell.nvars() != f.nvars() || stratum.nvars() != f.nvars() {
        return Err(Error::Input("f, ℓ and the stratum live in different rings".into()));
    }
    let crit = critical_ideal(f, ell, stratum);
    let off_sing = engine.saturation(&crit, &sing_f_ideal(f, stratum))?;
    let ideal = engine.saturation(&off_sing, stratum.boundary())?;
    let gb = engine.basis(&ideal)?;
    let dimension = crate::ideal::krull_dimension_of(&gb);
    let status = if gb.is_unit() || !ideal.vanishes_at_origin() {
        PolarStatus::Empty
    } else {
        match dimension {
            d if d <= 0 => PolarStatus::Empty,
            1 => PolarStatus::Curve,
            _ => PolarStatus::Degenerate,
        }
    };
    let ideal = Ideal::new(ideal.nvars(), gb.basis().iter().map(Polynomial::primitive_integer));
    Ok(PolarCurve { ideal, stratum: stratum.label.clone(), status, dimension })
}

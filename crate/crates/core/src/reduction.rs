//! Pushing the polar curve into the target plane of `(ℓ, f)`.
//!
//! With `Δ_V = (ℓ, f)(Γ_V)` cut out by a squarefree `G(u, v)`, the Morse
//! number of the stratum is `ord_u G(u, 0) - ord_v G(0, v)`: the
//! intersection multiplicity of `Δ_V` with `{v = 0}` minus the one with
//! `{u = 0}`. Splitting that difference over the compact edges of the Newton
//! polygon of `G` gives the per-branch contributions `q - p`.

use num_integer::Integer;

use crate::algebra::{Axis, AxisOrder, Polynomial, VariableSet};
use crate::error::{Error, Result};
use crate::ideal::{bivariate_gcd, squarefree_part, Ideal, IdealEngine};
use crate::polar::{LinearForm, PolarCurve, PolarStatus};

/// Germ at the origin of the image curve, with its two axis orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveGerm {
    g: Polynomial,
    ord_u0: AxisOrder,
    ord_0v: AxisOrder,
}

impl PlaneCurveGerm {
    /// Normalizes `g` (squarefree, integer content 1, positive lex-leading
    /// coefficient) and caches its axis orders.
    pub fn new(g: &Polynomial) -> Result<Self> {
        if g.nvars() != 2 {
            return Err(Error::Input("plane curve must be bivariate".into()));
        }
        if g.is_zero() {
            return Err(Error::Input("plane curve equation is zero".into()));
        }
        if !num_traits::Zero::is_zero(&g.constant_term()) {
            return Err(Error::Input("plane curve does not pass through the origin".into()));
        }
        let g = squarefree_part(g);
        Ok(PlaneCurveGerm {
            ord_u0: g.axis_order(Axis::SetVZero),
            ord_0v: g.axis_order(Axis::SetUZero),
            g,
        })
    }

    pub fn equation(&self) -> &Polynomial {
        &self.g
    }

    /// `mult_0(Δ, {v = 0}) = ord_u G(u, 0)`.
    pub fn ord_u0(&self) -> AxisOrder {
        self.ord_u0
    }

    /// `mult_0(Δ, {u = 0}) = ord_v G(0, v)`.
    pub fn ord_0v(&self) -> AxisOrder {
        self.ord_0v
    }

    pub fn fmt(&self) -> String {
        self.g.fmt_with(&VariableSet::target_plane())
    }
}

/// Image of the polar curve: eliminate the ambient variables from
/// `I_Γ + (u - ℓ, v - f)` and keep the squarefree part of the gcd of what is
/// left.
pub fn image_plane_curve(
    engine: &IdealEngine,
    polar: &PolarCurve,
    ell: &LinearForm,
    f: &Polynomial,
) -> Result<PlaneCurveGerm> {
    if polar.status != PolarStatus::Curve {
        return Err(Error::Input(format!("polar curve has status {}", polar.status.as_str())));
    }
    if contracts_a_branch(engine, polar, ell, f)? {
        return Err(Error::Genericity("(ℓ, f) maps a polar branch to the origin".into()));
    }
    let elim = image_elimination_ideal(engine, polar, ell, f)?;
    if elim.is_zero() {
        return Err(Error::Genericity("image of the polar curve is not a curve (elimination ideal is zero)".into()));
    }
    let plane = elim.generators();
    let g = plane.iter().fold(Polynomial::zero(2), |acc, p| bivariate_gcd(&acc, p));
    if g.is_constant() {
        return Err(Error::Genericity("image of the polar curve is zero-dimensional".into()));
    }
    PlaneCurveGerm::new(&g)
}

/// True when a branch of `Γ` through the origin lies in `{ℓ = f = 0}`.
/// Elimination would silently drop such a branch.
fn contracts_a_branch(engine: &IdealEngine, polar: &PolarCurve, ell: &LinearForm, f: &Polynomial) -> Result<bool> {
    let n = f.nvars();
    let fiber = polar.ideal.with([ell.to_polynomial(), f.clone()]);
    let away = engine.saturation(&fiber, &Ideal::origin(n))?;
    Ok(away.vanishes_at_origin() && !engine.basis(&away)?.is_unit())
}

/// Morse number from the image germ; `None` stands for an empty polar
/// curve, which contributes zero.
pub fn morse_number(germ: Option<&PlaneCurveGerm>) -> Result<u32> {
    let Some(germ) = germ else { return Ok(0) };
    match (germ.ord_u0, germ.ord_0v) {
        (AxisOrder::Finite(a), AxisOrder::Finite(b)) if a >= b => Ok(a - b),
        (AxisOrder::Finite(a), AxisOrder::Finite(b)) => Err(Error::Genericity(format!(
            "image curve is not tangent to {{v = 0}}: ord_u0 = {a} < ord_0v = {b}"
        ))),
        (a, b) => Err(Error::Genericity(format!(
            "a coordinate axis is a component of the image curve (ord_u0 = {a}, ord_0v = {b})"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonEdge {
    /// Endpoint with the larger `u`-exponent, as `(u-exp, v-exp)`.
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// Primitive direction `(u-step, v-step)`, both positive.
    pub direction: (u32, u32),
    pub lattice_length: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Vertices with strictly decreasing `u`-exponent.
    pub vertices: Vec<(u32, u32)>,
    pub edges: Vec<NewtonEdge>,
}

/// Compact lower-left boundary of `conv(supp G + R²₊)`.
pub fn newton_polygon(germ: &PlaneCurveGerm) -> NewtonPolygon {
    newton_polygon_of(&germ.g)
}

/// Same on the raw support of `g`, without normalizing it first.
pub fn newton_polygon_of(g: &Polynomial) -> NewtonPolygon {
    let mut pts: Vec<(i64, i64)> =
        g.terms().map(|(m, _)| (m.exps()[0] as i64, m.exps()[1] as i64)).collect();
    pts.sort();
    pts.dedup();
    // lower hull, left to right (monotone chain)
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    // the compact part is the prefix along which the v-exponent drops
    let mut chain: Vec<(i64, i64)> = Vec::new();
    for p in hull {
        match chain.last() {
            Some(&(_, b)) if p.1 >= b => break,
            _ => chain.push(p),
        }
    }
    chain.reverse();
    let vertices: Vec<(u32, u32)> = chain.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
    let edges = vertices
        .windows(2)
        .map(|w| {
            let du = w[0].0 - w[1].0;
            let dv = w[1].1 - w[0].1;
            let l = du.gcd(&dv);
            NewtonEdge { start: w[0], end: w[1], direction: (du / l, dv / l), lattice_length: l }
        })
        .collect();
    NewtonPolygon { vertices, edges }
}

/// Leading Puiseux data of the branches along one Newton edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDatum {
    /// Order of `u` along each branch (`u = s^p`).
    pub p: u32,
    /// Order of `v` along each branch (`v = a s^q + …`).
    pub q: u32,
    /// Branches sharing the edge, counted as its lattice length.
    pub count: u32,
    /// `count * (q - p)`.
    pub m_delta_total: u32,
}

/// One row per compact Newton edge. The rows sum to [`morse_number`].
///
/// Branches on one edge whose edge polynomial has repeated roots are not
/// separated; the aggregate per edge is still exact.
pub fn branch_table(germ: &PlaneCurveGerm) -> Result<Vec<BranchDatum>> {
    let total = morse_number(Some(germ))?;
    let poly = newton_polygon(germ);
    let mut rows = Vec::with_capacity(poly.edges.len());
    for e in &poly.edges {
        let (q, p) = e.direction;
        if q < p {
            return Err(Error::Genericity(format!(
                "branch with u-order {p} > v-order {q} is not tangent to {{v = 0}}"
            )));
        }
        rows.push(BranchDatum { p, q, count: e.lattice_length, m_delta_total: e.lattice_length * (q - p) });
    }
    let sum: u32 = rows.iter().map(|r| r.m_delta_total).sum();
    if sum != total {
        return Err(Error::Internal(format!("branch contributions sum to {sum}, expected {total}")));
    }
    Ok(rows)
}

/// Elimination ideal `(I_Γ + (u - ℓ, v - f)) ∩ Q[u, v]`, before the gcd and
/// squarefree steps.
pub fn image_elimination_ideal(
    engine: &IdealEngine,
    polar: &PolarCurve,
    ell: &LinearForm,
    f: &Polynomial,
) -> Result<Ideal> {
    let n = f.nvars();
    let (u, v) = (Polynomial::var(n + 2, n), Polynomial::var(n + 2, n + 1));
    let ideal = polar.ideal.extend(2).with([&u - &ell.to_polynomial().extend(2), &v - &f.extend(2)]);
    let elim = engine.eliminate(&ideal, &(0..n).collect::<Vec<_>>())?;
    Ok(Ideal::new(2, elim.generators().iter().map(|g| g.restrict(&[n, n + 1]).expect("eliminated"))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use crate::polar::{polar_ideal, Stratum};

    fn uv(s: &str) -> Polynomial {
        parse_polynomial(s, &VariableSet::target_plane()).unwrap()
    }

    fn xy(s: &str) -> Polynomial {
        parse_polynomial(s, &VariableSet::new(["x", "y"]).unwrap()).unwrap()
    }

    #[test]
    fn d_infinity_k2_image() {
        let e = IdealEngine::default();
        let f = xy("x^2*y");
        let ell = LinearForm::from_integers(&[1, 1]).unwrap();
        let polar = polar_ideal(&e, &f, &ell, &Stratum::ambient(2)).unwrap();
        let germ = image_plane_curve(&e, &polar, &ell, &f).unwrap();
        assert_eq!(germ.equation(), &uv("4*u^3 - 27*v"));
        assert_eq!(germ.ord_u0(), AxisOrder::Finite(3));
        assert_eq!(germ.ord_0v(), AxisOrder::Finite(1));
        assert_eq!(morse_number(Some(&germ)).unwrap(), 2);
    }

    #[test]
    fn contracted_branch_is_a_genericity_failure() {
        // x + y vanishes with f on the polar line x = -y
        let e = IdealEngine::default();
        let f = xy("x^3 + y^3");
        let ell = LinearForm::from_integers(&[1, 1]).unwrap();
        let polar = polar_ideal(&e, &f, &ell, &Stratum::ambient(2)).unwrap();
        assert!(matches!(image_plane_curve(&e, &polar, &ell, &f), Err(Error::Genericity(_))));
        let ell = LinearForm::from_integers(&[1, 2]).unwrap();
        let polar = polar_ideal(&e, &f, &ell, &Stratum::ambient(2)).unwrap();
        let germ = image_plane_curve(&e, &polar, &ell, &f).unwrap();
        assert_eq!(morse_number(Some(&germ)).unwrap(), 4);
    }

    #[test]
    fn morse_number_edge_cases() {
        assert_eq!(morse_number(None).unwrap(), 0);
        let germ = PlaneCurveGerm::new(&uv("u*v + v^2")).unwrap();
        assert!(matches!(morse_number(Some(&germ)), Err(Error::Genericity(_))));
        let steep = PlaneCurveGerm::new(&uv("u - v^2")).unwrap();
        assert!(matches!(morse_number(Some(&steep)), Err(Error::Genericity(_))));
    }

    #[test]
    fn newton_polygons() {
        let g = PlaneCurveGerm::new(&uv("27*v - 4*u^3")).unwrap();
        let np = newton_polygon(&g);
        assert_eq!(np.vertices, vec![(3, 0), (0, 1)]);
        let g = PlaneCurveGerm::new(&uv("v^2 + u*v + u^3")).unwrap();
        assert_eq!(newton_polygon(&g).vertices, vec![(3, 0), (1, 1), (0, 2)]);
        let g = PlaneCurveGerm::new(&uv("v - u")).unwrap();
        let np = newton_polygon(&g);
        assert_eq!(np.vertices, vec![(1, 0), (0, 1)]);
        assert_eq!(np.edges[0].direction, (1, 1));
    }

    #[test]
    fn interior_points_do_not_break_the_hull() {
        // (2,1) lies above the segment (4,0)-(0,2); (1,1) sits on it
        let g = PlaneCurveGerm::new(&uv("u^4 + u^2*v + u*v + v^2 + u^5*v^3")).unwrap();
        let np = newton_polygon(&g);
        assert_eq!(np.vertices, vec![(4, 0), (1, 1), (0, 2)]);
    }

    #[test]
    fn branch_tables() {
        let g = PlaneCurveGerm::new(&uv("27*v - 4*u^3")).unwrap();
        assert_eq!(branch_table(&g).unwrap(), vec![BranchDatum { p: 1, q: 3, count: 1, m_delta_total: 2 }]);
        let g = PlaneCurveGerm::new(&uv("v - u")).unwrap();
        assert_eq!(branch_table(&g).unwrap(), vec![BranchDatum { p: 1, q: 1, count: 1, m_delta_total: 0 }]);
        // two cusps-like edges: (v - u^2)(v^2 - u^7)
        let g = PlaneCurveGerm::new(&uv("(v - u^2)*(v^2 - u^7)")).unwrap();
        let t = branch_table(&g).unwrap();
        assert_eq!(t.iter().map(|r| r.m_delta_total).sum::<u32>(), morse_number(Some(&g)).unwrap());
        assert_eq!(t.len(), 2);
    }
}

//! Numeric Morsification: count the nondegenerate critical points of
//! `f − λℓ` on a stratum near the origin for a decreasing schedule of `λ`,
//! plus Milnor numbers of isolated singularities.

mod linalg;
mod roots;
mod solve;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

pub use roots::polynomial_roots;
pub use solve::{solve_bivariate, solve_zero_dimensional};

use crate::algebra::{rat_frac, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::ideal::{quotient_basis_of, Ideal, IdealEngine};
use crate::polar::{jacobian_minors, sing_f_ideal, LinearForm, Stratum};

/// Most ambient variables the oracle handles.
pub const MAX_ORACLE_VARS: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    /// Strictly decreasing positive values of λ.
    pub lambda_schedule: Vec<Rational>,
    pub ball_radius: f64,
    pub cluster_tol: f64,
    pub hessian_tol: f64,
    pub newton_iters: usize,
    pub root_finder_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            lambda_schedule: vec![rat_frac(1, 100), rat_frac(1, 1000), rat_frac(1, 10000)],
            ball_radius: 0.5,
            cluster_tol: 1e-6,
            hessian_tol: 1e-8,
            newton_iters: 50,
            root_finder_tol: 1e-12,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lambda_schedule.len() < 2 {
            return Err(Error::Input("lambda schedule needs at least two values".into()));
        }
        if self.lambda_schedule.iter().any(|l| !l.is_positive()) {
            return Err(Error::Input("lambda values must be positive".into()));
        }
        if self.lambda_schedule.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Input("lambda schedule must be strictly decreasing".into()));
        }
        for (name, v) in [
            ("ball_radius", self.ball_radius),
            ("cluster_tol", self.cluster_tol),
            ("hessian_tol", self.hessian_tol),
            ("root_finder_tol", self.root_finder_tol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Input(format!("{name} must be a positive real")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoint {
    pub coordinates: Vec<Complex64>,
    pub lambda: Rational,
    pub hessian_det: Complex64,
    pub converged: bool,
    /// Max modulus of the critical system at `coordinates`.
    pub residual: f64,
}

/// Why solutions were thrown away.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Discards {
    pub outside_ball: usize,
    pub degenerate_hessian: usize,
    pub on_sing_f: usize,
    pub on_boundary: usize,
    pub non_converged: usize,
}

impl Discards {
    fn add(&mut self, other: &Discards) {
        self.outside_ball += other.outside_ball;
        self.degenerate_hessian += other.degenerate_hessian;
        self.on_sing_f += other.on_sing_f;
        self.on_boundary += other.on_boundary;
        self.non_converged += other.non_converged;
    }
}

/// Outcome of a single λ.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaCount {
    pub lambda: Rational,
    pub accepted: Vec<CriticalPoint>,
    pub discarded: Discards,
}

impl LambdaCount {
    pub fn count(&self) -> usize {
        self.accepted.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableCount {
    Stable(u32),
    Unstable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub stratum: String,
    pub per_lambda: Vec<LambdaCount>,
    pub stable_count: StableCount,
    /// Totals over the whole schedule.
    pub discarded: Discards,
}

impl OracleReport {
    pub fn counts(&self) -> Vec<usize> {
        self.per_lambda.iter().map(LambdaCount::count).collect()
    }
}

fn check_supported(f: &Polynomial, stratum: &Stratum) -> Result<()> {
    let n = f.nvars();
    if n > MAX_ORACLE_VARS {
        return Err(Error::NotSupported(format!("numeric oracle handles at most {MAX_ORACLE_VARS} variables, got {n}")));
    }
    if stratum.codim() > 1 {
        return Err(Error::NotSupported(format!(
            "numeric oracle handles the ambient stratum and hypersurfaces, `{}` has codimension {}",
            stratum.label(),
            stratum.codim()
        )));
    }
    Ok(())
}

/// `f − λℓ`.
pub fn morsification(f: &Polynomial, ell: &LinearForm, lambda: &Rational) -> Polynomial {
    f - &ell.to_polynomial().scale(lambda)
}

/// Equations of the critical points of `f − λℓ` on the stratum: the
/// gradient on the ambient stratum, otherwise `g` together with the
/// 2×2 minors of `Jac(g, f − λℓ)`.
pub fn critical_system(f: &Polynomial, ell: &LinearForm, lambda: &Rational, stratum: &Stratum) -> Result<Vec<Polynomial>> {
    check_supported(f, stratum)?;
    let fl = morsification(f, ell, lambda);
    if stratum.is_ambient() {
        return Ok((0..f.nvars()).map(|i| fl.derivative(i)).collect());
    }
    let g = stratum.closure().generators()[0].clone();
    let mut out = vec![g.clone()];
    out.extend(jacobian_minors(&[g, fl]));
    Ok(out)
}

/// Square Newton system for a critical point. On a hypersurface `g = 0` it
/// is the Lagrange system in `(x, μ)`: `∇f_λ − μ∇g = 0, g = 0`.
fn newton_system(fl: &Polynomial, stratum: &Stratum) -> Vec<Polynomial> {
    let n = fl.nvars();
    if stratum.is_ambient() {
        return (0..n).map(|i| fl.derivative(i)).collect();
    }
    let g = stratum.closure().generators()[0].extend(1);
    let f1 = fl.extend(1);
    let mu = Polynomial::var(n + 1, n);
    let mut out: Vec<Polynomial> = (0..n).map(|i| &f1.derivative(i) - &(&mu * &g.derivative(i))).collect();
    out.push(g);
    out
}

/// Least-squares Lagrange multiplier: `∇f ≈ μ∇g`.
fn lagrange_multiplier(fl: &Polynomial, g: &Polynomial, point: &[Complex64]) -> Complex64 {
    let n = fl.nvars();
    let mut num = Complex64::zero();
    let mut den = 0.0;
    for i in 0..n {
        let gi = g.derivative(i).evaluate_complex(point);
        let fi = fl.derivative(i).evaluate_complex(point);
        num += gi.conj() * fi;
        den += gi.norm_sqr();
    }
    if den == 0.0 {
        Complex64::zero()
    } else {
        num / den
    }
}

/// Nondegeneracy of the critical point `point` of `f_λ` on the stratum.
/// Ambient: the Hessian determinant. Hypersurface `g = 0`: the bordered
/// determinant of `(∇g, Hess(f_λ) − μ Hess(g))`.
pub fn hessian_nondegenerate(f_lambda: &Polynomial, point: &[Complex64], stratum: &Stratum, tol: f64) -> (bool, Complex64) {
    let n = f_lambda.nvars();
    let second = |p: &Polynomial, i: usize, j: usize| p.derivative(i).derivative(j).evaluate_complex(point);
    let det = if stratum.is_ambient() {
        let h: Vec<Vec<Complex64>> = (0..n).map(|i| (0..n).map(|j| second(f_lambda, i, j)).collect()).collect();
        linalg::determinant(&h)
    } else {
        let g = &stratum.closure().generators()[0];
        let mu = lagrange_multiplier(f_lambda, g, point);
        let mut b = vec![vec![Complex64::zero(); n + 1]; n + 1];
        for i in 0..n {
            let gi = g.derivative(i).evaluate_complex(point);
            b[0][i + 1] = gi;
            b[i + 1][0] = gi;
            for j in 0..n {
                b[i + 1][j + 1] = second(f_lambda, i, j) - mu * second(g, i, j);
            }
        }
        linalg::determinant(&b)
    };
    (det.norm() > tol, det)
}

fn max_abs(gens: &[Polynomial], point: &[Complex64]) -> f64 {
    gens.iter().map(|p| p.evaluate_complex(point).norm()).fold(0.0, f64::max)
}

/// Solve, polish and classify the critical points of `f − λℓ` on one
/// stratum for a single λ.
pub fn morse_points_at(
    engine: &IdealEngine,
    f: &Polynomial,
    ell: &LinearForm,
    stratum: &Stratum,
    lambda: &Rational,
    config: &OracleConfig,
) -> Result<LambdaCount> {
    let n = f.nvars();
    let system = critical_system(f, ell, lambda, stratum)?;
    let fl = morsification(f, ell, lambda);
    let newton = newton_system(&fl, stratum);
    let newton_jac = solve::jacobian_of(&newton, newton.len());
    // on V the closure equations vanish anyway; only the minors matter
    let sing_gens: Vec<Polynomial> = {
        let all = sing_f_ideal(f, stratum);
        all.generators()[stratum.codim()..].to_vec()
    };
    let boundary = stratum.boundary().generators().to_vec();

    let mut polished: Vec<(Vec<Complex64>, f64)> = Vec::new();
    for start in solve_zero_dimensional(engine, &system, n)? {
        let mut x0 = start.clone();
        if !stratum.is_ambient() {
            x0.push(lagrange_multiplier(&fl, &stratum.closure().generators()[0], &start));
        }
        let (mut x, _) = solve::newton_polish(&newton, &newton_jac, &x0, config.newton_iters, config.root_finder_tol);
        x.truncate(n);
        let (res, start_res) = (solve::residual(&system, &x), solve::residual(&system, &start));
        polished.push(if res <= start_res { (x, res) } else { (start, start_res) });
    }

    let mut discarded = Discards::default();
    let mut accepted = Vec::new();
    let mut seen: Vec<Vec<Complex64>> = Vec::new();
    for (x, res) in polished {
        if seen.iter().any(|s| s.iter().zip(&x).all(|(a, b)| (a - b).norm() < config.cluster_tol)) {
            continue;
        }
        seen.push(x.clone());
        if res >= config.root_finder_tol {
            discarded.non_converged += 1;
            continue;
        }
        if x.iter().any(|z| z.norm() > config.ball_radius) {
            discarded.outside_ball += 1;
            continue;
        }
        if max_abs(&sing_gens, &x) < config.cluster_tol {
            discarded.on_sing_f += 1;
            continue;
        }
        if max_abs(&boundary, &x) < config.cluster_tol {
            discarded.on_boundary += 1;
            continue;
        }
        let (ok, det) = hessian_nondegenerate(&fl, &x, stratum, config.hessian_tol);
        if !ok {
            discarded.degenerate_hessian += 1;
            continue;
        }
        accepted.push(CriticalPoint { coordinates: x, lambda: lambda.clone(), hessian_det: det, converged: true, residual: res });
    }
    Ok(LambdaCount { lambda: lambda.clone(), accepted, discarded })
}

/// Runs the whole λ schedule on one stratum. The count is stable when the
/// two smallest λ agree.
pub fn count_on_stratum(
    engine: &IdealEngine,
    f: &Polynomial,
    ell: &LinearForm,
    stratum: &Stratum,
    config: &OracleConfig,
) -> Result<OracleReport> {
    config.validate()?;
    let per_lambda = config
        .lambda_schedule
        .iter()
        .map(|l| morse_points_at(engine, f, ell, stratum, l, config))
        .collect::<Result<Vec<_>>>()?;
    let mut discarded = Discards::default();
    for pl in &per_lambda {
        discarded.add(&pl.discarded);
    }
    let k = per_lambda.len();
    let (a, b) = (per_lambda[k - 2].count(), per_lambda[k - 1].count());
    let stable_count = if a == b { StableCount::Stable(b as u32) } else { StableCount::Unstable };
    Ok(OracleReport { stratum: stratum.label().to_string(), per_lambda, stable_count, discarded })
}

/// One report per stratum, in the given order.
pub fn count_converging_morse(
    engine: &IdealEngine,
    f: &Polynomial,
    ell: &LinearForm,
    strata: &[Stratum],
    config: &OracleConfig,
) -> Result<Vec<OracleReport>> {
    strata.iter().map(|s| count_on_stratum(engine, f, ell, s, config)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MilnorNumber {
    Finite(u32),
    NotIsolated,
}

/// Dimension of the local Jacobian algebra at the origin. The component of
/// the Jacobian ideal `J` at the origin is `J : (J : m^∞)` when the origin
/// is an isolated zero of `J`.
pub fn milnor_number(engine: &IdealEngine, f: &Polynomial) -> Result<MilnorNumber> {
    let n = f.nvars();
    let jac = Ideal::new(n, (0..n).map(|i| f.derivative(i)));
    if !jac.vanishes_at_origin() {
        return Ok(MilnorNumber::Finite(0));
    }
    if jac.is_zero() {
        return Ok(MilnorNumber::NotIsolated);
    }
    let away = engine.saturation(&jac, &Ideal::origin(n))?;
    if away.vanishes_at_origin() && !engine.basis(&away)?.is_unit() {
        return Ok(MilnorNumber::NotIsolated);
    }
    let mut local: Option<Ideal> = None;
    for s in away.generators() {
        let q = engine.ideal_quotient(&jac, s)?;
        local = Some(match local {
            None => q,
            Some(acc) => engine.intersection(&acc, &q)?,
        });
    }
    let local = local.unwrap_or_else(|| jac.clone());
    match quotient_basis_of(&engine.basis(&local)?) {
        Some(b) => Ok(MilnorNumber::Finite(b.len() as u32)),
        None => Ok(MilnorNumber::NotIsolated),
    }
}

/// `Π(a_i − 1)` for the Brieskorn–Pham germ `Σ x_i^{a_i}`.
pub fn brieskorn_pham_milnor(exponents: &[u32]) -> u32 {
    exponents.iter().map(|a| a.saturating_sub(1)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, VariableSet};

    fn vars(n: usize) -> VariableSet {
        VariableSet::new(["x", "y", "z"].into_iter().take(n)).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &vars(2)).unwrap()
    }

    fn lf(c: &[i64]) -> LinearForm {
        LinearForm::from_integers(c).unwrap()
    }

    fn stable(e: &IdealEngine, f: &str, ell: &[i64]) -> StableCount {
        count_on_stratum(e, &p(f), &lf(ell), &Stratum::ambient(2), &OracleConfig::default()).unwrap().stable_count
    }

    #[test]
    fn critical_systems() {
        let l = rat_frac(1, 10000);
        let s = critical_system(&p("x^2*y"), &lf(&[1, 1]), &l, &Stratum::ambient(2)).unwrap();
        assert_eq!(s, vec![p("2*x*y - 1/10000"), p("x^2 - 1/10000")]);
        let s = critical_system(&p("x^3"), &lf(&[1, 2]), &l, &Stratum::ambient(2)).unwrap();
        assert_eq!(s, vec![p("3*x^2 - 1/10000"), p("-2/10000")]);
    }

    #[test]
    fn unsupported_shapes() {
        let v4 = VariableSet::new(["a", "b", "c", "d"]).unwrap();
        let f = parse_polynomial("a*b + c*d", &v4).unwrap();
        let err = critical_system(&f, &lf(&[1, 1, 1, 1]), &rat_frac(1, 100), &Stratum::ambient(4));
        assert!(matches!(err, Err(Error::NotSupported(_))));
        let v3 = vars(3);
        let curve = Stratum::parse("axis", &["x".into(), "y".into()], &[], &v3).unwrap();
        let f = parse_polynomial("z^2", &v3).unwrap();
        assert!(matches!(critical_system(&f, &lf(&[1, 1, 1]), &rat_frac(1, 100), &curve), Err(Error::NotSupported(_))));
    }

    #[test]
    fn hessian_examples() {
        let l = 1e-4;
        let fl = p("x^2 + y^2 - 1/10000*x - 1/10000*y");
        let pt = [Complex64::new(l / 2.0, 0.0), Complex64::new(l / 2.0, 0.0)];
        let (ok, det) = hessian_nondegenerate(&fl, &pt, &Stratum::ambient(2), 1e-8);
        assert!(ok && (det - Complex64::new(4.0, 0.0)).norm() < 1e-12);

        let v1 = VariableSet::new(["x"]).unwrap();
        let fl = parse_polynomial("x^3 - 1/10000*x", &v1).unwrap();
        let x = (l / 3.0).sqrt();
        let (ok, det) = hessian_nondegenerate(&fl, &[Complex64::new(x, 0.0)], &Stratum::ambient(1), 1e-8);
        assert!(ok && (det.re - 6.0 * x).abs() < 1e-12);

        let fl = p("x^2*y - 1/10000*x - 1/10000*y");
        for s in [1.0, -1.0] {
            let pt = [Complex64::new(s * 1e-2, 0.0), Complex64::new(s * 0.5e-2, 0.0)];
            let (ok, det) = hessian_nondegenerate(&fl, &pt, &Stratum::ambient(2), 1e-8);
            assert!(ok && (det.re + 4.0 * l).abs() < 1e-14);
        }
    }

    #[test]
    fn d_infinity_counts() {
        let e = IdealEngine::default();
        for k in 2..=4 {
            assert_eq!(stable(&e, &format!("x^{k}*y"), &[1, 1]), StableCount::Stable(k));
        }
    }

    #[test]
    fn j_infinity_and_cubic() {
        let e = IdealEngine::default();
        assert_eq!(stable(&e, "x^2*y^2 + x^3", &[1, 1]), StableCount::Stable(5));
        let r = count_on_stratum(&e, &p("x^3"), &lf(&[1, 2]), &Stratum::ambient(2), &OracleConfig::default()).unwrap();
        assert_eq!(r.counts(), vec![0, 0, 0]);
        assert_eq!(r.stable_count, StableCount::Stable(0));
    }

    #[test]
    fn accepted_points_meet_tolerances() {
        let e = IdealEngine::default();
        let cfg = OracleConfig::default();
        let r = count_on_stratum(&e, &p("x^4*y"), &lf(&[1, 1]), &Stratum::ambient(2), &cfg).unwrap();
        for pl in &r.per_lambda {
            for cp in &pl.accepted {
                assert!(cp.residual < cfg.root_finder_tol);
                assert!(cp.hessian_det.norm() > cfg.hessian_tol);
                assert!(cp.coordinates.iter().all(|z| z.norm() <= cfg.ball_radius));
            }
        }
    }

    #[test]
    fn hypersurface_stratum() {
        let e = IdealEngine::default();
        let v = vars(2);
        let parabola = Stratum::parse("parabola", &["y - x^2".into()], &[], &v).unwrap();
        let r = count_on_stratum(&e, &p("y"), &lf(&[3, -2]), &parabola, &OracleConfig::default()).unwrap();
        assert_eq!(r.stable_count, StableCount::Stable(1));
    }

    #[test]
    fn milnor_numbers() {
        let e = IdealEngine::default();
        assert_eq!(milnor_number(&e, &p("x^3 + y^3")).unwrap(), MilnorNumber::Finite(4));
        assert_eq!(milnor_number(&e, &p("x^2 + y^2")).unwrap(), MilnorNumber::Finite(1));
        assert_eq!(milnor_number(&e, &p("x^2*y")).unwrap(), MilnorNumber::NotIsolated);
        assert_eq!(milnor_number(&e, &p("x + y^2")).unwrap(), MilnorNumber::Finite(0));
        // global Jacobian zeros away from the origin are ignored
        assert_eq!(milnor_number(&e, &p("x^2 + y^3 - y^2")).unwrap(), MilnorNumber::Finite(1));
        assert_eq!(brieskorn_pham_milnor(&[3, 4]), 6);
    }
}

//! Strategies and property checks shared by the property tests and the
//! acceptance gate.

#![allow(dead_code)]

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

use polar_morse::algebra::{parse_polynomial, Axis, AxisOrder, Monomial, MonomialOrder, Polynomial, Rational, VariableSet};
use polar_morse::ideal::{buchberger, GbLimits, GroebnerBasis, Ideal, IdealEngine};
use polar_morse::reduction::{branch_table, morse_number, newton_polygon_of, PlaneCurveGerm};

pub const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn vars(n: usize) -> VariableSet {
    VariableSet::new(VAR_NAMES.into_iter().take(n)).unwrap()
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Sparse polynomial: up to `max_terms` terms of total degree at most
/// `max_deg`, small rational coefficients.
pub fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..=max_deg, nvars), -6i64..=6, prop_oneof![Just(1i64), Just(1), Just(2), Just(3)]);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms
                .into_iter()
                .filter(|(e, _, _)| e.iter().sum::<u32>() <= max_deg)
                .map(|(e, n, d)| (Monomial::new(e), rational(n, d))),
        )
    })
}

/// Integer coefficients in `[-10, 10]`.
pub fn int_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..=max_deg, nvars), -10i64..=10);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
                .map(|(e, c)| (Monomial::new(e), rational(c, 1))),
        )
    })
}

/// Runs `cases` deterministic cases; `Err` carries the minimal failing input.
pub fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(config.rng_algorithm));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    run_cases(cases, (poly(4, 6, 6), poly(4, 6, 6), poly(4, 6, 6)), |(p, q, r)| {
        let zero = Polynomial::zero(4);
        let one = Polynomial::one(4);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &(-&p), zero.clone());
        prop_assert_eq!(&p + &zero, p.clone());
        prop_assert_eq!(&p * &one, p.clone());
        prop_assert_eq!(&p * &zero, zero);
        Ok(())
    })
}

pub fn leibniz(cases: u32) -> Result<(), String> {
    run_cases(cases, (poly(3, 6, 6), poly(3, 6, 6)), |(p, q)| {
        for i in 0..3 {
            let lhs = (&p * &q).derivative(i);
            let rhs = &(&p.derivative(i) * &q) + &(&p * &q.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }
        Ok(())
    })
}

pub fn parse_print(cases: u32) -> Result<(), String> {
    let v = vars(3);
    run_cases(cases, poly(3, 6, 8), move |p| {
        let text = p.fmt_with(&v);
        let back = parse_polynomial(&text, &v).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, p);
        Ok(())
    })
}

/// Sum of |c|·|z|^e over the terms: a scale for relative errors.
fn abs_eval(p: &Polynomial, z: &[Complex64]) -> f64 {
    p.terms()
        .map(|(m, c)| {
            let mag: f64 = m.exps().iter().zip(z).map(|(&e, w)| w.norm().powi(e as i32)).product();
            c.abs().to_f64().unwrap() * mag
        })
        .sum()
}

pub fn complex_eval_multiplicative(cases: u32) -> Result<(), String> {
    let point = prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 2);
    run_cases(cases, (int_poly(2, 4, 6), int_poly(2, 4, 6), point), |(p, q, pt)| {
        let z: Vec<Complex64> = pt.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
        let lhs = (&p * &q).evaluate_complex(&z);
        let rhs = p.evaluate_complex(&z) * q.evaluate_complex(&z);
        let scale = abs_eval(&p, &z) * abs_eval(&q, &z);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * scale.max(f64::MIN_POSITIVE), "{lhs} vs {rhs}");
        Ok(())
    })
}

const DENSE: usize = 13;

fn dense(p: &Polynomial) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); DENSE * DENSE * DENSE];
    for (m, c) in p.terms() {
        let e = m.exps();
        out[(e[0] as usize * DENSE + e[1] as usize) * DENSE + e[2] as usize] = c.clone();
    }
    out
}

/// Schoolbook product on dense exponent arrays, independent of the sparse
/// representation.
fn dense_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); DENSE * DENSE * DENSE];
    let idx = |i: usize, j: usize, k: usize| (i * DENSE + j) * DENSE + k;
    for i in 0..7 {
        for j in 0..7 {
            for k in 0..7 {
                let x = &a[idx(i, j, k)];
                if x.is_zero() {
                    continue;
                }
                for l in 0..7 {
                    for m in 0..7 {
                        for n in 0..7 {
                            let y = &b[idx(l, m, n)];
                            if !y.is_zero() {
                                out[idx(i + l, j + m, k + n)] += x * y;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn dense_multiplication(cases: u32) -> Result<(), String> {
    run_cases(cases, (poly(3, 6, 6), poly(3, 6, 6)), |(p, q)| {
        prop_assert_eq!(dense(&(&p * &q)), dense_product(&dense(&p), &dense(&q)));
        Ok(())
    })
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (mf, cf) = f.leading_term(order).unwrap();
    let (mg, cg) = g.leading_term(order).unwrap();
    let l = mf.lcm(mg);
    &f.mul_monomial(&l.div(mf), &cf.recip()) - &g.mul_monomial(&l.div(mg), &cg.recip())
}

/// Reducedness, S-pair closure, membership of the inputs, idempotence and
/// independence from generator order.
pub fn check_groebner(gens: &[Polynomial], nvars: usize, order: &MonomialOrder) -> Result<(), TestCaseError> {
    let limits = GbLimits::default();
    let gb = match buchberger(nvars, gens, order, &limits) {
        Ok(gb) => gb,
        Err(e) => return Err(TestCaseError::fail(format!("buchberger failed: {e}"))),
    };
    for g in gens {
        prop_assert!(gb.normal_form(g).is_zero(), "generator not in its own ideal");
    }
    let basis = gb.basis();
    for (i, a) in basis.iter().enumerate() {
        let (_, lc) = a.leading_term(order).unwrap();
        prop_assert!(lc.is_one(), "basis element not monic");
        for (j, b) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let (lmb, _) = b.leading_term(order).unwrap();
            prop_assert!(a.terms().all(|(m, _)| !lmb.divides(m)), "basis not reduced");
            if i < j {
                prop_assert!(gb.normal_form(&s_polynomial(a, b, order)).is_zero(), "S-polynomial does not reduce to 0");
            }
        }
    }
    let again = buchberger(nvars, basis, order, &limits).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(again.basis(), basis);
    let reversed: Vec<Polynomial> = gens.iter().rev().cloned().collect();
    let other = buchberger(nvars, &reversed, order, &limits).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(other.basis(), basis);
    Ok(())
}

fn small_ideal() -> impl Strategy<Value = (usize, Vec<Polynomial>)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(int_poly(n, 4, 3), 1..=3)))
}

/// Confluence and idempotence on random ideals in at most three variables.
pub fn groebner_confluence(cases: u32) -> Result<(), String> {
    run_cases(cases, small_ideal(), |(n, gens)| {
        check_groebner(&gens, n, &MonomialOrder::GrevLex)?;
        if n <= 2 {
            check_groebner(&gens, n, &MonomialOrder::Lex)?;
        }
        Ok(())
    })
}

/// Random members of the ideal reduce to zero.
pub fn membership_reduces(cases: u32) -> Result<(), String> {
    run_cases(cases, (small_ideal(), prop::collection::vec(int_poly(3, 2, 3), 3)), |((n, gens), mult)| {
        let gb: GroebnerBasis =
            buchberger(n, &gens, &MonomialOrder::GrevLex, &GbLimits::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let keep: Vec<usize> = (0..n).collect();
        let member = gens.iter().zip(&mult).fold(Polynomial::zero(n), |acc, (g, m)| {
            let m = m.restrict(&keep).unwrap_or_else(|| Polynomial::one(n));
            &acc + &(g * &m)
        });
        prop_assert!(gb.normal_form(&member).is_zero());
        Ok(())
    })
}

pub fn saturation_stability(cases: u32) -> Result<(), String> {
    let engine = IdealEngine::default();
    let strategy = (prop::collection::vec(int_poly(2, 3, 3), 1..=2), int_poly(2, 1, 2));
    run_cases(cases, strategy, move |(gens, h)| {
        prop_assume!(!h.is_zero());
        let ideal = Ideal::new(2, gens.clone());
        let by = Ideal::new(2, [h.clone(), Polynomial::var(2, 0)]);
        let s = engine.saturation(&ideal, &by).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let ss = engine.saturation(&s, &by).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(engine.ideals_equal(&s, &ss).unwrap());
        let gb = engine.basis(&s).unwrap();
        prop_assert!(gens.iter().all(|g| gb.contains(g)), "I is not contained in its saturation");
        let single = engine.saturate_by(&ideal, &h).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let again = engine.saturate_by(&single, &h).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(engine.ideals_equal(&single, &again).unwrap());
        Ok(())
    })
}

/// Random plane curve germs through the origin with finite axis orders.
fn plane_germ() -> impl Strategy<Value = Polynomial> {
    (1u32..=8, 1u32..=8, -5i64..=5, -5i64..=5, int_poly(2, 8, 4)).prop_map(|(a, b, ca, cb, extra)| {
        let ca = if ca == 0 { 1 } else { ca };
        let cb = if cb == 0 { -1 } else { cb };
        // drop extra terms on the axes below the chosen orders, and the constant
        let extra = Polynomial::from_terms(
            2,
            extra
                .terms()
                .filter(|(m, _)| {
                    let (i, j) = (m.exps()[0], m.exps()[1]);
                    !(j == 0 && i <= a) && !(i == 0 && j <= b)
                })
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        &Polynomial::from_int_terms(2, &[(&[a, 0], ca), (&[0, b], cb)]) + &extra
    })
}

pub fn newton_sum_identity(cases: u32) -> Result<(), String> {
    run_cases(cases, plane_germ(), |g| {
        prop_assume!(g.coefficient(&Monomial::new(vec![0, 0])).is_zero());
        let (AxisOrder::Finite(a), AxisOrder::Finite(b)) = (g.axis_order(Axis::SetVZero), g.axis_order(Axis::SetUZero)) else {
            return Err(TestCaseError::reject("infinite axis order"));
        };
        let poly = newton_polygon_of(&g);
        let signed: i64 = poly
            .edges
            .iter()
            .map(|e| e.lattice_length as i64 * (e.direction.0 as i64 - e.direction.1 as i64))
            .sum();
        prop_assert_eq!(signed, a as i64 - b as i64);
        let germ = PlaneCurveGerm::new(&g).map_err(|e| TestCaseError::fail(e.to_string()))?;
        if let Ok(table) = branch_table(&germ) {
            let m = morse_number(Some(&germ)).unwrap();
            prop_assert_eq!(table.iter().map(|r| r.m_delta_total).sum::<u32>(), m);
        }
        Ok(())
    })
}

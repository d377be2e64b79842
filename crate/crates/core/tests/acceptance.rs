//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! ```bash
//! cargo test -p polar-morse --test acceptance
//! ```

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use polar_morse::algebra::{parse_polynomial, AxisOrder, Polynomial};
use polar_morse::ideal::{Ideal, IdealEngine};
use polar_morse::oracle::{
    brieskorn_pham_milnor, count_converging_morse, milnor_number, MilnorNumber, OracleConfig, StableCount,
};
use polar_morse::pipeline::{run_pipeline, JobConfig};
use polar_morse::polar::{polar_ideal, LinearForm, PolarStatus, Stratum};
use polar_morse::reduction::{branch_table, image_plane_curve, morse_number};

type Check = Result<(), String>;

/// Per-criterion wall-clock budget.
const BUDGET: Duration = Duration::from_secs(30);

fn p(s: &str) -> Polynomial {
    parse_polynomial(s, &common::vars(2)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    a.primitive_integer() == b.primitive_integer() || a.primitive_integer() == (-b).primitive_integer()
}

/// Symbolic m on the ambient plane for an explicit linear form.
fn exact_m(engine: &IdealEngine, f: &Polynomial, ell: &LinearForm) -> Result<u32, String> {
    let polar = polar_ideal(engine, f, ell, &Stratum::ambient(2)).map_err(err)?;
    match polar.status {
        PolarStatus::Empty => Ok(0),
        PolarStatus::Curve => {
            let germ = image_plane_curve(engine, &polar, ell, f).map_err(err)?;
            morse_number(Some(&germ)).map_err(err)
        }
        PolarStatus::Degenerate => Err("degenerate polar locus".into()),
    }
}

fn d_infinity() -> Check {
    let engine = IdealEngine::default();
    let ell = LinearForm::from_integers(&[1, 1]).map_err(err)?;
    for k in 2..=5u32 {
        let f = p(&format!("x^{k}*y"));
        let r = run_pipeline(&JobConfig::new(&["x", "y"], &f.fmt_with(&common::vars(2))).with_linear_form("x + y"))
            .map_err(err)?;
        let exact = &r.strata[0].exact;
        let polar = exact.polar.as_ref().ok_or("no polar curve")?;
        let line = Ideal::new(2, [p(&format!("{k}*y - x"))]);
        ensure(engine.ideals_equal(&polar.ideal, &line).map_err(err)?, || format!("k = {k}: polar ideal is not ({k}y - x)"))?;
        let germ = exact.germ.as_ref().ok_or("no image germ")?;
        ensure(germ.ord_u0() == AxisOrder::Finite(k + 1), || format!("k = {k}: ord_u0 = {}", germ.ord_u0()))?;
        ensure(germ.ord_0v() == AxisOrder::Finite(1), || format!("k = {k}: ord_0v = {}", germ.ord_0v()))?;
        ensure(exact.m == Some(k), || format!("k = {k}: m = {:?}", exact.m))?;
        ensure(exact_m(&engine, &f, &ell)? == k, || format!("k = {k}: direct computation disagrees"))?;
    }
    Ok(())
}

fn j_infinity() -> Check {
    let r = run_pipeline(&JobConfig::new(&["x", "y"], "x^2*y^2 + x^3").with_linear_form("x + y")).map_err(err)?;
    let exact = &r.strata[0].exact;
    let polar = exact.polar.as_ref().ok_or("no polar curve")?;
    let gb = IdealEngine::default().basis(&polar.ideal).map_err(err)?;
    ensure(gb.basis().len() == 1 && proportional(&gb.basis()[0], &p("2*x*y - 2*y^2 - 3*x")), || {
        format!("polar generators {:?}", gb.basis())
    })?;
    ensure(exact.m == Some(5), || format!("m = {:?}", exact.m))?;
    let germ = exact.germ.as_ref().ok_or("no image germ")?;
    let table = branch_table(germ).map_err(err)?;
    let sum: u32 = table.iter().map(|b| b.m_delta_total).sum();
    ensure(sum == 5, || format!("branch table sums to {sum}"))
}

const CUBIC_B: [i64; 5] = [1, 2, -1, 5, -7];

fn cubic() -> Check {
    let engine = IdealEngine::default();
    let f = p("x^3");
    let config = OracleConfig::default();
    for b in CUBIC_B {
        let ell = LinearForm::from_integers(&[1, b]).map_err(err)?;
        let polar = polar_ideal(&engine, &f, &ell, &Stratum::ambient(2)).map_err(err)?;
        ensure(polar.status == PolarStatus::Empty, || format!("b = {b}: polar is {}", polar.status.as_str()))?;
        ensure(exact_m(&engine, &f, &ell)? == 0, || format!("b = {b}: m ≠ 0"))?;
        let report = &count_converging_morse(&engine, &f, &ell, &[Stratum::ambient(2)], &config).map_err(err)?[0];
        ensure(report.counts().iter().all(|&c| c == 0), || format!("b = {b}: oracle counts {:?}", report.counts()))?;
    }
    Ok(())
}

const ISOLATED: [(&str, Option<[u32; 2]>); 5] = [
    ("x^2 + y^2", Some([2, 2])),
    ("x^3 + y^3", Some([3, 3])),
    ("x^4 + y^3", Some([4, 3])),
    ("x^3 + y^4", Some([3, 4])),
    ("x^2*y + y^4", None),
];

fn brieskorn() -> Check {
    let engine = IdealEngine::default();
    for (f, exps) in ISOLATED {
        let poly = p(f);
        let MilnorNumber::Finite(mu) = milnor_number(&engine, &poly).map_err(err)? else {
            return Err(format!("{f}: not isolated"));
        };
        for seed in [1u64, 2, 3] {
            let mut job = JobConfig::new(&["x", "y"], f).without_oracle();
            job.seeds = vec![seed];
            let m = run_pipeline(&job).map_err(err)?.morse_numbers()[0];
            ensure(m == Some(mu), || format!("{f}, seed {seed}: m = {m:?}, μ = {mu}"))?;
        }
        if let Some(e) = exps {
            ensure(mu == brieskorn_pham_milnor(&e), || format!("{f}: μ = {mu}, Π(a-1) = {}", brieskorn_pham_milnor(&e)))?;
            ensure(mu == (e[0] - 1) * (e[1] - 1), || format!("{f}: closed form"))?;
        }
    }
    Ok(())
}

fn oracle_agreement() -> Check {
    let engine = IdealEngine::default();
    let config = OracleConfig::default();
    let mut jobs: Vec<JobConfig> =
        (2..=5).map(|k| JobConfig::new(&["x", "y"], &format!("x^{k}*y")).with_linear_form("x + y")).collect();
    jobs.push(JobConfig::new(&["x", "y"], "x^2*y^2 + x^3").with_linear_form("x + y"));
    for b in CUBIC_B {
        jobs.push(JobConfig::new(&["x", "y"], "x^3").with_linear_form(&format!("x + {b}*y")));
    }
    for (f, _) in ISOLATED {
        for seed in [1u64, 2, 3] {
            let mut job = JobConfig::new(&["x", "y"], f);
            job.seeds = vec![seed];
            jobs.push(job);
        }
    }
    for job in jobs {
        let f = &job.f;
        let r = run_pipeline(&job.clone().without_oracle()).map_err(err)?;
        ensure(r.genericity.pass, || format!("{f}: genericity {:?}", r.genericity.reasons))?;
        let m = r.morse_numbers()[0].ok_or_else(|| format!("{f}: no Morse number"))?;
        let ell = &r.primary_run().linear_form;
        let report = &count_converging_morse(&engine, &p(f), ell, &[Stratum::ambient(2)], &config).map_err(err)?[0];
        let counts = report.counts();
        let n = counts.len();
        ensure(counts[n - 2] == counts[n - 1], || format!("{f}: smallest λ disagree {counts:?}"))?;
        ensure(report.stable_count == StableCount::Stable(m), || format!("{f}: oracle {counts:?}, m = {m}"))?;
        for pl in &report.per_lambda {
            for c in &pl.accepted {
                ensure(c.residual < 1e-12, || format!("{f}: residual {} at λ = {}", c.residual, pl.lambda))?;
                ensure(c.hessian_det.norm() > 1e-8, || format!("{f}: |det H| = {} at λ = {}", c.hessian_det.norm(), pl.lambda))?;
            }
        }
    }
    Ok(())
}

fn genericity_invariance() -> Check {
    let mut jobs: Vec<(String, u32)> = (2..=5).map(|k| (format!("x^{k}*y"), k)).collect();
    jobs.push(("x^2*y^2 + x^3".into(), 5));
    for (f, expected) in jobs {
        let mut job = JobConfig::new(&["x", "y"], &f).without_oracle();
        job.seeds = vec![1, 2, 3];
        let r = run_pipeline(&job).map_err(err)?;
        ensure(r.genericity.pass, || format!("{f}: verdict {} {:?}", r.genericity.as_str(), r.genericity.reasons))?;
        ensure(r.runs.len() == 3, || format!("{f}: {} runs", r.runs.len()))?;
        for run in &r.runs {
            let m = run.strata[0].m;
            ensure(m == Some(expected), || format!("{f}, seed {:?}: m = {m:?}", run.seed))?;
        }
        let gs: Vec<_> = r.runs.iter().map(|run| run.strata[0].germ.as_ref().map(|g| g.equation().clone())).collect();
        ensure(gs[0] != gs[1] || gs[1] != gs[2], || format!("{f}: every seed produced the same G"))?;
    }
    Ok(())
}

fn properties() -> Check {
    common::groebner_confluence(200)?;
    common::saturation_stability(80)?;
    common::newton_sum_identity(100)?;
    common::ring_axioms(500)?;
    common::leibniz(500)
}

fn determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_polar-morse"))
            .args(["selftest", "--format", "json"])
            .output()
            .map_err(err)
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), || format!("selftest exited with {:?}", a.status.code()))?;
    ensure(a.stdout == b.stdout, || "selftest output differs between runs".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("D∞ family", d_infinity),
        ("J∞", j_infinity),
        ("cubic degenerate", cubic),
        ("Brieskorn consistency", brieskorn),
        ("oracle agreement", oracle_agreement),
        ("genericity invariance", genericity_invariance),
        ("property suites", properties),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(elapsed <= BUDGET, || format!("took {elapsed:?}")));
        match outcome {
            Ok(()) => println!("criterion {} {name:<24} PASS ({} ms)", i + 1, elapsed.as_millis()),
            Err(e) => {
                failed += 1;
                println!("criterion {} {name:<24} FAIL: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}

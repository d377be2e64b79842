//! End-to-end runs: parse a job, compute polar curves, image curves and
//! Morse numbers for every seed, probe genericity across seeds, cross-check
//! with the numeric oracle and render the result.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_polynomial, AxisOrder, Polynomial, Rational, VariableSet};
use crate::error::{Error, Result};
use crate::ideal::IdealEngine;
use crate::oracle::{count_on_stratum, morse_points_at, LambdaCount, OracleConfig, OracleReport, StableCount};
use crate::polar::{differential_vanishes_on, draw_generic_linear, polar_ideal, LinearForm, PolarCurve, PolarStatus, Stratum};
use crate::reduction::{branch_table, image_plane_curve, morse_number, BranchDatum, PlaneCurveGerm};

/// How often a seed whose linear form is visibly special gets redrawn.
pub const MAX_RESAMPLES: u32 = 4;

pub const EXIT_OK: i32 = 0;
pub const EXIT_GENERICITY: i32 = 2;
pub const EXIT_ORACLE_MISMATCH: i32 = 3;
pub const EXIT_RESOURCE_CAP: i32 = 4;
pub const EXIT_INPUT: i32 = 5;

fn default_seeds() -> Vec<u64> {
    vec![1, 2, 3]
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumSpec {
    pub label: String,
    pub closure: Vec<String>,
    /// Empty means the origin.
    #[serde(default)]
    pub boundary: Vec<String>,
}

/// Optional overrides of [`OracleConfig`]; λ values are written as
/// rationals such as `"1/1000"`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_schedule: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ball_radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hessian_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub newton_iters: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_finder_tol: Option<f64>,
}

impl OracleOverrides {
    pub fn resolve(&self) -> Result<OracleConfig> {
        let mut cfg = OracleConfig::default();
        if let Some(ls) = &self.lambda_schedule {
            cfg.lambda_schedule = ls.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
        }
        if let Some(v) = self.ball_radius {
            cfg.ball_radius = v;
        }
        if let Some(v) = self.cluster_tol {
            cfg.cluster_tol = v;
        }
        if let Some(v) = self.hessian_tol {
            cfg.hessian_tol = v;
        }
        if let Some(v) = self.newton_iters {
            cfg.newton_iters = v;
        }
        if let Some(v) = self.root_finder_tol {
            cfg.root_finder_tol = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Input(format!("`{s}` is not a rational number")))
}

/// A job as read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub ambient_vars: Vec<String>,
    pub f: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<StratumSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_form: Option<String>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub oracle: OracleOverrides,
    #[serde(default = "yes")]
    pub run_oracle: bool,
}

impl JobConfig {
    /// Ambient-stratum job with default seeds.
    pub fn new(vars: &[&str], f: &str) -> Self {
        JobConfig {
            ambient_vars: vars.iter().map(|s| s.to_string()).collect(),
            f: f.to_string(),
            strata: None,
            linear_form: None,
            seeds: default_seeds(),
            oracle: OracleOverrides::default(),
            run_oracle: true,
        }
    }

    pub fn with_linear_form(mut self, ell: &str) -> Self {
        self.linear_form = Some(ell.to_string());
        self
    }

    pub fn with_stratum(mut self, label: &str, closure: &[&str], boundary: &[&str]) -> Self {
        self.strata.get_or_insert_with(Vec::new).push(StratumSpec {
            label: label.to_string(),
            closure: closure.iter().map(|s| s.to_string()).collect(),
            boundary: boundary.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn without_oracle(mut self) -> Self {
        self.run_oracle = false;
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("job file: {e}")))
    }
}

/// Parsed and validated form of a [`JobConfig`].
#[derive(Clone, Debug)]
pub struct Job {
    pub vars: VariableSet,
    /// `f` with its constant term removed.
    pub f: Polynomial,
    pub strata: Vec<Stratum>,
    pub linear_form: Option<LinearForm>,
    pub seeds: Vec<u64>,
    pub oracle: OracleConfig,
    pub run_oracle: bool,
}

impl Job {
    pub fn from_config(config: &JobConfig) -> Result<Self> {
        let vars = VariableSet::new(config.ambient_vars.iter().map(String::as_str))?;
        if vars.is_empty() {
            return Err(Error::Input("no ambient variables".into()));
        }
        let raw = parse_polynomial(&config.f, &vars)?;
        let f = &raw - &Polynomial::constant(vars.len(), raw.constant_term());
        if f.is_zero() {
            return Err(Error::Input("f is constant".into()));
        }
        let strata = match &config.strata {
            None => vec![Stratum::ambient(vars.len())],
            Some(list) if list.is_empty() => return Err(Error::Input("empty strata list".into())),
            Some(list) => {
                let mut seen = std::collections::BTreeSet::new();
                list.iter()
                    .map(|s| {
                        if !seen.insert(s.label.clone()) {
                            return Err(Error::Input(format!("duplicate stratum label `{}`", s.label)));
                        }
                        Stratum::parse(&s.label, &s.closure, &s.boundary, &vars)
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        let linear_form = config.linear_form.as_deref().map(|s| LinearForm::parse(s, &vars)).transpose()?;
        if linear_form.is_none() && config.seeds.is_empty() {
            return Err(Error::Input("no seeds and no explicit linear form".into()));
        }
        Ok(Job {
            vars,
            f,
            strata,
            linear_form,
            seeds: config.seeds.clone(),
            oracle: config.oracle.resolve()?,
            run_oracle: config.run_oracle,
        })
    }

    /// Linear forms to run: the override alone, or one per seed.
    fn first_linear_form(&self) -> LinearForm {
        match &self.linear_form {
            Some(l) => l.clone(),
            None => draw_generic_linear(self.seeds[0], self.vars.len()),
        }
    }
}

/// Knobs that are not part of the job itself.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub skip_oracle: bool,
    pub seed_override: Option<u64>,
    pub record_timings: bool,
}

/// Exact result on one stratum for one linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumComputation {
    pub label: String,
    pub status: StratumStatus,
    pub polar: Option<PolarCurve>,
    pub germ: Option<PlaneCurveGerm>,
    /// Present for CURVE and EMPTY unless a genericity obstruction occurred.
    pub m: Option<u32>,
    pub branch_table: Vec<BranchDatum>,
    /// Why `m` is missing.
    pub obstruction: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StratumStatus {
    Polar(PolarStatus),
    /// `f` has vanishing differential along the whole stratum.
    NotApplicable,
}

impl StratumStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            StratumStatus::Polar(s) => s.as_str(),
            StratumStatus::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

fn compute_stratum(
    engine: &IdealEngine,
    f: &Polynomial,
    ell: &LinearForm,
    stratum: &Stratum,
    not_applicable: bool,
) -> Result<StratumComputation> {
    let mut out = StratumComputation {
        label: stratum.label().to_string(),
        status: StratumStatus::NotApplicable,
        polar: None,
        germ: None,
        m: None,
        branch_table: Vec::new(),
        obstruction: None,
    };
    if not_applicable {
        return Ok(out);
    }
    let polar = polar_ideal(engine, f, ell, stratum)?;
    out.status = StratumStatus::Polar(polar.status);
    match polar.status {
        PolarStatus::Empty => out.m = Some(0),
        PolarStatus::Degenerate => {
            out.obstruction = Some(format!("polar locus has dimension {}", polar.dimension));
        }
        PolarStatus::Curve => {
            let germ = image_plane_curve(engine, &polar, ell, f).and_then(|g| {
                let m = morse_number(Some(&g))?;
                let table = branch_table(&g)?;
                Ok((g, m, table))
            });
            match germ {
                Ok((g, m, table)) => {
                    out.germ = Some(g);
                    out.m = Some(m);
                    out.branch_table = table;
                }
                Err(Error::Genericity(msg)) => out.obstruction = Some(msg),
                Err(e) => return Err(e),
            }
        }
    }
    out.polar = Some(polar);
    Ok(out)
}

/// One linear form and everything computed with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedRun {
    /// `None` for an explicit linear form.
    pub seed: Option<u64>,
    /// Redraws needed before the form looked generic.
    pub resamples: u32,
    pub linear_form: LinearForm,
    pub strata: Vec<StratumComputation>,
}

impl SeedRun {
    fn obstructed(&self) -> bool {
        self.strata.iter().any(|s| s.obstruction.is_some())
    }
}

fn run_linear_form(
    engine: &IdealEngine,
    job: &Job,
    ell: &LinearForm,
    not_applicable: &[bool],
) -> Result<Vec<StratumComputation>> {
    job.strata
        .iter()
        .zip(not_applicable)
        .map(|(s, &na)| {
            compute_stratum(engine, &job.f, ell, s, na).map_err(|e| match e {
                Error::ResourceCap { stage, detail } => {
                    Error::ResourceCap { stage: format!("{stage} (stratum `{}`)", s.label()), detail }
                }
                e => e,
            })
        })
        .collect()
}

fn resample_seed(seed: u64, attempt: u32) -> u64 {
    seed.wrapping_add(u64::from(attempt).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn run_seed(engine: &IdealEngine, job: &Job, seed: u64, not_applicable: &[bool]) -> Result<SeedRun> {
    let mut attempt = 0;
    loop {
        let ell = draw_generic_linear(resample_seed(seed, attempt), job.vars.len());
        let strata = run_linear_form(engine, job, &ell, not_applicable)?;
        let run = SeedRun { seed: Some(seed), resamples: attempt, linear_form: ell, strata };
        if !run.obstructed() || attempt >= MAX_RESAMPLES {
            return Ok(run);
        }
        attempt += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityVerdict {
    pub pass: bool,
    /// Divergences and obstructions, in stratum order.
    pub reasons: Vec<String>,
}

impl GenericityVerdict {
    pub fn as_str(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

fn compare_runs(runs: &[SeedRun]) -> GenericityVerdict {
    let mut reasons = Vec::new();
    for run in runs {
        for s in &run.strata {
            if let Some(why) = &s.obstruction {
                let who = run.seed.map(|x| format!("seed {x}")).unwrap_or_else(|| "explicit linear form".into());
                reasons.push(format!("stratum `{}`, {who}: {why}", s.label));
            }
        }
    }
    if let Some(first) = runs.first() {
        for (i, s) in first.strata.iter().enumerate() {
            for run in &runs[1..] {
                let other = &run.strata[i];
                if other.m != s.m || other.status != s.status {
                    reasons.push(format!(
                        "stratum `{}`: seed {} gives {} / m = {}, seed {} gives {} / m = {}",
                        s.label,
                        first.seed.unwrap_or_default(),
                        s.status.as_str(),
                        fmt_opt(s.m),
                        run.seed.unwrap_or_default(),
                        other.status.as_str(),
                        fmt_opt(other.m),
                    ));
                }
            }
        }
    }
    GenericityVerdict { pass: reasons.is_empty(), reasons }
}

fn fmt_opt(m: Option<u32>) -> String {
    m.map(|x| x.to_string()).unwrap_or_else(|| "?".into())
}

/// Runs the exact pipeline once per seed and compares the Morse numbers
/// and polar statuses stratum by stratum.
pub fn genericity_probe(engine: &IdealEngine, f: &Polynomial, strata: &[Stratum], seeds: &[u64]) -> Result<GenericityVerdict> {
    let vars = VariableSet::new((0..f.nvars()).map(|i| format!("x{i}")))?;
    let job = Job {
        vars,
        f: f.clone(),
        strata: strata.to_vec(),
        linear_form: None,
        seeds: seeds.to_vec(),
        oracle: OracleConfig::default(),
        run_oracle: false,
    };
    let na = strata.iter().map(|s| differential_vanishes_on(engine, f, s)).collect::<Result<Vec<_>>>()?;
    let runs = seeds.iter().map(|&s| run_seed(engine, &job, s, &na)).collect::<Result<Vec<_>>>()?;
    Ok(compare_runs(&runs))
}

#[derive(Clone, Debug, PartialEq)]
pub enum OracleOutcome {
    Skipped,
    NotApplicable,
    NotSupported(String),
    NotFinite,
    Ran(OracleReport),
}

impl OracleOutcome {
    /// `Some(false)` only for a completed run that contradicts `m`.
    pub fn agrees_with(&self, m: Option<u32>) -> Option<bool> {
        match self {
            OracleOutcome::Ran(r) => Some(match (r.stable_count, m) {
                (StableCount::Stable(c), Some(m)) => c == m,
                _ => false,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StratumReport {
    pub exact: StratumComputation,
    pub oracle: OracleOutcome,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MorseReport {
    pub input: JobConfig,
    pub vars: VariableSet,
    pub strata: Vec<StratumReport>,
    pub genericity: GenericityVerdict,
    pub runs: Vec<SeedRun>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl MorseReport {
    /// The run whose data fills the per-stratum report.
    pub fn primary_run(&self) -> &SeedRun {
        &self.runs[0]
    }

    pub fn morse_numbers(&self) -> Vec<Option<u32>> {
        self.strata.iter().map(|s| s.exact.m).collect()
    }

    pub fn oracle_agrees(&self) -> bool {
        self.strata.iter().all(|s| s.oracle.agrees_with(s.exact.m) != Some(false))
    }

    pub fn exit_code(&self) -> i32 {
        if !self.genericity.pass {
            EXIT_GENERICITY
        } else if !self.oracle_agrees() {
            EXIT_ORACLE_MISMATCH
        } else {
            EXIT_OK
        }
    }
}

/// Exit code for a pipeline error.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap { .. } => EXIT_RESOURCE_CAP,
        Error::Genericity(_) => EXIT_GENERICITY,
        Error::Syntax { .. } | Error::UnknownVariable(_) | Error::Input(_) | Error::NotSupported(_) | Error::NotFinite => {
            EXIT_INPUT
        }
        Error::Internal(_) => 1,
    }
}

pub fn run_pipeline(config: &JobConfig) -> Result<MorseReport> {
    run_pipeline_with(&IdealEngine::default(), config, &RunOptions::default())
}

pub fn run_pipeline_with(engine: &IdealEngine, config: &JobConfig, options: &RunOptions) -> Result<MorseReport> {
    let mut job = Job::from_config(config)?;
    if let Some(s) = options.seed_override {
        job.seeds = vec![s];
    }
    let mut timings = BTreeMap::new();
    let clock = Instant::now();

    let not_applicable = job
        .strata
        .iter()
        .map(|s| differential_vanishes_on(engine, &job.f, s))
        .collect::<Result<Vec<_>>>()?;
    let runs = match &job.linear_form {
        Some(ell) => vec![SeedRun {
            seed: None,
            resamples: 0,
            linear_form: ell.clone(),
            strata: run_linear_form(engine, &job, ell, &not_applicable)?,
        }],
        None => job.seeds.iter().map(|&s| run_seed(engine, &job, s, &not_applicable)).collect::<Result<Vec<_>>>()?,
    };
    let genericity = compare_runs(&runs);
    timings.insert("exact".to_string(), clock.elapsed().as_millis() as u64);

    let clock = Instant::now();
    let ell = &runs[0].linear_form;
    let mut strata = Vec::with_capacity(job.strata.len());
    for (i, stratum) in job.strata.iter().enumerate() {
        let exact = runs[0].strata[i].clone();
        let oracle = if !job.run_oracle || options.skip_oracle {
            OracleOutcome::Skipped
        } else if not_applicable[i] {
            OracleOutcome::NotApplicable
        } else {
            match count_on_stratum(engine, &job.f, ell, stratum, &job.oracle) {
                Ok(r) => OracleOutcome::Ran(r),
                Err(Error::NotSupported(why)) => OracleOutcome::NotSupported(why),
                Err(Error::NotFinite) => OracleOutcome::NotFinite,
                Err(Error::ResourceCap { stage, detail }) => {
                    return Err(Error::ResourceCap { stage: format!("oracle {stage} (stratum `{}`)", stratum.label()), detail })
                }
                Err(e) => return Err(e),
            }
        };
        strata.push(StratumReport { exact, oracle });
    }
    timings.insert("oracle".to_string(), clock.elapsed().as_millis() as u64);

    Ok(MorseReport {
        input: config.clone(),
        vars: job.vars,
        strata,
        genericity,
        runs,
        timings_ms: if options.record_timings { timings } else { BTreeMap::new() },
    })
}

/// Numeric side only: critical points of `f − λℓ` at one λ on every
/// stratum, using the explicit linear form or the first seed's.
pub fn run_oracle_only(config: &JobConfig, lambda: &Rational) -> Result<OracleOnlyReport> {
    let job = Job::from_config(config)?;
    let engine = IdealEngine::default();
    let ell = job.first_linear_form();
    let mut strata = Vec::new();
    for s in &job.strata {
        let outcome = match morse_points_at(&engine, &job.f, &ell, s, lambda, &job.oracle) {
            Ok(c) => Ok(c),
            Err(Error::NotSupported(why)) => Err(format!("NOT_SUPPORTED: {why}")),
            Err(Error::NotFinite) => Err("NOT_FINITE".to_string()),
            Err(e) => return Err(e),
        };
        strata.push((s.label().to_string(), outcome));
    }
    Ok(OracleOnlyReport { vars: job.vars, linear_form: ell, lambda: lambda.clone(), strata })
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleOnlyReport {
    pub vars: VariableSet,
    pub linear_form: LinearForm,
    pub lambda: Rational,
    pub strata: Vec<(String, std::result::Result<LambdaCount, String>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Input(format!("unknown format `{other}`"))),
        }
    }
}

// ---- json view ----

/// A number, or an explicit marker string where the number does not exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Count {
    Num(u64),
    Marker(String),
}

impl Count {
    fn marker(s: &str) -> Self {
        Count::Marker(s.to_string())
    }
}

impl From<AxisOrder> for Count {
    fn from(a: AxisOrder) -> Self {
        match a {
            AxisOrder::Finite(n) => Count::Num(n.into()),
            AxisOrder::Infinite => Count::marker("INFINITE"),
        }
    }
}

#[derive(Serialize)]
struct BranchJson {
    p: u32,
    q: u32,
    m_delta_total: u32,
}

#[derive(Serialize)]
struct DiscardsJson {
    outside_ball: usize,
    degenerate_hessian: usize,
    on_sing_f: usize,
    on_boundary: usize,
    non_converged: usize,
}

#[derive(Serialize)]
struct LambdaJson {
    lambda: String,
    accepted: usize,
    discarded: DiscardsJson,
}

#[derive(Serialize)]
struct OracleJson {
    stable_count: Count,
    agrees: bool,
    per_lambda: Vec<LambdaJson>,
    discarded: DiscardsJson,
}

#[derive(Serialize)]
#[serde(untagged)]
enum OracleField {
    Marker(String),
    Report(OracleJson),
}

#[derive(Serialize)]
struct StratumJson {
    label: String,
    polar_status: String,
    polar_generators: Vec<String>,
    #[serde(rename = "G")]
    g: String,
    ord_u0: Count,
    ord_0v: Count,
    m: Count,
    branch_table: Vec<BranchJson>,
    oracle: OracleField,
}

#[derive(Serialize)]
struct GenericityJson {
    verdict: String,
    reasons: Vec<String>,
}

#[derive(Serialize)]
struct SeedRunJson {
    seed: Count,
    resamples: u32,
    linear_form: String,
    m: Vec<Count>,
}

#[derive(Serialize)]
struct SeedsJson {
    requested: Vec<u64>,
    used: Count,
    runs: Vec<SeedRunJson>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    input_echo: &'a JobConfig,
    strata: Vec<StratumJson>,
    genericity: GenericityJson,
    seeds: SeedsJson,
    timings_ms: &'a BTreeMap<String, u64>,
}

fn discards_json(d: &crate::oracle::Discards) -> DiscardsJson {
    DiscardsJson {
        outside_ball: d.outside_ball,
        degenerate_hessian: d.degenerate_hessian,
        on_sing_f: d.on_sing_f,
        on_boundary: d.on_boundary,
        non_converged: d.non_converged,
    }
}

fn m_field(s: &StratumComputation) -> Count {
    match (s.m, s.status) {
        (Some(m), _) => Count::Num(m.into()),
        (None, StratumStatus::NotApplicable) => Count::marker("NOT_APPLICABLE"),
        (None, _) => Count::marker("UNDETERMINED"),
    }
}

fn stratum_json(s: &StratumReport, vars: &VariableSet) -> StratumJson {
    let e = &s.exact;
    let marker = match e.status {
        StratumStatus::Polar(PolarStatus::Curve) => "UNDETERMINED",
        other => other.as_str(),
    };
    let (g, ord_u0, ord_0v) = match &e.germ {
        Some(germ) => (germ.fmt(), germ.ord_u0().into(), germ.ord_0v().into()),
        None => (marker.to_string(), Count::marker(marker), Count::marker(marker)),
    };
    let oracle = match &s.oracle {
        OracleOutcome::Skipped => OracleField::Marker("SKIPPED".into()),
        OracleOutcome::NotApplicable => OracleField::Marker("NOT_APPLICABLE".into()),
        OracleOutcome::NotSupported(_) => OracleField::Marker("NOT_SUPPORTED".into()),
        OracleOutcome::NotFinite => OracleField::Marker("NOT_FINITE".into()),
        OracleOutcome::Ran(r) => OracleField::Report(OracleJson {
            stable_count: match r.stable_count {
                StableCount::Stable(c) => Count::Num(c.into()),
                StableCount::Unstable => Count::marker("UNSTABLE"),
            },
            agrees: s.oracle.agrees_with(e.m) == Some(true),
            per_lambda: r
                .per_lambda
                .iter()
                .map(|pl| LambdaJson { lambda: pl.lambda.to_string(), accepted: pl.count(), discarded: discards_json(&pl.discarded) })
                .collect(),
            discarded: discards_json(&r.discarded),
        }),
    };
    StratumJson {
        label: e.label.clone(),
        polar_status: e.status.as_str().to_string(),
        polar_generators: e
            .polar
            .as_ref()
            .map(|p| p.ideal.generators().iter().map(|g| g.fmt_with(vars)).collect())
            .unwrap_or_default(),
        g,
        ord_u0,
        ord_0v,
        m: m_field(e),
        branch_table: e.branch_table.iter().map(|b| BranchJson { p: b.p, q: b.q, m_delta_total: b.m_delta_total }).collect(),
        oracle,
    }
}

fn seed_label(seed: Option<u64>) -> Count {
    match seed {
        Some(s) => Count::Num(s),
        None => Count::marker("OVERRIDE"),
    }
}

pub fn report_json_value(report: &MorseReport) -> serde_json::Value {
    serde_json::to_value(report_json(report)).expect("report serializes")
}

fn report_json(report: &MorseReport) -> ReportJson<'_> {
    ReportJson {
        input_echo: &report.input,
        strata: report.strata.iter().map(|s| stratum_json(s, &report.vars)).collect(),
        genericity: GenericityJson { verdict: report.genericity.as_str().into(), reasons: report.genericity.reasons.clone() },
        seeds: SeedsJson {
            requested: report.input.seeds.clone(),
            used: seed_label(report.primary_run().seed),
            runs: report
                .runs
                .iter()
                .map(|r| SeedRunJson {
                    seed: seed_label(r.seed),
                    resamples: r.resamples,
                    linear_form: r.linear_form.fmt_with(&report.vars),
                    m: r.strata.iter().map(m_field).collect(),
                })
                .collect(),
        },
        timings_ms: &report.timings_ms,
    }
}

fn render_text(report: &MorseReport) -> String {
    let mut out = String::new();
    let vars = &report.vars;
    let run = report.primary_run();
    out.push_str(&format!("f = {}  in ({})\n", report.input.f, vars.names().join(", ")));
    match run.seed {
        Some(s) => out.push_str(&format!("ℓ = {}  (seed {s})\n", run.linear_form.fmt_with(vars))),
        None => out.push_str(&format!("ℓ = {}  (explicit)\n", run.linear_form.fmt_with(vars))),
    }
    for s in &report.strata {
        let e = &s.exact;
        out.push_str(&format!("\n[{}] polar {}\n", e.label, e.status.as_str()));
        match e.status {
            StratumStatus::NotApplicable => out.push_str("  df vanishes on the stratum, m not applicable\n"),
            StratumStatus::Polar(PolarStatus::Empty) => out.push_str("  Γ = ∅, m = 0 (by convention)\n"),
            StratumStatus::Polar(_) => {
                if let Some(p) = &e.polar {
                    let gens: Vec<String> = p.ideal.generators().iter().map(|g| g.fmt_with(vars)).collect();
                    out.push_str(&format!("  Γ = V({})\n", gens.join(", ")));
                }
                if let Some(g) = &e.germ {
                    out.push_str(&format!("  G = {}\n", g.fmt()));
                    out.push_str(&format!("  ord_u G(u,0) = {}, ord_v G(0,v) = {}\n", g.ord_u0(), g.ord_0v()));
                }
                match e.m {
                    Some(m) => out.push_str(&format!("  m = {m}\n")),
                    None => out.push_str(&format!(
                        "  m undetermined: {}\n",
                        e.obstruction.as_deref().unwrap_or("no image curve")
                    )),
                }
                for b in &e.branch_table {
                    out.push_str(&format!(
                        "    edge (p, q) = ({}, {}) x{}  contributes {}\n",
                        b.p, b.q, b.count, b.m_delta_total
                    ));
                }
            }
        }
        match &s.oracle {
            OracleOutcome::Skipped => out.push_str("  oracle: skipped\n"),
            OracleOutcome::NotApplicable => out.push_str("  oracle: not applicable\n"),
            OracleOutcome::NotSupported(why) => out.push_str(&format!("  oracle: not supported ({why})\n")),
            OracleOutcome::NotFinite => out.push_str("  oracle: critical set is not finite\n"),
            OracleOutcome::Ran(r) => {
                let counts: Vec<String> =
                    r.per_lambda.iter().map(|pl| format!("{} @ λ={}", pl.count(), pl.lambda)).collect();
                let stable = match r.stable_count {
                    StableCount::Stable(c) => c.to_string(),
                    StableCount::Unstable => "UNSTABLE".into(),
                };
                let verdict = if s.oracle.agrees_with(e.m) == Some(true) { "agrees" } else { "DISAGREES" };
                out.push_str(&format!("  oracle: {}; stable {stable} ({verdict})\n", counts.join(", ")));
            }
        }
    }
    out.push_str(&format!("\ngenericity: {}\n", report.genericity.as_str()));
    for r in &report.genericity.reasons {
        out.push_str(&format!("  {r}\n"));
    }
    if report.runs.len() > 1 {
        for r in &report.runs {
            let ms: Vec<String> = r.strata.iter().map(|s| fmt_opt(s.m)).collect();
            out.push_str(&format!(
                "  seed {}: ℓ = {}, m = [{}]\n",
                r.seed.unwrap_or_default(),
                r.linear_form.fmt_with(vars),
                ms.join(", ")
            ));
        }
    }
    for (k, v) in &report.timings_ms {
        out.push_str(&format!("time {k}: {v} ms\n"));
    }
    out
}

/// Renders a report; the same report always gives the same bytes.
pub fn render_report(report: &MorseReport, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(report)).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

#[derive(Serialize)]
struct PointJson {
    coordinates: Vec<[f64; 2]>,
    hessian_det: [f64; 2],
    residual: f64,
}

#[derive(Serialize)]
struct OracleOnlyStratumJson {
    label: String,
    accepted: Count,
    points: Vec<PointJson>,
    discarded: Option<DiscardsJson>,
}

pub fn render_oracle_only(report: &OracleOnlyReport, format: Format) -> String {
    match format {
        Format::Json => {
            let strata: Vec<OracleOnlyStratumJson> = report
                .strata
                .iter()
                .map(|(label, r)| match r {
                    Ok(c) => OracleOnlyStratumJson {
                        label: label.clone(),
                        accepted: Count::Num(c.count() as u64),
                        points: c
                            .accepted
                            .iter()
                            .map(|p| PointJson {
                                coordinates: p.coordinates.iter().map(|z| [z.re, z.im]).collect(),
                                hessian_det: [p.hessian_det.re, p.hessian_det.im],
                                residual: p.residual,
                            })
                            .collect(),
                        discarded: Some(discards_json(&c.discarded)),
                    },
                    Err(m) => OracleOnlyStratumJson { label: label.clone(), accepted: Count::Marker(m.clone()), points: Vec::new(), discarded: None },
                })
                .collect();
            let v = serde_json::json!({
                "linear_form": report.linear_form.fmt_with(&report.vars),
                "lambda": report.lambda.to_string(),
                "strata": strata,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = format!("ℓ = {}, λ = {}\n", report.linear_form.fmt_with(&report.vars), report.lambda);
            for (label, r) in &report.strata {
                match r {
                    Err(m) => out.push_str(&format!("[{label}] {m}\n")),
                    Ok(c) => {
                        out.push_str(&format!("[{label}] {} Morse points\n", c.count()));
                        for p in &c.accepted {
                            let coords: Vec<String> =
                                p.coordinates.iter().map(|z| format!("{:.6e}{:+.6e}i", z.re, z.im)).collect();
                            out.push_str(&format!("  ({})  det = {:.3e}\n", coords.join(", "), p.hessian_det.norm()));
                        }
                    }
                }
            }
            out
        }
    }
}

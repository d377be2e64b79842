//! Built-in regression corpus and the `selftest` runner.

use serde::Serialize;

use crate::algebra::{parse_polynomial, VariableSet};
use crate::error::Result;
use crate::ideal::IdealEngine;
use crate::oracle::{milnor_number, MilnorNumber, StableCount};
use crate::pipeline::{run_pipeline_with, Count, Format, JobConfig, MorseReport, OracleOutcome, RunOptions, EXIT_OK};

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub job: JobConfig,
    /// One value per stratum, in job order.
    pub expected_m: Vec<u32>,
    /// Checked against [`milnor_number`] when present.
    pub expected_milnor: Option<u32>,
}

fn entry(name: &str, job: JobConfig, expected_m: &[u32]) -> CorpusEntry {
    CorpusEntry { name: name.to_string(), job, expected_m: expected_m.to_vec(), expected_milnor: None }
}

/// `x^k*y` with `ℓ = x + y`; the polar curve is the line `k*y = x`.
pub fn d_infinity(k: u32) -> CorpusEntry {
    entry(&format!("d_infinity_k{k}"), JobConfig::new(&["x", "y"], &format!("x^{k}*y")).with_linear_form("x + y"), &[k])
}

pub fn j_infinity() -> CorpusEntry {
    entry("j_infinity", JobConfig::new(&["x", "y"], "x^2*y^2 + x^3").with_linear_form("x + y"), &[5])
}

pub fn cubic() -> CorpusEntry {
    entry("cubic", JobConfig::new(&["x", "y"], "x^3").with_linear_form("x + 2*y"), &[0])
}

/// Isolated singularities in the plane, random linear forms.
pub fn brieskorn() -> Vec<CorpusEntry> {
    [("x^2 + y^2", 1), ("x^3 + y^3", 4), ("x^4 + y^3", 6), ("x^3 + y^4", 6), ("x^2*y + y^4", 5)]
        .into_iter()
        .map(|(f, mu)| {
            let mut e = entry(&format!("isolated {f}"), JobConfig::new(&["x", "y"], f), &[mu]);
            e.expected_milnor = Some(mu);
            e
        })
        .collect()
}

/// The D∞ and J∞ germs again, with seeded random linear forms.
pub fn seeded() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = (2..=5)
        .map(|k| entry(&format!("d_infinity_k{k} seeded"), JobConfig::new(&["x", "y"], &format!("x^{k}*y")), &[k]))
        .collect();
    out.push(entry("j_infinity seeded", JobConfig::new(&["x", "y"], "x^2*y^2 + x^3"), &[5]));
    out
}

/// Germs in three variables and on proper strata.
pub fn stratified() -> Vec<CorpusEntry> {
    vec![
        entry("suspension x^2*y + z^2", JobConfig::new(&["x", "y", "z"], "x^2*y + z^2"), &[2]),
        entry(
            "plane and complement",
            JobConfig::new(&["x", "y", "z"], "x^2*y + z")
                .with_stratum("plane", &["z"], &[])
                .with_stratum("complement", &[], &["z"]),
            &[2, 0],
        ),
        entry("parabola", JobConfig::new(&["x", "y"], "y").with_stratum("parabola", &["y - x^2"], &[]), &[1]),
    ]
}

pub fn full_corpus() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = (2..=5).map(d_infinity).collect();
    out.push(j_infinity());
    out.push(cubic());
    out.extend(brieskorn());
    out.extend(seeded());
    out.extend(stratified());
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntryOutcome {
    pub entry: CorpusEntry,
    pub report: MorseReport,
    pub milnor: Option<MilnorNumber>,
    pub pass: bool,
}

pub fn run_entry(engine: &IdealEngine, entry: &CorpusEntry) -> Result<EntryOutcome> {
    let report = run_pipeline_with(engine, &entry.job, &RunOptions::default())?;
    let milnor = match entry.expected_milnor {
        Some(_) => {
            let vars = VariableSet::new(entry.job.ambient_vars.iter().map(String::as_str))?;
            Some(milnor_number(engine, &parse_polynomial(&entry.job.f, &vars)?)?)
        }
        None => None,
    };
    let m_ok = report.morse_numbers() == entry.expected_m.iter().map(|&m| Some(m)).collect::<Vec<_>>();
    let milnor_ok = entry.expected_milnor.map(MilnorNumber::Finite) == milnor;
    let pass = m_ok && milnor_ok && report.exit_code() == EXIT_OK;
    Ok(EntryOutcome { entry: entry.clone(), report, milnor, pass })
}

#[derive(Serialize)]
struct EntryJson {
    name: String,
    expected_m: Vec<u32>,
    m: Vec<Count>,
    genericity: String,
    oracle_stable_count: Vec<Count>,
    milnor: Count,
    exit_code: i32,
    pass: bool,
}

#[derive(Serialize)]
struct SelftestJson {
    entries: Vec<EntryJson>,
    passed: usize,
    failed: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelftestReport {
    pub outcomes: Vec<EntryOutcome>,
}

impl SelftestReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.outcomes.len()
    }
}

pub fn run_selftest() -> Result<SelftestReport> {
    let engine = IdealEngine::default();
    let outcomes = full_corpus().iter().map(|e| run_entry(&engine, e)).collect::<Result<Vec<_>>>()?;
    Ok(SelftestReport { outcomes })
}

fn oracle_count(o: &OracleOutcome) -> Count {
    match o {
        OracleOutcome::Ran(r) => match r.stable_count {
            StableCount::Stable(c) => Count::Num(c.into()),
            StableCount::Unstable => Count::Marker("UNSTABLE".into()),
        },
        OracleOutcome::Skipped => Count::Marker("SKIPPED".into()),
        OracleOutcome::NotApplicable => Count::Marker("NOT_APPLICABLE".into()),
        OracleOutcome::NotSupported(_) => Count::Marker("NOT_SUPPORTED".into()),
        OracleOutcome::NotFinite => Count::Marker("NOT_FINITE".into()),
    }
}

pub fn render_selftest(report: &SelftestReport, format: Format) -> String {
    let rows: Vec<EntryJson> = report
        .outcomes
        .iter()
        .map(|o| EntryJson {
            name: o.entry.name.clone(),
            expected_m: o.entry.expected_m.clone(),
            m: o
                .report
                .morse_numbers()
                .into_iter()
                .map(|m| m.map(|x| Count::Num(x.into())).unwrap_or(Count::Marker("UNDETERMINED".into())))
                .collect(),
            genericity: o.report.genericity.as_str().into(),
            oracle_stable_count: o.report.strata.iter().map(|s| oracle_count(&s.oracle)).collect(),
            milnor: match o.milnor {
                Some(MilnorNumber::Finite(m)) => Count::Num(m.into()),
                Some(MilnorNumber::NotIsolated) => Count::Marker("NOT_ISOLATED".into()),
                None => Count::Marker("NOT_CHECKED".into()),
            },
            exit_code: o.report.exit_code(),
            pass: o.pass,
        })
        .collect();
    match format {
        Format::Json => {
            let doc = SelftestJson { passed: report.passed(), failed: rows.len() - report.passed(), entries: rows };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let show = |v: &[Count]| {
                    v.iter()
                        .map(|c| match c {
                            Count::Num(n) => n.to_string(),
                            Count::Marker(s) => s.clone(),
                        })
                        .collect::<Vec<_>>()
                        .join(",")
                };
                out.push_str(&format!(
                    "{:<4} {:<28} m=[{}] expected [{}] oracle [{}] genericity {}\n",
                    if r.pass { "ok" } else { "FAIL" },
                    r.name,
                    show(&r.m),
                    r.expected_m.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                    show(&r.oracle_stable_count),
                    r.genericity,
                ));
            }
            out.push_str(&format!("{} / {} entries pass\n", report.passed(), rows.len()));
            out
        }
    }
}

//! Executable catalogue of worked examples and cross-module consistency checks.
//!
//! Cases run independently (in parallel), results are sorted by name, and the JSON summary
//! contains no timings, so two runs with the same options produce identical output.

mod cases;
pub mod closure;
pub mod random;

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::GroebnerConfig;

pub use cases::{catalogue, corrupted_d3_fixture, d3_fixture, embedded_point_check};
pub use closure::{closure_vs_grassmann_dimensions, ClosureReport, ClosureStratum};
pub use random::{random_complete_intersection, RandomCiBounds};

pub const DEFAULT_SEED: u64 = 20_240_917;

/// How a case's expected value is justified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    /// Reproduces a published identity or worked example.
    Reference,
    /// Checked against an independent computation.
    Derived,
    /// Degenerate or definitional.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    /// Only produced by hitting the Groebner resource cap.
    Skip { cap: usize },
}

/// Accumulates labelled checks; the first failures are reported.
#[derive(Default)]
pub struct Checks {
    count: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    pub fn that(&mut self, label: impl Into<String>, ok: bool) -> &mut Self {
        self.count += 1;
        if !ok {
            self.failures.push(label.into());
        }
        self
    }

    pub fn eq<T: PartialEq + Debug>(&mut self, label: &str, got: T, want: T) -> &mut Self {
        self.count += 1;
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, expected {want:?}"));
        }
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn finish(&mut self) -> Outcome {
        if self.failures.is_empty() {
            let mut detail = format!("{} checks", self.count);
            if !self.notes.is_empty() {
                detail = format!("{detail}; {}", self.notes.join("; "));
            }
            Outcome::Pass(detail)
        } else {
            let shown: Vec<&str> = self.failures.iter().take(5).map(|s| s.as_str()).collect();
            Outcome::Fail(format!("{} of {} checks failed: {}", self.failures.len(), self.count, shown.join("; ")))
        }
    }
}

type Runner = Box<dyn Fn(&SuiteOptions) -> Result<Outcome> + Send + Sync>;

pub struct CheckCase {
    pub name: String,
    /// Which result the case exercises, e.g. `jet-order-3`.
    pub anchor: &'static str,
    pub evidence: Evidence,
    run: Runner,
}

impl CheckCase {
    pub fn new(
        name: impl Into<String>,
        anchor: &'static str,
        evidence: Evidence,
        run: impl Fn(&SuiteOptions) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        CheckCase { name: name.into(), anchor, evidence, run: Box::new(run) }
    }

    pub fn run(&self, opts: &SuiteOptions) -> CaseResult {
        let outcome = match (self.run)(opts) {
            Ok(o) => o,
            Err(Error::ResourceLimit { cap }) => Outcome::Skip { cap },
            Err(e) => Outcome::Fail(format!("error: {e}")),
        };
        let (status, detail, cap) = match outcome {
            Outcome::Pass(d) => (Status::Pass, d, None),
            Outcome::Fail(d) => (Status::Fail, d, None),
            Outcome::Skip { cap } => (Status::Skip, format!("resource cap of {cap} pair reductions reached"), Some(cap)),
        };
        CaseResult { name: self.name.clone(), anchor: self.anchor, evidence: self.evidence, status, detail, cap }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Run only cases whose name contains this substring.
    pub filter: Option<String>,
    pub seed: u64,
    /// Replace the order-3 jet target with the corrupted fixture, so the suite must fail.
    pub inject_corruption: bool,
    pub random_cases: usize,
    pub config: GroebnerConfig,
    pub threads: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            filter: None,
            seed: DEFAULT_SEED,
            inject_corruption: false,
            random_cases: 20,
            config: GroebnerConfig::default(),
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub anchor: &'static str,
    pub evidence: Evidence,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub seed: u64,
    pub inject_corruption: bool,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Anchors with at least one executed (passing or failing) case.
    pub anchors_covered: Vec<&'static str>,
    /// Catalogue anchors left without an executed case by the filter or by skips.
    pub anchors_untested: Vec<&'static str>,
    pub cases: Vec<CaseResult>,
}

impl SuiteSummary {
    /// Failure count capped at 125.
    pub fn exit_code(&self) -> i32 {
        self.failed.min(125) as i32
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }
}

pub fn run_all(opts: &SuiteOptions) -> SuiteSummary {
    let all = catalogue(opts);
    let all_anchors: BTreeSet<&'static str> = all.iter().map(|c| c.anchor).collect();
    let selected: Vec<&CheckCase> = all
        .iter()
        .filter(|c| opts.filter.as_deref().is_none_or(|f| c.name.contains(f)))
        .collect();

    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(selected.len()));
    std::thread::scope(|scope| {
        for _ in 0..opts.threads.max(1).min(selected.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(case) = selected.get(i) else { break };
                let r = case.run(opts);
                results.lock().expect("no poisoned lock").push(r);
            });
        }
    });
    let mut cases = results.into_inner().expect("no poisoned lock");
    cases.sort_by(|a, b| a.name.cmp(&b.name));

    let count = |s: Status| cases.iter().filter(|c| c.status == s).count();
    let covered: BTreeSet<&'static str> =
        cases.iter().filter(|c| c.status != Status::Skip).map(|c| c.anchor).collect();
    SuiteSummary {
        seed: opts.seed,
        inject_corruption: opts.inject_corruption,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        anchors_covered: covered.iter().copied().collect(),
        anchors_untested: all_anchors.difference(&covered).copied().collect(),
        cases,
    }
}

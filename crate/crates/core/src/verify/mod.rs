//! Exhaustive identity suites.
//!
//! A suite is a list of named cases; each case evaluates both sides of an
//! identity to polynomials. Cases run in parallel and are reported in their
//! declared order, so a report depends only on its configuration (apart from
//! `elapsed_ms`). Suites in [`Mode::Report`] record hypotheses: their misses
//! are data and do not affect the overall verdict.

mod suites;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quantum::{ElementarySource, SignFlippedE2, Standard};

pub use suites::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Assert,
    Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub case: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub mode: Mode,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
    /// Per-case verdicts, kept for report-mode suites.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outcomes: Vec<Outcome>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Whether this report counts against the overall verdict.
    pub fn is_blocking_failure(&self) -> bool {
        self.mode == Mode::Assert && !self.passed
    }
}

type Sides = Result<(Polynomial, Polynomial)>;

/// One identity instance: `expected` and `actual` sides, lazily evaluated.
pub struct Case {
    name: String,
    eval: Box<dyn Fn() -> Sides + Send + Sync>,
}

impl Case {
    pub fn new<F>(name: impl Into<String>, eval: F) -> Case
    where
        F: Fn() -> Sides + Send + Sync + 'static,
    {
        Case {
            name: name.into(),
            eval: Box::new(eval),
        }
    }

    /// A case that holds when the two permutations or other plain values are
    /// equal, rendered through `Display`.
    pub fn equal_text(name: impl Into<String>, expected: String, actual: String) -> Case {
        Case::new(name, move || {
            // constant polynomials 0/1 encode the verdict; the text is kept
            // for the failure record
            Ok((Polynomial::zero(), Polynomial::zero()))
        })
        .with_text(expected, actual)
    }

    fn with_text(self, expected: String, actual: String) -> Case {
        if expected == actual {
            return self;
        }
        let name = self.name.clone();
        Case {
            name,
            eval: Box::new(move || {
                Err(Error::InvalidPermutation(format!(
                    "expected {expected}, found {actual}"
                )))
            }),
        }
    }
}

pub fn run_cases(suite: &str, mode: Mode, cases: Vec<Case>) -> Report {
    let start = Instant::now();
    let results: Vec<(String, Option<Failure>)> = cases
        .par_iter()
        .map(|case| {
            let failure = match (case.eval)() {
                Ok((expected, actual)) if expected == actual => None,
                Ok((expected, actual)) => Some(Failure {
                    case: case.name.clone(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                }),
                Err(e) => Some(Failure {
                    case: case.name.clone(),
                    expected: "a value".to_string(),
                    actual: format!("error: {e}"),
                }),
            };
            (case.name.clone(), failure)
        })
        .collect();
    let outcomes = match mode {
        Mode::Assert => Vec::new(),
        Mode::Report => results
            .iter()
            .map(|(name, f)| Outcome {
                case: name.clone(),
                holds: f.is_none(),
            })
            .collect(),
    };
    let failures: Vec<Failure> = results.into_iter().filter_map(|(_, f)| f).collect();
    Report {
        suite: suite.to_string(),
        mode,
        cases: cases.len(),
        passed: failures.is_empty(),
        failures,
        outcomes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Suite selection and rank caps.
#[derive(Clone, Debug)]
pub struct Config {
    /// Largest rank exercised by the identity suites.
    pub n: usize,
    /// Lets the Cauchy suite run at rank 5.
    pub slow: bool,
    /// Replace `e~_2(X_2)` by `x1*x2 - q1` (anti-vacuity check).
    pub mutate_e2: bool,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            n: 5,
            slow: false,
            mutate_e2: false,
        }
    }
}

impl Config {
    pub fn source(&self) -> &'static dyn ElementarySource {
        if self.mutate_e2 {
            &SignFlippedE2
        } else {
            &Standard
        }
    }

    /// Rank for the Cauchy suite: capped at 4 unless `slow`.
    pub fn cauchy_rank(&self) -> usize {
        if self.slow {
            self.n
        } else {
            self.n.min(4)
        }
    }
}

pub const SUITES: [&str; 7] = [
    "cauchy",
    "schur",
    "vexillary",
    "counterexamples",
    "grassmannian",
    "factorization",
    "conjectures",
];

/// Runs one suite group by name (`all` runs every group).
pub fn run_suite(name: &str, config: &Config) -> Result<Vec<Report>> {
    let n = config.n;
    Ok(match name {
        "cauchy" => suite_cauchy_with(config.cauchy_rank(), config.source()),
        "schur" => suite_schur(n),
        "vexillary" => suite_vexillary(n),
        "counterexamples" => suite_counterexamples(),
        "grassmannian" => suite_grassmannian(n),
        "factorization" => suite_factorization(n),
        "conjectures" => suite_conjectures(n),
        "all" => return Ok(run_all(config)),
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// Every suite group, in [`SUITES`] order.
pub fn run_all(config: &Config) -> Vec<Report> {
    SUITES
        .iter()
        .flat_map(|s| run_suite(s, config).expect("known suite"))
        .collect()
}

/// True when no assert-mode report failed.
pub fn all_passed(reports: &[Report]) -> bool {
    !reports.iter().any(Report::is_blocking_failure)
}

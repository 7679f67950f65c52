//! Verification suites and their JSON / markdown reports.

pub mod sample;
mod suites;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

pub const SUITES: [&str; 9] = [
    "algebra",
    "frustration-free",
    "ltqo",
    "expectation",
    "symmetries",
    "groupoid",
    "invariant",
    "no-lift",
    "oracle-crosscheck",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub box_size: i64,
    pub samples: usize,
    /// Cases not started before the budget runs out are reported as skipped.
    pub time_budget: Option<Duration>,
    /// Worker threads; `0` lets the pool decide.
    pub jobs: usize,
    /// Record wall-clock time; off by default so that reports are reproducible byte for byte.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { seed: 0, box_size: 4, samples: 1000, time_budget: None, jobs: 0, timing: false }
    }
}

impl RunOptions {
    pub fn validate(&self) -> Result<()> {
        if !(1..=8).contains(&self.box_size) {
            return Err(Error::InvalidArgument(format!("box-size must be in 1..=8, got {}", self.box_size)));
        }
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub claim_id: String,
    pub paper_anchor: String,
    pub parameters: Value,
    pub status: Status,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub seed: u64,
    pub box_size: i64,
    pub samples: usize,
    pub summary: Summary,
    pub cases: Vec<CaseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.skipped == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Verification report: `{}`\n", self.suite);
        let _ = writeln!(
            s,
            "seed {} · box size {} · samples {} · {} pass, {} fail, {} skipped\n",
            self.seed, self.box_size, self.samples, self.summary.pass, self.summary.fail, self.summary.skipped
        );
        let _ = writeln!(s, "| claim | status | anchor | parameters |");
        let _ = writeln!(s, "|---|---|---|---|");
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "**FAIL**",
                Status::Skipped => "skipped",
            };
            let _ = writeln!(
                s,
                "| `{}` | {} | {} | `{}` |",
                c.claim_id,
                status,
                c.paper_anchor.replace('|', "\\|"),
                c.parameters.to_string().replace('|', "\\|")
            );
        }
        let failing: Vec<&CaseReport> = self.cases.iter().filter(|c| c.status != Status::Pass).collect();
        if !failing.is_empty() {
            let _ = writeln!(s, "\n## Witnesses for non-passing cases\n");
            for c in failing {
                let _ = writeln!(s, "- `{}`: `{}`", c.claim_id, c.witness);
            }
        }
        s
    }
}

pub(crate) struct Outcome {
    pub pass: bool,
    pub witness: Value,
}

impl Outcome {
    pub fn new(pass: bool, witness: Value) -> Self {
        Self { pass, witness }
    }
}

type Check = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub(crate) struct Case {
    pub claim_id: String,
    pub paper_anchor: &'static str,
    pub parameters: Value,
    pub check: Check,
}

impl Case {
    pub fn new<F>(claim_id: impl Into<String>, paper_anchor: &'static str, parameters: Value, check: F) -> Self
    where
        F: Fn() -> Result<Outcome> + Send + Sync + 'static,
    {
        Self { claim_id: claim_id.into(), paper_anchor, parameters, check: Box::new(check) }
    }
}

fn cases_for(suite: &str, opts: &RunOptions) -> Result<Vec<Case>> {
    Ok(match suite {
        "algebra" => suites::algebra(opts),
        "frustration-free" => suites::frustration_free(opts),
        "ltqo" => suites::ltqo(opts),
        "expectation" => suites::expectation(opts),
        "symmetries" => suites::symmetries(opts),
        "groupoid" => suites::groupoid(opts),
        "invariant" => suites::invariant(opts),
        "no-lift" => suites::no_lift(opts),
        "oracle-crosscheck" => suites::oracle_crosscheck(opts),
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(cases_for(s, opts)?);
            }
            all
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

fn execute(case: &Case, deadline: Option<Instant>, timing: bool) -> CaseReport {
    let mut report = CaseReport {
        claim_id: case.claim_id.clone(),
        paper_anchor: case.paper_anchor.to_string(),
        parameters: case.parameters.clone(),
        status: Status::Skipped,
        witness: serde_json::json!({ "timeout": "time budget exhausted before the case started" }),
        elapsed_ms: None,
    };
    if deadline.is_some_and(|d| Instant::now() >= d) {
        return report;
    }
    let start = Instant::now();
    let (status, witness) = match (case.check)() {
        Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.witness),
        Err(e) => (Status::Fail, serde_json::json!({ "error": e.to_string() })),
    };
    report.status = status;
    report.witness = witness;
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

/// Runs a suite (or `all`). Case order in the report is by claim id.
pub fn run(suite: &str, opts: &RunOptions) -> Result<VerificationReport> {
    opts.validate()?;
    let cases = cases_for(suite, opts)?;
    let start = Instant::now();
    let deadline = opts.time_budget.map(|b| start + b);
    let work = || cases.par_iter().map(|c| execute(c, deadline, opts.timing)).collect::<Vec<_>>();
    let mut reports = if opts.jobs == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(work)
    };
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    let mut summary = Summary::default();
    for r in &reports {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.to_string(),
        seed: opts.seed,
        box_size: opts.box_size,
        samples: opts.samples,
        summary,
        cases: reports,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

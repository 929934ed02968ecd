//! Running checks at sampled points and collecting results.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use super::checks::Comparison;
use super::params::{first_candidate, ParamPoint};
use super::registry::{lookup, CheckSpec, Mode, REGISTRY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    EvidencePass,
    EvidenceFail,
    SkippedDegenerate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::EvidencePass => "evidence-pass",
            Status::EvidenceFail => "evidence-fail",
            Status::SkippedDegenerate => "skipped-degenerate",
        }
    }

    /// Counts toward a red exit status.
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UsageError {
    #[error("no checks selected")]
    NoChecks,
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("empty size range {min}..={max}")]
    EmptyRange { min: i64, max: i64 },
    #[error("trials must be at least 1")]
    NoTrials,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub n: i64,
    pub trial: u32,
    pub seed: u64,
    /// Canonical rendering of the point, empty when none was usable.
    pub point: String,
    pub status: Status,
    /// Both sides of the first failing comparison; `None` on a pass.
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    /// Failing comparison label, evaluation error, or degeneracy note.
    pub detail: Option<String>,
}

/// Evaluate one check at a given point. Degenerate evaluation errors map to
/// [`Status::SkippedDegenerate`]; other errors are failures.
pub fn run_check(spec: &CheckSpec, n: i64, point: &ParamPoint, seed: u64, trial: u32) -> CheckResult {
    let mut res = CheckResult {
        id: spec.id,
        n,
        trial,
        seed,
        point: point.describe(),
        status: Status::Pass,
        lhs: None,
        rhs: None,
        detail: None,
    };
    let (ok, bad) = match spec.mode {
        Mode::Identity => (Status::Pass, Status::Fail),
        Mode::Evidence => (Status::EvidencePass, Status::EvidenceFail),
    };
    match (spec.run)(n, point) {
        Ok(cmps) => match cmps.iter().find(|c| !c.holds()) {
            None => res.status = ok,
            Some(Comparison { label, lhs, rhs }) => {
                res.status = bad;
                res.lhs = Some(lhs.to_string());
                res.rhs = Some(rhs.to_string());
                res.detail = Some(label.clone());
            }
        },
        Err(e) if e.is_degenerate() => {
            res.status = Status::SkippedDegenerate;
            res.detail = Some(e.to_string());
        }
        Err(e) => {
            res.status = bad;
            res.detail = Some(format!("evaluation error: {e}"));
        }
    }
    res
}

/// Sample a point for `(id, n, seed, trial)` and evaluate; poles hit during
/// evaluation trigger a fresh draw.
pub fn run_trial(spec: &CheckSpec, n: i64, seed: u64, trial: u32) -> CheckResult {
    let mut from = 0;
    let mut last_note = String::from("every candidate failed the degeneracy filter");
    while let Some((attempt, point)) = first_candidate(spec.id, &spec.slots, n, seed, trial, from) {
        let res = run_check(spec, n, &point, seed, trial);
        if res.status != Status::SkippedDegenerate {
            return res;
        }
        last_note = res.detail.unwrap_or_default();
        from = attempt + 1;
    }
    CheckResult {
        id: spec.id,
        n,
        trial,
        seed,
        point: String::new(),
        status: Status::SkippedDegenerate,
        lhs: None,
        rhs: None,
        detail: Some(format!("no usable point in {} attempts; last: {last_note}", super::params::MAX_ATTEMPTS)),
    }
}

/// One unit of work in a suite.
#[derive(Clone, Copy, Debug)]
pub struct Job {
    pub spec: &'static CheckSpec,
    pub n: i64,
    pub trial: u32,
}

impl Job {
    pub fn run(&self, seed: u64) -> CheckResult {
        run_trial(self.spec, self.n, seed, self.trial)
    }
}

/// Resolve ids (`"all"` selects the whole registry) into registry entries,
/// in registry order with duplicates removed.
pub fn select(ids: &[&str]) -> Result<Vec<&'static CheckSpec>, UsageError> {
    if ids.is_empty() {
        return Err(UsageError::NoChecks);
    }
    for id in ids {
        if *id != "all" && lookup(id).is_none() {
            return Err(UsageError::UnknownCheck((*id).into()));
        }
    }
    let all = ids.contains(&"all");
    Ok(REGISTRY.iter().filter(|c| all || ids.contains(&c.id)).collect())
}

/// The full cross product ordered by `(check, n, trial)`. With no explicit
/// range each check uses its default; an explicit range is clipped below at
/// each check's smallest meaningful size.
pub fn plan(checks: &[&'static CheckSpec], range: Option<(i64, i64)>, trials: u32) -> Result<Vec<Job>, UsageError> {
    if checks.is_empty() {
        return Err(UsageError::NoChecks);
    }
    if trials == 0 {
        return Err(UsageError::NoTrials);
    }
    if let Some((min, max)) = range {
        if min > max {
            return Err(UsageError::EmptyRange { min, max });
        }
    }
    let mut jobs = Vec::new();
    for &spec in checks {
        let (lo, hi) = match range {
            Some((min, max)) => (min.max(spec.n_floor), max),
            None => spec.n_default,
        };
        for n in lo..=hi {
            for trial in 0..trials {
                jobs.push(Job { spec, n, trial });
            }
        }
    }
    if jobs.is_empty() {
        let (min, max) = range.unwrap_or((0, -1));
        return Err(UsageError::EmptyRange { min, max });
    }
    Ok(jobs)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub evidence_pass: usize,
    pub evidence_fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::EvidencePass => s.evidence_pass += 1,
                Status::EvidenceFail => s.evidence_fail += 1,
                Status::SkippedDegenerate => s.skipped += 1,
            }
        }
        s
    }

    /// True when no identity check failed. Evidence failures are reported
    /// but never make a run red.
    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(seed: u64, results: Vec<CheckResult>) -> Self {
        Report { seed, summary: Summary::of(&results), results }
    }
}

/// Sequential suite runner.
pub fn run_suite(ids: &[&str], range: Option<(i64, i64)>, trials: u32, seed: u64) -> Result<Report, UsageError> {
    let jobs = plan(&select(ids)?, range, trials)?;
    Ok(Report::new(seed, jobs.iter().map(|j| j.run(seed)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors() {
        assert_eq!(select(&[]).unwrap_err(), UsageError::NoChecks);
        assert_eq!(select(&["no_such_id"]).unwrap_err(), UsageError::UnknownCheck("no_such_id".into()));
        let c = select(&["hankel"]).unwrap();
        assert!(matches!(plan(&c, Some((3, 2)), 1), Err(UsageError::EmptyRange { .. })));
        assert!(matches!(plan(&c, None, 0), Err(UsageError::NoTrials)));
    }

    #[test]
    fn plan_is_ordered() {
        let c = select(&["r_sum", "hankel"]).unwrap();
        let jobs = plan(&c, Some((1, 2)), 2).unwrap();
        let keys: Vec<_> = jobs.iter().map(|j| (j.spec.id, j.n, j.trial)).collect();
        assert_eq!(keys[0], ("hankel", 1, 0));
        assert_eq!(keys[7], ("r_sum", 2, 1));
    }

    #[test]
    fn main_theorem_size_one_passes() {
        let r = run_suite(&["thm_main_phi"], Some((1, 1)), 3, 42).unwrap();
        assert_eq!(r.summary.pass, 3);
    }
}

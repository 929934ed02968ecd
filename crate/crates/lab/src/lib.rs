//! Parallel suite runner and the text/JSON report formats for the identity
//! checks in `qdet-core`.

use std::fmt::Write as _;

use qdet_core::identitylab::{plan, select, CheckResult, CheckSpec, Report, Status, Summary, UsageError, REGISTRY};
use rayon::prelude::*;
use serde::Serialize;

/// Version of the JSON report layout.
pub const REPORT_VERSION: u32 = 1;

/// Run the selected checks over the size range, trials in parallel. The
/// result order is fixed by the plan, so output does not depend on scheduling.
pub fn run(ids: &[&str], range: Option<(i64, i64)>, trials: u32, seed: u64) -> Result<Report, UsageError> {
    let jobs = plan(&select(ids)?, range, trials)?;
    let results: Vec<CheckResult> = jobs.par_iter().map(|j| j.run(seed)).collect();
    Ok(Report::new(seed, results))
}

#[derive(Serialize)]
struct JsonSummary {
    pass: usize,
    fail: usize,
    evidence_pass: usize,
    evidence_fail: usize,
    skipped: usize,
}

impl From<Summary> for JsonSummary {
    fn from(s: Summary) -> Self {
        JsonSummary {
            pass: s.pass,
            fail: s.fail,
            evidence_pass: s.evidence_pass,
            evidence_fail: s.evidence_fail,
            skipped: s.skipped,
        }
    }
}

#[derive(Serialize)]
struct JsonResult<'a> {
    id: &'a str,
    n: i64,
    trial: u32,
    seed: u64,
    point: &'a str,
    status: &'a str,
    lhs: Option<&'a str>,
    rhs: Option<&'a str>,
    detail: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: u32,
    seed: u64,
    /// Taken from `SOURCE_DATE_EPOCH` so reports stay byte-reproducible.
    started: Option<String>,
    summary: JsonSummary,
    results: Vec<JsonResult<'a>>,
}

fn started() -> Option<String> {
    std::env::var("SOURCE_DATE_EPOCH").ok().filter(|s| !s.is_empty())
}

pub fn to_json(report: &Report) -> String {
    let doc = JsonReport {
        version: REPORT_VERSION,
        seed: report.seed,
        started: started(),
        summary: report.summary.into(),
        results: report
            .results
            .iter()
            .map(|r| JsonResult {
                id: r.id,
                n: r.n,
                trial: r.trial,
                seed: r.seed,
                point: &r.point,
                status: r.status.as_str(),
                lhs: r.lhs.as_deref(),
                rhs: r.rhs.as_deref(),
                detail: r.detail.as_deref(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

fn summary_line(s: &Summary) -> String {
    format!(
        "summary: pass={} fail={} evidence_pass={} evidence_fail={} skipped={}",
        s.pass, s.fail, s.evidence_pass, s.evidence_fail, s.skipped
    )
}

/// One line per result, witness blocks under every non-pass, then the summary.
pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.results {
        let _ = writeln!(out, "{} check={} n={} trial={}", r.status.as_str().to_uppercase(), r.id, r.n, r.trial);
        if matches!(r.status, Status::Pass | Status::EvidencePass) {
            continue;
        }
        let _ = writeln!(out, "  seed:   {}", r.seed);
        if !r.point.is_empty() {
            let _ = writeln!(out, "  point:  {}", r.point);
        }
        if let Some(d) = &r.detail {
            let _ = writeln!(out, "  detail: {d}");
        }
        if let (Some(l), Some(rh)) = (&r.lhs, &r.rhs) {
            let _ = writeln!(out, "  lhs:    {l}");
            let _ = writeln!(out, "  rhs:    {rh}");
        }
    }
    if report.summary.evidence_fail > 0 {
        let _ = writeln!(
            out,
            "NOTE: {} evidence-mode result(s) disagree; each witness above refutes the conjectured relation",
            report.summary.evidence_fail
        );
    }
    let _ = writeln!(out, "{}", summary_line(&report.summary));
    out
}

pub fn list() -> String {
    let width = REGISTRY.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in REGISTRY {
        let _ = writeln!(out, "{:width$}  {}", c.id, c.anchor);
    }
    out
}

pub fn explain(spec: &CheckSpec) -> String {
    format!(
        "{id}\n  identity: {anchor}\n  mode:     {mode}\n  recipe:   {recipe}\n  sizes:    {lo}..={hi} by default (smallest {floor})\n  slots:    {slots}\n",
        id = spec.id,
        anchor = spec.anchor,
        mode = spec.mode.as_str(),
        recipe = spec.recipe,
        lo = spec.n_default.0,
        hi = spec.n_default.1,
        floor = spec.n_floor,
        slots = spec.slots.describe(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use qdet_core::identitylab::checks::{CheckFn, CheckOutput, Comparison};
    use qdet_core::identitylab::params::Slots;
    use qdet_core::identitylab::{run_trial, Mode, ParamPoint};
    use qdet_core::{EvalError, GaussianRational as G};

    #[test]
    fn text_and_json_agree_on_counts() {
        let r = run(&["hankel", "r_sum"], Some((1, 2)), 2, 9).unwrap();
        let json: serde_json::Value = serde_json::from_str(&to_json(&r)).unwrap();
        assert_eq!(json["summary"]["pass"].as_u64().unwrap() as usize, r.summary.pass);
        assert!(to_text(&r).ends_with(&format!("{}\n", summary_line(&r.summary))));
    }

    fn wrong(n: i64, p: &ParamPoint) -> CheckOutput {
        Ok(vec![Comparison { label: "a = a + n".into(), lhs: p.a(), rhs: p.a() + G::from_integer(n) }])
    }

    fn always_pole(_: i64, _: &ParamPoint) -> CheckOutput {
        Err(EvalError::Pole("always".into()))
    }

    fn fake(mode: Mode, run: CheckFn) -> CheckSpec {
        CheckSpec { id: "fake", anchor: "", recipe: "", mode, n_default: (1, 1), n_floor: 1, slots: Slots::BASE, run }
    }

    #[test]
    fn a_false_identity_fails_with_witnesses() {
        let spec = fake(Mode::Identity, wrong);
        let r = run_trial(&spec, 1, 5, 0);
        assert_eq!(r.status, Status::Fail);
        assert!(r.lhs.is_some() && r.rhs.is_some() && !r.point.is_empty());
        let report = Report::new(5, vec![r]);
        let text = to_text(&report);
        assert!(text.starts_with("FAIL check=fake n=1 trial=0\n"));
        assert!(text.contains("  lhs:") && text.contains("  point:  kappa="));
        assert!(!report.summary.ok());

        let ev = run_trial(&fake(Mode::Evidence, wrong), 1, 5, 0);
        assert_eq!(ev.status, Status::EvidenceFail);
        let report = Report::new(5, vec![ev]);
        assert!(report.summary.ok());
        assert!(to_text(&report).contains("NOTE: 1 evidence-mode result"));
    }

    #[test]
    fn persistent_poles_are_skipped_not_failed() {
        let r = run_trial(&fake(Mode::Identity, always_pole), 1, 5, 0);
        assert_eq!(r.status, Status::SkippedDegenerate);
        assert!(r.detail.unwrap().contains("always"));
    }

    #[test]
    fn list_has_every_id() {
        let l = list();
        assert_eq!(l.lines().count(), REGISTRY.len());
    }
}

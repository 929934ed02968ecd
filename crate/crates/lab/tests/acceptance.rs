//! Acceptance gate. Every criterion prints one `PASS`/`FAIL` line; the test
//! fails if any line is `FAIL`. Equality is exact throughout (tolerance 0);
//! the only numeric limits are the wall-clock budgets pinned below.

use std::time::{Duration, Instant};

use qdet_core::identitylab::params::{first_candidate, AuxCount, Slots};
use qdet_core::identitylab::{ParamPoint, Report, Status};
use qdet_core::orthopoly::{
    askey_wilson, mehta_wang_d, nishizawa_d, AWParams, AwMethod, MehtaWangMethod, NishizawaMethod,
};
use qdet_core::qseries::{q_binomial, q_pochhammer as poch};
use qdet_core::{DetMethod, EvalError, ExactMatrix, GaussianRational as G};

const SEED: u64 = 42;
const TRIALS: u32 = 5;
const THEOREM_BUDGET: Duration = Duration::from_secs(10);
const INTERNAL_BUDGET: Duration = Duration::from_secs(60);
const SUITE_BUDGET: Duration = Duration::from_secs(120);

struct Gate {
    lines: Vec<(bool, String)>,
}

impl Gate {
    fn record(&mut self, name: &str, ok: bool, detail: String) {
        let line = format!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        self.lines.push((ok, line));
    }
}

fn run(ids: &[&str], range: Option<(i64, i64)>) -> (Report, Duration) {
    let t = Instant::now();
    let r = qdet_lab::run(ids, range, TRIALS, SEED).expect("valid selection");
    (r, t.elapsed())
}

/// Every result passed and every (check, n) got all its trials.
fn all_pass(r: &Report) -> (bool, String) {
    let s = r.summary;
    let bad: Vec<String> = r
        .results
        .iter()
        .filter(|x| x.status != Status::Pass)
        .take(3)
        .map(|x| format!("{} n={} trial={} {}", x.id, x.n, x.trial, x.status.as_str()))
        .collect();
    (
        s.pass == r.results.len() && !r.results.is_empty(),
        format!(
            "{} pass / {} results{}",
            s.pass,
            r.results.len(),
            if bad.is_empty() { String::new() } else { format!("; first bad: {bad:?}") }
        ),
    )
}

/// Sampled scalars for direct oracle calls: `count` draws from the sampler's
/// auxiliary slot for `(tag, n)`.
fn draws(tag: &str, n: i64, count: usize) -> Vec<G> {
    let slots = Slots { aux: AuxCount::Fixed(count), ..Slots::BASE };
    first_candidate(tag, &slots, n, SEED, 0, 0).expect("point").1.aux
}

fn q_of(tag: &str, n: i64) -> G {
    let p = first_candidate(tag, &Slots::BASE, n, SEED, 0, 0).expect("point").1;
    p.q()
}

/// Evaluate `f` at the first filtered point for `(tag, n)` where it does not
/// hit a pole, exactly as the suite runner resamples. `None` if no point works.
fn at_point<T>(tag: &str, slots: Slots, n: i64, f: impl Fn(&ParamPoint) -> Result<T, EvalError>) -> Option<T> {
    let mut from = 0;
    while let Some((attempt, p)) = first_candidate(tag, &slots, n, SEED, 0, from) {
        match f(&p) {
            Err(e) if e.is_degenerate() => from = attempt + 1,
            other => return other.ok(),
        }
    }
    None
}

fn criterion_1(g: &mut Gate) {
    let (r, t) = run(&["thm_main_phi", "thm_main_aw"], None);
    let (ok, d) = all_pass(&r);
    let r_values: std::collections::BTreeSet<i64> =
        r.results.iter().filter_map(|x| x.point.split("r=").nth(1)?.split_whitespace().next()?.parse().ok()).collect();
    g.record(
        "criterion 1 (main determinant, both forms, n=1..6, r in -2..3)",
        ok && t < THEOREM_BUDGET && r.results.len() == 60,
        format!("{d}; r values seen {r_values:?}; {:.2?} (budget {THEOREM_BUDGET:?})", t),
    );
}

fn criterion_2(g: &mut Gate) {
    let (r, t) = run(&["cor_even_phi", "cor_even_aw", "cor_odd_phi", "cor_odd_aw"], None);
    let (ok, d) = all_pass(&r);
    g.record(
        "criterion 2 (even/odd size corollaries, m=1..3, four forms)",
        ok && r.results.len() == 60,
        format!("{d}; {t:.2?}"),
    );
}

fn criterion_3(g: &mut Gate) {
    let (r, t) = run(&["hankel", "pfaffian_moments", "c1_pfaffian_square"], None);
    let (ok, d) = all_pass(&r);
    let max_pf = r.results.iter().filter(|x| x.id == "pfaffian_moments").map(|x| 2 * x.n).max();
    g.record(
        "criterion 3 (Hankel n=1..6, Pfaffian 2n<=8, c=1 det = Pf^2)",
        ok && max_pf == Some(8),
        format!("{d}; largest Pfaffian {max_pf:?}; {t:.2?}"),
    );
}

fn criterion_4(g: &mut Gate) {
    let (r, t) = run(&["mehta_wang", "nishizawa"], None);
    let (ok, d) = all_pass(&r);
    let mut paths = true;
    for n in 0..=10 {
        let classical = Slots { classical: true, ..Slots::BASE };
        paths &= at_point("mehta_wang_paths", classical, n, |p| {
            let (a, b, _) = p.classical()?;
            Ok(mehta_wang_d(n, a, b, MehtaWangMethod::Recurrence)? == mehta_wang_d(n, a, b, MehtaWangMethod::Sum)?)
        }) == Some(true);
        let half = Slots { half_powers: true, ..Slots::BASE };
        paths &= at_point("nishizawa_paths", half, n, |p| {
            let ((s, t), q) = (p.half_powers()?, p.q());
            let rec = nishizawa_d(n, s, t, &q, NishizawaMethod::Recurrence)?;
            Ok(rec == nishizawa_d(n, s, t, &q, NishizawaMethod::Explicit)?
                && rec == nishizawa_d(n, s, t, &q, NishizawaMethod::AlSalamChihara)?)
        }) == Some(true);
    }
    g.record(
        "criterion 4 (Mehta-Wang n=1..6, q-analogue n=1..5, D paths n<=10)",
        ok && paths,
        format!("{d}; D_n and D_(n,q) paths agree for n=0..10: {paths}; {t:.2?}"),
    );
}

fn criterion_5(g: &mut Gate) {
    let (r, t) = run(&["classical_hahn", "classical_wilson_even", "classical_wilson_odd"], None);
    let (ok, d) = all_pass(&r);
    g.record("criterion 5 (classical Hahn n=1..5, Wilson m=1..2)", ok, format!("{d}; {t:.2?}"));
}

fn criterion_6(g: &mut Gate) {
    let ids = [
        "thm_rows",
        "r_closed",
        "r_recurrence",
        "r_sum",
        "q_kratt",
        "residue_ids",
        "vandermonde_vw",
        "bottom_rows",
        "triangular_inverses",
        "pq_lemma",
        "m_recurrence",
        "m_closed",
    ];
    let (r, t) = run(&ids, None);
    let (ok, d) = all_pass(&r);
    let max_n = r.results.iter().map(|x| x.n).max();
    g.record(
        "criterion 6 (row-selection internals, n<=6)",
        ok && t < INTERNAL_BUDGET && max_n == Some(6),
        format!("{d}; {t:.2?} (budget {INTERNAL_BUDGET:?})"),
    );
}

fn criterion_7(g: &mut Gate) {
    let (r, t) = run(&["phi_contiguous_1", "phi_contiguous_2", "phi_contiguous_3", "watson", "w8_contiguous"], None);
    let (ok, d) = all_pass(&r);
    let order = r
        .results
        .iter()
        .filter(|x| x.id.starts_with("phi_contiguous_") && x.id != "phi_contiguous_3")
        .map(|x| x.n)
        .min();
    g.record(
        "criterion 7 (contiguous relations to z^12, balanced relation, Watson, 8W7 relation, n<=5)",
        ok && order == Some(12),
        format!("{d}; coefficient order {order:?}; {t:.2?}"),
    );
}

fn criterion_8(g: &mut Gate) {
    let (r, t) = run(&["even_odd_factorization", "andrews"], None);
    let (ok, d) = all_pass(&r);
    let mut paths = true;
    let mut symmetric = true;
    let slots = Slots { delta: true, x: true, ..Slots::BASE };
    for n in 0..=8 {
        let outcome = at_point("askey_wilson_paths", slots, n, |p| {
            let (q, x) = (p.q(), p.x()?.clone());
            let abcd = [&p.alpha, &p.beta, &p.gamma, p.delta()?];
            let eval = |v: [&G; 4], method| {
                let params =
                    AWParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), q.clone(), x.clone());
                askey_wilson(n, &params, method)
            };
            let rec = eval(abcd, AwMethod::Recurrence)?;
            let agree = rec == eval(abcd, AwMethod::Hypergeometric)?;
            let mut sym = true;
            if n <= 4 {
                for perm in permutations(abcd) {
                    sym &= rec == eval(perm, AwMethod::Recurrence)? && rec == eval(perm, AwMethod::Hypergeometric)?;
                }
            }
            Ok((agree, sym))
        });
        let (agree, sym) = outcome.unwrap_or((false, false));
        paths &= agree;
        symmetric &= sym;
    }
    g.record(
        "criterion 8 (even/odd factorization m<=3, Andrews n<=8, AW paths n<=8, 24-fold symmetry n<=4)",
        ok && paths && symmetric,
        format!("{d}; paths agree: {paths}; symmetric: {symmetric}; {t:.2?}"),
    );
}

fn permutations<T: Clone>(items: [T; 4]) -> Vec<[T; 4]> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let idx = [i, j, k, l];
                    if (0..4).all(|v| idx.contains(&v)) {
                        out.push(idx.map(|m| items[m].clone()));
                    }
                }
            }
        }
    }
    out
}

fn criterion_9(g: &mut Gate) {
    let (r6, t6) = run(&["dj_generic"], Some((6, 6)));
    let (r, t) = run(&["dj_specialized", "quadratic_full", "quadratic_clean", "quadratic_phi"], None);
    let (ok6, d6) = all_pass(&r6);
    let (ok, d) = all_pass(&r);
    g.record(
        "criterion 9 (condensation on random 6x6, specialized n<=6, quadratic relations n=1..8)",
        ok6 && ok,
        format!("6x6: {d6}; rest: {d}; {:.2?}", t6 + t),
    );
}

fn criterion_10(g: &mut Gate) {
    let (r, t) = run(&["conjecture_mw3"], None);
    let s = r.summary;
    let points = s.evidence_pass + s.evidence_fail;
    for x in r.results.iter().filter(|x| x.status == Status::EvidenceFail) {
        println!("  COUNTEREXAMPLE n={} point: {} lhs={:?} rhs={:?}", x.n, x.point, x.lhs, x.rhs);
    }
    g.record(
        "criterion 10 (conjectured relation, evidence mode, n=1..6)",
        points >= 25 && s.evidence_fail == 0,
        format!(
            "{} evidence-pass, {} evidence-fail, {} skipped over {points} points; {t:.2?}",
            s.evidence_pass, s.evidence_fail, s.skipped
        ),
    );
}

fn square(tag: &str, n: usize) -> ExactMatrix {
    let v = draws(tag, n as i64, n * n);
    ExactMatrix::from_fn(n, n, |i, j| v[(i - 1) * n + j - 1].clone())
}

fn criterion_11(g: &mut Gate) {
    let mut pf = true;
    for m in 1..=4 {
        let a = square("skew", 2 * m);
        let s = ExactMatrix::from_fn(2 * m, 2 * m, |i, j| &a[(i, j)] - &a[(j, i)]);
        let p = s.pfaffian().unwrap();
        pf &= &p * &p == s.det().unwrap();
    }
    let mut det = true;
    for n in 1..=5 {
        let a = square("elimination", n);
        det &= a.determinant(DetMethod::Elimination).unwrap() == a.determinant(DetMethod::Cofactor).unwrap();
    }
    let v = draws("field", 0, 3);
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let field = x + y == y + x
        && x * y == y * x
        && &(x * y) * z == x * &(y * z)
        && x * &(y + z) == x * y + x * z
        && (x * &x.inv().unwrap()).is_one();
    let q = q_of("pochhammer", 0);
    let a = &v[0];
    let mut cocycle = true;
    for m in -4..=4 {
        for n in -4..=4 {
            let l = poch(a, &q, m + n).unwrap();
            let r = poch(a, &q, m).unwrap() * poch(&(a * &q.pow(m).unwrap()), &q, n).unwrap();
            cocycle &= l == r;
        }
    }
    let mut binomial = true;
    for n in 0..=8 {
        let mut sum = G::zero();
        for k in 0..=n {
            sum += q_binomial(n, k, &q).unwrap() * q.pow(k * (k - 1) / 2).unwrap() * y.powu(k as u64);
        }
        binomial &= sum == poch(&-y, &q, n).unwrap();
    }
    g.record(
        "criterion 11 (Pf^2=det 2m<=8, elimination=cofactor n<=5, field axioms, Pochhammer cocycle, q-binomial theorem)",
        pf && det && field && cocycle && binomial,
        format!("pf={pf} det={det} field={field} cocycle={cocycle} binomial={binomial}"),
    );
}

fn full_suite(g: &mut Gate) {
    let t = Instant::now();
    let first = qdet_lab::run(&["all"], None, TRIALS, SEED).unwrap();
    let elapsed = t.elapsed();
    let second = qdet_lab::run(&["all"], None, TRIALS, SEED).unwrap();
    let identical = qdet_lab::to_json(&first) == qdet_lab::to_json(&second);
    let s = first.summary;
    g.record(
        "full default suite (seed 42, 5 trials): clean, within budget, byte-reproducible",
        s.fail == 0 && s.skipped == 0 && s.evidence_fail == 0 && elapsed < SUITE_BUDGET && identical,
        format!(
            "pass={} fail={} evidence_pass={} evidence_fail={} skipped={}; {elapsed:.2?} (budget {SUITE_BUDGET:?}); identical JSON: {identical}",
            s.pass, s.fail, s.evidence_pass, s.evidence_fail, s.skipped
        ),
    );
}

#[test]
fn acceptance() {
    let mut g = Gate { lines: Vec::new() };
    criterion_1(&mut g);
    criterion_2(&mut g);
    criterion_3(&mut g);
    criterion_4(&mut g);
    criterion_5(&mut g);
    criterion_6(&mut g);
    criterion_7(&mut g);
    criterion_8(&mut g);
    criterion_9(&mut g);
    criterion_10(&mut g);
    criterion_11(&mut g);
    full_suite(&mut g);
    let failed: Vec<&String> = g.lines.iter().filter(|(ok, _)| !ok).map(|(_, l)| l).collect();
    assert!(failed.is_empty(), "acceptance failures:\n{failed:#?}");
}

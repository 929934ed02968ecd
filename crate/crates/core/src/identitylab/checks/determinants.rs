//! Moment determinants and Pfaffians with their closed forms: the Hankel and
//! Pfaffian evaluations, the main determinant theorem in its 4phi3 and
//! Askey-Wilson forms, the even/odd corollaries, and the Mehta-Wang and
//! Nishizawa determinants.

use alloc::vec;
use alloc::vec::Vec;

use super::{cmp, det, div, exact, prod, sign, size, CheckOutput};
use crate::error::EvalError;
use crate::exactlinalg::ExactMatrix;
use crate::exactnum::GaussianRational as G;
use crate::identitylab::builders::{build_hankel, build_theorem_matrix};
use crate::identitylab::params::ParamPoint;
use crate::orthopoly::{
    al_salam_chihara, askey_wilson, mehta_wang_d, nishizawa_d, AWParams, AscMethod, AwMethod, MehtaWangMethod,
    NishizawaMethod,
};
use crate::qseries::{phi, q_factorial, q_pochhammer as poch, rising_factorial, SeriesSpec};

/// Squares and roots of one point, unpacked once.
pub(crate) struct Roots {
    pub a: G,
    pub b: G,
    pub c: G,
    pub q: G,
    pub al: G,
    pub be: G,
    pub ga: G,
    pub ka: G,
}

impl Roots {
    pub fn of(p: &ParamPoint) -> Self {
        Roots {
            a: p.a(),
            b: p.b(),
            c: p.c(),
            q: p.q(),
            al: p.alpha.clone(),
            be: p.beta.clone(),
            ga: p.gamma.clone(),
            ka: p.kappa.clone(),
        }
    }
}

/// `prod_{k=1}^{n} (q;q)_{k-1} (aq;q)_{k+r+s} (bq;q)_{k-2} / (abq^2;q)_{k+n+r-2}`,
/// the product shared by both forms of the main theorem (`s` is 0 or -1).
fn theorem_product(n: i64, r: i64, s: i64, v: &Roots) -> Result<G, EvalError> {
    let (aq, bq, abq2) = (&v.a * &v.q, &v.b * &v.q, &v.a * &v.b * &v.q * &v.q);
    prod(1, n, |k| {
        let num = poch(&v.q, &v.q, k - 1)? * poch(&aq, &v.q, k + r + s)? * poch(&bq, &v.q, k - 2)?;
        div(num, &poch(&abq2, &v.q, k + n + r - 2)?, "theorem product denominator")
    })
}

pub(crate) fn theorem_phi_rhs(n: i64, r: i64, v: &Roots) -> Result<G, EvalError> {
    let Roots { a, b, c, q, al, be, ga, ka } = v;
    let eq = exact(n * (n + 1) * (2 * n - 5), 6)? + exact(n * (n - 3) * r, 2)?;
    let pre = sign(n)
        * a.pow(exact(n * (n - 3), 2)?)?
        * q.pow(eq)?
        * poch(&(a * b * c * q.pow(r + 1)?), &(q * q), n)?
        * theorem_product(n, r, 0, v)?;
    let s = al * ga * ka.pow(r + 1)?;
    let sb = &s * be;
    let spec = SeriesSpec::new(
        vec![q.pow(-n)?, s.clone(), -&s, a * b * q.pow(n + r)?],
        vec![a * &q.pow(r + 1)?, sb.clone(), -sb],
        q.clone(),
        q.clone(),
    );
    Ok(pre * phi(&spec)?)
}

/// Askey-Wilson form: returns the right-hand side and the polynomial value by
/// the recurrence and by the 4phi3, in that order.
pub(crate) fn theorem_aw_rhs(n: i64, r: i64, v: &Roots) -> Result<(G, G, G), EvalError> {
    let Roots { q, al, be, ga, ka, .. } = v;
    let i = G::i();
    let ek = exact(n * (n - 2) * (2 * n + 1), 3)? + n * (n - 2) * r;
    let pre = (-&i).powu(n as u64) * al.pow(n * (n - 2))? * ga.pow(n)? * ka.pow(ek)? * theorem_product(n, r, -1, v)?;
    let kr = ka.pow(r + 1)?;
    let params =
        AWParams::new(al * ga * &kr * &i, -(al.checked_div(ga)? * &kr * &i), be * &i, -(be * &i), q.clone(), G::zero());
    let p_rec = askey_wilson(n, &params, AwMethod::Recurrence)?;
    let p_hyp = askey_wilson(n, &params, AwMethod::Hypergeometric)?;
    Ok((pre * &p_hyp, p_rec, p_hyp))
}

fn theorem_lhs(n: i64, r: i64, v: &Roots) -> Result<G, EvalError> {
    det(&build_theorem_matrix(size(n)?, r, &v.a, &v.b, &v.c, &v.q)?)
}

pub fn thm_main_phi(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = theorem_lhs(n, p.r, &v)?;
    Ok(vec![cmp("det = 4phi3 closed form", lhs, theorem_phi_rhs(n, p.r, &v)?)])
}

pub fn thm_main_aw(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = theorem_lhs(n, p.r, &v)?;
    let (rhs, p_rec, p_hyp) = theorem_aw_rhs(n, p.r, &v)?;
    let phi_form = theorem_phi_rhs(n, p.r, &v)?;
    Ok(vec![
        cmp("det = Askey-Wilson closed form", lhs, rhs.clone()),
        cmp("Askey-Wilson form = 4phi3 form", rhs, phi_form),
        cmp("p_n recurrence = p_n 4phi3", p_rec, p_hyp),
    ])
}

pub(crate) fn even_phi_rhs(m: i64, r: i64, v: &Roots) -> Result<(G, G), EvalError> {
    let Roots { a, b, c, q, .. } = v;
    let q2 = q * q;
    let (aq, bq, abq2) = (a * q, b * q, a * b * &q2);
    let eq = exact(2 * m * (m - 1) * (4 * m + 1), 3)? + 2 * m * (m - 1) * r;
    let sq = prod(1, m, |k| {
        let num = poch(q, q, 2 * k - 1)? * poch(&aq, q, 2 * k + r - 1)? * poch(&bq, q, 2 * k - 2)?;
        let f = div(num, &poch(&abq2, q, 2 * (k + m) + r - 3)?, "even corollary product")?;
        Ok(&f * &f)
    })?;
    let pre = a.pow(2 * m * (m - 1))? * c.pow(m)? * q.pow(eq)? * sq;
    let spec = SeriesSpec::new(
        vec![q.pow(-2 * m)?, q.pow(1 - 2 * m)?.checked_div(b)?, c.clone(), c.inv()?],
        vec![q.clone(), a * &q.pow(r + 1)?, q.pow(1 - 4 * m - r)?.checked_div(&(a * b))?],
        q2.clone(),
        q2,
    );
    let series = phi(&spec)?;
    Ok((pre * &series, series))
}

fn even_aw_rhs(m: i64, r: i64, v: &Roots) -> Result<(G, G, G), EvalError> {
    let Roots { a, b, c, q, .. } = v;
    let q2 = q * q;
    let (aq, bq, abq2) = (a * q, b * q, a * b * &q2);
    let e = exact(m * (8 * m * m + 3 * m - 2), 3)? + m * (2 * m - 1) * r;
    let p1 = prod(1, 2 * m, |k| {
        let num = poch(q, q, k - 1)? * poch(&aq, q, k + r - 1)?;
        div(num, &poch(&abq2, q, k + 2 * m + r - 2)?, "even corollary product")
    })?;
    let p2 = prod(1, m, |k| {
        let f = poch(&bq, q, 2 * k - 2)?;
        Ok(&f * &f)
    })?;
    let pre = sign(m) * a.pow(m * (2 * m - 1))? * b.pow(m)? * c.pow(m)? * q.pow(e)? * p1 * p2;
    let x = (c + &c.inv()?) * G::ratio(1, 2);
    let params =
        AWParams::new(G::one(), q.clone(), a * &q.pow(r + 1)?, q.pow(1 - 4 * m - r)?.checked_div(&(a * b))?, q2, x);
    let p_rec = askey_wilson(m, &params, AwMethod::Recurrence)?;
    let p_hyp = askey_wilson(m, &params, AwMethod::Hypergeometric)?;
    Ok((pre * &p_hyp, p_rec, p_hyp))
}

fn odd_phi_rhs(m: i64, r: i64, v: &Roots) -> Result<G, EvalError> {
    let Roots { a, b, c, q, .. } = v;
    let q2 = q * q;
    let (aq, bq, abq2) = (a * q, b * q, a * b * &q2);
    let e = exact(2 * m * (m + 1) * (4 * m - 1), 3)? + 2 * m * m * r;
    let block = |k: i64, shift: i64| -> Result<G, EvalError> {
        let num = poch(q, q, 2 * k - 1)? * poch(&aq, q, 2 * k + r + shift)? * poch(&bq, q, 2 * k - 2)?;
        div(num, &poch(&abq2, q, 2 * (k + m - 1) + r)?, "odd corollary product")
    };
    let pre = a.pow(2 * m * m)?
        * c.pow(m)?
        * q.pow(e)?
        * div(c.one_minus(), &q.one_minus(), "q = 1")?
        * prod(1, m + 1, |k| block(k, -2))?
        * prod(1, m, |k| block(k, 0))?;
    let spec = SeriesSpec::new(
        vec![q.pow(-2 * m)?, q.pow(1 - 2 * m)?.checked_div(b)?, c * q, q.checked_div(c)?],
        vec![q.pow(3)?, a * &q.pow(r + 2)?, q.pow(-4 * m - r)?.checked_div(&(a * b))?],
        q2.clone(),
        q2,
    );
    Ok(pre * phi(&spec)?)
}

fn odd_aw_rhs(m: i64, r: i64, v: &Roots) -> Result<(G, G, G), EvalError> {
    let Roots { a, b, c, q, .. } = v;
    let q2 = q * q;
    let (aq, bq, abq2) = (a * q, b * q, a * b * &q2);
    let e = exact(m * (8 * m * m + 15 * m + 4), 3)? + m * (2 * m + 1) * r;
    let p1 = prod(1, 2 * m + 1, |k| {
        let num = poch(q, q, k - 1)? * poch(&aq, q, k + r - 1)?;
        div(num, &poch(&abq2, q, k + 2 * m + r - 1)?, "odd corollary product")
    })?;
    let p2 = prod(1, m + 1, |k| poch(&bq, q, 2 * k - 2))? * prod(1, m, |k| poch(&bq, q, 2 * k - 2))?;
    let pre = sign(m) * a.pow(m * (2 * m + 1))? * b.pow(m)? * c.pow(m)? * c.one_minus() * q.pow(e)? * p1 * p2;
    let x = (c + &c.inv()?) * G::ratio(1, 2);
    let params =
        AWParams::new(q.clone(), q2.clone(), a * &q.pow(r + 1)?, q.pow(-4 * m - r - 1)?.checked_div(&(a * b))?, q2, x);
    let p_rec = askey_wilson(m, &params, AwMethod::Recurrence)?;
    let p_hyp = askey_wilson(m, &params, AwMethod::Hypergeometric)?;
    Ok((pre * &p_hyp, p_rec, p_hyp))
}

pub fn cor_even_phi(m: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = theorem_lhs(2 * m, p.r, &v)?;
    Ok(vec![cmp("det (size 2m) = 4phi3 in base q^2", lhs, even_phi_rhs(m, p.r, &v)?.0)])
}

pub fn cor_even_aw(m: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = theorem_lhs(2 * m, p.r, &v)?;
    let (rhs, p_rec, p_hyp) = even_aw_rhs(m, p.r, &v)?;
    Ok(vec![cmp("det (size 2m) = Askey-Wilson in base q^2", lhs, rhs), cmp("p_m recurrence = p_m 4phi3", p_rec, p_hyp)])
}

pub fn cor_odd_phi(m: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = theorem_lhs(2 * m + 1, p.r, &v)?;
    Ok(vec![cmp("det (size 2m+1) = 4phi3 in base q^2", lhs, odd_phi_rhs(m, p.r, &v)?)])
}

pub fn cor_odd_aw(m: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = theorem_lhs(2 * m + 1, p.r, &v)?;
    let (rhs, p_rec, p_hyp) = odd_aw_rhs(m, p.r, &v)?;
    Ok(vec![
        cmp("det (size 2m+1) = Askey-Wilson in base q^2", lhs, rhs),
        cmp("p_m recurrence = p_m 4phi3", p_rec, p_hyp),
    ])
}

pub(crate) fn hankel_rhs(n: i64, r: i64, a: &G, b: &G, q: &G) -> Result<G, EvalError> {
    let (aq, bq, abq2) = (a * q, b * q, a * b * q * q);
    let e = exact(n * (n - 1) * (2 * n - 1), 6)? + exact(n * (n - 1) * r, 2)?;
    let p = prod(1, n, |k| {
        let num = poch(q, q, k - 1)? * poch(&bq, q, k - 1)? * poch(&aq, q, k + r - 1)?;
        div(num, &poch(&abq2, q, k + n + r - 2)?, "Hankel product")
    })?;
    Ok(a.pow(exact(n * (n - 1), 2)?)? * q.pow(e)? * p)
}

pub fn hankel(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let lhs = det(&build_hankel(size(n)?, p.r, &v.a, &v.b, &v.q)?)?;
    Ok(vec![cmp("Hankel det = closed form", lhs, hankel_rhs(n, p.r, &v.a, &v.b, &v.q)?)])
}

pub(crate) fn pfaffian_rhs(n: i64, r: i64, a: &G, b: &G, q: &G) -> Result<G, EvalError> {
    let (aq, bq, abq2) = (a * q, b * q, a * b * q * q);
    let e = exact(n * (n - 1) * (4 * n + 1), 3)? + n * (n - 1) * r;
    let p1 = prod(1, n - 1, |k| poch(&bq, q, 2 * k))?;
    let p2 = prod(1, n, |k| {
        let num = poch(q, q, 2 * k - 1)? * poch(&aq, q, 2 * k + r - 1)?;
        div(num, &poch(&abq2, q, 2 * (k + n) + r - 3)?, "Pfaffian product")
    })?;
    Ok(a.pow(n * (n - 1))? * q.pow(e)? * p1 * p2)
}

pub fn pfaffian_moments(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let m = build_theorem_matrix(2 * size(n)?, p.r, &v.a, &v.b, &G::one(), &v.q)?;
    let pf = m.pfaffian()?;
    let mut out = vec![cmp("Pf = closed form", pf.clone(), pfaffian_rhs(n, p.r, &v.a, &v.b, &v.q)?)];
    if n <= 3 {
        out.push(cmp("Pf elimination = Pf expansion", pf, m.pfaffian_expansion()?));
    }
    Ok(out)
}

pub fn c1_pfaffian_square(m: i64, p: &ParamPoint) -> CheckOutput {
    let mut v = Roots::of(p);
    v.c = G::one();
    v.ga = G::one();
    let mat = build_theorem_matrix(2 * size(m)?, p.r, &v.a, &v.b, &v.c, &v.q)?;
    let d = det(&mat)?;
    let pf = mat.pfaffian()?;
    let closed = pfaffian_rhs(m, p.r, &v.a, &v.b, &v.q)?;
    let (even, series) = even_phi_rhs(m, p.r, &v)?;
    Ok(vec![
        cmp("det at c=1 = Pf^2", d.clone(), &pf * &pf),
        cmp("det at c=1 = (Pfaffian closed form)^2", d.clone(), &closed * &closed),
        cmp("det at c=1 = even corollary", d, even),
        cmp("4phi3 at c=1 = 1", series, G::one()),
    ])
}

/// Classical Mehta-Wang, divided by `Gamma(b)^n`:
/// `det((a+j-i)(b)_{i+j})_{0..n-1} = D_n(a,b) prod_{i<n} i! (b)_i`.
pub fn mehta_wang(n: i64, p: &ParamPoint) -> CheckOutput {
    let (a, b, _) = p.classical()?;
    let nn = size(n)?;
    let m = ExactMatrix::from_fn(nn, nn, |i, j| {
        (a + &G::from_integer(j as i64 - i as i64)) * rising_factorial(b, (i + j - 2) as u64)
    });
    let lhs = det(&m)?;
    let d_rec = mehta_wang_d(n, a, b, MehtaWangMethod::Recurrence)?;
    let d_sum = mehta_wang_d(n, a, b, MehtaWangMethod::Sum)?;
    let mut rhs = d_rec.clone();
    for i in 0..n {
        rhs *= crate::qseries::factorial(i as u64) * rising_factorial(b, i as u64);
    }
    Ok(vec![cmp("det = D_n prod i! (b)_i", lhs, rhs), cmp("D_n recurrence = D_n sum", d_rec, d_sum)])
}

/// Nishizawa's q-analogue. `s` and `t` play `q^{alpha/2}`, `q^{gamma/2}` in
/// the normalized form and `q^{a/2}`, `q^{b/2}` in the original statement.
pub fn nishizawa(n: i64, p: &ParamPoint) -> CheckOutput {
    let (s, t) = p.half_powers()?;
    let q = p.q();
    let nn = size(n)?;
    let omq = q.one_minus();
    let (qa, qg) = (s * s, t * t);
    let i = G::i();

    // Normalized form: q^{n(n-1)/2} (1-q)^{n^2} det([g+j-i]_q (q^al;q)_{i+j-2} / (1-q)^{i+j-2}).
    let m = ExactMatrix::try_from_fn(nn, nn, |r, c| -> Result<G, EvalError> {
        let (r, c) = (r as i64, c as i64);
        let qn = div((&qg * &q.pow(c - r)?).one_minus(), &omq, "q = 1")?;
        Ok(qn * div(poch(&qa, &q, r + c - 2)?, &omq.pow(r + c - 2)?, "q = 1")?)
    })?;
    let lhs = q.pow(exact(n * (n - 1), 2)?)? * omq.pow(n * n)? * det(&m)?;
    let asc =
        al_salam_chihara(n, &G::zero(), &(s * t * &i), &-(s.checked_div(t)? * &i), &q, AscMethod::Hypergeometric)?;
    let rhs = (-&i).powu(nn as u64)
        * s.pow(n * (n - 2))?
        * t.pow(n)?
        * q.pow(exact(n * (n - 1) * (n - 2), 3)?)?
        * prod(1, n, |k| Ok(poch(&q, &q, k - 1)? * poch(&qa, &q, k - 1)?))?
        * asc;
    let via_theorem = det(&build_theorem_matrix(nn, 0, &qa.checked_div(&q)?, &G::zero(), &qg, &q)?)?;

    // Original statement with q^a = s^2, q^b = t^2 after dividing by Gamma_q(b)^n.
    let qb = &qg;
    let orig = ExactMatrix::try_from_fn(nn, nn, |r, c| -> Result<G, EvalError> {
        let (r, c) = (r as i64, c as i64);
        let qn = div((&qa * &q.pow(c - r)?).one_minus(), &omq, "q = 1")?;
        Ok(qn * div(poch(qb, &q, r + c - 2)?, &omq.pow(r + c - 2)?, "q = 1")?)
    })?;
    let orig_lhs = det(&orig)?;
    let d_rec = nishizawa_d(n, s, t, &q, NishizawaMethod::Recurrence)?;
    let orig_rhs = qa.pow(n)?
        * qb.pow(exact(n * (n - 1), 2)?)?
        * q.pow(exact(n * (n - 1) * (2 * n - 7), 6)?)?
        * &d_rec
        * prod(0, n - 1, |k| {
            let f = q_factorial(k as u64, &q)? * poch(qb, &q, k)?;
            div(f, &omq.pow(k)?, "q = 1")
        })?;
    let d_exp = nishizawa_d(n, s, t, &q, NishizawaMethod::Explicit)?;
    let d_asc = nishizawa_d(n, s, t, &q, NishizawaMethod::AlSalamChihara)?;
    let out: Vec<_> = vec![
        cmp("normalized det = Al-Salam-Chihara closed form", lhs.clone(), rhs),
        cmp("normalized det = main theorem at b=0, r=0", lhs, via_theorem),
        cmp("original det = q-power D_(n,q) prod [k]_q! (q^b;q)_k", orig_lhs, orig_rhs),
        cmp("D_(n,q) recurrence = explicit sum", d_rec.clone(), d_exp),
        cmp("D_(n,q) recurrence = Al-Salam-Chihara form", d_rec, d_asc),
    ];
    Ok(out)
}

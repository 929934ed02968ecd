//! Series-level lemmas: contiguous relations, Watson's transformation, the
//! `8W7` contiguous relation, the even/odd factorization of Askey-Wilson
//! polynomials at the origin and Andrews' evaluation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::determinants::Roots;
use super::{cmp, div, sign, CheckOutput};
use crate::error::EvalError;
use crate::exactnum::GaussianRational as G;
use crate::identitylab::params::ParamPoint;
use crate::orthopoly::{andrews_rhs, askey_wilson, AWParams, AwMethod};
use crate::qseries::{phi, phi_coeff, q_pochhammer as poch, q_pochhammer_multi, w_series, SeriesSpec};

/// Order to which the non-terminating contiguous relations are compared.
pub const CONTIGUOUS_ORDER: i64 = 12;

fn order(n: i64) -> Result<u64, EvalError> {
    u64::try_from(n).map_err(|_| EvalError::Domain(format!("series order must be >= 0, got {n}")))
}

fn coeff(nums: &[G], dens: &[G], q: &G, k: u64) -> Result<G, EvalError> {
    phi_coeff(&SeriesSpec::new(nums.to_vec(), dens.to_vec(), q.clone(), G::one()), k)
}

fn unit_phi(nums: Vec<G>, dens: Vec<G>, q: &G) -> Result<G, EvalError> {
    phi(&SeriesSpec::new(nums, dens, q.clone(), q.clone()))
}

/// Coefficients `z^0..z^K` of the first contiguous relation, `K = n`.
pub fn phi_contiguous_1(n: i64, p: &ParamPoint) -> CheckOutput {
    let q = p.q();
    let [a, b, c, d, e, f, g] = <&[G; 7]>::try_from(p.aux(7)?).expect("length checked");
    let qd = |x: &G| x * &q;
    let factor = div(
        (b - a) * c.one_minus() * d.one_minus(),
        &(e.one_minus() * f.one_minus() * g.one_minus()),
        "contiguous prefactor",
    )?;
    let shifted = [qd(a), qd(b), qd(c), qd(d)];
    let shifted_dens = [qd(e), qd(f), qd(g)];
    let dens = [e.clone(), f.clone(), g.clone()];
    let mut out = Vec::new();
    for k in 0..=order(n)? {
        let lhs = coeff(&[a.clone(), qd(b), c.clone(), d.clone()], &dens, &q, k)?
            - coeff(&[qd(a), b.clone(), c.clone(), d.clone()], &dens, &q, k)?;
        let rhs = if k == 0 { G::zero() } else { &factor * &coeff(&shifted, &shifted_dens, &q, k - 1)? };
        out.push(cmp(format!("coefficient of z^{k}"), lhs, rhs));
    }
    Ok(out)
}

/// Coefficients `z^0..z^K` of the second contiguous relation, `K = n`.
pub fn phi_contiguous_2(n: i64, p: &ParamPoint) -> CheckOutput {
    let q = p.q();
    let [a, b, c, d, e, f, g] = <&[G; 7]>::try_from(p.aux(7)?).expect("length checked");
    let nums = [a.clone(), b.clone(), c.clone(), d.clone()];
    let (eq, fq) = (e * &q, f * &q);
    let mut out = Vec::new();
    for k in 0..=order(n)? {
        let lhs = f.one_minus() * (a - e) * coeff(&nums, &[eq.clone(), f.clone(), g.clone()], &q, k)?
            - e.one_minus() * (a - f) * coeff(&nums, &[e.clone(), fq.clone(), g.clone()], &q, k)?;
        let rhs = a.one_minus()
            * (f - e)
            * coeff(&[a * &q, b.clone(), c.clone(), d.clone()], &[eq.clone(), fq.clone(), g.clone()], &q, k)?;
        out.push(cmp(format!("coefficient of z^{k}"), lhs, rhs));
    }
    Ok(out)
}

/// The terminating balanced three-term relation, with
/// `b = e f g q^(n-1) / (c d)`.
pub fn phi_contiguous_3(n: i64, p: &ParamPoint) -> CheckOutput {
    if n < 1 {
        return Err(EvalError::Domain("the terminating relation needs n >= 1".into()));
    }
    let q = p.q();
    let [c, d, e, f, g] = <&[G; 5]>::try_from(p.aux(5)?).expect("length checked");
    let qd = |x: &G| x * &q;
    let top = q.pow(-n)?;
    let b = div(e * f * g * q.pow(n - 1)?, &(c * d), "balanced parameter")?;
    let lhs = e.one_minus()
        * f.one_minus()
        * g.one_minus()
        * unit_phi(vec![top.clone(), b.clone(), c.clone(), d.clone()], vec![e.clone(), f.clone(), g.clone()], &q)?;
    let f_c = div(f.clone(), c, "f/c")?;
    let g_c = div(g.clone(), c, "g/c")?;
    let e_d = div(e.clone(), d, "e/d")?;
    let fg_cd = div(f * g, &(c * d), "fg/cd")?;
    let up = &top * &q;
    let t1 = c
        * &e.one_minus()
        * f_c.one_minus()
        * g_c.one_minus()
        * unit_phi(vec![up.clone(), qd(&b), c.clone(), d.clone()], vec![e.clone(), qd(f), qd(g)], &q)?;
    let t2 = d
        * &c.one_minus()
        * e_d.one_minus()
        * fg_cd.one_minus()
        * unit_phi(vec![up, qd(&b), qd(c), d.clone()], vec![qd(e), qd(f), qd(g)], &q)?;
    Ok(vec![
        cmp("balancing: q * q^-n * b * c * d = e * f * g", &q * &top * &b * c * d, e * f * g),
        cmp("three-term terminating relation", lhs, t1 + t2),
    ])
}

pub fn watson(n: i64, p: &ParamPoint) -> CheckOutput {
    let q = p.q();
    let al = &p.alpha;
    let a = p.a();
    let [b, c, d, e] = <&[G; 4]>::try_from(p.aux(4)?).expect("length checked");
    let top = q.pow(-n)?;
    let z = div(&a * &a * q.pow(n + 2)?, &(b * c * d * e), "Watson argument")?;
    let lhs = w_series(al, &[b.clone(), c.clone(), d.clone(), e.clone(), top.clone()], &q, &z)?;
    let aq = &a * &q;
    let quot = |x: &G| div(aq.clone(), x, "Watson parameter");
    let pre = div(
        q_pochhammer_multi(&[aq.clone(), quot(&(d * e))?], &q, n)?,
        &q_pochhammer_multi(&[quot(d)?, quot(e)?], &q, n)?,
        "Watson prefactor",
    )?;
    let rhs = pre
        * unit_phi(
            vec![top.clone(), d.clone(), e.clone(), quot(&(b * c))?],
            vec![quot(b)?, quot(c)?, div(d * e * top, &a, "Watson parameter")?],
            &q,
        )?;
    Ok(vec![cmp("8W7 = prefactor * balanced 4phi3", lhs, rhs)])
}

pub fn w8_contiguous(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, q, al, ka, .. } = Roots::of(p);
    let [b, c, d, e] = <&[G; 4]>::try_from(p.aux(4)?).expect("length checked");
    let z = div(&a * &a * q.pow(n + 1)?, &(b * c * d * e), "8W7 argument")?;
    let top = q.pow(-n)?;
    let up = &top * &q;
    let aq = &a * &q;
    let lhs = (c - &a)
        * (d - &aq)
        * (e - &aq)
        * (b - &(&a * &q.pow(n)?))
        * w_series(&al, &[b.clone(), c * &q, d.clone(), e.clone(), top], &q, &z)?;
    let t1 = &a
        * &b.one_minus()
        * aq.one_minus()
        * (d * e - &aq)
        * (c * &q.pow(n)?).one_minus()
        * w_series(&(&al * &ka), &[b * &q, c * &q, d.clone(), e.clone(), up.clone()], &q, &z)?;
    let t2 = (b * c - &a)
        * (d - &aq)
        * (e - &aq)
        * (&a * &q.pow(n)?).one_minus()
        * w_series(&al, &[b.clone(), c.clone(), d.clone(), e.clone(), up], &q, &z)?;
    Ok(vec![cmp("three-term 8W7 relation", lhs, t1 + t2)])
}

fn aw(n: i64, x: &G, [a, b, c, d]: [&G; 4], q: &G, method: AwMethod) -> Result<G, EvalError> {
    askey_wilson(n, &AWParams::new(a.clone(), b.clone(), c.clone(), d.clone(), q.clone(), x.clone()), method)
}

/// `p_n(0; a, b, c, -c | q)` in terms of one Askey-Wilson polynomial in base
/// `q^2` at `x0 = -(a/b + b/a)/2`. The left side uses the ₄φ₃ form and the
/// right side the recurrence.
pub fn even_odd_factorization(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, c, q, .. } = Roots::of(p);
    let q2 = &q * &q;
    let ab = &a * &b;
    let x0 = -(div(a.clone(), &b, "a/b")? + div(b.clone(), &a, "b/a")?) * G::ratio(1, 2);
    let lhs = aw(n, &G::zero(), [&a, &b, &c, &-&c], &q, AwMethod::Hypergeometric)?;
    let cc = &c * &c;
    let rhs = if n % 2 == 0 {
        let m = n / 2;
        let last = -div(q.pow(2 - 4 * m)?, &(&ab * &cc), "last parameter")?;
        sign(m)
            * a.pow(m)?
            * b.pow(m)?
            * cc.pow(m)?
            * q.pow(m * (3 * m - 1))?
            * poch(&-&cc, &q2, m)?
            * aw(m, &x0, [&G::one(), &q, &ab, &last], &q2, AwMethod::Recurrence)?
    } else {
        let m = (n - 1) / 2;
        let last = -div(q.pow(-4 * m)?, &(&ab * &cc), "last parameter")?;
        sign(m + 1)
            * a.pow(m)?
            * b.pow(m + 1)?
            * cc.pow(m)?
            * (G::one() + div(a.clone(), &b, "a/b")?)
            * q.pow(m * (3 * m + 1))?
            * poch(&-&cc, &q2, m + 1)?
            * aw(m, &x0, [&q, &q2, &ab, &last], &q2, AwMethod::Recurrence)?
    };
    let label = if n % 2 == 0 { "even degree factorization" } else { "odd degree factorization" };
    Ok(vec![cmp(label, lhs, rhs)])
}

pub fn andrews(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, q, .. } = Roots::of(p);
    let deg = order(n)?;
    let rhs = andrews_rhs(deg, &a, &b, &q)?;
    let (ma, mb) = (-&a, -&b);
    let rec = aw(n, &G::zero(), [&a, &ma, &b, &mb], &q, AwMethod::Recurrence)?;
    let hyp = aw(n, &G::zero(), [&a, &ma, &b, &mb], &q, AwMethod::Hypergeometric)?;
    Ok(vec![
        cmp("p_n(0; a,-a,b,-b) recurrence = closed form", rec, rhs.clone()),
        cmp("p_n(0; a,-a,b,-b) 4phi3 = closed form", hyp, rhs),
    ])
}

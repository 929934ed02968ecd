//! Askey-Wilson, Al-Salam-Chihara, continuous Hahn, Wilson and the
//! Mehta-Wang / Nishizawa `D_n` sequences.
//!
//! Every family has at least two evaluation paths that share no code beyond
//! the scalar field, so one path serves as the oracle for the other.
//!
//! `e^{i theta}` never appears: the conjugate pair
//! `(a e^{i theta}, a e^{-i theta}; q)_k` is expanded as
//! `prod_j (1 - 2 a x q^j + a^2 q^{2j})` with `x = cos theta`.

use alloc::format;

use crate::error::{pole, EvalError};
use crate::exactnum::GaussianRational as G;
use crate::qseries::{f_hyper, factorial, q_number, q_pochhammer, q_pochhammer_multi, rising_factorial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwMethod {
    Recurrence,
    Hypergeometric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscMethod {
    Recurrence,
    Hypergeometric,
    /// Through the Askey-Wilson recurrence with `c = d = 0`.
    AwSpecial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MehtaWangMethod {
    Recurrence,
    Sum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NishizawaMethod {
    Recurrence,
    Explicit,
    AlSalamChihara,
}

/// Parameters of `p_n(x; a, b, c, d | q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AWParams {
    pub a: G,
    pub b: G,
    pub c: G,
    pub d: G,
    pub q: G,
    pub x: G,
}

impl AWParams {
    pub fn new(a: G, b: G, c: G, d: G, q: G, x: G) -> Self {
        AWParams { a, b, c, d, q, x }
    }
}

fn check_degree(n: i64) -> Result<(), EvalError> {
    if n < -1 {
        return Err(EvalError::Domain(format!("degree must be >= -1, got {n}")));
    }
    Ok(())
}

fn nonzero(x: G, what: &str) -> Result<G, EvalError> {
    if x.is_zero() {
        Err(pole(what))
    } else {
        Ok(x)
    }
}

/// `p_n(x; a, b, c, d | q)` in the normalization
/// `(ab, ac, ad; q)_n a^{-n} 4phi3(...)`.
pub fn askey_wilson(n: i64, p: &AWParams, method: AwMethod) -> Result<G, EvalError> {
    check_degree(n)?;
    if n == -1 {
        return Ok(G::zero());
    }
    if p.a.is_zero() {
        return Err(pole("Askey-Wilson parameter a is zero"));
    }
    match method {
        AwMethod::Recurrence => aw_recurrence(n, p),
        AwMethod::Hypergeometric => aw_hypergeometric(n, p),
    }
}

fn aw_recurrence(n: i64, p: &AWParams) -> Result<G, EvalError> {
    let AWParams { a, b, c, d, q, x } = p;
    let (ab, ac, ad) = (a * b, a * c, a * d);
    let (bc, bd, cd) = (b * c, b * d, c * d);
    let abcd = &ab * &cd;
    let ainv = a.inv()?;
    let two_x = x + x;
    let mut prev = G::zero();
    let mut cur = G::one();
    for m in 0..n {
        let qm1 = q.pow(m - 1)?;
        let qm = q.pow(m)?;
        let q2m2 = q.pow(2 * m - 2)?;
        let q2m1 = q.pow(2 * m - 1)?;
        let q2m = q.pow(2 * m)?;
        let a_den = nonzero((&abcd * &q2m1).one_minus() * (&abcd * &q2m).one_minus(), &format!("A_{m} denominator"))?;
        let a_n = (&abcd * &qm1).one_minus().checked_div(&a_den)?;
        if a_n.is_zero() {
            return Err(pole(format!("A_{m} vanishes")));
        }
        let c_den = nonzero((&abcd * &q2m2).one_minus() * (&abcd * &q2m1).one_minus(), &format!("C_{m} denominator"))?;
        let lower = (&ab * &qm1).one_minus() * (&ac * &qm1).one_minus() * (&ad * &qm1).one_minus();
        let c_num =
            qm.one_minus() * &lower * (&bc * &qm1).one_minus() * (&bd * &qm1).one_minus() * (&cd * &qm1).one_minus();
        let c_n = c_num.checked_div(&c_den)?;
        let upper = (&ab * &qm).one_minus() * (&ac * &qm).one_minus() * (&ad * &qm).one_minus();
        let mut b_n = a + &ainv - &a_n * &ainv * &upper;
        if m > 0 {
            let lower = nonzero(lower, &format!("B_{m} division term"))?;
            b_n -= (&c_n * a).checked_div(&lower)?;
        }
        let next = ((&two_x - &b_n) * &cur - &c_n * &prev).checked_div(&a_n)?;
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `prod_{j<k} (1 - 2 a x q^j + a^2 q^{2j})`, one factor at a time.
fn paired_factor(a: &G, x: &G, qj: &G) -> G {
    let aq = a * qj;
    let two_aqx = &(&aq + &aq) * x;
    G::one() - two_aqx + &aq * &aq
}

fn aw_hypergeometric(n: i64, p: &AWParams) -> Result<G, EvalError> {
    let AWParams { a, b, c, d, q, x } = p;
    let (ab, ac, ad) = (a * b, a * c, a * d);
    let abcd = &ab * c * d;
    let qmn = q.pow(-n)?;
    let t2 = &abcd * &q.pow(n - 1)?;
    let mut sum = G::one();
    let mut term = G::one();
    let mut qj = G::one();
    for k in 1..=n {
        // ratio term_k / term_{k-1}, with q^j = q^{k-1}
        let num = (&qmn * &qj).one_minus() * (&t2 * &qj).one_minus() * paired_factor(a, x, &qj) * q;
        let den = (&qj * q).one_minus() * (&ab * &qj).one_minus() * (&ac * &qj).one_minus() * (&ad * &qj).one_minus();
        let den = nonzero(den, &format!("Askey-Wilson 4phi3 denominator at k={k}"))?;
        term *= num.checked_div(&den)?;
        sum += &term;
        qj *= q;
    }
    let pre = q_pochhammer_multi(&[ab, ac, ad], q, n)?.checked_div(&a.pow(n)?)?;
    Ok(pre * sum)
}

/// Al-Salam-Chihara `Q_n(x; A, B | q)`.
pub fn al_salam_chihara(n: i64, x: &G, a: &G, b: &G, q: &G, method: AscMethod) -> Result<G, EvalError> {
    check_degree(n)?;
    if n == -1 {
        return Ok(G::zero());
    }
    match method {
        AscMethod::Recurrence => {
            let apb = a + b;
            let ab = a * b;
            let two_x = x + x;
            let mut prev = G::zero();
            let mut cur = G::one();
            for m in 0..n {
                let qm = q.pow(m)?;
                let next = (&two_x - &apb * &qm) * &cur - qm.one_minus() * (&ab * &q.pow(m - 1)?).one_minus() * &prev;
                prev = core::mem::replace(&mut cur, next);
            }
            Ok(cur)
        }
        AscMethod::Hypergeometric => {
            if a.is_zero() {
                return Err(pole("Al-Salam-Chihara parameter A is zero"));
            }
            let ab = a * b;
            let qmn = q.pow(-n)?;
            let mut sum = G::one();
            let mut term = G::one();
            let mut qj = G::one();
            for k in 1..=n {
                let num = (&qmn * &qj).one_minus() * paired_factor(a, x, &qj) * q;
                let den = (&qj * q).one_minus() * (&ab * &qj).one_minus();
                let den = nonzero(den, &format!("Al-Salam-Chihara 3phi2 denominator at k={k}"))?;
                term *= num.checked_div(&den)?;
                sum += &term;
                qj *= q;
            }
            Ok(q_pochhammer(&ab, q, n)?.checked_div(&a.pow(n)?)? * sum)
        }
        AscMethod::AwSpecial => askey_wilson(
            n,
            &AWParams::new(a.clone(), b.clone(), G::zero(), G::zero(), q.clone(), x.clone()),
            AwMethod::Recurrence,
        ),
    }
}

/// Continuous Hahn polynomial with `t = i x` supplied directly:
/// `i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+t; a+c, a+d; 1)`.
pub fn continuous_hahn(n: u64, t: &G, a: &G, b: &G, c: &G, d: &G) -> Result<G, EvalError> {
    let ni = n as i64;
    let ac = a + c;
    let ad = a + d;
    let top = G::from_integer(ni - 1) + a + b + c + d;
    let f = f_hyper(&[G::from_integer(-ni), top, a + t], &[ac.clone(), ad.clone()], &G::one())?;
    let pre = G::i().powu(n) * rising_factorial(&ac, n) * rising_factorial(&ad, n);
    Ok(pre.checked_div(&factorial(n))? * f)
}

/// Wilson polynomial with `t = i x`, so the argument pair is `(al+t, al-t)`.
pub fn wilson(n: u64, t: &G, al: &G, be: &G, ga: &G, de: &G) -> Result<G, EvalError> {
    let ni = n as i64;
    let (ab, ag, ad) = (al + be, al + ga, al + de);
    let top = G::from_integer(ni - 1) + al + be + ga + de;
    let f = f_hyper(&[G::from_integer(-ni), top, al + t, al - t], &[ab.clone(), ag.clone(), ad.clone()], &G::one())?;
    Ok(rising_factorial(&ab, n) * rising_factorial(&ag, n) * rising_factorial(&ad, n) * f)
}

/// The Mehta-Wang sequence `D_n(a, b)`.
pub fn mehta_wang_d(n: i64, a: &G, b: &G, method: MehtaWangMethod) -> Result<G, EvalError> {
    check_degree(n)?;
    if n == -1 {
        return Ok(G::zero());
    }
    match method {
        MehtaWangMethod::Recurrence => {
            let mut prev = G::zero();
            let mut cur = G::one();
            for m in 0..n {
                let next = a * &cur + G::from_integer(m) * (b + &G::from_integer(m - 1)) * &prev;
                prev = core::mem::replace(&mut cur, next);
            }
            Ok(cur)
        }
        MehtaWangMethod::Sum => {
            let half = G::ratio(1, 2);
            let lo = (b - a) * &half;
            let hi = (a + b) * &half;
            let mut sum = G::zero();
            let mut binom = G::one();
            for k in 0..=n {
                let t = &binom * &rising_factorial(&lo, k as u64) * rising_factorial(&hi, (n - k) as u64);
                if k % 2 == 0 {
                    sum += t;
                } else {
                    sum -= t;
                }
                binom = binom * G::from_integer(n - k) * G::ratio(1, k + 1);
            }
            Ok(sum)
        }
    }
}

/// The Nishizawa sequence `D_{n,q}` with `s = q^{a/2}`, `t = q^{b/2}`.
pub fn nishizawa_d(n: i64, s: &G, t: &G, q: &G, method: NishizawaMethod) -> Result<G, EvalError> {
    check_degree(n)?;
    if n == -1 {
        return Ok(G::zero());
    }
    if s.is_zero() || t.is_zero() || q.is_zero() {
        return Err(pole("Nishizawa parameters must be nonzero"));
    }
    let qa = s * s;
    let qb = t * t;
    let one_minus_q = nonzero(q.one_minus(), "q = 1")?;
    match method {
        NishizawaMethod::Recurrence => {
            let qa_inv = qa.inv()?;
            let qab_inv = (&qa * &qb).inv()?;
            let a_q = qa.one_minus().checked_div(&one_minus_q)?;
            let mut prev = G::zero();
            let mut cur = G::one();
            for m in 0..n {
                let first = q.pow(m)? * &qa_inv * &a_q * &cur;
                let second =
                    &qab_inv * q_number(m, q)? * (&qb * &q.pow(m - 1)?).one_minus().checked_div(&one_minus_q)? * &prev;
                prev = core::mem::replace(&mut cur, first + second);
            }
            Ok(cur)
        }
        NishizawaMethod::Explicit => {
            let qab = &qa * &qb;
            let qmn = q.pow(-n)?;
            let mut sum = G::one();
            let mut term = G::one();
            let mut qj = G::one();
            for k in 1..=n {
                let num = (&qmn * &qj).one_minus() * (&qab * &qj * &qj).one_minus() * q;
                let den = (&qj * q).one_minus() * (&qb * &qj).one_minus();
                let den = nonzero(den, &format!("explicit D_(n,q) denominator at k={k}"))?;
                term *= num.checked_div(&den)?;
                sum += &term;
                qj *= q;
            }
            let den = qab.pow(n)? * (-&one_minus_q).pow(n)?;
            Ok(q_pochhammer(&qb, q, n)?.checked_div(&den)? * sum)
        }
        NishizawaMethod::AlSalamChihara => {
            let i = G::i();
            let st = s * t;
            let big_a = &st * &i;
            let big_b = -(t.checked_div(s)? * &i);
            let qn = al_salam_chihara(n, &G::zero(), &big_a, &big_b, q, AscMethod::Recurrence)?;
            let pre = (-&i).powu(n as u64).checked_div(&(st * &one_minus_q).pow(n)?)?;
            Ok(pre * qn)
        }
    }
}

/// Closed form of `p_n(0; a, -a, b, -b | q)`: zero for odd `n`, and
/// `(-1)^m (q, -a^2, -b^2, a^2 b^2 q^{2m}; q^2)_m` for `n = 2m`.
pub fn andrews_rhs(n: u64, a: &G, b: &G, q: &G) -> Result<G, EvalError> {
    if n % 2 == 1 {
        return Ok(G::zero());
    }
    let m = (n / 2) as i64;
    let q2 = q * q;
    let a2 = a * a;
    let b2 = b * b;
    let last = &a2 * &b2 * q2.pow(m)?;
    let v = q_pochhammer_multi(&[q.clone(), -&a2, -&b2, last], &q2, m)?;
    Ok(if m % 2 == 1 { -v } else { v })
}

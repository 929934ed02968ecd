//! Desnanot-Jacobi condensation and the quadratic relations it yields for
//! Askey-Wilson polynomials at the origin, plus the two-parameter extension
//! that is only conjectured (evidence mode).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::determinants::Roots;
use super::{cmp, det, div, size, CheckOutput};
use crate::error::EvalError;
use crate::exactlinalg::{DetMethod, ExactMatrix};
use crate::exactnum::GaussianRational as G;
use crate::identitylab::builders::build_theorem_matrix;
use crate::identitylab::params::ParamPoint;
use crate::orthopoly::{askey_wilson, AWParams, AwMethod};
use crate::qseries::{phi_partial, q_pochhammer as poch, q_pochhammer_multi, SeriesSpec};

fn span(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

/// The five minors of condensation: `(full, center, top-left, bottom-right,
/// top-right, bottom-left)`.
fn condensation_minors(m: &ExactMatrix, method: DetMethod) -> Result<[G; 6], EvalError> {
    let n = m.rows();
    let minor =
        |r: Vec<usize>, c: Vec<usize>| -> Result<G, EvalError> { Ok(m.submatrix(&r, &c)?.determinant(method)?) };
    Ok([
        m.determinant(method)?,
        minor(span(2, n - 1), span(2, n - 1))?,
        minor(span(1, n - 1), span(1, n - 1))?,
        minor(span(2, n), span(2, n))?,
        minor(span(1, n - 1), span(2, n))?,
        minor(span(2, n), span(1, n - 1))?,
    ])
}

fn condensation(m: &ExactMatrix, method: DetMethod) -> Result<(G, G), EvalError> {
    let [full, center, tl, br, tr, bl] = condensation_minors(m, method)?;
    Ok((center * full, tl * br - tr * bl))
}

pub fn dj_generic(n: i64, p: &ParamPoint) -> CheckOutput {
    let nn = size(n)?;
    if nn < 2 {
        return Err(EvalError::Domain("condensation needs n >= 2".into()));
    }
    let entries = p.aux(nn * nn)?;
    let m = ExactMatrix::from_fn(nn, nn, |i, j| entries[(i - 1) * nn + (j - 1)].clone());
    let (lhs, rhs) = condensation(&m, DetMethod::Elimination)?;
    let mut out = vec![cmp("condensation identity", lhs, rhs)];
    let names = ["full", "center", "top-left", "bottom-right", "top-right", "bottom-left"];
    let elim = condensation_minors(&m, DetMethod::Elimination)?;
    let cof = condensation_minors(&m, DetMethod::Cofactor)?;
    for ((name, e), c) in names.iter().zip(elim).zip(cof) {
        out.push(cmp(format!("{name} minor: elimination = cofactor"), e, c));
    }
    Ok(out)
}

/// `D_n(a, b, c)`: determinant of the main matrix at `r = 0`, with `D_0 = 1`.
fn d_n(n: i64, a: &G, b: &G, c: &G, q: &G) -> Result<G, EvalError> {
    if n == 0 {
        return Ok(G::one());
    }
    det(&build_theorem_matrix(size(n)?, 0, a, b, c, q)?)
}

pub fn dj_specialized(n: i64, p: &ParamPoint) -> CheckOutput {
    if n < 2 {
        return Err(EvalError::Domain("condensation needs n >= 2".into()));
    }
    let Roots { a, b, c, q, .. } = Roots::of(p);
    let aq2 = &a * &q * &q;
    let aq = &a * &q;
    let lhs = d_n(n, &a, &b, &c, &q)? * d_n(n - 2, &aq2, &b, &c, &q)?;
    let t1 = div(&q * &poch(&aq, &q, 2)?, &poch(&(&aq2 * &b), &q, 2)?, "first coefficient")?
        * d_n(n - 1, &a, &b, &c, &q)?
        * d_n(n - 1, &aq2, &b, &c, &q)?;
    let abq3 = &aq2 * &b * &q;
    let coef2 = div(
        &q * &aq.one_minus().pow(n)? * abq3.one_minus().pow(n - 2)?,
        &(aq2.one_minus().pow(n - 2)? * (&aq2 * &b).one_minus().pow(n)?),
        "second coefficient",
    )?;
    let t2 = coef2 * d_n(n - 1, &aq, &b, &(&c * &q), &q)? * d_n(n - 1, &aq, &b, &div(c.clone(), &q, "c/q")?, &q)?;
    let m = build_theorem_matrix(size(n)?, 0, &a, &b, &c, &q)?;
    let (gl, gr) = condensation(&m, DetMethod::Elimination)?;
    Ok(vec![cmp("specialized condensation", lhs, t1 - t2), cmp("generic condensation on the main matrix", gl, gr)])
}

/// `p_n(0; x, y, c, -c | q)` via the recurrence.
fn p0(n: i64, x: &G, y: &G, c: &G, q: &G) -> Result<G, EvalError> {
    let params = AWParams::new(x.clone(), y.clone(), c.clone(), -c, q.clone(), G::zero());
    askey_wilson(n, &params, AwMethod::Recurrence)
}

/// The quadratic relation with every square root written out:
/// `A = +-alpha gamma kappa^{1,3} i`-type parameters, `C = beta i`.
pub fn quadratic_full(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, q, al, be, ga, ka, .. } = Roots::of(p);
    let i = G::i();
    let k3 = ka.powu(3);
    let ag = &al * &ga;
    let a_g = div(al.clone(), &ga, "alpha/gamma")?;
    let a1 = &ag * &ka * &i;
    let a3 = &ag * &k3 * &i;
    let b1 = -(&a_g * &ka * &i);
    let b3 = -(&a_g * &k3 * &i);
    let cc = &be * &i;
    let pp = |m: i64, x: &G, y: &G| p0(m, x, y, &cc, &q);
    let lhs = &a
        * &q
        * &q.pow(n - 1)?.one_minus()
        * (&b * &q.pow(n - 2)?).one_minus()
        * pp(n, &a1, &b1)?
        * pp(n - 2, &a3, &b3)?;
    let rhs =
        (&a * &q.pow(n)?).one_minus() * (&a * &b * q.pow(n)?).one_minus() * pp(n - 1, &a1, &b1)? * pp(n - 1, &a3, &b3)?
            - (&a * &q).one_minus()
                * (&a * &b * q.pow(2 * n - 1)?).one_minus()
                * pp(n - 1, &a3, &b1)?
                * pp(n - 1, &a1, &b3)?;
    Ok(vec![cmp("quadratic relation in root parameters", lhs, rhs)])
}

fn clean_sides(n: i64, a: &G, b: &G, c: &G, q: &G) -> Result<(G, G), EvalError> {
    let pp = |m: i64, x: &G, y: &G| p0(m, x, y, c, q);
    let (aq, bq) = (a * q, b * q);
    let ab = a * b;
    let cc = c * c;
    let lhs =
        &ab * &q.pow(n - 1)?.one_minus() * (G::one() + &cc * &q.pow(n - 2)?) * pp(n, a, b)? * pp(n - 2, &aq, &bq)?;
    let rhs = (&ab * &q.pow(n - 1)?).one_minus()
        * (G::one() + &ab * &cc * &q.pow(n - 1)?)
        * pp(n - 1, a, b)?
        * pp(n - 1, &aq, &bq)?
        - ab.one_minus() * (G::one() + &ab * &cc * &q.pow(2 * n - 2)?) * pp(n - 1, &aq, b)? * pp(n - 1, a, &bq)?;
    Ok((lhs, rhs))
}

pub fn quadratic_clean(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, c, q, .. } = Roots::of(p);
    let (lhs, rhs) = clean_sides(n, &a, &b, &c, &q)?;
    Ok(vec![cmp("quadratic relation", lhs, rhs)])
}

/// The terminating ₄φ₃ truncated at `N`, zero for negative `N`.
fn ph(big_n: i64, nums: Vec<G>, dens: Vec<G>, q: &G) -> Result<G, EvalError> {
    if big_n < 0 {
        return Ok(G::zero());
    }
    phi_partial(&SeriesSpec::new(nums, dens, q.clone(), q.clone()), big_n as u64)
}

pub fn quadratic_phi(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, c, q, .. } = Roots::of(p);
    let i = G::i();
    let (ai, aqi) = (&a * &i, &a * &q * &i);
    let abcc = &a * &b * &c * &c;
    let (ab, ac, aq) = (&a * &b, &a * &c, &a * &q);
    let q2 = &q * &q;
    let top = |m: i64| q.pow(-m);
    let f = |m: i64, e: i64, x: &G, dens: [G; 3]| -> Result<G, EvalError> {
        ph(m, vec![top(m)?, -(&abcc * &q.pow(e)?), x.clone(), -x], dens.to_vec(), &q)
    };
    let d_base = || [ab.clone(), ac.clone(), -&ac];
    let d_shift2 = || [&ab * &q2, &ac * &q, -(&ac * &q)];
    let cc = &c * &c;

    let lhs = &ab
        * &q
        * &q.pow(n - 1)?.one_minus()
        * (G::one() + &cc * &q.pow(n - 2)?)
        * f(n, n - 1, &ai, d_base())?
        * f(n - 2, n - 1, &aqi, d_shift2())?;
    let rhs = (&ab * &q.pow(n)?).one_minus()
        * (G::one() + &abcc * &q.pow(n - 1)?)
        * f(n - 1, n - 2, &ai, d_base())?
        * f(n - 1, n, &aqi, d_shift2())?
        - (&ab * &q).one_minus()
            * (G::one() + &abcc * &q.pow(2 * n - 2)?)
            * f(n - 1, n - 1, &aqi, [&ab * &q, &ac * &q, -(&ac * &q)])?
            * f(n - 1, n - 1, &ai, [&ab * &q, ac.clone(), -&ac])?;
    let mut out = vec![cmp("quadratic relation in 4phi3 form", lhs, rhs)];

    // Each polynomial factor of the clean relation against its 4phi3 form:
    // p_m(0; x, y, c, -c) = x^-m (xy, xc, -xc; q)_m 4phi3(q^-m, -x y c^2 q^(m-1), x i, -x i; xy, xc, -xc).
    let bq = &b * &q;
    let factors: [(i64, &G, &G, &str); 4] = [
        (n, &a, &b, "p_n(a, b)"),
        (n - 2, &aq, &bq, "p_(n-2)(aq, bq)"),
        (n - 1, &aq, &b, "p_(n-1)(aq, b)"),
        (n - 1, &a, &bq, "p_(n-1)(a, bq)"),
    ];
    for (m, x, y, label) in factors {
        if m < 0 {
            continue;
        }
        let (xy, xc) = (x * y, x * &c);
        let xi = x * &i;
        let series = ph(
            m,
            vec![top(m)?, -(&xy * &cc * &q.pow(m - 1)?), xi.clone(), -&xi],
            vec![xy.clone(), xc.clone(), -&xc],
            &q,
        )?;
        let closed = div(q_pochhammer_multi(&[xy, xc.clone(), -&xc], &q, m)?, &x.pow(m)?, "x^m")? * series;
        out.push(cmp(format!("{label}: recurrence = 4phi3"), p0(m, x, y, &c, &q)?, closed));
    }
    Ok(out)
}

/// The two-parameter extension with `c, d` free and `x` generic. Evidence only.
pub fn conjecture_mw3(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, c, q, .. } = Roots::of(p);
    let delta = p.delta()?;
    let d = delta * delta;
    let x = p.x()?;
    let pp = |m: i64, s: &G, t: &G| {
        askey_wilson(
            m,
            &AWParams::new(s.clone(), t.clone(), c.clone(), d.clone(), q.clone(), x.clone()),
            AwMethod::Recurrence,
        )
    };
    let (aq, bq, ab, cd) = (&a * &q, &b * &q, &a * &b, &c * &d);
    let lhs =
        &ab * &q.pow(n - 1)?.one_minus() * (&cd * &q.pow(n - 2)?).one_minus() * pp(n, &a, &b)? * pp(n - 2, &aq, &bq)?;
    let rhs = (&ab * &q.pow(n - 1)?).one_minus()
        * (&ab * &cd * &q.pow(n - 1)?).one_minus()
        * pp(n - 1, &a, &b)?
        * pp(n - 1, &aq, &bq)?
        - ab.one_minus() * (&ab * &cd * &q.pow(2 * n - 2)?).one_minus() * pp(n - 1, &aq, &b)? * pp(n - 1, &a, &bq)?;
    Ok(vec![cmp("quadratic relation with free c, d at generic x", lhs, rhs)])
}

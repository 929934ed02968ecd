//! Row-selected moment determinants and the machinery of their evaluation:
//! the sums `R_{n,nu}`, the matrices `M_n`, the residue identities, and the
//! triangular reductions `X M Y` and `L M U`.
//!
//! Every check here reads `a, b, c, q` as squares of the sampled roots and the
//! rows `k` from the point's k-tuple.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::determinants::Roots;
use super::{cmp, det, div, exact, prod, sign, size, CheckOutput, Comparison};
use crate::error::EvalError;
use crate::exactlinalg::ExactMatrix;
use crate::exactnum::GaussianRational as G;
use crate::identitylab::builders::{
    build_m, build_row_selected, build_triangular, compute_r, k_vandermonde, moment, u_inverse, y_inverse, Triangular,
};
use crate::identitylab::params::ParamPoint;
use crate::qseries::{q_binomial, q_pochhammer as poch};

/// `prod_i (aq;q)_{k_i-1} / (abq^2;q)_{k_i+n-2}`.
fn row_weights(k: &[i64], v: &Roots) -> Result<G, EvalError> {
    let n = k.len() as i64;
    let (aq, abq2) = (&v.a * &v.q, &v.a * &v.b * &v.q * &v.q);
    prod(1, n, |i| {
        let ki = k[i as usize - 1];
        div(poch(&aq, &v.q, ki - 1)?, &poch(&abq2, &v.q, ki + n - 2)?, "row weight")
    })
}

/// `sum_nu (-1)^{nu} (abc q^{2nu+1};q^2)_{n-nu} (acq;q^2)_nu R_{n,nu}(k)`.
fn r_weighted_sum(k: &[i64], v: &Roots) -> Result<G, EvalError> {
    let Roots { a, b, c, q, .. } = v;
    let n = k.len() as i64;
    let q2 = q * q;
    let mut total = G::zero();
    for nu in 0..=n {
        let t = poch(&(a * b * c * q.pow(2 * nu + 1)?), &q2, n - nu)?
            * poch(&(a * c * q), &q2, nu)?
            * compute_r(n as usize, nu, k, a, b, q)?;
        total += sign(nu) * t;
    }
    Ok(total)
}

fn tuple(p: &ParamPoint, n: i64) -> Result<&[i64], EvalError> {
    let k = p.k_tuple()?;
    if k.len() != size(n)? {
        return Err(EvalError::Domain(format!("k-tuple has {} entries, need {n}", k.len())));
    }
    Ok(k)
}

pub fn thm_rows(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let k = tuple(p, n)?;
    let lhs = det(&build_row_selected(k, &v.a, &v.b, &v.c, &v.q)?)?;
    let bq = &v.b * &v.q;
    let pre = v.a.pow(exact(n * (n - 3), 2)?)?
        * v.q.pow(exact(n * (n + 1) * (n - 4), 6)?)?
        * row_weights(k, &v)?
        * prod(1, n, |i| poch(&bq, &v.q, i - 2))?
        * k_vandermonde(k, &v.q)?;
    // (-1)^n absorbed: the sum carries (-1)^{n-nu}.
    let rhs = pre * sign(n) * r_weighted_sum(k, &v)?;
    Ok(vec![cmp("row-selected det = R-sum closed form", lhs, rhs)])
}

pub fn q_kratt(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let k = tuple(p, n)?;
    let nn = size(n)?;
    let m = ExactMatrix::try_from_fn(nn, nn, |i, j| moment(k[i - 1] + j as i64 - 2, &v.a, &v.b, &v.q))?;
    let bq = &v.b * &v.q;
    let rhs = v.a.pow(exact(n * (n - 1), 2)?)?
        * v.q.pow(exact((n + 1) * n * (n - 1), 6)?)?
        * row_weights(k, &v)?
        * k_vandermonde(k, &v.q)?
        * prod(1, n, |j| poch(&bq, &v.q, j - 1))?;
    Ok(vec![cmp("row-selected Hankel det = product", det(&m)?, rhs)])
}

pub fn r_closed(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, q, .. } = Roots::of(p);
    let k: Vec<i64> = (1..=n).collect();
    let mut out = Vec::new();
    for nu in 0..=n {
        let lhs = compute_r(size(n)?, nu, &k, &a, &b, &q)?;
        let rhs = q.pow(exact((n - nu) * (n - nu - 1), 2)?)?
            * q_binomial(n, nu, &q)?
            * poch(&(&a * &q.pow(nu + 1)?), &q, n - nu)?
            * poch(&(&a * &b * &q.pow(n)?), &q, nu)?;
        out.push(cmp(format!("R_(n,{nu})([1..n]) closed form"), lhs, rhs));
    }
    Ok(out)
}

pub fn r_recurrence(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, q, .. } = Roots::of(p);
    let k = tuple(p, n)?;
    let nn = size(n)?;
    if nn == 0 {
        return Err(EvalError::Domain("R recurrence needs n >= 1".into()));
    }
    let kn = k[nn - 1];
    let kp = &k[..nn - 1];
    let aq = &a * &q;
    let mut out = Vec::new();
    for nu in -1..=n + 1 {
        let lhs = compute_r(nn, nu, k, &a, &b, &q)?;
        let rhs = (&a * &b * q.pow(kn + n - 1)?).one_minus() * compute_r(nn - 1, nu - 1, kp, &aq, &b, &q)?
            + q.pow(n - 1)? * (&a * &q.pow(kn)?).one_minus() * compute_r(nn - 1, nu, kp, &a, &b, &q)?;
        out.push(cmp(format!("R_(n,{nu}) recurrence"), lhs, rhs));
    }
    Ok(out)
}

pub fn r_sum(n: i64, p: &ParamPoint) -> CheckOutput {
    let Roots { a, b, q, .. } = Roots::of(p);
    let k = tuple(p, n)?;
    let mut lhs = G::zero();
    for nu in 0..=n {
        lhs += sign(n - nu) * compute_r(size(n)?, nu, k, &a, &b, &q)?;
    }
    let sk: i64 = k.iter().sum();
    let rhs = a.pow(n)? * q.pow(exact(n * (n - 1), 2)? + sk)? * poch(&b, &q, n)?;
    Ok(vec![cmp("alternating sum of R_(n,nu)", lhs, rhs)])
}

/// Shared left side of both residue identities with denominator factor
/// `(1 - w x_v)` per term.
fn residue_sum(n: i64, j: i64, xs: &[G], w: &G, v: &Roots) -> Result<G, EvalError> {
    let Roots { a, b, c, q, .. } = v;
    let mut total = G::zero();
    for (idx, x) in xs.iter().enumerate() {
        let num = (div(x.clone(), q, "q = 0")? - c * &q.pow(j - 1)?)
            * poch(&(a * x), q, j - 1)?
            * poch(&(a * b * q.pow(j)? * x), q, n - j)?;
        let mut den = x * &(w * x).one_minus();
        for (l, y) in xs.iter().enumerate() {
            if l != idx {
                den *= y - x;
            }
        }
        total -= div(num, &den, "residue denominator")?;
    }
    Ok(total)
}

pub fn residue_ids(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let xs = p.x_list()?;
    let Roots { a, b, c, q, .. } = &v;
    let px: G = xs.iter().cloned().product();
    let wb = a * b * q.pow(n - 1)?;
    let mut out = Vec::new();
    for j in 1..=n {
        let base = div(c * &q.pow(j - 1)?, &px, "product of x")?;
        let lhs1 = residue_sum(n, j, xs, a, &v)?;
        let mut rhs1 = base.clone();
        if j == 1 {
            let den: G = xs.iter().map(|x| (a * x).one_minus()).product();
            let num = sign(n) * a.pow(n - 1)? * (a * c * q).one_minus() * poch(&(b * q), q, n - 1)?;
            rhs1 += div(div(num, q, "q = 0")?, &den, "residue correction")?;
        }
        out.push(cmp(format!("first residue identity j={j}"), lhs1, rhs1));

        let lhs2 = residue_sum(n, j, xs, &wb, &v)?;
        let mut rhs2 = base;
        if j == n {
            let den: G = xs.iter().map(|x| (&wb * x).one_minus()).product();
            let num = a.pow(n - 1)?
                * q.pow(exact(n * (n - 3), 2)?)?
                * (a * b * c * q.pow(2 * n - 1)?).one_minus()
                * poch(&(b * q), q, n - 1)?;
            rhs2 -= div(num, &den, "residue correction")?;
        }
        out.push(cmp(format!("second residue identity j={j}"), lhs2, rhs2));
    }
    Ok(out)
}

pub fn vandermonde_vw(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let Roots { a, b, c, q, .. } = &v;
    let xs = p.x_list()?;
    let nn = size(n)?;
    let mut vd = G::one();
    for i in 0..nn {
        for j in i + 1..nn {
            vd *= &xs[j] - &xs[i];
        }
    }
    let px: G = xs.iter().cloned().product();
    let wb = a * b * q.pow(n - 1)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let last = |x: &G, w: &G| -> Result<G, EvalError> {
            let num = (x - &(c * &q.pow(k)?)) * poch(&(a * x), q, k - 1)? * poch(&(a * b * q.pow(k)? * x), q, n - k)?;
            Ok(-div(num, &(x * &(w * x).one_minus()), "Vandermonde last column")?)
        };
        let build = |w: &G| {
            ExactMatrix::try_from_fn(nn, nn, |i, j| {
                let x = &xs[i - 1];
                if j < nn {
                    Ok(x.powu(j as u64 - 1))
                } else {
                    last(x, w)
                }
            })
        };
        let vm = build(a)?;
        let wm = build(&wb)?;
        let base = div(c * &q.pow(k)?, &px, "product of x")?;
        let mut rv = base.clone();
        if k == 1 {
            let den: G = xs.iter().map(|x| (a * x).one_minus()).product();
            let num = sign(n) * a.pow(n - 1)? * (a * c * q).one_minus() * poch(&(b * q), q, n - 1)?;
            rv += div(num, &den, "V correction")?;
        }
        let mut rw = base;
        if k == n {
            let den: G = xs.iter().map(|x| (&wb * x).one_minus()).product();
            let num = a.pow(n - 1)?
                * q.pow(exact((n - 1) * (n - 2), 2)?)?
                * (a * b * c * q.pow(2 * n - 1)?).one_minus()
                * poch(&(b * q), q, n - 1)?;
            rw -= div(num, &den, "W correction")?;
        }
        let lv = div(sign(n - 1) * det(&vm)?, &vd, "Vandermonde")?;
        let lw = div(sign(n - 1) * det(&wm)?, &vd, "Vandermonde")?;
        out.push(cmp(format!("V determinant k={k}"), lv, rv));
        out.push(cmp(format!("W determinant k={k}"), lw, rw));
    }
    Ok(out)
}

/// Everything the triangular-reduction checks share.
struct Reduction {
    v: Roots,
    k: Vec<i64>,
    m: ExactMatrix,
    pm: ExactMatrix,
    qm: ExactMatrix,
}

fn reduction(n: i64, p: &ParamPoint) -> Result<Reduction, EvalError> {
    let v = Roots::of(p);
    let k = tuple(p, n)?.to_vec();
    let nn = size(n)?;
    let m = build_m(&k, &v.a, &v.b, &v.c, &v.q)?;
    let x = build_triangular(Triangular::X, nn, Some(&k), &v.a, &v.b, &v.q)?;
    let l = build_triangular(Triangular::L, nn, Some(&k), &v.a, &v.b, &v.q)?;
    let y = build_triangular(Triangular::Y, nn, None, &v.a, &v.b, &v.q)?;
    let u = build_triangular(Triangular::U, nn, None, &v.a, &v.b, &v.q)?;
    let pm = x.mul(&m)?.mul(&y)?;
    let qm = l.mul(&m)?.mul(&u)?;
    Ok(Reduction { v, k, m, pm, qm })
}

pub fn bottom_rows(n: i64, p: &ParamPoint) -> CheckOutput {
    let Reduction { v, k, pm, qm, .. } = reduction(n, p)?;
    let Roots { a, b, c, q, .. } = &v;
    let nn = size(n)?;
    let sk: i64 = k.iter().sum();
    let bq = b * q;
    let pden: G = k.iter().map(|&kl| Ok((a * &q.pow(kl)?).one_minus())).product::<Result<G, EvalError>>()?;
    let p1 =
        div(sign(n) * a.pow(n - 1)? * (a * c * q).one_minus() * poch(&bq, q, n - 1)?, &(q * &pden), "bottom row P")?;
    let qden: G = k.iter().map(|&kl| Ok((a * b * q.pow(kl + n - 1)?).one_minus())).product::<Result<G, EvalError>>()?;
    let qn = -div(
        a.pow(n - 1)?
            * q.pow(exact(n * (n - 3), 2)?)?
            * (a * b * c * q.pow(2 * n - 1)?).one_minus()
            * poch(&bq, q, n - 1)?,
        &qden,
        "bottom row Q",
    )?;
    let mut out = Vec::new();
    for j in 1..=nn {
        let pe = if j == 1 {
            p1.clone()
        } else if j == nn {
            c * &q.pow(n - 1 - sk)?
        } else {
            G::zero()
        };
        let qe = if j == 1 {
            c * &q.pow(-sk)?
        } else if j == nn {
            qn.clone()
        } else {
            G::zero()
        };
        out.push(cmp(format!("(X M Y)_(n,{j})"), pm[(nn, j)].clone(), pe));
        out.push(cmp(format!("(L M U)_(n,{j})"), qm[(nn, j)].clone(), qe));
    }
    Ok(out)
}

pub fn triangular_inverses(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let q = &v.q;
    let nn = size(n)?;
    let y = build_triangular(Triangular::Y, nn, None, &v.a, &v.b, q)?;
    let u = build_triangular(Triangular::U, nn, None, &v.a, &v.b, q)?;
    let id = ExactMatrix::identity(nn);
    let mut out: Vec<Comparison> = Vec::new();
    let yy = y.mul(&y_inverse(nn, q)?)?;
    let uu = u.mul(&u_inverse(nn, q)?)?;
    for i in 1..=nn {
        for j in 1..=nn {
            out.push(cmp(format!("(Y Y^-1)_({i},{j})"), yy[(i, j)].clone(), id[(i, j)].clone()));
            out.push(cmp(format!("(U U^-1)_({i},{j})"), uu[(i, j)].clone(), id[(i, j)].clone()));
        }
    }
    let minus_q = -q;
    let first: Vec<usize> = (1..nn).collect();
    let tail: Vec<usize> = (2..=nn).collect();
    for i in 1..=nn {
        let rows: Vec<usize> = (1..=nn).filter(|&r| r != i).collect();
        let dy = det(&y.submatrix(&rows, &first)?)?;
        let du = det(&u.submatrix(&rows, &tail)?)?;
        out.push(cmp(format!("Y minor without row {i}"), dy, minus_q.pow(i as i64 - n)?));
        out.push(cmp(format!("U minor without row {i}"), du, minus_q.pow(i as i64 - 1)?));
    }
    Ok(out)
}

pub fn pq_lemma(n: i64, p: &ParamPoint) -> CheckOutput {
    let Reduction { v, k, m, pm, qm } = reduction(n, p)?;
    let Roots { a, b, c, q, .. } = &v;
    let nn = size(n)?;
    let sk: i64 = k.iter().sum();
    let mut vk = G::one();
    for i in 0..nn {
        for j in i + 1..nn {
            vk *= q.pow(k[i])? - q.pow(k[j])?;
        }
    }
    let ax: G = k.iter().map(|&kl| Ok((a * &q.pow(kl)?).one_minus())).product::<Result<G, EvalError>>()?;
    let abx: G = k.iter().map(|&kl| Ok((a * b * q.pow(kl + n - 1)?).one_minus())).product::<Result<G, EvalError>>()?;
    let dm = det(&m)?;
    let qsk = q.pow(sk)?;
    let det_p = div(sign(n) * &dm, &(&qsk * &ax * &vk), "det P")?;
    let det_q = div(sign(n) * &dm, &(&qsk * &abx * &vk), "det Q")?;

    let kp = &k[..nn - 1];
    let skp: i64 = kp.iter().sum();
    let mut vkp = G::one();
    for i in 0..nn - 1 {
        for j in i + 1..nn - 1 {
            vkp *= q.pow(kp[i])? - q.pow(kp[j])?;
        }
    }
    let qskp = q.pow(skp)?;
    let head: Vec<usize> = (1..nn).collect();
    let tail: Vec<usize> = (2..=nn).collect();
    let p_minor = det(&pm.submatrix(&head, &tail)?)?;
    let m_shift = det(&build_m(kp, &(a * q), b, &(c * q), q)?)?;
    let p_rhs = div(sign(n - 1) * m_shift, &(&qskp * &vkp), "P minor")?;
    let q_minor = det(&qm.submatrix(&head, &head)?)?;
    let m_same = det(&build_m(kp, a, b, c, q)?)?;
    let q_rhs = div(sign(n - 1) * m_same, &(&qskp * &vkp), "Q minor")?;

    let abp: G = kp.iter().map(|&kl| Ok((a * b * q.pow(kl + n - 1)?).one_minus())).product::<Result<G, EvalError>>()?;
    let ap: G = kp.iter().map(|&kl| Ok((a * &q.pow(kl)?).one_minus())).product::<Result<G, EvalError>>()?;
    let pq_l = div(det(&pm.submatrix(&head, &head)?)?, &abp, "P/Q relation")?;
    let pq_r = div((-q).pow(1 - n)? * det(&qm.submatrix(&head, &tail)?)?, &ap, "P/Q relation")?;
    Ok(vec![
        cmp("det P = (-1)^n det M / (q^|k| prod(1-aq^k) V)", det(&pm)?, det_p),
        cmp("det Q = (-1)^n det M / (q^|k| prod(1-abq^(k+n-1)) V)", det(&qm)?, det_q),
        cmp("P minor [1,n-1]x[2,n] = shifted M_(n-1)", p_minor, p_rhs),
        cmp("Q minor [1,n-1]x[1,n-1] = M_(n-1)", q_minor, q_rhs),
        cmp("P and Q leading minors relation", pq_l, pq_r),
    ])
}

pub fn m_recurrence(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let Roots { a, b, c, q, .. } = &v;
    let k = tuple(p, n)?;
    let nn = size(n)?;
    let kp = &k[..nn - 1];
    let kn = k[nn - 1];
    let qkn = q.pow(kn)?;
    let den = a.pow(n - 2)? * poch(&(b * q), q, n - 2)? * prod(1, n - 1, |i| Ok(q.pow(k[i as usize - 1])? - &qkn))?;
    let lhs = div(det(&build_m(k, a, b, c, q)?)?, &den, "M recurrence normalizer")?;
    let t1 = div((a * c * q).one_minus() * (a * b * q.pow(kn + n - 1)?).one_minus(), q, "q = 0")?
        * det(&build_m(kp, &(a * q), b, &(c * q), q)?)?;
    let t2 = q.pow(exact(n * (n - 3), 2)?)?
        * (a * b * c * q.pow(2 * n - 1)?).one_minus()
        * (a * &qkn).one_minus()
        * det(&build_m(kp, a, b, c, q)?)?;
    Ok(vec![cmp("det M_n recurrence", lhs, t1 - t2)])
}

pub fn m_closed(n: i64, p: &ParamPoint) -> CheckOutput {
    let v = Roots::of(p);
    let k = tuple(p, n)?;
    let Roots { a, b, c, q, .. } = &v;
    let dm = det(&build_m(k, a, b, c, q)?)?;
    let rows = det(&build_row_selected(k, a, b, c, q)?)?;
    let bq = b * q;
    let closed = sign(n)
        * a.pow(exact(n * (n - 3), 2)?)?
        * q.pow(exact(n * (n + 1) * (n - 4), 6)?)?
        * prod(1, n, |i| poch(&bq, q, i - 2))?
        * k_vandermonde(k, q)?
        * r_weighted_sum(k, &v)?;
    Ok(vec![
        cmp("row-selected det = weights * det M_n", rows, row_weights(k, &v)? * &dm),
        cmp("det M_n closed form", dm, closed),
    ])
}

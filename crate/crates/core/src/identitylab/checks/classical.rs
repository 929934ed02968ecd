//! Classical (q = 1) determinant corollaries, evaluated with rising
//! factorials and terminating pFq sums only. Nothing here is a limit of the
//! q-code; the two share the scalar field and nothing else.
//!
//! The matrix is `((gamma + j - i) (alpha+1)_{i+j+r-2} / (alpha+beta+2)_{i+j+r-2})`,
//! with negative indices through the reciprocal rising factorial.

use alloc::vec;

use super::{cmp, det, div, prod, size, CheckOutput};
use crate::error::EvalError;
use crate::exactlinalg::ExactMatrix;
use crate::exactnum::GaussianRational as G;
use crate::identitylab::params::ParamPoint;
use crate::orthopoly::{continuous_hahn, wilson};
use crate::qseries::{f_hyper, factorial, rising_factorial, rising_factorial_signed as rf};

fn half(x: G) -> G {
    x * G::ratio(1, 2)
}

fn int(k: i64) -> G {
    G::from_integer(k)
}

fn classical_matrix(n: i64, r: i64, al: &G, be: &G, ga: &G) -> Result<ExactMatrix, EvalError> {
    let nn = size(n)?;
    let a1 = al + &int(1);
    let ab2 = al + be + int(2);
    ExactMatrix::try_from_fn(nn, nn, |i, j| {
        let m = (i + j) as i64 + r - 2;
        let lead = ga + &int(j as i64 - i as i64);
        Ok(lead * div(rf(&a1, m)?, &rf(&ab2, m)?, "classical moment denominator")?)
    })
}

fn fact(k: i64) -> G {
    factorial(k as u64)
}

/// The 3F2 form of the general classical determinant.
fn general_f32(n: i64, r: i64, al: &G, be: &G, ga: &G) -> Result<G, EvalError> {
    let a1 = al + &int(1);
    let b1 = be + &int(1);
    let ab2 = al + be + int(2);
    let top = half(al + be + ga + int(r + 1));
    let pre = G::from_integer(-2).powu(n as u64)
        * rising_factorial(&top, n as u64)
        * prod(1, n, |k| {
            let num = fact(k - 1) * rf(&a1, k + r)? * rf(&b1, k - 2)?;
            div(num, &rf(&ab2, k + n + r - 2)?, "classical product")
        })?;
    let f = f_hyper(&[int(-n), half(al + ga + int(r + 1)), al + be + int(n + r)], &[top, al + &int(r + 1)], &G::one())?;
    Ok(pre * f)
}

/// The continuous Hahn form.
fn general_hahn(n: i64, r: i64, al: &G, be: &G, ga: &G) -> Result<G, EvalError> {
    let a1 = al + &int(1);
    let b1 = be + &int(1);
    let ab2 = al + be + int(2);
    let pre = (G::i() * int(2)).powu(n as u64)
        * prod(1, n, |k| {
            let num = fact(k) * rf(&a1, k + r - 1)? * rf(&b1, k - 2)?;
            div(num, &rf(&ab2, k + n + r - 2)?, "classical product")
        })?;
    let h = continuous_hahn(
        n as u64,
        &G::zero(),
        &half(al + ga + int(r + 1)),
        &half(be.clone()),
        &half(al - ga + int(r + 1)),
        &half(be.clone()),
    )?;
    Ok(pre * h)
}

pub fn classical_hahn(n: i64, p: &ParamPoint) -> CheckOutput {
    let (al, be, ga) = p.classical()?;
    let lhs = det(&classical_matrix(n, p.r, al, be, ga)?)?;
    Ok(vec![
        cmp("det = 3F2 closed form", lhs.clone(), general_f32(n, p.r, al, be, ga)?),
        cmp("det = continuous Hahn closed form", lhs, general_hahn(n, p.r, al, be, ga)?),
    ])
}

pub fn classical_wilson_even(m: i64, p: &ParamPoint) -> CheckOutput {
    let (al, be, ga) = p.classical()?;
    let r = p.r;
    let lhs = det(&classical_matrix(2 * m, r, al, be, ga)?)?;
    let a1 = al + &int(1);
    let b1 = be + &int(1);
    let ab2 = al + be + int(2);

    let pre1 = prod(1, m, |k| {
        let num = fact(2 * k - 1) * rf(&a1, 2 * k + r - 1)? * rf(&b1, 2 * k - 2)?;
        let f = div(num, &rf(&ab2, 2 * (k + m) + r - 3)?, "classical product")?;
        Ok(&f * &f)
    })?;
    let f43 = f_hyper(
        &[int(-m), -half(be - &int(1)) - int(m), half(ga.clone()), -half(ga.clone())],
        &[G::ratio(1, 2), half(al + &int(r + 1)), int(-2 * m) - half(al + be + int(r - 1))],
        &G::one(),
    )?;

    let pre2 = G::from_integer(-2).powu(3 * m as u64)
        * prod(1, 2 * m, |k| {
            let num = fact(k - 1) * rf(&a1, k + r - 1)?;
            div(num, &rf(&ab2, k + 2 * m + r - 2)?, "classical product")
        })?
        * prod(1, m, |k| {
            let f = rf(&b1, 2 * k - 2)?;
            Ok(&f * &f)
        })?;
    let w = wilson(
        m as u64,
        &half(ga.clone()),
        &G::zero(),
        &G::ratio(1, 2),
        &half(al + &int(r + 1)),
        &(int(-2 * m) - half(al + be + int(r - 1))),
    )?;
    Ok(vec![
        cmp("det (size 2m) = 4F3 closed form", lhs.clone(), pre1 * f43),
        cmp("det (size 2m) = Wilson closed form", lhs, pre2 * w),
    ])
}

pub fn classical_wilson_odd(m: i64, p: &ParamPoint) -> CheckOutput {
    let (al, be, ga) = p.classical()?;
    let r = p.r;
    let lhs = det(&classical_matrix(2 * m + 1, r, al, be, ga)?)?;
    let a1 = al + &int(1);
    let b1 = be + &int(1);
    let ab2 = al + be + int(2);
    let block = |k: i64, shift: i64| -> Result<G, EvalError> {
        let num = fact(2 * k - 1) * rf(&a1, 2 * k + r + shift)? * rf(&b1, 2 * k - 2)?;
        div(num, &rf(&ab2, 2 * (k + m - 1) + r)?, "classical product")
    };
    let pre1 = ga * &prod(1, m + 1, |k| block(k, -2))? * prod(1, m, |k| block(k, 0))?;
    let f43 = f_hyper(
        &[int(-m), -half(be - &int(1)) - int(m), half(int(1) + ga), half(int(1) - ga)],
        &[G::ratio(3, 2), half(al + &int(r)) + int(1), int(-2 * m) - half(al + be + int(r))],
        &G::one(),
    )?;

    let pre2 = G::from_integer(-2).powu(3 * m as u64)
        * ga
        * prod(1, 2 * m + 1, |k| {
            let num = fact(k - 1) * rf(&a1, k + r - 1)?;
            div(num, &rf(&ab2, k + 2 * m + r - 1)?, "classical product")
        })?
        * prod(1, m + 1, |k| rf(&b1, 2 * k - 2))?
        * prod(1, m, |k| rf(&b1, 2 * k - 2))?;
    let w = wilson(
        m as u64,
        &half(ga.clone()),
        &G::ratio(1, 2),
        &G::one(),
        &half(al + &int(r + 1)),
        &(int(-2 * m) - half(al + be + int(r + 1))),
    )?;
    Ok(vec![
        cmp("det (size 2m+1) = 4F3 closed form", lhs.clone(), pre1 * f43),
        cmp("det (size 2m+1) = Wilson closed form", lhs, pre2 * w),
    ])
}

//! Identity checks. Each check evaluates both sides of one identity (often
//! with several displayed forms) at a parameter point and returns the pairs
//! to compare. A check never decides pass or fail itself.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{pole, EvalError};
use crate::exactlinalg::ExactMatrix;
use crate::exactnum::GaussianRational as G;

use super::params::ParamPoint;

pub mod classical;
pub mod determinants;
pub mod quadratic;
pub mod rows;
pub mod series;

/// One side-by-side pair produced by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lhs: G,
    pub rhs: G,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub type CheckOutput = Result<Vec<Comparison>, EvalError>;
pub type CheckFn = fn(i64, &ParamPoint) -> CheckOutput;

pub(crate) fn cmp(label: impl Into<String>, lhs: G, rhs: G) -> Comparison {
    Comparison { label: label.into(), lhs, rhs }
}

/// `(-1)^k`.
pub(crate) fn sign(k: i64) -> G {
    if k.rem_euclid(2) == 0 {
        G::one()
    } else {
        G::from_integer(-1)
    }
}

/// `num / den` for exponents that are integral by construction.
pub(crate) fn exact(num: i64, den: i64) -> Result<i64, EvalError> {
    if num % den != 0 {
        return Err(EvalError::Domain(format!("exponent {num}/{den} is not an integer")));
    }
    Ok(num / den)
}

/// `prod_{k=lo}^{hi} f(k)`; empty when `hi < lo`.
pub(crate) fn prod(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Result<G, EvalError>) -> Result<G, EvalError> {
    let mut acc = G::one();
    for k in lo..=hi {
        acc *= f(k)?;
    }
    Ok(acc)
}

/// Division that reports a vanishing denominator as a pole.
pub(crate) fn div(num: G, den: &G, what: &str) -> Result<G, EvalError> {
    if den.is_zero() {
        return Err(pole(what));
    }
    Ok(num.checked_div(den)?)
}

pub(crate) fn det(m: &ExactMatrix) -> Result<G, EvalError> {
    Ok(m.det()?)
}

pub(crate) fn size(n: i64) -> Result<usize, EvalError> {
    usize::try_from(n).map_err(|_| EvalError::Domain(format!("size must be >= 0, got {n}")))
}

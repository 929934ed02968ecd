//! Builders for the structured matrices and combinatorial sums the checks
//! compare against closed forms. All indices are 1-based.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{pole, EvalError};
use crate::exactlinalg::ExactMatrix;
use crate::exactnum::GaussianRational as G;
use crate::qseries::{q_binomial, q_pochhammer};

/// Little q-Jacobi moment `mu_m = (aq;q)_m / (abq^2;q)_m`, any integer `m`.
pub fn moment(m: i64, a: &G, b: &G, q: &G) -> Result<G, EvalError> {
    let num = q_pochhammer(&(a * q), q, m)?;
    let den = q_pochhammer(&(a * b * q * q), q, m)?;
    if den.is_zero() {
        return Err(pole(format!("moment {m}: (abq^2;q)_{m} vanishes")));
    }
    Ok(num.checked_div(&den)?)
}

/// Moments `mu_lo ..= mu_hi`, indexed from `lo`.
fn moments(lo: i64, hi: i64, a: &G, b: &G, q: &G) -> Result<Vec<G>, EvalError> {
    (lo..=hi).map(|m| moment(m, a, b, q)).collect()
}

/// `n x n` matrix `(q^{i-1} - c q^{j-1}) mu_{i+j+r-2}`.
pub fn build_theorem_matrix(n: usize, r: i64, a: &G, b: &G, c: &G, q: &G) -> Result<ExactMatrix, EvalError> {
    let mu = moments(r, r + 2 * n as i64 - 2, a, b, q)?;
    let qp: Vec<G> = (0..n).map(|k| q.powu(k as u64)).collect();
    Ok(ExactMatrix::from_fn(n, n, |i, j| (&qp[i - 1] - c * &qp[j - 1]) * &mu[i + j - 2]))
}

/// Hankel matrix of moments `mu_{i+j+r-2}`.
pub fn build_hankel(n: usize, r: i64, a: &G, b: &G, q: &G) -> Result<ExactMatrix, EvalError> {
    let mu = moments(r, r + 2 * n as i64 - 2, a, b, q)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| mu[i + j - 2].clone()))
}

/// Rows selected by `k`: `(q^{k_i-1} - c q^{j-1}) mu_{k_i+j-2}`.
pub fn build_row_selected(k: &[i64], a: &G, b: &G, c: &G, q: &G) -> Result<ExactMatrix, EvalError> {
    let n = k.len();
    ExactMatrix::try_from_fn(n, n, |i, j| {
        let ki = k[i - 1];
        Ok((q.pow(ki - 1)? - c * &q.powu(j as u64 - 1)) * moment(ki + j as i64 - 2, a, b, q)?)
    })
}

/// `M_n`: `(q^{k_i-1} - c q^{j-1}) (a q^{k_i};q)_{j-1} (ab q^{k_i+j};q)_{n-j}`.
pub fn build_m(k: &[i64], a: &G, b: &G, c: &G, q: &G) -> Result<ExactMatrix, EvalError> {
    let n = k.len();
    ExactMatrix::try_from_fn(n, n, |i, j| {
        let ki = k[i - 1];
        let j = j as i64;
        let qk = q.pow(ki)?;
        let lead = q.pow(ki - 1)? - c * &q.pow(j - 1)?;
        let p1 = q_pochhammer(&(a * &qk), q, j - 1)?;
        let p2 = q_pochhammer(&(a * b * &qk * q.pow(j)?), q, n as i64 - j)?;
        Ok(lead * p1 * p2)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangular {
    X,
    Y,
    L,
    U,
}

fn sign(k: i64) -> G {
    if k.rem_euclid(2) == 0 {
        G::one()
    } else {
        G::from_integer(-1)
    }
}

/// The four triangular matrices. `X` and `L` need `k`; `Y` and `U` ignore it.
///
/// `X`: `-1 / (q^{k_j} (1 - a q^{k_j}) prod_{l<=i, l!=j} (q^{k_l} - q^{k_j}))` for `i >= j`.
/// `L`: as `X` with `1 - ab q^{k_j+n-1}`.
/// `Y`: `(-1)^{i+j} q^{-(i-j)(2n+1-i-j)/2} [n-j, i-j]_q`.
/// `U`: `(-1)^{i+j} q^{(j-i)(j-i+1)/2} [j-1, j-i]_q`.
pub fn build_triangular(
    kind: Triangular,
    n: usize,
    k: Option<&[i64]>,
    a: &G,
    b: &G,
    q: &G,
) -> Result<ExactMatrix, EvalError> {
    let ni = n as i64;
    match kind {
        Triangular::X | Triangular::L => {
            let k = k.ok_or_else(|| EvalError::Domain("X and L need a k-tuple".into()))?;
            if k.len() != n {
                return Err(EvalError::Domain(format!("k-tuple has {} entries, need {n}", k.len())));
            }
            let qk: Vec<G> = k.iter().map(|&kj| q.pow(kj)).collect::<Result<_, _>>()?;
            ExactMatrix::try_from_fn(n, n, |i, j| {
                if i < j {
                    return Ok(G::zero());
                }
                let factor = match kind {
                    Triangular::X => (a * &qk[j - 1]).one_minus(),
                    _ => (a * b * &qk[j - 1] * q.pow(ni - 1)?).one_minus(),
                };
                let mut den = &qk[j - 1] * &factor;
                for l in 1..=i {
                    if l != j {
                        den *= &qk[l - 1] - &qk[j - 1];
                    }
                }
                if den.is_zero() {
                    return Err(pole(format!("{kind:?} entry ({i}, {j})")));
                }
                Ok(-den.inv()?)
            })
        }
        Triangular::Y => ExactMatrix::try_from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            if i < j {
                return Ok(G::zero());
            }
            let e = (i - j) * (2 * ni + 1 - i - j);
            Ok(sign(i + j) * q.pow(-e / 2)? * q_binomial(ni - j, i - j, q)?)
        }),
        Triangular::U => ExactMatrix::try_from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            if i > j {
                return Ok(G::zero());
            }
            Ok(sign(i + j) * q.pow((j - i) * (j - i + 1) / 2)? * q_binomial(j - 1, j - i, q)?)
        }),
    }
}

/// Closed-form inverse of `Y_n`: `q^{(j-i)(n+1-i)} [n-j, i-j]_q`.
pub fn y_inverse(n: usize, q: &G) -> Result<ExactMatrix, EvalError> {
    let ni = n as i64;
    ExactMatrix::try_from_fn(n, n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        Ok(q.pow((j - i) * (ni + 1 - i))? * q_binomial(ni - j, i - j, q)?)
    })
}

/// Closed-form inverse of `U_n`: `q^{j-i} [j-1, i-1]_q`.
pub fn u_inverse(n: usize, q: &G) -> Result<ExactMatrix, EvalError> {
    ExactMatrix::try_from_fn(n, n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        if i > j {
            return Ok(G::zero());
        }
        Ok(q.pow(j - i)? * q_binomial(j - 1, i - 1, q)?)
    })
}

/// `R_{n,nu}(k)`: sum over `J` subset of `[n]` with `|J| = nu`, `I` its
/// complement, of
/// `q^{sum I - n + nu} prod_l (1 - a q^{k_{i_l} - i_l + l + nu})
///  prod_l (1 - ab q^{k_{j_l} + j_l - l + nu - 1})`.
/// Zero unless `0 <= nu <= n`.
pub fn compute_r(n: usize, nu: i64, k: &[i64], a: &G, b: &G, q: &G) -> Result<G, EvalError> {
    if nu < 0 || nu > n as i64 {
        return Ok(G::zero());
    }
    if k.len() < n {
        return Err(EvalError::Domain(format!("R needs {n} k-values, got {}", k.len())));
    }
    let ab = a * b;
    let mut total = G::zero();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as i64 != nu {
            continue;
        }
        let (mut li, mut lj) = (0i64, 0i64);
        let mut sum_i = 0i64;
        let mut term = G::one();
        for idx in 1..=n as i64 {
            let kk = k[idx as usize - 1];
            if mask & (1 << (idx - 1)) != 0 {
                lj += 1;
                term *= (&ab * &q.pow(kk + idx - lj + nu - 1)?).one_minus();
            } else {
                li += 1;
                sum_i += idx;
                term *= (a * &q.pow(kk - idx + li + nu)?).one_minus();
            }
        }
        total += term * q.pow(sum_i - n as i64 + nu)?;
    }
    Ok(total)
}

/// `prod_{i<j} (q^{k_i-1} - q^{k_j-1})`.
pub fn k_vandermonde(k: &[i64], q: &G) -> Result<G, EvalError> {
    let qk: Vec<G> = k.iter().map(|&v| q.pow(v - 1)).collect::<Result<_, _>>()?;
    let mut acc = G::one();
    for i in 0..qk.len() {
        for j in i + 1..qk.len() {
            acc *= &qk[i] - &qk[j];
        }
    }
    Ok(acc)
}

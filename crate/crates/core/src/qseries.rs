//! q-Pochhammer symbols, q-numbers, rising factorials and terminating
//! hypergeometric series, all exact over `Q(i)`.
//!
//! Negative Pochhammer indices follow the finite reciprocal convention
//! `(a;q)_{-n} = 1 / prod_{k=1}^{n} (1 - a q^{-k})`, which keeps the cocycle
//! `(a;q)_{m+n} = (a;q)_m (aq^m;q)_n` valid for all integers.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{pole, EvalError};
use crate::exactnum::GaussianRational as G;

/// Upper bound on termination lengths searched for. Any parameter that would
/// terminate a series later than this is treated as non-terminating.
pub const MAX_TERMINATION: u64 = 4096;

/// `(a;q)_n` for any integer `n`.
pub fn q_pochhammer(a: &G, q: &G, n: i64) -> Result<G, EvalError> {
    if n >= 0 {
        let mut acc = G::one();
        let mut aqk = a.clone();
        for k in 0..n {
            acc *= aqk.one_minus();
            if k + 1 < n {
                aqk *= q;
            }
        }
        Ok(acc)
    } else {
        let qinv = q.inv()?;
        let mut den = G::one();
        let mut aqk = a * &qinv;
        for k in 1..=(-n) {
            let f = aqk.one_minus();
            if f.is_zero() {
                return Err(pole(format!("(a;q)_{n}: factor k={k} vanishes")));
            }
            den *= f;
            aqk *= &qinv;
        }
        Ok(den.inv()?)
    }
}

/// Factor-wise product `(a_1, ..., a_r; q)_n`.
pub fn q_pochhammer_multi(params: &[G], q: &G, n: i64) -> Result<G, EvalError> {
    let mut acc = G::one();
    for a in params {
        acc *= q_pochhammer(a, q, n)?;
    }
    Ok(acc)
}

/// `[n]_q = (1 - q^n)/(1 - q)`.
pub fn q_number(n: i64, q: &G) -> Result<G, EvalError> {
    if q.is_one() {
        return Err(EvalError::QIsOne);
    }
    Ok(q.pow(n)?.one_minus().checked_div(&q.one_minus())?)
}

/// `[n]_q! = prod_{k=1}^{n} [k]_q`.
pub fn q_factorial(n: u64, q: &G) -> Result<G, EvalError> {
    let mut acc = G::one();
    for k in 1..=n as i64 {
        acc *= q_number(k, q)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n choose k]_q`; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64, q: &G) -> Result<G, EvalError> {
    if n < 0 {
        return Err(EvalError::Domain(format!("q_binomial needs n >= 0, got {n}")));
    }
    if k < 0 || k > n {
        return Ok(G::zero());
    }
    let num = q_pochhammer(q, q, n)?;
    let den = q_pochhammer(q, q, k)? * q_pochhammer(q, q, n - k)?;
    if den.is_zero() {
        return Err(pole(format!("q_binomial({n},{k}): q is a small root of unity")));
    }
    Ok(num.checked_div(&den)?)
}

/// Rising factorial `(alpha)_n = alpha (alpha+1) ... (alpha+n-1)`.
pub fn rising_factorial(alpha: &G, n: u64) -> G {
    let mut acc = G::one();
    let mut f = alpha.clone();
    let one = G::one();
    for _ in 0..n {
        acc *= &f;
        f += &one;
    }
    acc
}

/// Rising factorial extended to negative `n` by
/// `(alpha)_{-m} = 1 / prod_{k=1}^{m} (alpha - k)`.
pub fn rising_factorial_signed(alpha: &G, n: i64) -> Result<G, EvalError> {
    if n >= 0 {
        return Ok(rising_factorial(alpha, n as u64));
    }
    let mut den = G::one();
    for k in 1..=(-n) {
        let f = alpha - &G::from_integer(k);
        if f.is_zero() {
            return Err(pole(format!("rising factorial index {n}: factor k={k} vanishes")));
        }
        den *= f;
    }
    Ok(den.inv()?)
}

pub fn factorial(n: u64) -> G {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    G::from_rational(BigRational::from_integer(acc))
}

/// Smallest `n >= 0` with `a q^n = 1`, if any exists below [`MAX_TERMINATION`].
///
/// Off the unit circle the field norm pins `n` down: `N(a) N(q)^n = 1`, so
/// only one candidate needs an exact check.
pub fn termination_length(a: &G, q: &G) -> Option<u64> {
    if a.is_zero() || q.is_zero() {
        return None;
    }
    if a.is_one() {
        return Some(0);
    }
    let nq = q.norm();
    if nq.is_one() {
        // q on the unit circle: walk exactly, it is rare and bounded.
        let mut x = a.clone();
        for n in 1..=MAX_TERMINATION {
            x *= q;
            if x.is_one() {
                return Some(n);
            }
        }
        return None;
    }
    let mut na = a.norm();
    let mut n = 0u64;
    let grows = nq > BigRational::one();
    // Want N(a) * N(q)^n = 1 with n >= 0.
    loop {
        if na.is_one() {
            break;
        }
        if (na > BigRational::one()) == grows || n >= MAX_TERMINATION {
            return None;
        }
        na *= &nq;
        n += 1;
    }
    if n == 0 {
        return None;
    }
    let qn = q.powu(n);
    if (a * &qn).is_one() {
        Some(n)
    } else {
        None
    }
}

/// Length of termination for the classical series: `-a` when `a` is a
/// nonpositive integer.
pub fn classical_termination(a: &G) -> Option<u64> {
    if !a.is_real() || !a.re().is_integer() || a.re().is_positive() {
        return None;
    }
    let m = -a.re().to_integer();
    u64::try_from(m).ok()
}

/// Parameters of a basic hypergeometric series
/// `sum_k (a_1..a_r;q)_k / (q, b_1..b_s;q)_k z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub numerators: Vec<G>,
    pub denominators: Vec<G>,
    pub base: G,
    pub argument: G,
}

impl SeriesSpec {
    pub fn new(numerators: Vec<G>, denominators: Vec<G>, base: G, argument: G) -> Self {
        SeriesSpec { numerators, denominators, base, argument }
    }

    /// Summation range `0..=N` and the largest termination length among all
    /// terminating numerators. Every denominator is checked against the
    /// latter so an accidental early cutoff cannot hide a `0/0` term.
    fn termination(&self) -> Result<u64, EvalError> {
        let lens: Vec<u64> = self.numerators.iter().filter_map(|a| termination_length(a, &self.base)).collect();
        let n = *lens.iter().min().ok_or(EvalError::NonTerminating)?;
        let n_max = *lens.iter().max().unwrap_or(&n);
        for (j, b) in self.denominators.iter().enumerate() {
            if let Some(m) = termination_length(b, &self.base) {
                if m < n_max {
                    return Err(pole(format!(
                        "denominator {} hits base^-{m} inside a series of length {n_max}",
                        j + 1
                    )));
                }
            }
        }
        Ok(n)
    }
}

/// Exact value of a terminating basic hypergeometric series.
pub fn phi(spec: &SeriesSpec) -> Result<G, EvalError> {
    let n = spec.termination()?;
    phi_partial(spec, n)
}

/// Sum of the first `n + 1` terms (`k = 0..=n`) of the series.
pub fn phi_partial(spec: &SeriesSpec, n: u64) -> Result<G, EvalError> {
    let q = &spec.base;
    let mut nums: Vec<G> = spec.numerators.clone();
    let mut dens: Vec<G> = spec.denominators.clone();
    let mut qk = q.clone();
    let mut term = G::one();
    let mut sum = G::one();
    for k in 1..=n {
        let mut num = spec.argument.clone();
        for a in &nums {
            num *= a.one_minus();
        }
        let mut den = qk.one_minus();
        for b in &dens {
            den *= b.one_minus();
        }
        if den.is_zero() {
            return Err(pole(format!("series denominator vanishes at k={k}")));
        }
        if num.is_zero() {
            // Every later term carries the same zero factor.
            break;
        }
        term = &term * &num.checked_div(&den)?;
        sum += &term;
        for a in nums.iter_mut() {
            *a *= q;
        }
        for b in dens.iter_mut() {
            *b *= q;
        }
        qk *= q;
    }
    Ok(sum)
}

/// Coefficient of `z^k` in the series (argument excluded).
pub fn phi_coeff(spec: &SeriesSpec, k: u64) -> Result<G, EvalError> {
    let q = &spec.base;
    let k = k as i64;
    let num = q_pochhammer_multi(&spec.numerators, q, k)?;
    let den = q_pochhammer(q, q, k)? * q_pochhammer_multi(&spec.denominators, q, k)?;
    if den.is_zero() {
        return Err(pole(format!("coefficient denominator vanishes at k={k}")));
    }
    Ok(num.checked_div(&den)?)
}

/// The `(r+1)W_r` spec: numerators `a1, q a1^(1/2), -q a1^(1/2), tail...`,
/// denominators `a1^(1/2), -a1^(1/2), q a1 / t` for each tail entry `t`.
pub fn w_series_spec(a1_sqrt: &G, tail: &[G], q: &G, z: &G) -> Result<SeriesSpec, EvalError> {
    let a1 = a1_sqrt * a1_sqrt;
    let qs = q * a1_sqrt;
    let mut nums = Vec::with_capacity(tail.len() + 3);
    nums.push(a1.clone());
    nums.push(qs.clone());
    nums.push(-&qs);
    nums.extend(tail.iter().cloned());
    let mut dens = Vec::with_capacity(tail.len() + 2);
    dens.push(a1_sqrt.clone());
    dens.push(-a1_sqrt);
    let qa1 = q * &a1;
    for (j, t) in tail.iter().enumerate() {
        if t.is_zero() {
            return Err(pole(format!("very-well-poised tail parameter {} is zero", j + 1)));
        }
        dens.push(qa1.checked_div(t)?);
    }
    Ok(SeriesSpec::new(nums, dens, q.clone(), z.clone()))
}

/// Terminating very-well-poised series `W(a1; tail; q, z)`; the root of `a1`
/// is an input so that `a1 = a1_sqrt^2` exactly.
pub fn w_series(a1_sqrt: &G, tail: &[G], q: &G, z: &G) -> Result<G, EvalError> {
    phi(&w_series_spec(a1_sqrt, tail, q, z)?)
}

/// Terminating classical series `pFq(numerators; denominators; z)`.
pub fn f_hyper(numerators: &[G], denominators: &[G], z: &G) -> Result<G, EvalError> {
    let lens: Vec<u64> = numerators.iter().filter_map(classical_termination).collect();
    let n = *lens.iter().min().ok_or(EvalError::NonTerminating)?;
    let n_max = *lens.iter().max().unwrap_or(&n);
    for b in denominators {
        if let Some(m) = classical_termination(b) {
            if m < n_max {
                return Err(pole(format!("denominator parameter {b} is a nonpositive integer")));
            }
        }
    }
    let one = G::one();
    let mut nums: Vec<G> = numerators.to_vec();
    let mut dens: Vec<G> = denominators.to_vec();
    let mut term = G::one();
    let mut sum = G::one();
    for k in 1..=n {
        let mut num = z.clone();
        for a in &nums {
            num *= a;
        }
        if num.is_zero() {
            break;
        }
        let mut den = G::from_integer(k as i64);
        for b in &dens {
            den *= b;
        }
        term = &term * &num.checked_div(&den)?;
        sum += &term;
        for a in nums.iter_mut() {
            *a += &one;
        }
        for b in dens.iter_mut() {
            *b += &one;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&g("7/3"), &g("2"), 0).unwrap(), G::one());
        assert_eq!(q_pochhammer(&g("3"), &g("2"), 2).unwrap(), g("10"));
        assert_eq!(q_pochhammer(&g("3"), &g("2"), -1).unwrap(), g("-2"));
        assert!(matches!(q_pochhammer(&g("2"), &g("2"), -1), Err(EvalError::Pole(_))));
    }

    #[test]
    fn q_numbers() {
        let two = g("2");
        assert_eq!(q_number(3, &two).unwrap(), g("7"));
        assert_eq!(q_number(0, &two).unwrap(), G::zero());
        assert_eq!(q_number(4, &two).unwrap(), g("15"));
        assert_eq!(q_number(2, &G::one()), Err(EvalError::QIsOne));
        assert_eq!(q_factorial(3, &two).unwrap(), g("21"));
    }

    #[test]
    fn q_binomials() {
        let q = g("-3/5");
        assert_eq!(q_binomial(5, 0, &q).unwrap(), G::one());
        assert_eq!(q_binomial(4, 2, &g("2")).unwrap(), g("35"));
        assert_eq!(q_binomial(3, 5, &q).unwrap(), G::zero());
        assert_eq!(q_binomial(3, -1, &q).unwrap(), G::zero());
    }

    #[test]
    fn rising_factorials() {
        assert_eq!(rising_factorial(&g("1/2+i"), 0), G::one());
        assert_eq!(rising_factorial(&g("3"), 4), g("360"));
        assert_eq!(rising_factorial(&g("-2"), 4), G::zero());
        // (a)_{-2} = 1/((a-1)(a-2))
        assert_eq!(rising_factorial_signed(&g("5"), -2).unwrap(), g("1/12"));
        assert!(rising_factorial_signed(&g("2"), -2).is_err());
    }

    #[test]
    fn termination_lengths() {
        let q = g("2");
        assert_eq!(termination_length(&g("1/8"), &q), Some(3));
        assert_eq!(termination_length(&G::one(), &q), Some(0));
        assert_eq!(termination_length(&g("8"), &q), None);
        assert_eq!(termination_length(&g("-1/8"), &q), None);
        assert_eq!(termination_length(&g("-i"), &g("i")), Some(1));
        assert_eq!(termination_length(&g("9/4"), &g("2/3")), Some(2));
    }

    #[test]
    fn phi_examples() {
        let q = g("2");
        // Numerator 1 kills every term past k = 0.
        let s = SeriesSpec::new(vec![G::one(), g("5")], vec![g("7")], q.clone(), g("3"));
        assert_eq!(phi(&s).unwrap(), G::one());
        // 2phi1(3, q^-1; 5; q, q) at q = 2 against q-Chu-Vandermonde.
        let s = SeriesSpec::new(vec![g("3"), g("1/2")], vec![g("5")], q.clone(), q.clone());
        assert_eq!(phi(&s).unwrap(), g("1/2"));
        let s = SeriesSpec::new(vec![g("3")], vec![g("5")], q.clone(), q.clone());
        assert_eq!(phi(&s), Err(EvalError::NonTerminating));
    }

    #[test]
    fn phi_sums_exactly_three_terms_for_q_minus_two() {
        let q = g("3");
        let z = g("1/7");
        let s = SeriesSpec::new(vec![g("1/9"), g("2")], vec![g("5")], q.clone(), z.clone());
        let mut expect = G::zero();
        for k in 0..3 {
            expect += phi_coeff(&s, k).unwrap() * z.powu(k);
        }
        assert_eq!(phi(&s).unwrap(), expect);
    }

    #[test]
    fn phi_rejects_denominator_pole_inside_range() {
        let q = g("2");
        let s = SeriesSpec::new(vec![g("1/8")], vec![g("1/2")], q.clone(), q);
        assert!(matches!(phi(&s), Err(EvalError::Pole(_))));
    }

    #[test]
    fn phi_coefficients() {
        let s = SeriesSpec::new(vec![g("3"), g("4")], vec![g("5")], g("2"), g("9"));
        assert_eq!(phi_coeff(&s, 0).unwrap(), G::one());
        assert_eq!(phi_coeff(&s, 1).unwrap(), g("3/2"));
    }

    #[test]
    fn w_series_examples() {
        let q = g("3");
        let s = g("2/5");
        assert_eq!(w_series(&s, &[G::one(), g("7")], &q, &g("5")).unwrap(), G::one());
        // Two-term hand sum for a tail containing q^-1.
        let tail = [g("2"), g("-3/7"), g("5/2"), g("1/4"), g("1/3")];
        let z = g("11/13");
        let a1 = &s * &s;
        let num = a1.one_minus() * (&q * &s).one_minus() * (-(&q * &s)).one_minus();
        let mut num = num * z.clone();
        let mut den = q.one_minus() * s.one_minus() * (-&s).one_minus();
        for t in &tail {
            num *= t.one_minus();
            den *= (&q * &a1).checked_div(t).unwrap().one_minus();
        }
        let expect = G::one() + num.checked_div(&den).unwrap();
        assert_eq!(w_series(&s, &tail, &q, &z).unwrap(), expect);
    }

    #[test]
    fn f_hyper_examples() {
        assert_eq!(f_hyper(&[G::zero(), g("3")], &[g("2")], &g("5")).unwrap(), G::one());
        let (b, c) = (g("3/7"), g("5/3"));
        let got = f_hyper(&[g("-1"), b.clone()], core::slice::from_ref(&c), &G::one()).unwrap();
        assert_eq!(got, (&c - &b).checked_div(&c).unwrap());
        assert!(matches!(f_hyper(&[g("-3")], &[g("-1")], &G::one()), Err(EvalError::Pole(_))));
        assert_eq!(f_hyper(&[g("1/2")], &[g("3")], &G::one()), Err(EvalError::NonTerminating));
    }

    #[test]
    fn f_hyper_counts_n_plus_one_terms() {
        // 1F0(-3;;z) = (1 - z)^3
        let z = g("2/3");
        let got = f_hyper(&[g("-3")], &[], &z).unwrap();
        assert_eq!(got, z.one_minus().powu(3));
    }
}

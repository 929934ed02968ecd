#![allow(dead_code)]

use proptest::prelude::*;
use qdet_core::GaussianRational as G;

/// Small Gaussian rationals, zero allowed.
pub fn gauss() -> impl Strategy<Value = G> {
    (-12i64..=12, 1i64..=9, -12i64..=12, 1i64..=9).prop_map(|(a, b, c, d)| G::ratio(a, b) + G::ratio(c, d) * G::i())
}

/// Small nonzero real rationals.
pub fn real_nonzero() -> impl Strategy<Value = G> {
    (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(p, d, neg)| G::ratio(if neg { -p } else { p }, d))
}

/// A value usable as a base: real, nonzero and not a root of unity.
pub fn base() -> impl Strategy<Value = G> {
    real_nonzero().prop_filter("|q| != 1", |q| !q.norm().eq(&G::one().norm()))
}

pub fn g(s: &str) -> G {
    s.parse().unwrap()
}

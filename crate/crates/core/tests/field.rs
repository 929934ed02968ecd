//! Field axioms and the canonical text form of Gaussian rationals.

mod common;

use common::{g, gauss};
use proptest::prelude::*;
use qdet_core::GaussianRational as G;

proptest! {
    #[test]
    fn addition_is_an_abelian_group(x in gauss(), y in gauss(), z in gauss()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &G::zero(), x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(x in gauss(), y in gauss(), z in gauss()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &G::one(), x.clone());
    }

    #[test]
    fn distributivity(x in gauss(), y in gauss(), z in gauss()) {
        prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
    }

    #[test]
    fn nonzero_elements_are_invertible(x in gauss()) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
        prop_assert_eq!(x.checked_div(&x).unwrap(), G::one());
    }

    #[test]
    fn conjugate_and_norm(x in gauss(), y in gauss()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x * &x.conj()).re().clone(), x.norm());
        prop_assert_eq!(x.mul_i(), &x * &G::i());
    }

    #[test]
    fn integer_powers_add_exponents(x in gauss(), m in -6i64..=6, n in -6i64..=6) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.pow(m + n).unwrap(), x.pow(m).unwrap() * x.pow(n).unwrap());
    }

    #[test]
    fn canonical_text_round_trips(x in gauss()) {
        let s = x.to_string();
        prop_assert_eq!(g(&s), x.clone());
        prop_assert_eq!(g(&s).to_string(), s);
    }
}

#[test]
fn division_by_zero_is_reported() {
    assert!(G::one().checked_div(&G::zero()).is_err());
    assert!(G::zero().pow(-1).is_err());
}

#[test]
fn i_is_a_square_root_of_minus_one() {
    assert_eq!(&G::i() * &G::i(), G::from_integer(-1));
    assert_eq!(g("1+i").inv().unwrap(), g("1/2-1/2i"));
}

//! Determinant and Pfaffian invariants on random exact matrices.

mod common;

use common::gauss;
use proptest::collection::vec;
use proptest::prelude::*;
use qdet_core::{DetMethod, ExactMatrix, GaussianRational as G};

fn square(n: usize) -> impl Strategy<Value = ExactMatrix> {
    vec(gauss(), n * n).prop_map(move |v| ExactMatrix::from_fn(n, n, |i, j| v[(i - 1) * n + j - 1].clone()))
}

fn skew(n: usize) -> impl Strategy<Value = ExactMatrix> {
    square(n).prop_map(move |m| {
        ExactMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            core::cmp::Ordering::Less => m[(i, j)].clone(),
            core::cmp::Ordering::Equal => G::zero(),
            core::cmp::Ordering::Greater => -&m[(j, i)],
        })
    })
}

fn sized<S: Strategy>(max: usize, f: impl Fn(usize) -> S + Clone + 'static) -> impl Strategy<Value = S::Value>
where
    S::Value: core::fmt::Debug,
{
    (1..=max).prop_flat_map(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pfaffian_squared_is_determinant(m in sized(4, |k| skew(2 * k))) {
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.det().unwrap());
    }

    #[test]
    fn pfaffian_elimination_matches_expansion(m in sized(3, |k| skew(2 * k))) {
        prop_assert_eq!(m.pfaffian().unwrap(), m.pfaffian_expansion().unwrap());
    }

    #[test]
    fn elimination_matches_cofactor(m in sized(5, square)) {
        prop_assert_eq!(
            m.determinant(DetMethod::Elimination).unwrap(),
            m.determinant(DetMethod::Cofactor).unwrap()
        );
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (square(n), square(n)))) {
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    /// `det(A B) = sum_S det(A[:, S]) det(B[S, :])` for `A` of shape `2 x 4`.
    #[test]
    fn cauchy_binet(va in vec(gauss(), 8), vb in vec(gauss(), 8)) {
        let a = ExactMatrix::from_fn(2, 4, |i, j| va[(i - 1) * 4 + j - 1].clone());
        let b = ExactMatrix::from_fn(4, 2, |i, j| vb[(i - 1) * 2 + j - 1].clone());
        let mut sum = G::zero();
        for s in 1..=4 {
            for t in s + 1..=4 {
                sum += a.submatrix(&[1, 2], &[s, t]).unwrap().det().unwrap()
                    * b.submatrix(&[s, t], &[1, 2]).unwrap().det().unwrap();
            }
        }
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), sum);
    }

    #[test]
    fn desnanot_jacobi(m in sized(5, |k| square(k + 1))) {
        let n = m.rows();
        let r = |lo: usize, hi: usize| (lo..=hi).collect::<Vec<_>>();
        let d = |rows: Vec<usize>, cols: Vec<usize>| m.submatrix(&rows, &cols).unwrap().det().unwrap();
        let lhs = d(r(1, n), r(1, n)) * d(r(2, n - 1), r(2, n - 1));
        let rhs = d(r(1, n - 1), r(1, n - 1)) * d(r(2, n), r(2, n)) - d(r(1, n - 1), r(2, n)) * d(r(2, n), r(1, n - 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_preserves_determinant(m in sized(5, square)) {
        prop_assert_eq!(m.transpose().det().unwrap(), m.det().unwrap());
    }
}

#[test]
fn odd_and_non_skew_pfaffians_are_rejected() {
    let odd = ExactMatrix::zeros(3, 3);
    assert!(odd.pfaffian().is_err());
    let not_skew = ExactMatrix::identity(2);
    assert!(not_skew.pfaffian().is_err());
}

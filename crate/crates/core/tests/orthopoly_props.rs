//! Agreement between independent evaluation paths of the orthogonal
//! polynomial families, and their symmetries.

mod common;

use common::{base, real_nonzero};
use proptest::prelude::*;
use qdet_core::orthopoly::{
    al_salam_chihara, andrews_rhs, askey_wilson, mehta_wang_d, nishizawa_d, AWParams, AscMethod, AwMethod,
    MehtaWangMethod, NishizawaMethod,
};
use qdet_core::{EvalError, GaussianRational as G};

/// Compare two evaluations, ignoring points where either side hits a pole.
fn agree(a: Result<G, EvalError>, b: Result<G, EvalError>) -> Result<(), TestCaseError> {
    match (a, b) {
        (Ok(x), Ok(y)) => {
            prop_assert_eq!(x, y);
            Ok(())
        }
        (Err(e), _) | (_, Err(e)) if e.is_degenerate() => Ok(()),
        (Err(e), _) | (_, Err(e)) => Err(TestCaseError::fail(e.to_string())),
    }
}

fn params() -> impl Strategy<Value = [G; 6]> {
    ([real_nonzero(), real_nonzero(), real_nonzero(), real_nonzero(), real_nonzero()], base())
        .prop_map(|([a, b, c, d, x], q)| [a, b, c, d, q, x])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn askey_wilson_paths_agree(v in params(), n in 0i64..=8) {
        let [a, b, c, d, q, x] = v;
        let p = AWParams::new(a, b, c, d, q, x);
        agree(askey_wilson(n, &p, AwMethod::Recurrence), askey_wilson(n, &p, AwMethod::Hypergeometric))?;
    }

    /// `p_n` is symmetric in `a, b, c, d`: all 24 orderings give one value.
    #[test]
    fn askey_wilson_is_symmetric(v in params(), n in 0i64..=4) {
        let [a, b, c, d, q, x] = v;
        let abcd = [a, b, c, d];
        let base_value = askey_wilson(n, &AWParams::new(abcd[0].clone(), abcd[1].clone(), abcd[2].clone(), abcd[3].clone(), q.clone(), x.clone()), AwMethod::Recurrence);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let Some(l) = 6usize.checked_sub(i + j + k) else { continue };
                    if i == j || j == k || i == k || l > 3 || l == i || l == j || l == k {
                        continue;
                    }
                    let p = AWParams::new(abcd[i].clone(), abcd[j].clone(), abcd[k].clone(), abcd[l].clone(), q.clone(), x.clone());
                    agree(base_value.clone(), askey_wilson(n, &p, AwMethod::Hypergeometric))?;
                }
            }
        }
    }

    #[test]
    fn andrews_evaluation(a in real_nonzero(), b in real_nonzero(), q in base(), n in 0i64..=8) {
        let p = AWParams::new(a.clone(), -&a, b.clone(), -&b, q.clone(), G::zero());
        agree(askey_wilson(n, &p, AwMethod::Recurrence), andrews_rhs(n as u64, &a, &b, &q))?;
    }

    #[test]
    fn al_salam_chihara_paths_agree(a in real_nonzero(), b in real_nonzero(), q in base(), x in real_nonzero(), n in 0i64..=7) {
        let rec = al_salam_chihara(n, &x, &a, &b, &q, AscMethod::Recurrence);
        agree(rec.clone(), al_salam_chihara(n, &x, &a, &b, &q, AscMethod::Hypergeometric))?;
        agree(rec, al_salam_chihara(n, &x, &a, &b, &q, AscMethod::AwSpecial))?;
    }

    #[test]
    fn mehta_wang_paths_agree(a in real_nonzero(), b in real_nonzero(), n in 0i64..=10) {
        agree(mehta_wang_d(n, &a, &b, MehtaWangMethod::Recurrence), mehta_wang_d(n, &a, &b, MehtaWangMethod::Sum))?;
    }

    #[test]
    fn nishizawa_paths_agree(s in real_nonzero(), t in real_nonzero(), q in base(), n in 0i64..=10) {
        let rec = nishizawa_d(n, &s, &t, &q, NishizawaMethod::Recurrence);
        agree(rec.clone(), nishizawa_d(n, &s, &t, &q, NishizawaMethod::Explicit))?;
        agree(rec, nishizawa_d(n, &s, &t, &q, NishizawaMethod::AlSalamChihara))?;
    }
}

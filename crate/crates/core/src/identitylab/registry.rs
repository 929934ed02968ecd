//! The static table of identity checks.

use super::checks::{classical, determinants as det, quadratic, rows, series, CheckFn};
use super::params::{AuxCount, Slots};

/// Whether a check verifies a proven identity or gathers evidence for a
/// conjectured one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Identity,
    Evidence,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Identity => "identity",
            Mode::Evidence => "evidence",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckSpec {
    pub id: &'static str,
    /// Short descriptive name of the identity.
    pub anchor: &'static str,
    /// How both sides are built.
    pub recipe: &'static str,
    pub mode: Mode,
    /// Default inclusive range of the size parameter.
    pub n_default: (i64, i64),
    /// Smallest size at which the identity is meaningful.
    pub n_floor: i64,
    pub slots: Slots,
    pub run: CheckFn,
}

const R: Slots = Slots { r_range: Some((-2, 3)), ..Slots::BASE };
const K: Slots = Slots { k_tuple: true, ..Slots::BASE };
const XS: Slots = Slots { x_list: true, ..Slots::BASE };
const CLASSICAL: Slots = Slots { r_range: Some((-2, 3)), classical: true, ..Slots::BASE };

const fn aux(k: usize) -> Slots {
    Slots { aux: AuxCount::Fixed(k), ..Slots::BASE }
}

const fn with_floor(mut c: CheckSpec, n_floor: i64) -> CheckSpec {
    c.n_floor = n_floor;
    c
}

const fn spec(
    id: &'static str,
    anchor: &'static str,
    recipe: &'static str,
    n_default: (i64, i64),
    slots: Slots,
    run: CheckFn,
) -> CheckSpec {
    CheckSpec { id, anchor, recipe, mode: Mode::Identity, n_default, n_floor: n_default.0, slots, run }
}

pub static REGISTRY: &[CheckSpec] = &[
    spec(
        "hankel",
        "little q-Jacobi moment Hankel determinant",
        "det(mu_{i+j+r-2})_{n x n} with mu_m = (aq;q)_m/(abq^2;q)_m, against its product evaluation",
        (1, 6),
        R,
        det::hankel,
    ),
    spec(
        "pfaffian_moments",
        "Pfaffian of the skew moment matrix",
        "Pf((q^{i-1} - q^{j-1}) mu_{i+j+r-2})_{2n x 2n} by skew elimination, against its product evaluation; \
         cross-checked by the expansion algorithm for n <= 3",
        (1, 4),
        R,
        det::pfaffian_moments,
    ),
    spec(
        "mehta_wang",
        "classical Mehta-Wang determinant",
        "det((a+j-i)(b)_{i+j})_{0<=i,j<n} against D_n(a,b) prod i!(b)_i; D_n by recurrence and by explicit sum",
        (1, 6),
        Slots { classical: true, ..Slots::BASE },
        det::mehta_wang,
    ),
    spec(
        "nishizawa",
        "q-analogue of the Mehta-Wang determinant",
        "normalized q-determinant against an Al-Salam-Chihara evaluation and the main theorem at b=0, r=0; \
         the original form with q-power prefactor; D_(n,q) three ways",
        (1, 5),
        Slots { half_powers: true, ..Slots::BASE },
        det::nishizawa,
    ),
    spec(
        "thm_main_phi",
        "main determinant, 4phi3 form",
        "det((q^{i-1} - c q^{j-1}) mu_{i+j+r-2})_{n x n} against a q-power times products times a balanced 4phi3",
        (1, 6),
        R,
        det::thm_main_phi,
    ),
    spec(
        "thm_main_aw",
        "main determinant, Askey-Wilson form",
        "the same determinant against products times p_n(0; alpha gamma kappa^{r+1} i, ...) with square roots \
         as sampled roots; p_n by recurrence and by 4phi3",
        (1, 6),
        R,
        det::thm_main_aw,
    ),
    spec(
        "cor_even_phi",
        "main determinant of even size 2m, 4phi3 in base q^2",
        "det of size 2m against a perfect-square product times a 4phi3 in base q^2",
        (1, 3),
        R,
        det::cor_even_phi,
    ),
    spec(
        "cor_even_aw",
        "main determinant of even size 2m, Askey-Wilson form",
        "det of size 2m against a square product times an Askey-Wilson polynomial in base q^2",
        (1, 3),
        R,
        det::cor_even_aw,
    ),
    spec(
        "cor_odd_phi",
        "main determinant of odd size 2m+1, 4phi3 in base q^2",
        "det of size 2m+1 against (1-c) times products times a 4phi3 in base q^2",
        (1, 3),
        R,
        det::cor_odd_phi,
    ),
    spec(
        "cor_odd_aw",
        "main determinant of odd size 2m+1, Askey-Wilson form",
        "det of size 2m+1 against (1-c) times products times an Askey-Wilson polynomial in base q^2",
        (1, 3),
        R,
        det::cor_odd_aw,
    ),
    spec(
        "c1_pfaffian_square",
        "skew case c = 1: determinant is a Pfaffian squared",
        "det at c=1 and size 2m against Pf^2, the squared Pfaffian product, and the even-size form",
        (1, 3),
        R,
        det::c1_pfaffian_square,
    ),
    spec(
        "classical_hahn",
        "classical determinant via continuous Hahn polynomials",
        "det((gamma+j-i)(alpha+1)_{i+j+r-2}/(alpha+beta+2)_{i+j+r-2}) against a 3F2 and a continuous Hahn form",
        (1, 5),
        CLASSICAL,
        classical::classical_hahn,
    ),
    spec(
        "classical_wilson_even",
        "classical determinant of even size via Wilson polynomials",
        "the classical determinant of size 2m against a 4F3 and a Wilson polynomial form",
        (1, 2),
        CLASSICAL,
        classical::classical_wilson_even,
    ),
    spec(
        "classical_wilson_odd",
        "classical determinant of odd size via Wilson polynomials",
        "the classical determinant of size 2m+1 against a 4F3 and a Wilson polynomial form",
        (1, 2),
        CLASSICAL,
        classical::classical_wilson_odd,
    ),
    spec(
        "thm_rows",
        "determinant with arbitrary selected rows",
        "det((q^{k_i-1} - c q^{j-1}) mu_{k_i+j-2}) against row weights, q-Vandermonde and a weighted sum of R_(n,nu)",
        (1, 6),
        K,
        rows::thm_rows,
    ),
    spec(
        "q_kratt",
        "row-selected moment Hankel determinant",
        "det(mu_{k_i+j-2}) against a q-Vandermonde product",
        (1, 6),
        K,
        rows::q_kratt,
    ),
    spec(
        "r_closed",
        "R_(n,nu) at consecutive rows",
        "R_(n,nu)(1..n) against q^{(n-nu)(n-nu-1)/2} [n,nu]_q (aq^{nu+1};q)_{n-nu} (abq^n;q)_nu for all nu",
        (1, 6),
        Slots::BASE,
        rows::r_closed,
    ),
    spec(
        "r_recurrence",
        "recurrence of R_(n,nu) in n",
        "R_(n,nu)(k) against (1-abq^{k_n+n-1}) R_(n-1,nu-1)(k';aq) + q^{n-1}(1-aq^{k_n}) R_(n-1,nu)(k') for nu in -1..n+1",
        (1, 6),
        K,
        rows::r_recurrence,
    ),
    spec(
        "r_sum",
        "alternating sum of R_(n,nu)",
        "sum_nu (-1)^{n-nu} R_(n,nu)(k) against a^n q^{n(n-1)/2 + |k|} (b;q)_n",
        (1, 6),
        K,
        rows::r_sum,
    ),
    spec(
        "residue_ids",
        "partial-fraction identities in x_1..x_n",
        "two rational sums over x_v against c q^{j-1}/prod x plus boundary terms at j=1 and j=n",
        (1, 6),
        XS,
        rows::residue_ids,
    ),
    spec(
        "vandermonde_vw",
        "Vandermonde-type determinants V and W",
        "Vandermonde with a replaced last column, divided by the Vandermonde, against closed forms",
        (1, 6),
        XS,
        rows::vandermonde_vw,
    ),
    spec(
        "bottom_rows",
        "bottom rows of X M Y and L M U",
        "row n of both triangular reductions entry-wise, including the zero middle entries",
        (2, 6),
        K,
        rows::bottom_rows,
    ),
    spec(
        "triangular_inverses",
        "inverses and minors of the triangular factors",
        "Y Y^-1 = U U^-1 = I with closed-form inverses; maximal minors of Y and U against powers of -q",
        (1, 6),
        Slots::BASE,
        rows::triangular_inverses,
    ),
    spec(
        "pq_lemma",
        "determinants and leading minors of P = X M Y and Q = L M U",
        "det P, det Q, and their leading minors against det M_n and det M_(n-1) at shifted parameters",
        (2, 6),
        K,
        rows::pq_lemma,
    ),
    spec(
        "m_recurrence",
        "recurrence for det M_n",
        "det M_n normalized against a two-term combination of det M_(n-1) at (aq, cq) and at (a, c)",
        (2, 6),
        K,
        rows::m_recurrence,
    ),
    spec(
        "m_closed",
        "closed form of det M_n",
        "row-selected determinant = row weights * det M_n, and det M_n against the weighted R_(n,nu) sum",
        (1, 6),
        K,
        rows::m_closed,
    ),
    with_floor(
    spec(
        "phi_contiguous_1",
        "first contiguous relation for 4phi3",
        "coefficients z^0..z^n of phi(a,bq,c,d;e,f,g) - phi(aq,b,c,d;e,f,g) against the shifted series",
        (series::CONTIGUOUS_ORDER, series::CONTIGUOUS_ORDER),
        aux(7),
        series::phi_contiguous_1,
    ),
        0,
    ),
    with_floor(
    spec(
        "phi_contiguous_2",
        "second contiguous relation for 4phi3",
        "coefficients z^0..z^n of the three-term relation shifting e and f",
        (series::CONTIGUOUS_ORDER, series::CONTIGUOUS_ORDER),
        aux(7),
        series::phi_contiguous_2,
    ),
        0,
    ),
    spec(
        "phi_contiguous_3",
        "terminating balanced three-term relation",
        "(1-e)(1-f)(1-g) 4phi3(q^-n, b, c, d; e, f, g) against two shifted balanced series",
        (1, 5),
        aux(5),
        series::phi_contiguous_3,
    ),
    spec(
        "watson",
        "Watson's transformation",
        "terminating 8W7(a; b, c, d, e, q^-n; a^2 q^{n+2}/(bcde)) against a prefactor times a balanced 4phi3",
        (1, 5),
        aux(4),
        series::watson,
    ),
    spec(
        "w8_contiguous",
        "three-term contiguous relation for 8W7",
        "(c-a)(d-aq)(e-aq)(b-aq^n) W(a; b, cq, ...) against W(aq; bq, cq, ...) and W(a; b, c, ..., q^{1-n})",
        (1, 5),
        aux(4),
        series::w8_contiguous,
    ),
    spec(
        "even_odd_factorization",
        "Askey-Wilson polynomial at x = 0 with d = -c",
        "p_n(0; a, b, c, -c | q) against one Askey-Wilson polynomial in base q^2 at x0 = -(a/b + b/a)/2",
        (0, 7),
        Slots::BASE,
        series::even_odd_factorization,
    ),
    spec(
        "andrews",
        "Andrews' evaluation",
        "p_n(0; a, -a, b, -b | q) by recurrence and by 4phi3 against 0 (n odd) or (-1)^m (q, -a^2, -b^2, a^2 b^2 q^{2m}; q^2)_m",
        (0, 8),
        Slots::BASE,
        series::andrews,
    ),
    spec(
        "dj_generic",
        "Desnanot-Jacobi condensation",
        "det * central minor against the 2x2 combination of corner minors, random n x n; each minor by elimination and cofactor",
        (2, 6),
        Slots { aux: AuxCount::Square, ..Slots::BASE },
        quadratic::dj_generic,
    ),
    spec(
        "dj_specialized",
        "condensation of the main determinant",
        "D_n D_(n-2)(aq^2) against D_(n-1) products at shifted a and c; also generic condensation on the matrix",
        (2, 6),
        Slots::BASE,
        quadratic::dj_specialized,
    ),
    spec(
        "quadratic_full",
        "quadratic relation with explicit square roots",
        "products of p_m(0; +-alpha gamma kappa^{1,3} i, ..., beta i, -beta i) for m = n-2, n-1, n",
        (1, 8),
        Slots::BASE,
        quadratic::quadratic_full,
    ),
    spec(
        "quadratic_clean",
        "quadratic relation for p_n(0; a, b, c, -c)",
        "ab(1-q^{n-1})(1+c^2 q^{n-2}) p_n p_(n-2)(aq,bq) against two products of degree n-1 polynomials",
        (1, 8),
        Slots::BASE,
        quadratic::quadratic_clean,
    ),
    spec(
        "quadratic_phi",
        "quadratic relation in 4phi3 form",
        "the same relation written with truncated 4phi3 series; each polynomial factor also checked against its series",
        (1, 8),
        Slots::BASE,
        quadratic::quadratic_phi,
    ),
    CheckSpec {
        id: "conjecture_mw3",
        anchor: "conjectured quadratic relation with free c, d and x",
        recipe: "ab(1-q^{n-1})(1-cd q^{n-2}) p_n p_(n-2)(aq,bq) against two products, p at generic x with parameters (., ., c, d)",
        mode: Mode::Evidence,
        n_default: (1, 6),
        n_floor: 1,
        slots: Slots { delta: true, x: true, ..Slots::BASE },
        run: quadratic::conjecture_mw3,
    },
];

pub fn lookup(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

pub fn ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|c| c.id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn ids_are_unique() {
        let set: BTreeSet<_> = ids().collect();
        assert_eq!(set.len(), REGISTRY.len());
        assert_eq!(REGISTRY.len(), 39);
    }

    #[test]
    fn only_the_conjecture_is_evidence() {
        let ev: alloc::vec::Vec<_> = REGISTRY.iter().filter(|c| c.mode == Mode::Evidence).map(|c| c.id).collect();
        assert_eq!(ev, ["conjecture_mw3"]);
    }

    #[test]
    fn defaults_are_ordered() {
        assert!(REGISTRY.iter().all(|c| c.n_default.0 <= c.n_default.1));
    }
}

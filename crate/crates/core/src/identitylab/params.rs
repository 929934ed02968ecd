//! Parameter points and the deterministic non-degenerate sampler.
//!
//! Every q-check reads `a = alpha^2`, `b = beta^2`, `c = gamma^2`,
//! `q = kappa^2`, so square roots such as `a^(1/2) c^(1/2) q^((r+1)/2)` are the
//! exact products `alpha gamma kappa^(r+1)`.
//!
//! Components are drawn as `p/d` with `p` in `[-9, 9] \ {0}` and `d` in
//! `[1, 9]`. A candidate is rejected when a small monomial in the main
//! parameters equals a power of `kappa` up to sign, since that is how
//! structural denominators such as `1 - ab q^m` vanish. Anything the filter
//! misses surfaces as a pole during evaluation and the harness draws again.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::EvalError;
use crate::exactnum::GaussianRational as G;

/// Attempts before a trial is reported as degenerate.
pub const MAX_ATTEMPTS: u32 = 1000;

/// How many free auxiliary scalars a check draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxCount {
    None,
    Fixed(usize),
    /// `n * n` entries, for a random square matrix.
    Square,
}

/// Optional slots a check needs filled, beyond `kappa, alpha, beta, gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slots {
    /// Inclusive range for `r`; `None` fixes `r = 0`.
    pub r_range: Option<(i64, i64)>,
    pub delta: bool,
    pub x: bool,
    /// `n` distinct integers in `[1, 12]`.
    pub k_tuple: bool,
    /// `n` distinct nonzero rationals.
    pub x_list: bool,
    /// `s = q^(a/2)` and `t = q^(b/2)`.
    pub half_powers: bool,
    /// Rational classical parameters, never in `Z/2`.
    pub classical: bool,
    pub aux: AuxCount,
}

impl Slots {
    pub const BASE: Slots = Slots {
        r_range: None,
        delta: false,
        x: false,
        k_tuple: false,
        x_list: false,
        half_powers: false,
        classical: false,
        aux: AuxCount::None,
    };

    /// Human-readable list of required slots.
    pub fn describe(&self) -> String {
        let mut s = String::from("kappa (q = kappa^2), alpha, beta, gamma (a, b, c = squares)");
        if let Some((lo, hi)) = self.r_range {
            let _ = write!(s, ", r in [{lo}, {hi}]");
        }
        if self.delta {
            s.push_str(", delta (d)");
        }
        if self.x {
            s.push_str(", x");
        }
        if self.k_tuple {
            s.push_str(", k-tuple of n distinct integers in [1, 12]");
        }
        if self.x_list {
            s.push_str(", x_1..x_n distinct");
        }
        if self.half_powers {
            s.push_str(", s = q^(a/2), t = q^(b/2)");
        }
        if self.classical {
            s.push_str(", classical alpha_c, beta_c, gamma_c outside Z/2");
        }
        match self.aux {
            AuxCount::None => {}
            AuxCount::Fixed(k) => {
                let _ = write!(s, ", {k} auxiliary scalars");
            }
            AuxCount::Square => s.push_str(", n^2 auxiliary matrix entries"),
        }
        s
    }
}

/// A sampled parameter assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub kappa: G,
    pub alpha: G,
    pub beta: G,
    pub gamma: G,
    pub r: i64,
    pub delta: Option<G>,
    pub x: Option<G>,
    pub k_tuple: Option<Vec<i64>>,
    pub x_list: Option<Vec<G>>,
    pub s_half: Option<G>,
    pub t_half: Option<G>,
    pub alpha_c: Option<G>,
    pub beta_c: Option<G>,
    pub gamma_c: Option<G>,
    pub aux: Vec<G>,
}

fn missing(name: &str) -> EvalError {
    EvalError::Domain(format!("parameter point has no {name}"))
}

impl ParamPoint {
    /// A point with only the four main roots set and `r = 0`.
    pub fn basic(kappa: G, alpha: G, beta: G, gamma: G) -> Self {
        ParamPoint {
            kappa,
            alpha,
            beta,
            gamma,
            r: 0,
            delta: None,
            x: None,
            k_tuple: None,
            x_list: None,
            s_half: None,
            t_half: None,
            alpha_c: None,
            beta_c: None,
            gamma_c: None,
            aux: Vec::new(),
        }
    }

    pub fn q(&self) -> G {
        &self.kappa * &self.kappa
    }
    pub fn a(&self) -> G {
        &self.alpha * &self.alpha
    }
    pub fn b(&self) -> G {
        &self.beta * &self.beta
    }
    pub fn c(&self) -> G {
        &self.gamma * &self.gamma
    }

    pub fn delta(&self) -> Result<&G, EvalError> {
        self.delta.as_ref().ok_or_else(|| missing("delta"))
    }
    pub fn x(&self) -> Result<&G, EvalError> {
        self.x.as_ref().ok_or_else(|| missing("x"))
    }
    pub fn k_tuple(&self) -> Result<&[i64], EvalError> {
        self.k_tuple.as_deref().ok_or_else(|| missing("k-tuple"))
    }
    pub fn x_list(&self) -> Result<&[G], EvalError> {
        self.x_list.as_deref().ok_or_else(|| missing("x list"))
    }
    pub fn half_powers(&self) -> Result<(&G, &G), EvalError> {
        match (&self.s_half, &self.t_half) {
            (Some(s), Some(t)) => Ok((s, t)),
            _ => Err(missing("s/t half powers")),
        }
    }
    pub fn classical(&self) -> Result<(&G, &G, &G), EvalError> {
        match (&self.alpha_c, &self.beta_c, &self.gamma_c) {
            (Some(a), Some(b), Some(c)) => Ok((a, b, c)),
            _ => Err(missing("classical parameters")),
        }
    }
    pub fn aux(&self, count: usize) -> Result<&[G], EvalError> {
        if self.aux.len() < count {
            return Err(missing("enough auxiliary scalars"));
        }
        Ok(&self.aux[..count])
    }

    /// Single-line rendering used in reports, with canonical scalars.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ =
            write!(s, "kappa={} alpha={} beta={} gamma={} r={}", self.kappa, self.alpha, self.beta, self.gamma, self.r);
        let opt = |s: &mut String, name: &str, v: &Option<G>| {
            if let Some(v) = v {
                let _ = write!(s, " {name}={v}");
            }
        };
        opt(&mut s, "delta", &self.delta);
        opt(&mut s, "x", &self.x);
        if let Some(k) = &self.k_tuple {
            let _ = write!(s, " k={k:?}");
        }
        let list = |s: &mut String, name: &str, v: &[G]| {
            let _ = write!(s, " {name}=[");
            for (i, x) in v.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{x}");
            }
            s.push(']');
        };
        if let Some(xs) = &self.x_list {
            list(&mut s, "xs", xs);
        }
        opt(&mut s, "s", &self.s_half);
        opt(&mut s, "t", &self.t_half);
        opt(&mut s, "alpha_c", &self.alpha_c);
        opt(&mut s, "beta_c", &self.beta_c);
        opt(&mut s, "gamma_c", &self.gamma_c);
        if !self.aux.is_empty() {
            list(&mut s, "aux", &self.aux);
        }
        s
    }
}

/// Seed for one candidate, mixing every coordinate through SplitMix64 so
/// neighbouring trials get unrelated streams.
pub fn candidate_seed(check_id: &str, n: i64, seed: u64, trial: u32, attempt: u32) -> u64 {
    // FNV-1a over the id keeps the mapping stable across registry edits.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in check_id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut state = h;
    for word in [seed, n as u64, u64::from(trial), u64::from(attempt)] {
        state = splitmix(state ^ word);
    }
    state
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn draw(rng: &mut ChaCha8Rng) -> G {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-9i64..=9);
    }
    let d = rng.gen_range(1i64..=9);
    G::ratio(p, d)
}

fn draw_classical(rng: &mut ChaCha8Rng) -> G {
    loop {
        let v = draw(rng);
        let twice = v.re() + v.re();
        if !twice.is_integer() {
            return v;
        }
    }
}

/// Draw candidate number `attempt` for `(check_id, n, seed, trial)`.
/// Filtering is separate; see [`is_degenerate`].
pub fn candidate(check_id: &str, slots: &Slots, n: i64, seed: u64, trial: u32, attempt: u32) -> ParamPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(candidate_seed(check_id, n, seed, trial, attempt));
    let mut kappa = draw(&mut rng);
    while kappa.norm().is_one() {
        kappa = draw(&mut rng);
    }
    let alpha = draw(&mut rng);
    let beta = draw(&mut rng);
    let gamma = draw(&mut rng);
    let mut p = ParamPoint::basic(kappa, alpha, beta, gamma);
    if let Some((lo, hi)) = slots.r_range {
        p.r = rng.gen_range(lo..=hi);
    }
    let len = n.max(0) as usize;
    if slots.delta {
        p.delta = Some(draw(&mut rng));
    }
    if slots.x {
        p.x = Some(draw(&mut rng));
    }
    if slots.k_tuple {
        let mut pool: Vec<i64> = (1..=12).collect();
        for i in 0..len.min(12) {
            let j = rng.gen_range(i..12);
            pool.swap(i, j);
        }
        pool.truncate(len.min(12));
        p.k_tuple = Some(pool);
    }
    if slots.x_list {
        let mut xs: Vec<G> = Vec::with_capacity(len);
        while xs.len() < len {
            let v = draw(&mut rng);
            if !xs.contains(&v) {
                xs.push(v);
            }
        }
        p.x_list = Some(xs);
    }
    if slots.half_powers {
        p.s_half = Some(draw(&mut rng));
        p.t_half = Some(draw(&mut rng));
    }
    if slots.classical {
        p.alpha_c = Some(draw_classical(&mut rng));
        p.beta_c = Some(draw_classical(&mut rng));
        p.gamma_c = Some(draw_classical(&mut rng));
    }
    let aux = match slots.aux {
        AuxCount::None => 0,
        AuxCount::Fixed(k) => k,
        AuxCount::Square => len * len,
    };
    p.aux = (0..aux).map(|_| draw(&mut rng)).collect();
    p
}

/// Largest `|j|` in the `kappa^j` coincidence test for size `n`.
fn kappa_exponent_bound(n: i64) -> i64 {
    16 * n.max(1) + 32
}

/// True when some monomial `prod v_i^{e_i}` with `|e_i| <= 4`,
/// `sum |e_i| <= 8`, not all zero, has the same absolute value as
/// `kappa^j` for some `|j| <= bound`.
fn monomial_clash(vars: &[&G], kappa: &G, bound: i64) -> bool {
    let abs = |g: &G| -> BigRational { g.re().abs() };
    let k = abs(kappa);
    let kinv = k.recip();
    let mut powers: BTreeSet<BigRational> = BTreeSet::new();
    let (mut up, mut down) = (BigRational::one(), BigRational::one());
    powers.insert(up.clone());
    for _ in 0..bound {
        up *= &k;
        down *= &kinv;
        powers.insert(up.clone());
        powers.insert(down.clone());
    }
    // Per-variable power tables for exponents -4..=4.
    let tables: Vec<Vec<BigRational>> = vars
        .iter()
        .map(|v| {
            let x = abs(v);
            let xi = x.recip();
            let mut t = Vec::with_capacity(9);
            for e in -4i32..=4 {
                t.push(if e >= 0 { pow_rat(&x, e as u32) } else { pow_rat(&xi, (-e) as u32) });
            }
            t
        })
        .collect();
    fn walk(
        tables: &[Vec<BigRational>],
        idx: usize,
        acc: &BigRational,
        degree: i32,
        nonzero: bool,
        powers: &BTreeSet<BigRational>,
    ) -> bool {
        if idx == tables.len() {
            return nonzero && powers.contains(acc);
        }
        for e in -4i32..=4 {
            let d = degree + e.abs();
            if d > 8 {
                continue;
            }
            let next = acc * &tables[idx][(e + 4) as usize];
            if walk(tables, idx + 1, &next, d, nonzero || e != 0, powers) {
                return true;
            }
        }
        false
    }
    walk(&tables, 0, &BigRational::one(), 0, false, &powers)
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Degeneracy filter applied to every candidate before evaluation.
pub fn is_degenerate(p: &ParamPoint, n: i64) -> bool {
    if p.kappa.is_zero() || p.kappa.norm().is_one() {
        return true;
    }
    let bound = kappa_exponent_bound(n);
    let mut vars: Vec<&G> = alloc::vec![&p.alpha, &p.beta, &p.gamma];
    if let Some(d) = &p.delta {
        vars.push(d);
    }
    if monomial_clash(&vars, &p.kappa, bound) {
        return true;
    }
    if let (Some(s), Some(t)) = (&p.s_half, &p.t_half) {
        if monomial_clash(&[s, t], &p.kappa, bound) {
            return true;
        }
    }
    false
}

/// First candidate passing the degeneracy filter, or `None` after
/// [`MAX_ATTEMPTS`] rejections. Returns the attempt index with the point.
pub fn first_candidate(
    check_id: &str,
    slots: &Slots,
    n: i64,
    seed: u64,
    trial: u32,
    from_attempt: u32,
) -> Option<(u32, ParamPoint)> {
    (from_attempt..MAX_ATTEMPTS).find_map(|attempt| {
        let p = candidate(check_id, slots, n, seed, trial, attempt);
        (!is_degenerate(&p, n)).then_some((attempt, p))
    })
}

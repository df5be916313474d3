//! Maximal entries of depth-`n` monoid elements.
//!
//! Write `P = 2 + uv`, `s = min(u, v)`, `t = max(u, v)` and let `U_m`, `V_m`
//! be the Lucas sequences of `x^2 - P x + 1`. The largest entry over all
//! depth-`n` elements of the monoid is
//!
//! ```text
//!   n = 0          1
//!   n = 2k + 1     t * U_{k+1}
//!   n = 2k + 2     (uv U_{k+1} + V_{k+1}) / 2              if s > 1
//!                  t ((2 - t) U_{k+1} + V_{k+1}) / 2       if s = 1
//! ```
//!
//! which is the integer form of the radical closed forms evaluated by
//! [`closed_form_float`]. Both are checked against [`crate::tree::mu_row_bruteforce`]
//! in the test suites; the radicals are never the source of truth.

use std::sync::Mutex;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{word_to_matrix, EntryPos, Letter, Mat2, MonoidParams, Word};

/// Mantissa bits for the radical closed forms (rounded up to whole words).
pub const CLOSED_FORM_PRECISION: usize = 120;

/// `mu_depth(n) = fseq(min(u,v), max(u,v), n + FSEQ_DEPTH_OFFSET)` when
/// `u, v > 1` or `u = v = 1`.
pub const FSEQ_DEPTH_OFFSET: u64 = 1;

const RM: RoundingMode = RoundingMode::ToEven;

/// `(U_m, V_m)` for the recurrence `x_{k+1} = P x_k - x_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasPair {
    pub p: BigUint,
    pub m: u64,
    pub u: BigUint,
    pub v: BigUint,
}

/// Exact `(U_m, V_m)` with `U_0 = 0, U_1 = 1, V_0 = 2, V_1 = P`, by doubling.
///
/// With `Q = 1`: `U_2k = U_k V_k`, `V_2k = V_k^2 - 2`,
/// `U_{2k+1} = U_{k+1} V_k - 1`, `V_{2k+1} = V_{k+1} V_k - P`.
/// Every subtraction stays nonnegative for `P >= 3`.
pub fn lucas(p: &BigUint, m: u64) -> Result<LucasPair> {
    if *p < BigUint::from(3u32) {
        return Err(Error::InvalidParams(format!(
            "Lucas parameter P must be >= 3 (got {p})"
        )));
    }
    let two = BigUint::from(2u32);
    // (U_k, V_k, U_{k+1}, V_{k+1}) starting at k = 0
    let (mut uk, mut vk) = (BigUint::zero(), two.clone());
    let (mut uk1, mut vk1) = (BigUint::one(), p.clone());
    for bit in (0..64 - m.leading_zeros()).rev() {
        let u2k = &uk * &vk;
        let v2k = &vk * &vk - &two;
        let u2k1 = &uk1 * &vk - 1u32;
        let v2k1 = &vk1 * &vk - p;
        if (m >> bit) & 1 == 1 {
            let u2k2 = &uk1 * &vk1;
            let v2k2 = &vk1 * &vk1 - &two;
            (uk, vk, uk1, vk1) = (u2k1, v2k1, u2k2, v2k2);
        } else {
            (uk, vk, uk1, vk1) = (u2k, v2k, u2k1, v2k1);
        }
    }
    Ok(LucasPair {
        p: p.clone(),
        m,
        u: uk,
        v: vk,
    })
}

fn lucas_for(params: MonoidParams, m: u64) -> LucasPair {
    lucas(&(params.uv() + 2u32), m).expect("2 + uv >= 3")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaGammaPair {
    pub n: u64,
    pub alpha: BigUint,
    pub gamma: BigUint,
}

/// Iterates `alpha_n = alpha_{n-1} + v gamma_{n-1}`,
/// `gamma_n = u alpha_{n-1} + (1 + uv) gamma_{n-1}` from the seed
/// `(alpha_0, gamma_0) = (a, c)`.
///
/// The seed is the left column of `L_u M`, so `(alpha_n, gamma_n)` is the
/// left column of `(L_u R_v)^n L_u M`. For `M = I2` the seed is `(1, u)`.
pub fn alpha_gamma(
    params: MonoidParams,
    a: &BigUint,
    c: &BigUint,
    n: u64,
) -> Result<AlphaGammaPair> {
    if a.is_zero() && c.is_zero() {
        return Err(Error::InvalidParams("a and c must not both be zero".into()));
    }
    let (u, v) = (params.u(), params.v());
    let one_uv = params.uv() + 1u32;
    let (mut alpha, mut gamma) = (a.clone(), c.clone());
    for _ in 0..n {
        let next_alpha = &alpha + &gamma * v;
        let next_gamma = &alpha * u + &gamma * &one_uv;
        alpha = next_alpha;
        gamma = next_gamma;
    }
    Ok(AlphaGammaPair { n, alpha, gamma })
}

/// [`alpha_gamma`] seeded from the left column `(a, c)` of a root `M`,
/// i.e. with `(alpha_0, gamma_0) = (a, u a + c)`.
pub fn alpha_gamma_from_root(
    params: MonoidParams,
    a: &BigUint,
    c: &BigUint,
    n: u64,
) -> Result<AlphaGammaPair> {
    if a.is_zero() && c.is_zero() {
        return Err(Error::InvalidParams("a and c must not both be zero".into()));
    }
    alpha_gamma(params, a, &(a * params.u() + c), n)
}

/// Exact largest entry over the depth-`n` elements of the monoid.
pub fn mu_depth(params: MonoidParams, n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let t = params.t();
    if n % 2 == 1 {
        let lp = lucas_for(params, (n - 1) / 2 + 1);
        return lp.u * t;
    }
    let lp = lucas_for(params, (n - 2) / 2 + 1);
    let doubled = if params.s() > 1 {
        BigInt::from(params.uv() * &lp.u + &lp.v)
    } else {
        let t_signed = BigInt::from(t);
        &t_signed * ((BigInt::from(2) - &t_signed) * BigInt::from(lp.u) + BigInt::from(lp.v))
    };
    let half: BigInt = doubled / 2;
    half.to_biguint()
        .expect("even-depth maximum is nonnegative")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DepthParity {
    Odd,
    Even,
}

/// A word whose matrix attains the depth-`n` maximum, and where.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub depth: u64,
    pub word: Word,
    pub matrix: Mat2,
    pub entry: EntryPos,
    pub value: String,
}

fn alternating(first: Letter, second: Letter, pairs: usize) -> Word {
    Word::from_letters([first, second].repeat(pairs))
}

/// The explicit maximizing word at depth `n >= 1`:
///
/// * `n = 2k+1`: `(LR)^k L` at (2,1) if `u >= v`, else `(RL)^k R` at (1,2);
/// * `n = 2k+2`, `s > 1`: `(RL)^(k+1)`, position found at runtime;
/// * `n = 2k+2`, `s = 1`: `L (LR)^k L` at (2,1) if `u >= v`, else
///   `R (RL)^k R` at (1,2).
///
/// The result is checked against [`mu_depth`]; a miss is reported as
/// [`Error::WitnessMismatch`].
pub fn witness(params: MonoidParams, n: u64) -> Result<Witness> {
    if n == 0 {
        return Err(Error::InvalidParams("witness depth must be >= 1".into()));
    }
    let lower_side = params.u() >= params.v();
    let (word, entry) = if n % 2 == 1 {
        let k = ((n - 1) / 2) as usize;
        if lower_side {
            let mut w = alternating(Letter::L, Letter::R, k);
            w.push(Letter::L);
            (w, Some(EntryPos::new(2, 1)))
        } else {
            let mut w = alternating(Letter::R, Letter::L, k);
            w.push(Letter::R);
            (w, Some(EntryPos::new(1, 2)))
        }
    } else {
        let k = ((n - 2) / 2) as usize;
        if params.s() > 1 {
            (alternating(Letter::R, Letter::L, k + 1), None)
        } else {
            let (outer, inner, pos) = if lower_side {
                (Letter::L, Letter::R, EntryPos::new(2, 1))
            } else {
                (Letter::R, Letter::L, EntryPos::new(1, 2))
            };
            let mut w = Word::from_letters(vec![outer]);
            w.extend_from(&alternating(outer, inner, k));
            w.push(outer);
            (w, Some(pos))
        }
    };

    let matrix = word_to_matrix(&word, params);
    let entry = entry.unwrap_or_else(|| matrix.argmax());
    let expected = mu_depth(params, n);
    if matrix.mu() != expected || *matrix.entry(entry) != expected {
        return Err(Error::WitnessMismatch {
            depth: n,
            word: word.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(Witness {
        depth: n,
        word,
        matrix,
        entry,
        value: expected.to_string(),
    })
}

/// `F_0 = 0, F_1 = 1`, `F_n = u F_{n-1} + F_{n-2}` for odd `n`,
/// `F_n = v F_{n-1} + F_{n-2}` for even `n`.
pub fn fseq(params: MonoidParams, n: u64) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    // (F_{k-1}, F_k) with F_{-1} = 1 so that F_1 = u * 0 + 1
    for k in 1..=n {
        let coeff = if k % 2 == 1 { params.u() } else { params.v() };
        let next = &cur * coeff + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `mu_depth` through [`fseq`] with the `(min, max)` orientation; only
/// meaningful when `u, v > 1` or `u = v = 1`.
pub fn mu_depth_via_fseq(params: MonoidParams, n: u64) -> BigUint {
    let oriented = MonoidParams::new(params.s(), params.t()).expect("positive");
    fseq(oriented, n + FSEQ_DEPTH_OFFSET)
}

/// Largest `n` with `mu_depth(n) < bound`.
///
/// `mu_depth` is nondecreasing in `n`, so an exponential probe followed by
/// a binary search costs `O(log n)` evaluations.
pub fn collision_horizon(params: MonoidParams, bound: &BigUint) -> Result<u64> {
    if *bound < BigUint::from(2u32) {
        return Err(Error::InvalidParams(format!(
            "bound must be >= 2 (got {bound})"
        )));
    }
    // invariant: mu(lo) < bound <= mu(hi)
    let mut lo = 0u64;
    let mut hi = 1u64;
    while mu_depth(params, hi) < *bound {
        lo = hi;
        hi = hi
            .checked_mul(2)
            .ok_or_else(|| Error::InvalidParams("collision horizon exceeds u64".into()))?;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if mu_depth(params, mid) < *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

fn consts() -> &'static Mutex<Consts> {
    static CONSTS: std::sync::OnceLock<Mutex<Consts>> = std::sync::OnceLock::new();
    CONSTS.get_or_init(|| Mutex::new(Consts::new().expect("astro-float constants cache")))
}

fn bf(x: u64) -> BigFloat {
    BigFloat::from_u64(x, CLOSED_FORM_PRECISION)
}

fn bf_big(x: &BigUint) -> BigFloat {
    let mut cc = consts().lock().expect("constants cache poisoned");
    BigFloat::parse(
        &x.to_string(),
        Radix::Dec,
        CLOSED_FORM_PRECISION,
        RM,
        &mut cc,
    )
}

fn sqrt(x: &BigFloat) -> BigFloat {
    x.sqrt(CLOSED_FORM_PRECISION, RM)
}

fn add(x: &BigFloat, y: &BigFloat) -> BigFloat {
    x.add(y, CLOSED_FORM_PRECISION, RM)
}

fn sub(x: &BigFloat, y: &BigFloat) -> BigFloat {
    x.sub(y, CLOSED_FORM_PRECISION, RM)
}

fn mul(x: &BigFloat, y: &BigFloat) -> BigFloat {
    x.mul(y, CLOSED_FORM_PRECISION, RM)
}

fn div(x: &BigFloat, y: &BigFloat) -> BigFloat {
    x.div(y, CLOSED_FORM_PRECISION, RM)
}

fn powi(x: &BigFloat, n: u64) -> BigFloat {
    x.powi(n as usize, CLOSED_FORM_PRECISION, RM)
}

/// Radical constants in high precision.
///
/// `q± = 2 + uv ± sqrt(uv(4 + uv))` and `λ1,2 = q±/2` are shared; `p±`
/// differs between the maximal-entry formulas (`±s sqrt(t) + sqrt(s(4+uv))`)
/// and the `(alpha, gamma)` system (`±v sqrt(u) + sqrt(v(4+uv))`).
#[derive(Debug, Clone)]
pub struct ClosedFormParams {
    pub p_plus: BigFloat,
    pub p_minus: BigFloat,
    pub q_plus: BigFloat,
    pub q_minus: BigFloat,
    pub lambda1: BigFloat,
    pub lambda2: BigFloat,
}

impl ClosedFormParams {
    fn with_p(params: MonoidParams, lead: u64, under_root: u64, other: u64) -> Self {
        let uv = params.u() * params.v();
        let root = sqrt(&bf(uv * (4 + uv)));
        let q_plus = add(&bf(2 + uv), &root);
        let q_minus = sub(&bf(2 + uv), &root);
        let shift = mul(&bf(lead), &sqrt(&bf(under_root)));
        let base = sqrt(&bf(other * (4 + uv)));
        let two = bf(2);
        Self {
            p_plus: add(&base, &shift),
            p_minus: sub(&base, &shift),
            lambda1: div(&q_plus, &two),
            lambda2: div(&q_minus, &two),
            q_plus,
            q_minus,
        }
    }

    pub fn maximal_entry(params: MonoidParams) -> Self {
        Self::with_p(params, params.s(), params.t(), params.s())
    }

    pub fn system(params: MonoidParams) -> Self {
        Self::with_p(params, params.v(), params.u(), params.v())
    }
}

/// Coefficients of the root column `[alpha_0, gamma_0]` in the eigenbasis
/// of `[[1, v], [u, 1 + uv]]`.
#[derive(Debug, Clone)]
pub struct EigenCoefficients {
    pub c1: BigFloat,
    pub c2: BigFloat,
}

impl EigenCoefficients {
    /// For the root column `(a, c)` (so `gamma_0 = u a + c`).
    pub fn new(params: MonoidParams, a: u64, c: u64) -> Self {
        let (u, v) = (params.u(), params.v());
        let uv = u * v;
        let su = sqrt(&bf(u));
        let rv = sqrt(&bf(v * (4 + uv)));
        let ruv = sqrt(&bf(uv * (4 + uv)));
        let v_su = mul(&bf(v), &su);
        let denom = mul(&bf(2), &rv);
        let a_su = mul(&bf(a), &su);
        let c1 = add(
            &mul(&bf(c), &add(&v_su, &rv)),
            &mul(&a_su, &add(&bf(2 + uv), &ruv)),
        );
        let c2 = sub(
            &mul(&bf(c), &sub(&rv, &v_su)),
            &mul(&a_su, &sub(&bf(2 + uv), &ruv)),
        );
        Self {
            c1: div(&c1, &denom),
            c2: div(&c2, &denom),
        }
    }
}

/// The radical closed form for depth `2n+1` (odd) or `2n+2` (even).
pub fn closed_form_float(params: MonoidParams, n: u64, parity: DepthParity) -> BigFloat {
    let k = ClosedFormParams::maximal_entry(params);
    let (s, t, uv) = (params.s(), params.t(), params.u() * params.v());
    let sqrt_t = sqrt(&bf(t));
    let qp = powi(&k.q_plus, n + 1);
    let qm = powi(&k.q_minus, n + 1);
    match parity {
        DepthParity::Odd => {
            let num = mul(&sqrt_t, &sub(&qp, &qm));
            let den = mul(&powi(&bf(2), n + 1), &sqrt(&bf(s * (4 + uv))));
            div(&num, &den)
        }
        DepthParity::Even if s > 1 => {
            let num = add(&mul(&k.p_plus, &qp), &mul(&k.p_minus, &qm));
            let den = mul(&powi(&bf(2), n + 2), &sqrt(&bf(s * (4 + uv))));
            div(&num, &den)
        }
        DepthParity::Even => {
            let two = bf(2);
            let lead = add(&mul(&sqrt_t, &k.p_minus), &two);
            let tail = sub(&mul(&sqrt_t, &k.p_plus), &two);
            let num = mul(&sqrt_t, &add(&mul(&lead, &qp), &mul(&tail, &qm)));
            let den = mul(&powi(&bf(2), n + 2), &sqrt(&bf(4 + uv)));
            div(&num, &den)
        }
    }
}

/// `gamma_n` from its radical closed form, root column `(a, c)`.
pub fn gamma_closed_form(params: MonoidParams, a: u64, c: u64, n: u64) -> BigFloat {
    let k = ClosedFormParams::system(params);
    let (u, v) = (params.u(), params.v());
    let su = sqrt(&bf(u));
    let (plus, minus) = system_terms(&k, &su, a, c, n);
    let den = mul(&powi(&bf(2), n + 1), &sqrt(&bf(v * (4 + u * v))));
    div(&add(&plus, &minus), &den)
}

/// `alpha_n` from its radical closed form, root column `(a, c)`.
pub fn alpha_closed_form(params: MonoidParams, a: u64, c: u64, n: u64) -> BigFloat {
    let k = ClosedFormParams::system(params);
    let (u, v) = (params.u(), params.v());
    let su = sqrt(&bf(u));
    let (plus, minus) = system_terms(&k, &su, a, c, n);
    let num = sub(&mul(&plus, &k.p_minus), &mul(&minus, &k.p_plus));
    let den = mul(&powi(&bf(2), n + 2), &sqrt(&bf(u * v * (4 + u * v))));
    div(&num, &den)
}

/// `((c p+ + a q+ sqrt(u)) q+^n, (c p- - a q- sqrt(u)) q-^n)`
fn system_terms(
    k: &ClosedFormParams,
    su: &BigFloat,
    a: u64,
    c: u64,
    n: u64,
) -> (BigFloat, BigFloat) {
    let plus = add(&mul(&bf(c), &k.p_plus), &mul(&bf(a), &mul(&k.q_plus, su)));
    let minus = sub(&mul(&bf(c), &k.p_minus), &mul(&bf(a), &mul(&k.q_minus, su)));
    (
        mul(&plus, &powi(&k.q_plus, n)),
        mul(&minus, &powi(&k.q_minus, n)),
    )
}

/// `gamma_n = c1 λ1^n + c2 λ2^n`, the eigen-decomposition route.
pub fn gamma_eigen(params: MonoidParams, a: u64, c: u64, n: u64) -> BigFloat {
    let k = ClosedFormParams::system(params);
    let e = EigenCoefficients::new(params, a, c);
    add(
        &mul(&e.c1, &powi(&k.lambda1, n)),
        &mul(&e.c2, &powi(&k.lambda2, n)),
    )
}

/// `|approx - exact| / exact` as an `f64` (`exact` must be nonzero).
pub fn relative_error(approx: &BigFloat, exact: &BigUint) -> f64 {
    let e = bf_big(exact);
    let rel = div(&sub(approx, &e).abs(), &e);
    to_f64(&rel)
}

pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let mut cc = consts().lock().expect("constants cache poisoned");
    x.format(Radix::Dec, RM, &mut cc)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(f64::NAN)
}

/// Decimal rendering of a high-precision value.
pub fn format_decimal(x: &BigFloat) -> String {
    let mut cc = consts().lock().expect("constants cache poisoned");
    x.format(Radix::Dec, RM, &mut cc)
        .unwrap_or_else(|e| format!("<{e:?}>"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(u: u64, v: u64) -> MonoidParams {
        MonoidParams::new(u, v).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// U_m, V_m by direct recurrence.
    fn lucas_slow(pp: u64, m: u64) -> (BigUint, BigUint) {
        let (mut u0, mut u1) = (BigInt::from(0), BigInt::from(1));
        let (mut v0, mut v1) = (BigInt::from(2), BigInt::from(pp));
        for _ in 0..m {
            (u0, u1) = (u1.clone(), &u1 * pp - &u0);
            (v0, v1) = (v1.clone(), &v1 * pp - &v0);
        }
        (u0.to_biguint().unwrap(), v0.to_biguint().unwrap())
    }

    #[test]
    fn lucas_examples() {
        let l = lucas(&big(8), 1).unwrap();
        assert_eq!((l.u, l.v), (big(1), big(8)));
        let l = lucas(&big(8), 2).unwrap();
        assert_eq!((l.u.clone(), l.v.clone()), (big(8), big(62)));
        assert_eq!(&l.v * &l.v - big(60) * &l.u * &l.u, big(4));
        // P = 3 gives the even-index Fibonacci numbers U_m = F_2m
        assert_eq!(lucas(&big(3), 5).unwrap().u, big(55));
        let evens: Vec<u64> = (0..8)
            .map(|m| lucas(&big(3), m).unwrap().u.try_into().unwrap())
            .collect();
        assert_eq!(evens, [0, 1, 3, 8, 21, 55, 144, 377]);
        assert!(lucas(&big(2), 5).is_err());
    }

    #[test]
    fn lucas_doubling_matches_recurrence() {
        for pp in [3u64, 4, 6, 8, 11, 18] {
            for m in 0..60 {
                let l = lucas(&big(pp), m).unwrap();
                assert_eq!(
                    (l.u.clone(), l.v.clone()),
                    lucas_slow(pp, m),
                    "P={pp} m={m}"
                );
                let d = big(pp * pp - 4);
                assert_eq!(&l.v * &l.v, d * &l.u * &l.u + big(4));
            }
        }
    }

    #[test]
    fn alpha_gamma_examples() {
        let q = p(2, 3);
        let r = alpha_gamma(q, &big(1), &big(2), 0).unwrap();
        assert_eq!((r.alpha, r.gamma), (big(1), big(2)));
        let r = alpha_gamma(q, &big(1), &big(2), 1).unwrap();
        assert_eq!((r.alpha, r.gamma), (big(7), big(16)));
        assert!(alpha_gamma(q, &big(0), &big(0), 3).is_err());
        let from_root = alpha_gamma_from_root(q, &big(1), &big(0), 1).unwrap();
        assert_eq!((from_root.alpha, from_root.gamma), (big(7), big(16)));
    }

    #[test]
    fn mu_depth_examples() {
        assert_eq!(mu_depth(p(2, 3), 3), big(24));
        assert_eq!(mu_depth(p(2, 3), 2), big(7));
        assert_eq!(mu_depth(p(2, 1), 4), big(14));
        assert_eq!(mu_depth(p(5, 5), 0), big(1));
        let seq: Vec<u64> = (0..7)
            .map(|n| mu_depth(p(2, 3), n).try_into().unwrap())
            .collect();
        assert_eq!(seq, [1, 3, 7, 24, 55, 189, 433]);
    }

    #[test]
    fn witness_examples() {
        let w = witness(p(2, 3), 3).unwrap();
        assert_eq!(w.word.to_string(), "RLR");
        assert_eq!(w.matrix, Mat2::from_u64(7, 24, 2, 7));
        assert_eq!(w.entry, EntryPos::new(1, 2));

        let w = witness(p(2, 3), 1).unwrap();
        assert_eq!(w.word.to_string(), "R");
        assert_eq!((w.entry, w.value.as_str()), (EntryPos::new(1, 2), "3"));

        let w = witness(p(2, 1), 4).unwrap();
        assert_eq!(w.word.to_string(), "LLRL");
        assert_eq!(w.matrix, Mat2::from_u64(3, 1, 14, 5));
        assert_eq!(w.entry, EntryPos::new(2, 1));

        assert!(witness(p(2, 3), 0).is_err());
    }

    #[test]
    fn fseq_examples() {
        assert_eq!(fseq(p(1, 1), 7), big(13));
        assert_eq!(fseq(p(2, 3), 3), big(7));
        assert_eq!(fseq(p(2, 2), 4), big(12));
        assert_eq!(fseq(p(4, 9), 0), big(0));
        assert_eq!(fseq(p(4, 9), 1), big(1));
    }

    #[test]
    fn horizon_examples() {
        assert_eq!(collision_horizon(p(2, 3), &big(5)).unwrap(), 1);
        assert_eq!(collision_horizon(p(2, 3), &big(101)).unwrap(), 4);
        assert_eq!(collision_horizon(p(1, 1), &big(2)).unwrap(), 1);
        assert_eq!(collision_horizon(p(7, 2), &big(3)).unwrap(), 0);
        assert!(collision_horizon(p(2, 3), &big(1)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let v = closed_form_float(p(2, 3), 1, DepthParity::Odd);
        assert!((to_f64(&v) - 24.0).abs() < 1e-9);
        let v = closed_form_float(p(1, 1), 0, DepthParity::Odd);
        assert!((to_f64(&v) - 1.0).abs() < 1e-9);
        let v = closed_form_float(p(2, 1), 0, DepthParity::Even);
        assert!((to_f64(&v) - 4.0).abs() < 1e-9);
    }

    #[test]
    fn radical_identities() {
        for (u, v) in [(1, 1), (2, 3), (4, 1), (3, 3)] {
            for k in [
                ClosedFormParams::maximal_entry(p(u, v)),
                ClosedFormParams::system(p(u, v)),
            ] {
                let prod = mul(&k.q_plus, &k.q_minus);
                assert!((to_f64(&prod) - 4.0).abs() < 1e-25);
                let lam = mul(&k.lambda1, &k.lambda2);
                assert!((to_f64(&lam) - 1.0).abs() < 1e-25);
            }
        }
    }

    #[test]
    fn system_closed_forms_match_iteration() {
        for (u, v, a, c) in [(2, 3, 1, 0), (1, 4, 2, 3), (3, 1, 0, 1), (1, 1, 1, 0)] {
            let q = p(u, v);
            for n in 0..10 {
                let exact = alpha_gamma_from_root(q, &big(a), &big(c), n).unwrap();
                assert!(relative_error(&gamma_closed_form(q, a, c, n), &exact.gamma) < 1e-20);
                assert!(relative_error(&gamma_eigen(q, a, c, n), &exact.gamma) < 1e-20);
                if !exact.alpha.is_zero() {
                    assert!(relative_error(&alpha_closed_form(q, a, c, n), &exact.alpha) < 1e-20);
                }
            }
        }
    }
}

//! Polynomials with natural coefficients and the suffix-sum dominance order.
//!
//! `f ≽ g` holds when, for every `N >= 0`, the coefficients of `f` at degrees
//! `>= N` sum to at least the corresponding sum for `g`. Dominance implies
//! `f(r) >= g(r)` at every positive integer `r`; the converse fails
//! (`x^3 + 1` versus `x^2 + x`).
//!
//! The four binomial families below are the left columns of
//! `(L_u R_1)^n L_u` (`F_n`, `G_n`) and `(R_1 L_u)^n L_u` (`H_n`, `I_n`),
//! read as polynomials in `x = u`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Letter, Word};

/// A polynomial over the naturals; `coeffs[i]` is the coefficient of `x^i`.
/// The highest stored coefficient is never zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyN {
    coeffs: Vec<BigUint>,
}

impl PolyN {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigUint::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, BigUint::one())
    }

    pub fn monomial(degree: usize, coeff: BigUint) -> Self {
        let mut coeffs = vec![BigUint::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `[f]_k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `x^k * self`
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `f(x^2)`
    pub fn compose_square(&self) -> Self {
        let mut coeffs = vec![BigUint::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, r: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * r + c)
    }

    pub fn eval_u64(&self, r: u64) -> BigUint {
        self.eval(&BigUint::from(r))
    }

    /// `S_N = Σ_{k >= N} [f]_k` for `N = 0..len`, padded with zeros.
    pub fn suffix_sums(&self, len: usize) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); len.max(self.coeffs.len())];
        let mut acc = BigUint::zero();
        for k in (0..self.coeffs.len()).rev() {
            acc += &self.coeffs[k];
            out[k] = acc.clone();
        }
        out
    }

    /// `self ≽ other`
    pub fn dominates(&self, other: &PolyN) -> bool {
        dominates(self, other)
    }
}

impl Add for &PolyN {
    type Output = PolyN;

    fn add(self, rhs: &PolyN) -> PolyN {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyN::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for PolyN {
    type Output = PolyN;

    fn add(self, rhs: PolyN) -> PolyN {
        &self + &rhs
    }
}

impl Mul for &PolyN {
    type Output = PolyN;

    fn mul(self, rhs: &PolyN) -> PolyN {
        if self.is_zero() || rhs.is_zero() {
            return PolyN::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyN::from_coeffs(coeffs)
    }
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `f ≽ g`: every coefficient suffix sum of `f` is at least that of `g`.
pub fn dominates(f: &PolyN, g: &PolyN) -> bool {
    let len = f.coeffs.len().max(g.coeffs.len());
    let sf = f.suffix_sums(len);
    let sg = g.suffix_sums(len);
    sf.iter().zip(&sg).all(|(a, b)| a >= b)
}

pub fn eval(f: &PolyN, r: u64) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::InvalidParams(
            "evaluation point must be positive".into(),
        ));
    }
    Ok(f.eval_u64(r))
}

/// Rows of Pascal's triangle, built additively.
#[derive(Debug, Clone)]
pub struct Pascal {
    rows: Vec<Vec<BigUint>>,
}

impl Pascal {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
    pub fn binom(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            return BigUint::zero();
        }
        let row = self
            .rows
            .get(n as usize)
            .unwrap_or_else(|| panic!("Pascal table too small for C({n}, {k})"));
        row[k as usize].clone()
    }
}

/// `Σ_{i=0}^{terms-1} weight(i) x^{top - i}`
fn binomial_sum(terms: usize, top: usize, weight: impl Fn(i64) -> BigUint) -> PolyN {
    let mut coeffs = vec![BigUint::zero(); top + 1];
    for i in 0..terms {
        coeffs[top - i] += weight(i as i64);
    }
    PolyN::from_coeffs(coeffs)
}

/// `F_n(x) = Σ_{i=0}^{n} C(2n-i, i) x^{n-i}`
pub fn f_poly(n: usize) -> PolyN {
    let t = Pascal::new(2 * n + 1);
    let n_ = n as i64;
    binomial_sum(n + 1, n, |i| t.binom(2 * n_ - i, i))
}

/// `G_n(x) = Σ_{i=0}^{n} C(2n+1-i, i) x^{n+1-i}`
pub fn g_poly(n: usize) -> PolyN {
    let t = Pascal::new(2 * n + 1);
    let n_ = n as i64;
    binomial_sum(n + 1, n + 1, |i| t.binom(2 * n_ + 1 - i, i))
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParams(
            "the H/I family is defined for n >= 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// `H_n(x) = Σ_{i=0}^{n} (C(2n-i, i) + C(2n-1-i, i)) x^{n-i}`, `n >= 1`.
pub fn h_poly(n: usize) -> Result<PolyN> {
    require_positive(n)?;
    let t = Pascal::new(2 * n);
    let n_ = n as i64;
    Ok(binomial_sum(n + 1, n, |i| {
        t.binom(2 * n_ - i, i) + t.binom(2 * n_ - 1 - i, i)
    }))
}

/// `I_n(x) = Σ_{i=0}^{n-1} (C(2n-1-i, i) + C(2n-2-i, i)) x^{n-i}`, `n >= 1`.
pub fn i_poly(n: usize) -> Result<PolyN> {
    require_positive(n)?;
    let t = Pascal::new(2 * n);
    let n_ = n as i64;
    Ok(binomial_sum(n, n, |i| {
        t.binom(2 * n_ - 1 - i, i) + t.binom(2 * n_ - 2 - i, i)
    }))
}

/// `(F_n, G_n)` from `F_0 = 1, G_0 = x`, `F_{k+1} = F_k + G_k`,
/// `G_{k+1} = x F_{k+1} + G_k`.
pub fn fg_recurrence(n: usize) -> (PolyN, PolyN) {
    let mut f = PolyN::one();
    let mut g = PolyN::x();
    for _ in 0..n {
        let f_next = &f + &g;
        let g_next = &f_next.shift(1) + &g;
        f = f_next;
        g = g_next;
    }
    (f, g)
}

/// `(H_n, I_n)` from `H_1 = 2x + 1, I_1 = 2x`, `H_{k+1} = (1 + x) H_k + I_k`,
/// `I_{k+1} = x H_k + I_k`.
pub fn hi_recurrence(n: usize) -> Result<(PolyN, PolyN)> {
    require_positive(n)?;
    let mut h = PolyN::from_u64s(&[1, 2]);
    let mut i = PolyN::from_u64s(&[0, 2]);
    for _ in 1..n {
        let xh = h.shift(1);
        let h_next = &(&h + &xh) + &i;
        let i_next = &xh + &i;
        h = h_next;
        i = i_next;
    }
    Ok((h, i))
}

/// Left column `(f, g)` of `word_to_matrix(w)` with `R` read as `R_1`,
/// as polynomials in `x = u`.
pub fn left_column_polys(w: &Word) -> (PolyN, PolyN) {
    // the left column of X_1 ... X_n is X_1 (X_2 (... (X_n e_1)))
    w.letters().iter().rev().fold(
        (PolyN::one(), PolyN::zero()),
        |(f, g), letter| match letter {
            Letter::L => {
                let g_next = &f.shift(1) + &g;
                (f, g_next)
            }
            Letter::R => (&f + &g, g),
        },
    )
}

/// Checks the Pascal-rule merge
/// `Σ_{i<a} C(b-i,i) x^{a-i} + Σ_{i<=a} C(b+1-i,i) x^{a+1-i} = Σ_{i<=a} C(b+2-i,i) x^{a+1-i}`
/// as a polynomial identity. Requires `a >= 1` and `b >= 2a - 2`.
pub fn pascal_merge_check(a: usize, b: usize) -> Result<bool> {
    if a == 0 || b + 2 < 2 * a {
        return Err(Error::InvalidParams(format!(
            "pascal_merge_check needs a >= 1 and b >= 2a - 2 (got a={a}, b={b})"
        )));
    }
    let t = Pascal::new(b + 2);
    let b_ = b as i64;
    let lhs = &binomial_sum(a, a, |i| t.binom(b_ - i, i))
        + &binomial_sum(a + 1, a + 1, |i| t.binom(b_ + 1 - i, i));
    let rhs = binomial_sum(a + 1, a + 1, |i| t.binom(b_ + 2 - i, i));
    Ok(lhs == rhs)
}

/// Fibonacci polynomials with `Fib_1 = 1`, `Fib_2 = x`,
/// `Fib_m = x Fib_{m-1} + Fib_{m-2}` (and `Fib_0 = 0`).
pub fn fibonacci_poly(m: usize) -> PolyN {
    let (mut prev, mut cur) = (PolyN::zero(), PolyN::one());
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &cur.shift(1) + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Index `m` with `F_n(x^2) = Fib_m(x)`.
pub const fn fibonacci_index_of_f(n: usize) -> usize {
    2 * n + 1
}

/// A polynomial in `X, Y` over the naturals, stored sparsely without zero terms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPolyN {
    terms: BTreeMap<(u32, u32), BigUint>,
}

impl BiPolyN {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: u64) -> Self {
        Self::term(0, 0, BigUint::from(c))
    }

    pub fn term(i: u32, j: u32, coeff: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        Self { terms }
    }

    /// Coefficient of `X^i Y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigUint {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Multiply by `X^di Y^dj`.
    pub fn shift(&self, di: u32, dj: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// `f(Y, X)`: exchange the two variables.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: u64, y: u64) -> BigUint {
        let (x, y) = (BigUint::from(x), BigUint::from(y));
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i) * y.pow(j))
            .sum()
    }

    /// Every monomial is `X^i Y^(i + dy)` shifted by `X^dx`; i.e. the
    /// exponent difference `deg_X - deg_Y` is `dx - dy` for every term.
    pub fn is_shifted_balanced(&self, dx: u32, dy: u32) -> bool {
        self.terms
            .keys()
            .all(|&(i, j)| i >= dx && j >= dy && i - dx == j - dy)
    }
}

impl Add for &BiPolyN {
    type Output = BiPolyN;

    fn add(self, rhs: &BiPolyN) -> BiPolyN {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            *terms.entry(*k).or_default() += c;
        }
        BiPolyN { terms }
    }
}

impl fmt::Display for BiPolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mut s = String::new();
                if !c.is_one() || (i == 0 && j == 0) {
                    s.push_str(&c.to_string());
                }
                for (var, e) in [("X", i), ("Y", j)] {
                    match e {
                        0 => {}
                        1 => s.push_str(var),
                        e => s.push_str(&format!("{var}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

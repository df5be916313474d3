//! The tree `T^(u,v)(M)`: root `M`, left child `L_u * m`, right child `R_v * m`.
//!
//! Row `n` holds the `2^n` depth-`n` descendants, left to right. Cell `i`
//! (1-based) of row `n` is reached by reading the bits of `i - 1` from the
//! most significant end, `0` meaning "go left".

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Letter, Mat2, MonoidParams, Word};
use crate::poly::BiPolyN;

/// Default brute-force depth cap (`2^20` matrices per row).
pub const DEFAULT_ENUM_DEPTH: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRow {
    pub depth: u32,
    pub cells: Vec<Mat2>,
}

impl TreeRow {
    pub fn mu(&self) -> BigUint {
        self.cells.iter().map(Mat2::mu).max().unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominanceClass {
    /// `c >= u a` and `d >= u b`: of the form `L_u M`.
    ULowerDominant,
    /// `a >= v c` and `b >= v d`: of the form `R_v M`.
    VUpperDominant,
    Both,
    Neither,
}

impl DominanceClass {
    pub fn is_lower(self) -> bool {
        matches!(self, Self::ULowerDominant | Self::Both)
    }

    pub fn is_upper(self) -> bool {
        matches!(self, Self::VUpperDominant | Self::Both)
    }
}

/// `(L_u m, R_v m)`.
pub fn children(m: &Mat2, params: MonoidParams) -> (Mat2, Mat2) {
    let (u, v) = (params.u(), params.v());
    let left = Mat2 {
        a: m.a.clone(),
        b: m.b.clone(),
        c: &m.a * u + &m.c,
        d: &m.b * u + &m.d,
    };
    let right = Mat2 {
        a: &m.a + &m.c * v,
        b: &m.b + &m.d * v,
        c: m.c.clone(),
        d: m.d.clone(),
    };
    (left, right)
}

fn check_limit(n: u32, limit: u32) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded {
            requested: format!("depth {n} (2^{n} matrices)"),
            limit: format!("depth {limit}"),
        });
    }
    Ok(())
}

/// All `2^n` depth-`n` descendants of `root`, left to right.
pub fn row(root: &Mat2, params: MonoidParams, n: u32, limit: u32) -> Result<TreeRow> {
    check_limit(n, limit)?;
    let mut cells = vec![root.clone()];
    for _ in 0..n {
        cells = cells
            .iter()
            .flat_map(|m| {
                let (l, r) = children(m, params);
                [l, r]
            })
            .collect();
    }
    Ok(TreeRow { depth: n, cells })
}

/// The path word of cell `(n, i)`: letters in root-to-leaf order.
pub fn cell_path(n: u32, i: u64) -> Result<Word> {
    let out_of_range = || Error::IndexOutOfRange { depth: n, index: i };
    if n >= 64 {
        return Err(out_of_range());
    }
    if i == 0 || i > 1u64 << n {
        return Err(out_of_range());
    }
    let bits = i - 1;
    Ok(Word::from_letters(
        (0..n)
            .rev()
            .map(|k| {
                if (bits >> k) & 1 == 1 {
                    Letter::R
                } else {
                    Letter::L
                }
            })
            .collect(),
    ))
}

/// The monoid word of cell `(n, i)` of `T^(u,v)(I2)`; since each step
/// multiplies on the left, it is the path read backwards.
pub fn cell_word(n: u32, i: u64) -> Result<Word> {
    let mut letters = cell_path(n, i)?.letters().to_vec();
    letters.reverse();
    Ok(Word::from_letters(letters))
}

/// Cell `(n, i)` of `T^(u,v)(I2)` without materializing the row.
pub fn cell(n: u32, i: u64, params: MonoidParams) -> Result<Mat2> {
    let path = cell_path(n, i)?;
    Ok(path.letters().iter().fold(Mat2::identity(), |m, letter| {
        let (l, r) = children(&m, params);
        match letter {
            Letter::L => l,
            Letter::R => r,
        }
    }))
}

pub fn classify(m: &Mat2, params: MonoidParams) -> DominanceClass {
    let (u, v) = (params.u(), params.v());
    let lower = m.c >= &m.a * u && m.d >= &m.b * u;
    let upper = m.a >= &m.c * v && m.b >= &m.d * v;
    match (lower, upper) {
        (true, true) => DominanceClass::Both,
        (true, false) => DominanceClass::ULowerDominant,
        (false, true) => DominanceClass::VUpperDominant,
        (false, false) => DominanceClass::Neither,
    }
}

/// `[[a, b], [c, d]] -> [[d, c], [b, a]]`
pub fn antitranspose(m: &Mat2) -> Mat2 {
    Mat2 {
        a: m.d.clone(),
        b: m.c.clone(),
        c: m.b.clone(),
        d: m.a.clone(),
    }
}

/// Largest entry over row `n` of `T^(u,v)(I2)`, by exhaustive search.
///
/// Runs a depth-first walk in `u128` and falls back to big integers only if
/// an entry overflows.
pub fn mu_row_bruteforce(params: MonoidParams, n: u32, limit: u32) -> Result<BigUint> {
    check_limit(n, limit)?;
    match mu_row_u128(params, n) {
        Some(m) => Ok(BigUint::from(m)),
        None => Ok(mu_row_big(params, n)),
    }
}

fn mu_row_u128(params: MonoidParams, n: u32) -> Option<u128> {
    let (u, v) = (params.u() as u128, params.v() as u128);
    let mut best = 0u128;
    let mut stack: Vec<([u128; 4], u32)> = vec![([1, 0, 0, 1], 0)];
    while let Some(([a, b, c, d], depth)) = stack.pop() {
        if depth == n {
            best = best.max(a.max(b).max(c).max(d));
            continue;
        }
        let lc = a.checked_mul(u)?.checked_add(c)?;
        let ld = b.checked_mul(u)?.checked_add(d)?;
        let ra = c.checked_mul(v)?.checked_add(a)?;
        let rb = d.checked_mul(v)?.checked_add(b)?;
        stack.push(([ra, rb, c, d], depth + 1));
        stack.push(([a, b, lc, ld], depth + 1));
    }
    Some(best)
}

fn mu_row_big(params: MonoidParams, n: u32) -> BigUint {
    let mut best = BigUint::default();
    let mut stack = vec![(Mat2::identity(), 0u32)];
    while let Some((m, depth)) = stack.pop() {
        if depth == n {
            best = best.max(m.mu());
            continue;
        }
        let (l, r) = children(&m, params);
        stack.push((r, depth + 1));
        stack.push((l, depth + 1));
    }
    best
}

/// Symbolic entries of a word's matrix as polynomials in `X = u`, `Y = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryPolys {
    pub f1: BiPolyN,
    pub f2: BiPolyN,
    pub f3: BiPolyN,
    pub f4: BiPolyN,
}

impl EntryPolys {
    pub fn identity() -> Self {
        Self {
            f1: BiPolyN::constant(1),
            f2: BiPolyN::zero(),
            f3: BiPolyN::zero(),
            f4: BiPolyN::constant(1),
        }
    }

    pub fn eval(&self, params: MonoidParams) -> Mat2 {
        let (x, y) = (params.u(), params.v());
        Mat2::new(
            self.f1.eval(x, y),
            self.f2.eval(x, y),
            self.f3.eval(x, y),
            self.f4.eval(x, y),
        )
    }

    /// Substitute `(X, Y) -> (Y, X)` and antitranspose.
    pub fn flipped(&self) -> Self {
        Self {
            f1: self.f4.swap_vars(),
            f2: self.f3.swap_vars(),
            f3: self.f2.swap_vars(),
            f4: self.f1.swap_vars(),
        }
    }

    /// `f1, f4` are sums of `(XY)^k`; `f2 = Y * (...)`, `f3 = X * (...)`.
    pub fn has_balanced_structure(&self) -> bool {
        self.f1.is_shifted_balanced(0, 0)
            && self.f2.is_shifted_balanced(0, 1)
            && self.f3.is_shifted_balanced(1, 0)
            && self.f4.is_shifted_balanced(0, 0)
    }

    pub fn max_total_degree(&self) -> u32 {
        [&self.f1, &self.f2, &self.f3, &self.f4]
            .iter()
            .filter_map(|p| p.total_degree())
            .max()
            .unwrap_or(0)
    }
}

pub fn entry_polys(w: &Word) -> EntryPolys {
    w.letters()
        .iter()
        .fold(EntryPolys::identity(), |m, letter| match letter {
            // M * L = [[f1 + X f2, f2], [f3 + X f4, f4]]
            Letter::L => EntryPolys {
                f1: &m.f1 + &m.f2.shift(1, 0),
                f3: &m.f3 + &m.f4.shift(1, 0),
                f2: m.f2,
                f4: m.f4,
            },
            // M * R = [[f1, f2 + Y f1], [f3, f4 + Y f3]]
            Letter::R => EntryPolys {
                f2: &m.f2 + &m.f1.shift(0, 1),
                f4: &m.f4 + &m.f3.shift(0, 1),
                f1: m.f1,
                f3: m.f3,
            },
        })
}

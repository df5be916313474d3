//! 2x2 matrices over arbitrary-precision naturals and generator words.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The pair `(u, v)` fixing the generators `L_u` and `R_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonoidParams {
    u: u64,
    v: u64,
}

impl MonoidParams {
    pub fn new(u: u64, v: u64) -> Result<Self> {
        if u == 0 || v == 0 {
            return Err(Error::InvalidParams(format!(
                "u and v must be positive (got u={u}, v={v})"
            )));
        }
        Ok(Self { u, v })
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    /// `min(u, v)`
    pub fn s(&self) -> u64 {
        self.u.min(self.v)
    }

    /// `max(u, v)`
    pub fn t(&self) -> u64 {
        self.u.max(self.v)
    }

    /// `u * v` as a big integer; the product can exceed `u64` for huge parameters.
    pub fn uv(&self) -> BigUint {
        BigUint::from(self.u) * self.v
    }

    /// The parameters of the mirrored tree, `(v, u)`.
    pub fn swapped(&self) -> Self {
        Self {
            u: self.v,
            v: self.u,
        }
    }
}

/// A 1-based `(row, column)` position inside a [`Mat2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EntryPos {
    pub row: u8,
    pub col: u8,
}

impl EntryPos {
    pub const fn new(row: u8, col: u8) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for EntryPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Row-major `[[a, b], [c, d]]` with natural entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub d: BigUint,
}

impl Mat2 {
    pub fn new(a: BigUint, b: BigUint, c: BigUint, d: BigUint) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_u64(a: u64, b: u64, c: u64, d: u64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_u64(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// `ad - bc`, signed.
    pub fn det(&self) -> BigInt {
        BigInt::from(&self.a * &self.d) - BigInt::from(&self.b * &self.c)
    }

    /// The largest entry.
    pub fn mu(&self) -> BigUint {
        self.entries()
            .into_iter()
            .max()
            .cloned()
            .unwrap_or_default()
    }

    pub fn entries(&self) -> [&BigUint; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn entry(&self, pos: EntryPos) -> &BigUint {
        match (pos.row, pos.col) {
            (1, 1) => &self.a,
            (1, 2) => &self.b,
            (2, 1) => &self.c,
            (2, 2) => &self.d,
            _ => panic!("entry position {pos} outside a 2x2 matrix"),
        }
    }

    /// First position (row-major) holding the largest entry.
    pub fn argmax(&self) -> EntryPos {
        const POSITIONS: [EntryPos; 4] = [
            EntryPos::new(1, 1),
            EntryPos::new(1, 2),
            EntryPos::new(2, 1),
            EntryPos::new(2, 2),
        ];
        let mu = self.mu();
        POSITIONS
            .into_iter()
            .find(|&p| *self.entry(p) == mu)
            .expect("the maximum is one of the entries")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serializes")
    }
}

impl Default for Mat2 {
    fn default() -> Self {
        Self::identity()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

// JSON form: [["a","b"],["c","d"]] with decimal strings.
impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ];
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[String; 2]; 2]>::deserialize(deserializer)?;
        let parse = |s: &str| {
            BigUint::from_str(s).map_err(|e| D::Error::custom(format!("entry {s:?}: {e}")))
        };
        Ok(Mat2 {
            a: parse(&rows[0][0])?,
            b: parse(&rows[0][1])?,
            c: parse(&rows[1][0])?,
            d: parse(&rows[1][1])?,
        })
    }
}

/// `L_u = [[1, 0], [u, 1]]`.
pub fn lmat(params: MonoidParams) -> Mat2 {
    Mat2::from_u64(1, 0, params.u, 1)
}

/// `R_v = [[1, v], [0, 1]]`.
pub fn rmat(params: MonoidParams) -> Mat2 {
    Mat2::from_u64(1, params.v, 0, 1)
}

pub fn mul(m: &Mat2, n: &Mat2) -> Mat2 {
    m * n
}

pub fn mu(m: &Mat2) -> BigUint {
    m.mu()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn flipped(self) -> Self {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }

    pub fn matrix(self, params: MonoidParams) -> Mat2 {
        match self {
            Letter::L => lmat(params),
            Letter::R => rmat(params),
        }
    }
}

/// A word over `{L, R}`; its length is the depth of the monoid element it names.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// `self` repeated `k` times.
    pub fn repeat(&self, k: usize) -> Self {
        Self(self.0.repeat(k))
    }

    /// Exchange `L` and `R` letter by letter.
    pub fn flipped(&self) -> Self {
        Self(self.0.iter().map(|l| l.flipped()).collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                other => Err(Error::Parse(format!(
                    "word letters must be 'L' or 'R', found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Right-multiplication by `L_u`: `[[a + u b, b], [c + u d, d]]`.
pub(crate) fn times_l(m: &Mat2, u: u64) -> Mat2 {
    Mat2 {
        a: &m.a + &m.b * u,
        b: m.b.clone(),
        c: &m.c + &m.d * u,
        d: m.d.clone(),
    }
}

/// Right-multiplication by `R_v`: `[[a, b + v a], [c, d + v c]]`.
pub(crate) fn times_r(m: &Mat2, v: u64) -> Mat2 {
    Mat2 {
        a: m.a.clone(),
        b: &m.b + &m.a * v,
        c: m.c.clone(),
        d: &m.d + &m.c * v,
    }
}

/// Left-to-right product of the generators named by `w`; the empty word is `I2`.
pub fn word_to_matrix(w: &Word, params: MonoidParams) -> Mat2 {
    w.letters()
        .iter()
        .fold(Mat2::identity(), |acc, letter| match letter {
            Letter::L => times_l(&acc, params.u),
            Letter::R => times_r(&acc, params.v),
        })
}

/// Recover the unique generator word of a monoid element.
///
/// Letters are peeled from the left: a matrix with `c >= u a` and `d >= u b`
/// is `L_u M'`, one with `a >= v c` and `b >= v d` is `R_v M'`. The identity
/// is checked first, so it never reaches the double-match branch.
pub fn factor(m: &Mat2, params: MonoidParams) -> Result<Word> {
    let not_in_monoid = || Error::NotInMonoid {
        u: params.u,
        v: params.v,
    };
    if !m.det().is_one() {
        return Err(not_in_monoid());
    }

    let (u, v) = (params.u, params.v);
    let mut cur = m.clone();
    let mut letters = Vec::new();
    while !cur.is_identity() {
        let ua = &cur.a * u;
        let ub = &cur.b * u;
        let vc = &cur.c * v;
        let vd = &cur.d * v;
        let lower = cur.c >= ua && cur.d >= ub;
        let upper = cur.a >= vc && cur.b >= vd;
        match (lower, upper) {
            (true, false) => {
                cur.c -= ua;
                cur.d -= ub;
                letters.push(Letter::L);
            }
            (false, true) => {
                cur.a -= vc;
                cur.b -= vd;
                letters.push(Letter::R);
            }
            _ => return Err(not_in_monoid()),
        }
    }
    Ok(Word(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(u: u64, v: u64) -> MonoidParams {
        MonoidParams::new(u, v).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn params_reject_zero() {
        assert!(MonoidParams::new(0, 3).is_err());
        assert!(MonoidParams::new(2, 0).is_err());
        let q = p(5, 2);
        assert_eq!((q.s(), q.t()), (2, 5));
        assert_eq!(BigUint::from(q.s() * q.t()), q.uv());
    }

    #[test]
    fn generators() {
        assert_eq!(lmat(p(1, 1)), Mat2::from_u64(1, 0, 1, 1));
        assert_eq!(lmat(p(2, 3)), Mat2::from_u64(1, 0, 2, 1));
        assert_eq!(lmat(p(7, 1)), Mat2::from_u64(1, 0, 7, 1));
        assert_eq!(rmat(p(1, 1)), Mat2::from_u64(1, 1, 0, 1));
        assert_eq!(rmat(p(2, 3)), Mat2::from_u64(1, 3, 0, 1));
        assert_eq!(rmat(p(1, 5)), Mat2::from_u64(1, 5, 0, 1));
    }

    #[test]
    fn products() {
        let q = p(2, 3);
        let m = Mat2::from_u64(4, 9, 3, 7);
        assert_eq!(mul(&Mat2::identity(), &m), m);
        let lr = mul(&lmat(q), &rmat(q));
        assert_eq!(lr, Mat2::from_u64(1, 3, 2, 7));
        let full = &(&(&lr * &rmat(q)) * &lmat(q)) * &lmat(q);
        assert_eq!(full, Mat2::from_u64(25, 6, 54, 13));
    }

    #[test]
    fn max_entry() {
        assert_eq!(mu(&Mat2::identity()), BigUint::from(1u32));
        assert_eq!(mu(&Mat2::from_u64(25, 6, 54, 13)), BigUint::from(54u32));
        // R_v L_u = [[1 + uv, v], [u, 1]]
        assert_eq!(mu(&Mat2::from_u64(7, 3, 2, 1)), BigUint::from(7u32));
        assert_eq!(Mat2::from_u64(25, 6, 54, 13).argmax(), EntryPos::new(2, 1));
    }

    #[test]
    fn words_to_matrices() {
        let q = p(2, 3);
        assert_eq!(word_to_matrix(&Word::new(), q), Mat2::identity());
        assert_eq!(word_to_matrix(&w("LR"), q), Mat2::from_u64(1, 3, 2, 7));
        assert_eq!(
            word_to_matrix(&w("LRRLL"), q),
            Mat2::from_u64(25, 6, 54, 13)
        );
    }

    #[test]
    fn factor_examples() {
        let q = p(2, 3);
        assert_eq!(factor(&Mat2::identity(), q).unwrap(), Word::new());
        assert_eq!(factor(&Mat2::from_u64(1, 3, 2, 7), q).unwrap(), w("LR"));
        assert_eq!(
            factor(&Mat2::from_u64(1, 1, 1, 1), q),
            Err(Error::NotInMonoid { u: 2, v: 3 })
        );
    }

    #[test]
    fn factor_rejects_unreachable_unimodular() {
        // det 1 but not a product of L_2 and R_3
        assert!(factor(&Mat2::from_u64(1, 1, 0, 1), p(2, 3)).is_err());
        assert!(factor(&Mat2::from_u64(2, 1, 1, 1), p(2, 2)).is_err());
    }

    #[test]
    fn word_parse_errors() {
        assert!("LRX".parse::<Word>().is_err());
        assert_eq!(w("RLR").to_string(), "RLR");
        assert_eq!(w("LLR").flipped(), w("RRL"));
    }

    #[test]
    fn matrix_json_uses_decimal_strings() {
        let m = Mat2::new(
            "123456789012345678901234567890".parse().unwrap(),
            0u32.into(),
            1u32.into(),
            2u32.into(),
        );
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["123456789012345678901234567890","0"],["1","2"]]"#);
        let back: Mat2 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat2>(r#"[["-1","0"],["0","1"]]"#).is_err());
    }
}

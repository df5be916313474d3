//! The BSV hash: bit `0` maps to `L_u`, bit `1` to `R_v`, and a string maps
//! to the left-to-right product of its letters reduced mod a prime `p`.
//!
//! Digests are serialized as four big-endian fields `a, b, c, d`, each as
//! wide as `p - 1`. Byte input is consumed most significant bit first.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extremal::collision_horizon;
use crate::matrix::{Letter, Mat2, MonoidParams, Word};
use crate::prime::is_probable_prime;

/// Cap on the number of strings [`exhaustive_collision_check`] may visit.
pub const DEFAULT_COLLISION_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashParams {
    monoid: MonoidParams,
    p: BigUint,
}

impl HashParams {
    pub fn new(u: u64, v: u64, p: BigUint) -> Result<Self> {
        let monoid = MonoidParams::new(u, v)?;
        if !is_probable_prime(&p) {
            return Err(Error::InvalidParams(format!(
                "modulus p = {p} is not prime"
            )));
        }
        Ok(Self { monoid, p })
    }

    pub fn u(&self) -> u64 {
        self.monoid.u()
    }

    pub fn v(&self) -> u64 {
        self.monoid.v()
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn monoid(&self) -> MonoidParams {
        self.monoid
    }

    /// Bytes per serialized residue: the byte length of `p - 1`, at least 1.
    pub fn field_width(&self) -> usize {
        let top = &self.p - 1u32;
        (top.bits() as usize).div_ceil(8).max(1)
    }
}

/// Four residues mod `p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digest {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub d: BigUint,
}

impl Digest {
    pub fn identity() -> Self {
        Self {
            a: BigUint::one(),
            b: BigUint::zero(),
            c: BigUint::zero(),
            d: BigUint::one(),
        }
    }

    pub fn from_u64(a: u64, b: u64, c: u64, d: u64) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        )
    }

    /// `4 * W` bytes, `W = params.field_width()`.
    pub fn serialize(&self, params: &HashParams) -> Vec<u8> {
        let w = params.field_width();
        let mut out = Vec::with_capacity(4 * w);
        for x in [&self.a, &self.b, &self.c, &self.d] {
            let bytes = x.to_bytes_be();
            let bytes: &[u8] = if x.is_zero() { &[] } else { &bytes };
            debug_assert!(bytes.len() <= w);
            out.resize(out.len() + w - bytes.len(), 0);
            out.extend_from_slice(bytes);
        }
        out
    }

    /// Inverse of [`Digest::serialize`]; fields must be residues mod `p`.
    pub fn parse(bytes: &[u8], params: &HashParams) -> Result<Self> {
        let w = params.field_width();
        if bytes.len() != 4 * w {
            return Err(Error::Parse(format!(
                "digest must be {} bytes for p = {} (got {})",
                4 * w,
                params.p,
                bytes.len()
            )));
        }
        let mut fields = bytes.chunks(w).map(BigUint::from_bytes_be);
        let mut next = || -> Result<BigUint> {
            let x = fields.next().expect("four fields");
            if x >= params.p {
                return Err(Error::Parse(format!(
                    "field {x} is not reduced mod {}",
                    params.p
                )));
            }
            Ok(x)
        };
        Ok(Self {
            a: next()?,
            b: next()?,
            c: next()?,
            d: next()?,
        })
    }

    pub fn to_hex(&self, params: &HashParams) -> String {
        self.serialize(params)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

impl fmt::Display for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Running product `acc = f(a_1) ... f(a_k) mod p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashState {
    acc: Digest,
    u: BigUint,
    v: BigUint,
    p: BigUint,
    bits_consumed: u64,
}

impl HashState {
    pub fn init(params: &HashParams) -> Self {
        let p = params.p.clone();
        Self {
            acc: Digest::identity(),
            u: BigUint::from(params.u()) % &p,
            v: BigUint::from(params.v()) % &p,
            p,
            bits_consumed: 0,
        }
    }

    /// `acc <- acc * L_u` for `false`, `acc <- acc * R_v` for `true`.
    pub fn update_bit(&mut self, bit: bool) {
        let Digest { a, b, c, d } = &mut self.acc;
        if bit {
            *b = (&*b + &self.v * &*a) % &self.p;
            *d = (&*d + &self.v * &*c) % &self.p;
        } else {
            *a = (&*a + &self.u * &*b) % &self.p;
            *c = (&*c + &self.u * &*d) % &self.p;
        }
        self.bits_consumed += 1;
    }

    pub fn update_bits(&mut self, bits: impl IntoIterator<Item = bool>) {
        for bit in bits {
            self.update_bit(bit);
        }
    }

    pub fn update_bytes_msb(&mut self, bytes: &[u8]) {
        for &byte in bytes {
            for shift in (0..8).rev() {
                self.update_bit((byte >> shift) & 1 == 1);
            }
        }
    }

    pub fn digest(&self) -> Digest {
        self.acc.clone()
    }

    pub fn bits_consumed(&self) -> u64 {
        self.bits_consumed
    }

    /// `ad - bc == 1 (mod p)`.
    pub fn det_is_one(&self) -> bool {
        let Digest { a, b, c, d } = &self.acc;
        (a * d) % &self.p == (b * c + 1u32) % &self.p
    }
}

/// A finite bit string, written as ASCII `0`/`1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bytes expanded most significant bit first.
    pub fn from_bytes_msb(bytes: &[u8]) -> Self {
        Self(
            bytes
                .iter()
                .flat_map(|&b| (0..8).rev().map(move |s| (b >> s) & 1 == 1))
                .collect(),
        )
    }

    /// `0 -> L`, `1 -> R`.
    pub fn to_word(&self) -> Word {
        Word::from_letters(
            self.0
                .iter()
                .map(|&b| if b { Letter::R } else { Letter::L })
                .collect(),
        )
    }

    /// The `value`-th string of length `len` in lexicographic order.
    fn from_rank(len: usize, value: u64) -> Self {
        Self((0..len).rev().map(|i| (value >> i) & 1 == 1).collect())
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// ASCII `0`/`1`; whitespace is skipped.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|ch| !ch.is_whitespace())
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("invalid bit character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn parse_bits(s: &str) -> Result<BitString> {
    s.parse()
}

pub fn hash_string(params: &HashParams, bits: &BitString) -> Digest {
    let mut st = HashState::init(params);
    st.update_bits(bits.bits().iter().copied());
    st.digest()
}

/// Largest `n` such that distinct strings of length `<= n` have distinct
/// digests by the maximal-entry argument.
pub fn bound_n0(params: &HashParams) -> u64 {
    collision_horizon(params.monoid, &params.p).expect("a prime modulus is >= 2")
}

/// Enumerates all strings of length `0..=max_len` and returns the
/// lexicographically first colliding pair `(x, y)`, `x < y` in shortlex order:
/// the smallest string with a partner, then its smallest partner.
pub fn exhaustive_collision_check(
    params: &HashParams,
    max_len: u32,
    limit: u64,
) -> Result<Option<(BitString, BitString)>> {
    let needed = 1u64
        .checked_shl(max_len + 1)
        .filter(|&n| n != 0 && max_len < 63);
    match needed {
        Some(n) if n <= limit => {}
        _ => {
            return Err(Error::LimitExceeded {
                requested: format!("2^{} strings", max_len as u64 + 1),
                limit: limit.to_string(),
            })
        }
    }

    // products of two residues fit in u64 when p < 2^32
    let pair = match params.p.to_u64().filter(|&p| p < 1 << 32) {
        Some(p) => {
            let (u, v) = (params.u() % p, params.v() % p);
            first_collision(max_len, [1u64, 0, 0, 1], move |m, bit| {
                let [a, b, c, d] = *m;
                if bit {
                    [a, (b + v * a) % p, c, (d + v * c) % p]
                } else {
                    [(a + u * b) % p, b, (c + u * d) % p, d]
                }
            })
        }
        None => first_collision(max_len, HashState::init(params), |st, bit| {
            let mut next = st.clone();
            next.update_bit(bit);
            next
        }),
    };
    Ok(pair.map(|(x, y)| (rank_to_string(x), rank_to_string(y))))
}

/// `(len, value)` ranks of the first colliding pair.
fn first_collision<S, K, F>(max_len: u32, root: S, step: F) -> Option<((usize, u64), (usize, u64))>
where
    S: Key<K>,
    K: Eq + Hash,
    F: Fn(&S, bool) -> S,
{
    // digest -> (first member, second member) in shortlex rank
    let mut seen: HashMap<K, (u64, Option<u64>)> = HashMap::new();
    let mut level = vec![root];
    let mut rank = 0u64;
    for len in 0..=max_len {
        if len > 0 {
            level = level
                .iter()
                .flat_map(|s| [step(s, false), step(s, true)])
                .collect();
        }
        for s in &level {
            seen.entry(s.key())
                .and_modify(|e| {
                    e.1.get_or_insert(rank);
                })
                .or_insert((rank, None));
            rank += 1;
        }
    }
    seen.into_values()
        .filter_map(|(x, y)| y.map(|y| (x, y)))
        .min()
        .map(|(x, y)| (split_rank(x), split_rank(y)))
}

trait Key<K> {
    fn key(&self) -> K;
}

impl Key<[u64; 4]> for [u64; 4] {
    fn key(&self) -> [u64; 4] {
        *self
    }
}

impl Key<Digest> for HashState {
    fn key(&self) -> Digest {
        self.digest()
    }
}

/// Shortlex rank -> (length, lexicographic value within the length).
fn split_rank(rank: u64) -> (usize, u64) {
    let len = 63 - (rank + 1).leading_zeros() as usize;
    (len, rank + 1 - (1u64 << len))
}

fn rank_to_string((len, value): (usize, u64)) -> BitString {
    BitString::from_rank(len, value)
}

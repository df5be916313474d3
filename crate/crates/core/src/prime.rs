//! Primality testing for hash moduli.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Bases {2..17} are a deterministic witness set below this value.
const DETERMINISTIC_LIMIT: u64 = 341_550_071_728_321;

const RANDOM_ROUNDS: usize = 64;

/// Miller-Rabin: exact below `3.4e14`, error probability below `4^-64` above.
///
/// The random bases are drawn from a generator seeded by `n`, so the answer
/// for a given `n` never changes between runs.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    for &sp in &SMALL_PRIMES {
        let sp = BigUint::from(sp);
        if *n == sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }

    let n_minus_1 = n - 1u32;
    let r = n_minus_1.trailing_zeros().expect("n - 1 > 0");
    let d = &n_minus_1 >> r;

    let is_witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..r {
            x = &x * &x % n;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    if n.to_u64().is_some_and(|m| m < DETERMINISTIC_LIMIT) {
        return [2u32, 3, 5, 7, 11, 13, 17]
            .iter()
            .all(|&a| !is_witness(&BigUint::from(a)));
    }

    let mut seed = [0u8; 32];
    for (dst, src) in seed.iter_mut().zip(n.to_bytes_le()) {
        *dst ^= src;
    }
    let mut rng = ChaCha20Rng::from_seed(seed);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| !is_witness(&rng.gen_biguint_range(&two, &n_minus_1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve(limit: usize) -> Vec<bool> {
        let mut is = vec![true; limit];
        is[0] = false;
        is[1] = false;
        for i in 2..limit {
            if is[i] {
                for j in (i * i..limit).step_by(i) {
                    is[j] = false;
                }
            }
        }
        is
    }

    #[test]
    fn agrees_with_sieve() {
        let table = sieve(20_000);
        for (n, &expected) in table.iter().enumerate() {
            assert_eq!(is_probable_prime(&BigUint::from(n)), expected, "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // strong pseudoprimes to several small bases
        for n in [
            2047u64,
            1_373_653,
            25_326_001,
            3_215_031_751,
            2_152_302_898_747,
            3_474_749_660_383,
        ] {
            assert!(!is_probable_prime(&BigUint::from(n)), "n = {n}");
        }
        assert!(!is_probable_prime(&BigUint::from(341_550_071_728_321u64)));
    }

    #[test]
    fn large_primes() {
        let m61 = (BigUint::one() << 61) - 1u32;
        assert!(is_probable_prime(&m61));
        let m127 = (BigUint::one() << 127) - 1u32;
        assert!(is_probable_prime(&m127));
        assert!(!is_probable_prime(&(&m127 * &m61)));
        let f = (BigUint::one() << 64) + 1u32;
        assert!(!is_probable_prime(&f));
    }
}

use matmonoid::extremal::{alpha_gamma, alpha_gamma_from_root, mu_depth, witness};
use matmonoid::hash::{hash_string, BitString, Digest, HashParams, HashState};
use matmonoid::poly::{dominates, eval};
use matmonoid::tree::{
    antitranspose, cell, cell_word, classify, entry_polys, mu_row_bruteforce, DEFAULT_ENUM_DEPTH,
};
use matmonoid::verify::random_dominator;
use matmonoid::{factor, word_to_matrix, Letter, Mat2, MonoidParams, PolyN, Word};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = MonoidParams> {
    (1u64..=4, 1u64..=4).prop_map(|(u, v)| MonoidParams::new(u, v).unwrap())
}

fn word(max_depth: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_depth).prop_map(|bits| {
        Word::from_letters(
            bits.into_iter()
                .map(|b| if b { Letter::R } else { Letter::L })
                .collect(),
        )
    })
}

fn poly() -> impl Strategy<Value = PolyN> {
    prop::collection::vec(0u64..=5, 0..=8).prop_map(|c| PolyN::from_u64s(&c))
}

fn bits(max_len: usize) -> impl Strategy<Value = BitString> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(BitString::new)
}

proptest! {
    #[test]
    fn factor_inverts_word_to_matrix(q in params(), w in word(14)) {
        let m = word_to_matrix(&w, q);
        prop_assert_eq!(factor(&m, q).unwrap(), w);
    }

    #[test]
    fn products_have_unit_determinant(q in params(), w in word(30)) {
        prop_assert_eq!(word_to_matrix(&w, q).det(), 1.into());
    }

    #[test]
    fn mu_grows_under_products(q in params(), a in word(12), b in word(12)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let (m, n) = (word_to_matrix(&a, q), word_to_matrix(&b, q));
        let prod = &m * &n;
        prop_assert!(prod.mu() >= m.mu().max(n.mu()));
    }

    #[test]
    fn non_monoid_matrices_rejected(q in params(), w in word(8), k in 1u64..5) {
        // a -> ka + 1 raises the determinant to at least 1 + d
        let m = word_to_matrix(&w, q);
        let scaled = Mat2::new(&m.a * k + 1u32, m.b.clone(), m.c.clone(), m.d.clone());
        prop_assert!(factor(&scaled, q).is_err());
    }

    #[test]
    fn no_word_beats_mu_depth(q in params(), w in word(16)) {
        let m = word_to_matrix(&w, q);
        prop_assert!(m.mu() <= mu_depth(q, w.depth() as u64));
    }

    #[test]
    fn mu_depth_matches_bruteforce(q in params(), n in 0u32..=14) {
        prop_assert_eq!(mu_depth(q, n as u64), mu_row_bruteforce(q, n, DEFAULT_ENUM_DEPTH).unwrap());
    }

    #[test]
    fn witness_matches_mu_depth(u in 1u64..=40, v in 1u64..=40, n in 1u64..=200) {
        let q = MonoidParams::new(u, v).unwrap();
        let w = witness(q, n).unwrap();
        prop_assert_eq!(w.matrix.entry(w.entry), &mu_depth(q, n));
        prop_assert_eq!(w.matrix, word_to_matrix(&w.word, q));
    }

    #[test]
    fn mu_depth_symmetric(u in 1u64..=50, v in 1u64..=50, n in 0u64..=300) {
        let q = MonoidParams::new(u, v).unwrap();
        prop_assert_eq!(mu_depth(q, n), mu_depth(q.swapped(), n));
    }

    #[test]
    fn alpha_gamma_is_left_column(q in params(), w in word(6), n in 0u64..=8) {
        // root M = word_to_matrix(w); left column of (L R)^n L M
        let root = word_to_matrix(&w, q);
        let mut prefix = Word::from_letters(vec![Letter::L, Letter::R]).repeat(n as usize);
        prefix.push(Letter::L);
        let full = &word_to_matrix(&prefix, q) * &root;
        let ag = alpha_gamma_from_root(q, &root.a, &root.c, n).unwrap();
        prop_assert_eq!((&ag.alpha, &ag.gamma), (&full.a, &full.c));
        let seeded = alpha_gamma(q, &ag.alpha, &ag.gamma, 0).unwrap();
        prop_assert_eq!(seeded.alpha, ag.alpha);
    }

    #[test]
    fn mirror_cell_is_antitranspose(q in params(), n in 0u32..=16, seed in any::<u64>()) {
        let width = 1u64 << n;
        let i = seed % width + 1;
        let here = cell(n, i, q).unwrap();
        let there = cell(n, width + 1 - i, q.swapped()).unwrap();
        prop_assert_eq!(here, antitranspose(&there));
    }

    #[test]
    fn cells_classify_by_last_step(q in params(), n in 1u32..=16, seed in any::<u64>()) {
        let i = seed % (1u64 << n) + 1;
        let class = classify(&cell(n, i, q).unwrap(), q);
        prop_assert_eq!(class.is_lower(), i % 2 == 1);
        prop_assert_eq!(class.is_upper(), i.is_multiple_of(2));
    }

    #[test]
    fn entry_polys_flip(n in 0u32..=9, seed in any::<u64>()) {
        let width = 1u64 << n;
        let i = seed % width + 1;
        let a = entry_polys(&cell_word(n, i).unwrap());
        let b = entry_polys(&cell_word(n, width + 1 - i).unwrap());
        prop_assert_eq!(a.flipped(), b);
        prop_assert!(a.has_balanced_structure());
    }

    #[test]
    fn dominance_reflexive(f in poly()) {
        prop_assert!(dominates(&f, &f));
    }

    #[test]
    fn dominance_antisymmetric(f in poly(), g in poly()) {
        if dominates(&f, &g) && dominates(&g, &f) {
            prop_assert_eq!(f, g);
        }
    }

    #[test]
    fn dominance_transitive(g in poly(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_dominator(&g, &mut rng);
        let h = random_dominator(&f, &mut rng);
        prop_assert!(dominates(&f, &g));
        prop_assert!(dominates(&h, &f));
        prop_assert!(dominates(&h, &g));
    }

    #[test]
    fn dominance_additive(g1 in poly(), g2 in poly(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f1 = random_dominator(&g1, &mut rng);
        let f2 = random_dominator(&g2, &mut rng);
        prop_assert!(dominates(&(&f1 + &f2), &(&g1 + &g2)));
        prop_assert!(f1.degree() >= g1.degree());
    }

    #[test]
    fn shifts_dominate_downward(f in poly(), i in 0usize..6, j in 0usize..6) {
        prop_assert!(dominates(&f.shift(i.max(j)), &f.shift(i.min(j))));
    }

    #[test]
    fn dominance_implies_pointwise(g in poly(), seed in any::<u64>(), r in 1u64..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_dominator(&g, &mut rng);
        prop_assert!(eval(&f, r).unwrap() >= eval(&g, r).unwrap());
    }

    #[test]
    fn streaming_matches_one_shot(b in bits(80), split in 0usize..=80) {
        let params = HashParams::new(3, 5, BigUint::from(1_000_003u64)).unwrap();
        let split = split.min(b.len());
        let mut st = HashState::init(&params);
        st.update_bits(b.bits()[..split].iter().copied());
        prop_assert!(st.det_is_one());
        st.update_bits(b.bits()[split..].iter().copied());
        prop_assert_eq!(st.digest(), hash_string(&params, &b));
        prop_assert_eq!(st.bits_consumed(), b.len() as u64);
    }

    #[test]
    fn bytes_chunking_independent(data in prop::collection::vec(any::<u8>(), 0..32), split in 0usize..32) {
        let params = HashParams::new(2, 3, BigUint::from(65_537u32)).unwrap();
        let split = split.min(data.len());
        let mut a = HashState::init(&params);
        a.update_bytes_msb(&data[..split]);
        a.update_bytes_msb(&data[split..]);
        prop_assert_eq!(a.digest(), hash_string(&params, &BitString::from_bytes_msb(&data)));
    }

    #[test]
    fn digest_round_trip(b in bits(40), p in prop::sample::select(vec![2u64, 5, 101, 257, 65_537, 4_294_967_311])) {
        let params = HashParams::new(2, 3, BigUint::from(p)).unwrap();
        let d = hash_string(&params, &b);
        let bytes = d.serialize(&params);
        prop_assert_eq!(bytes.len(), 4 * params.field_width());
        prop_assert_eq!(Digest::parse(&bytes, &params).unwrap(), d);
    }

    #[test]
    fn digest_is_exact_below_modulus(q in params(), b in bits(16)) {
        // the smallest prime above mu(T; 16) for u, v <= 4
        let p = mu_depth(q, 16) + 1u32;
        let p = next_prime(p);
        let params = HashParams::new(q.u(), q.v(), p).unwrap();
        prop_assert_eq!(hash_string(&params, &b).to_mat2(), word_to_matrix(&b.to_word(), q));
    }
}

fn next_prime(mut n: BigUint) -> BigUint {
    while !matmonoid::prime::is_probable_prime(&n) {
        n += 1u32;
    }
    n
}

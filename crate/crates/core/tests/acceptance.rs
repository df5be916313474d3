//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use matmonoid::extremal::{closed_form_float, mu_depth, relative_error, witness, DepthParity};
use matmonoid::hash::{
    bound_n0, exhaustive_collision_check, hash_string, BitString, Digest, HashParams,
    DEFAULT_COLLISION_LIMIT,
};
use matmonoid::tree::{mu_row_bruteforce, DEFAULT_ENUM_DEPTH};
use matmonoid::verify::{
    antitranspose_symmetry, converse_counterexample, dominance_implies_pointwise, family_ordering,
    family_successor_relations, left_half_dominance, order_laws, Check, HASH_PRIMES, HASH_UV,
    POLY_SEED,
};
use matmonoid::{word_to_matrix, MonoidParams};
use num_bigint::BigUint;

/// RFC 3526 group 14 (2048-bit safe prime).
const MODP_2048: &str = "\
FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74020BBEA63B139B22514A08798E3404DD\
EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED\
EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F\
83655D23DCA3AD961C62F356208552BB9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B\
E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF6955817183995497CEA956AE515D2261898FA0510\
15728E5A8AACAA68FFFFFFFFFFFFFFFF";

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Self {
            ok: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Self {
            ok: false,
            detail: detail.into(),
        }
    }

    fn from_checks(checks: &[Check]) -> Self {
        let detail = checks
            .iter()
            .map(|c| {
                format!(
                    "{} {}: {}",
                    if c.passed { "ok" } else { "FAILED" },
                    c.name,
                    c.detail
                )
            })
            .collect::<Vec<_>>()
            .join("; ");
        Self {
            ok: checks.iter().all(|c| c.passed),
            detail,
        }
    }
}

fn p(u: u64, v: u64) -> MonoidParams {
    MonoidParams::new(u, v).unwrap()
}

fn grid(max: u64) -> impl Iterator<Item = MonoidParams> {
    (1..=max).flat_map(move |u| (1..=max).map(move |v| p(u, v)))
}

fn ac1_worked_hash() -> Outcome {
    let params = HashParams::new(2, 3, BigUint::from(5u32)).unwrap();
    let bits: BitString = "01100".parse().unwrap();
    let d = hash_string(&params, &bits);
    if d == Digest::from_u64(0, 1, 4, 3) {
        Outcome::pass(format!("digest {d}"))
    } else {
        Outcome::fail(format!("digest {d}, expected [[0, 1], [4, 3]]"))
    }
}

/// Closed form at one parity over `uv_max`, brute force up to `brute_depth`.
fn closed_form_table(uv_max: u64, parity: DepthParity, brute_depth: u64) -> Outcome {
    let mut worst = 0.0f64;
    let mut brute_cases = 0;
    for q in grid(uv_max) {
        for n in 0..=10u64 {
            let depth = match parity {
                DepthParity::Odd => 2 * n + 1,
                DepthParity::Even => 2 * n + 2,
            };
            let exact = mu_depth(q, depth);
            let err = relative_error(&closed_form_float(q, n, parity), &exact);
            worst = worst.max(err);
            if err.is_nan() || err >= 1e-9 {
                return Outcome::fail(format!("u={} v={} n={n}: rel err {err:e}", q.u(), q.v()));
            }
            if depth <= brute_depth {
                let brute = mu_row_bruteforce(q, depth as u32, DEFAULT_ENUM_DEPTH).unwrap();
                if brute != exact {
                    return Outcome::fail(format!(
                        "u={} v={} depth {depth}: exact {exact}, brute force {brute}",
                        q.u(),
                        q.v()
                    ));
                }
                brute_cases += 1;
            }
        }
    }
    Outcome::pass(format!(
        "max rel err {worst:.3e}; {brute_cases} brute-force matches up to depth {brute_depth}"
    ))
}

fn ac2_odd_table() -> Outcome {
    closed_form_table(3, DepthParity::Odd, 15)
}

fn ac3_even_table() -> Outcome {
    let out = closed_form_table(2, DepthParity::Even, 14);
    if !out.ok {
        return out;
    }
    let q = p(2, 1);
    let seq: Vec<BigUint> = (0..6).map(|n| mu_depth(q, 2 * n + 2)).collect();
    let expected: Vec<BigUint> = [4u64, 14, 52, 194, 724, 2702].map(BigUint::from).to_vec();
    if seq != expected {
        return Outcome::fail(format!("u=2 v=1 even depths gave {seq:?}"));
    }
    Outcome::pass(format!("{}; u=2 v=1: 4, 14, 52, 194, ...", out.detail))
}

fn ac4_oracle() -> Outcome {
    let mut cases = 0;
    for q in grid(4) {
        for n in 0..=16u32 {
            let exact = mu_depth(q, n as u64);
            let brute = mu_row_bruteforce(q, n, DEFAULT_ENUM_DEPTH).unwrap();
            if exact != brute {
                return Outcome::fail(format!("u={} v={} n={n}: {exact} vs {brute}", q.u(), q.v()));
            }
            cases += 1;
        }
    }
    Outcome::pass(format!("{cases} exact matches, u,v in 1..=4, n in 0..=16"))
}

fn ac5_witness() -> Outcome {
    let mut cases = 0;
    for q in grid(4) {
        for n in 1..=16u64 {
            let w = match witness(q, n) {
                Ok(w) => w,
                Err(e) => return Outcome::fail(format!("u={} v={} n={n}: {e}", q.u(), q.v())),
            };
            let m = word_to_matrix(&w.word, q);
            let brute = mu_row_bruteforce(q, n as u32, DEFAULT_ENUM_DEPTH).unwrap();
            if m.mu() != brute || *m.entry(w.entry) != brute || w.word.depth() as u64 != n {
                return Outcome::fail(format!(
                    "u={} v={} n={n}: {} at {}",
                    q.u(),
                    q.v(),
                    w.word,
                    w.entry
                ));
            }
            cases += 1;
        }
    }
    Outcome::pass(format!(
        "{cases} witnesses attain the brute-force maximum at the declared entry"
    ))
}

fn ac6_fibonacci() -> Outcome {
    // F_0 = 0, F_1 = 1; mu_depth(n) = F_{n+1}
    let mut fib = vec![BigUint::from(0u32), BigUint::from(1u32)];
    while fib.len() < 23 {
        let next = &fib[fib.len() - 1] + &fib[fib.len() - 2];
        fib.push(next);
    }
    for n in 0..=20usize {
        let got = mu_depth(p(1, 1), n as u64);
        if got != fib[n + 1] {
            return Outcome::fail(format!("n={n}: {got} vs F_{} = {}", n + 1, fib[n + 1]));
        }
    }
    Outcome::pass("mu_depth(n) = F_(n+1) for n in 0..=20: 1, 1, 2, 3, 5, 8, ...")
}

fn ac7_dominance() -> Outcome {
    Outcome::from_checks(&[
        order_laws(10_000, POLY_SEED),
        dominance_implies_pointwise(10_000, POLY_SEED),
        converse_counterexample(),
        family_ordering(12),
        family_successor_relations(12),
    ])
}

fn ac8_symmetry() -> Outcome {
    Outcome::from_checks(&[antitranspose_symmetry(3, 12), left_half_dominance(3, 12)])
}

fn ac9_collision_horizon() -> Outcome {
    let mut lines = Vec::new();
    for (u, v) in HASH_UV {
        for prime in HASH_PRIMES {
            let params = HashParams::new(u, v, BigUint::from(prime)).unwrap();
            let n0 = bound_n0(&params);
            match exhaustive_collision_check(&params, n0 as u32, DEFAULT_COLLISION_LIMIT) {
                Ok(None) => lines.push(format!("({u},{v},{prime}):n0={n0}")),
                Ok(Some((x, y))) => {
                    return Outcome::fail(format!("({u},{v},{prime}) n0={n0}: {x} ~ {y}"))
                }
                Err(e) => return Outcome::fail(format!("({u},{v},{prime}) n0={n0}: {e}")),
            }
        }
    }
    let n0 = bound_n0(&HashParams::new(2, 3, BigUint::from(101u32)).unwrap());
    if n0 != 4 {
        return Outcome::fail(format!("(2,3,101) gave n0={n0}"));
    }
    Outcome::pass(format!(
        "no collisions up to n0 for {}; (2,3,101) n0=4",
        lines.join(" ")
    ))
}

fn ac10_scale() -> Outcome {
    let prime = BigUint::parse_bytes(MODP_2048.as_bytes(), 16).unwrap();
    let construct = Instant::now();
    let params = HashParams::new(2, 3, prime.clone()).unwrap();
    let construct = construct.elapsed();

    let start = Instant::now();
    let n0 = bound_n0(&params);
    let below = mu_depth(params.monoid(), n0);
    let above = mu_depth(params.monoid(), n0 + 1);
    let elapsed = start.elapsed();

    if !(below < prime && prime <= above) {
        return Outcome::fail(format!("n0={n0} does not bracket p"));
    }
    if n0 != 1376 {
        return Outcome::fail(format!("n0={n0}, independent evaluation gives 1376"));
    }
    if elapsed >= Duration::from_secs(1) {
        return Outcome::fail(format!("n0={n0} took {elapsed:?}"));
    }
    Outcome::pass(format!(
        "{}-bit p, n0={n0}, bound and bracket in {elapsed:?} (primality check {construct:?})",
        prime.bits()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 worked hash example", ac1_worked_hash),
        ("AC2 odd-depth closed form", ac2_odd_table),
        ("AC3 even-depth closed form", ac3_even_table),
        ("AC4 oracle equivalence", ac4_oracle),
        ("AC5 witness attainment", ac5_witness),
        ("AC6 Fibonacci degeneration", ac6_fibonacci),
        ("AC7 dominance order", ac7_dominance),
        ("AC8 tree symmetry", ac8_symmetry),
        ("AC9 collision horizon validation", ac9_collision_horizon),
        ("AC10 2048-bit scale", ac10_scale),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!("{status} {name} ({:.2?}): {}", start.elapsed(), out.detail);
        failed += usize::from(!out.ok);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

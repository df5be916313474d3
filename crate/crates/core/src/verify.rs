//! Property suites behind `matmonoid verify`.
//!
//! Every check compares two independently computed quantities (closed form
//! against brute force, a symmetry against the row it predicts, and so on)
//! over a fixed grid, so a report is reproducible byte for byte.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extremal::{
    alpha_gamma, closed_form_float, gamma_closed_form, gamma_eigen, lucas, mu_depth,
    mu_depth_via_fseq, relative_error, witness, DepthParity,
};
use crate::hash::{
    bound_n0, exhaustive_collision_check, hash_string, BitString, HashParams, HashState,
    DEFAULT_COLLISION_LIMIT,
};
use crate::matrix::{word_to_matrix, Letter, Mat2, MonoidParams, Word};
use crate::poly::{
    f_poly, fg_recurrence, fibonacci_index_of_f, fibonacci_poly, g_poly, h_poly, hi_recurrence,
    i_poly, left_column_polys, pascal_merge_check, PolyN,
};
use crate::tree::{
    antitranspose, cell, cell_word, classify, entry_polys, mu_row_bruteforce, row, DominanceClass,
};

/// `(u, v)` range of the oracle and witness checks.
pub const FORMULA_UV_MAX: u64 = 4;
/// `(u, v)` range and half-depth range of the radical closed forms.
pub const CLOSED_FORM_UV_MAX: u64 = 3;
pub const CLOSED_FORM_N_MAX: u64 = 10;
/// `(u, v)` range and depth cap of the tree symmetry checks.
pub const SYMMETRY_UV_MAX: u64 = 3;
pub const SYMMETRY_DEPTH_MAX: u32 = 12;
/// Depth cap for symbolic entry polynomials.
pub const POLY_DEPTH_MAX: u32 = 10;
/// Half-depth cap for the left-column bound at odd depth.
pub const LEFT_COLUMN_N_MAX: u64 = 7;
/// Index range of the polynomial families.
pub const FAMILY_N_MAX: usize = 12;
pub const RECURRENCE_N_MAX: usize = 20;
pub const RANDOM_POLY_PAIRS: usize = 10_000;
pub const POLY_SEED: u64 = 0x5eed_d0d0;
pub const HASH_UV: [(u64, u64); 4] = [(1, 1), (2, 3), (3, 2), (2, 2)];
pub const HASH_PRIMES: [u64; 3] = [101, 257, 1009];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Formulas,
    Symmetry,
    Polydom,
    Hash,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Formulas => "formulas",
            Suite::Symmetry => "symmetry",
            Suite::Polydom => "polydom",
            Suite::Hash => "hash",
            Suite::All => "all",
        })
    }
}

/// One property over one grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} [{}] {}", self.name, self.range, self.detail)
    }
}

/// Counts cases and keeps the first failure.
struct CheckBuilder {
    name: String,
    range: String,
    cases: u64,
    failure: Option<String>,
}

impl CheckBuilder {
    fn new(name: &str, range: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            range: range.into(),
            cases: 0,
            failure: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure.get_or_insert(msg);
    }

    fn finish(self) -> Check {
        let (passed, detail) = match self.failure {
            None => (true, format!("{} cases", self.cases)),
            Some(f) => (false, format!("first failure: {f}")),
        };
        Check {
            name: self.name,
            range: self.range,
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Runs `suite` with depths capped at `max_depth`; brute force beyond
/// `enum_depth` is skipped, not attempted.
pub fn run_suite(suite: Suite, max_depth: u32, enum_depth: u32) -> Report {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Formulas | Suite::All) {
        checks.extend(formula_checks(max_depth, enum_depth));
    }
    if matches!(suite, Suite::Symmetry | Suite::All) {
        checks.extend(symmetry_checks(max_depth.min(SYMMETRY_DEPTH_MAX)));
    }
    if matches!(suite, Suite::Polydom | Suite::All) {
        checks.extend(polydom_checks());
    }
    if matches!(suite, Suite::Hash | Suite::All) {
        checks.extend(hash_checks());
    }
    Report { checks }
}

fn grid(max: u64) -> impl Iterator<Item = MonoidParams> {
    (1..=max).flat_map(move |u| (1..=max).map(move |v| MonoidParams::new(u, v).expect("positive")))
}

fn uvn(params: MonoidParams, n: impl fmt::Display) -> String {
    format!("u={} v={} n={n}", params.u(), params.v())
}

pub fn formula_checks(max_depth: u32, enum_depth: u32) -> Vec<Check> {
    vec![
        oracle_equivalence(FORMULA_UV_MAX, max_depth.min(enum_depth)),
        closed_form_agreement(CLOSED_FORM_UV_MAX, CLOSED_FORM_N_MAX),
        uv_symmetry(max_depth),
        monotonicity(max_depth),
        witness_attainment(FORMULA_UV_MAX, max_depth),
        system_cross_check(max_depth),
        fseq_link(max_depth),
        fibonacci_degeneration(20),
        lucas_identity(),
    ]
}

/// Exact `mu_depth` against exhaustive enumeration of the depth-`n` row.
pub fn oracle_equivalence(uv_max: u64, n_max: u32) -> Check {
    let mut c = CheckBuilder::new(
        "oracle-equivalence",
        format!("u,v in 1..={uv_max}, n in 0..={n_max}"),
    );
    for q in grid(uv_max) {
        for n in 0..=n_max {
            match mu_row_bruteforce(q, n, n_max) {
                Ok(brute) => {
                    let exact = mu_depth(q, n as u64);
                    c.case(exact == brute, || {
                        format!("{}: formula {exact}, brute force {brute}", uvn(q, n))
                    });
                }
                Err(e) => c.fail(format!("{}: {e}", uvn(q, n))),
            }
        }
    }
    c.finish()
}

/// Radical closed forms at depths `2n+1` and `2n+2` against the exact value.
pub fn closed_form_agreement(uv_max: u64, n_max: u64) -> Check {
    let mut c = CheckBuilder::new(
        "closed-form-agreement",
        format!("u,v in 1..={uv_max}, n in 0..={n_max}, both parities, rel err < 1e-9"),
    );
    for q in grid(uv_max) {
        for n in 0..=n_max {
            for (parity, depth) in [
                (DepthParity::Odd, 2 * n + 1),
                (DepthParity::Even, 2 * n + 2),
            ] {
                let err = relative_error(&closed_form_float(q, n, parity), &mu_depth(q, depth));
                c.case(err < 1e-9, || {
                    format!("{} {parity:?}: rel err {err:e}", uvn(q, n))
                });
            }
        }
    }
    c.finish()
}

pub fn uv_symmetry(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new("uv-symmetry", format!("u,v in 1..=6, n in 0..={max_depth}"));
    for q in grid(6) {
        for n in 0..=max_depth as u64 {
            c.case(mu_depth(q, n) == mu_depth(q.swapped(), n), || uvn(q, n));
        }
    }
    c.finish()
}

pub fn monotonicity(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "monotonicity",
        format!("u,v in 1..=6, n in 0..={max_depth}"),
    );
    for q in grid(6) {
        for n in 0..max_depth as u64 {
            let (a, b) = (mu_depth(q, n), mu_depth(q, n + 1));
            let ok = if n == 0 { a <= b } else { a < b };
            c.case(ok, || format!("{}: {a} then {b}", uvn(q, n)));
        }
    }
    c.finish()
}

/// The witness word's declared entry equals `mu_depth`.
pub fn witness_attainment(uv_max: u64, max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "witness-attainment",
        format!("u,v in 1..={uv_max}, n in 1..={max_depth}"),
    );
    for q in grid(uv_max) {
        for n in 1..=max_depth as u64 {
            match witness(q, n) {
                Ok(w) => {
                    let ok = w.matrix == word_to_matrix(&w.word, q)
                        && w.word.depth() as u64 == n
                        && *w.matrix.entry(w.entry) == mu_depth(q, n);
                    c.case(ok, || format!("{}: {}", uvn(q, n), w.word));
                }
                Err(e) => c.fail(format!("{}: {e}", uvn(q, n))),
            }
        }
    }
    c.finish()
}

/// `gamma_n` from the recurrence equals the (2,1) entry of `(L R)^n L` and
/// its two radical forms.
pub fn system_cross_check(max_depth: u32) -> Check {
    let n_max = (max_depth as u64).min(CLOSED_FORM_N_MAX);
    let mut c = CheckBuilder::new(
        "alpha-gamma-system",
        format!("u,v in 1..={FORMULA_UV_MAX}, n in 0..={n_max}"),
    );
    for q in grid(FORMULA_UV_MAX) {
        for n in 0..=n_max {
            let ag = alpha_gamma(q, &BigUint::from(1u32), &BigUint::from(q.u()), n)
                .expect("nonzero seed");
            let mut w = Word::from_letters(vec![Letter::L, Letter::R]).repeat(n as usize);
            w.push(Letter::L);
            let m = word_to_matrix(&w, q);
            c.case(ag.alpha == m.a && ag.gamma == m.c, || {
                format!("{}: matrix", uvn(q, n))
            });
            let e1 = relative_error(&gamma_closed_form(q, 1, 0, n), &ag.gamma);
            let e2 = relative_error(&gamma_eigen(q, 1, 0, n), &ag.gamma);
            c.case(e1 < 1e-9 && e2 < 1e-9, || {
                format!("{}: rel err {e1:e} / {e2:e}", uvn(q, n))
            });
        }
    }
    c.finish()
}

pub fn fseq_link(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "fseq-link",
        format!("u,v in 1..=6 with u,v>1 or u=v=1, n in 0..={max_depth}, offset 1"),
    );
    for q in grid(6).filter(|q| q.s() > 1 || q.t() == 1) {
        for n in 0..=max_depth as u64 {
            c.case(mu_depth(q, n) == mu_depth_via_fseq(q, n), || uvn(q, n));
        }
    }
    c.finish()
}

/// `mu_depth(n) = F_{n+1}` for `u = v = 1`.
pub fn fibonacci_degeneration(n_max: u64) -> Check {
    let mut c = CheckBuilder::new("fibonacci-degeneration", format!("u=v=1, n in 0..={n_max}"));
    let q = MonoidParams::new(1, 1).expect("positive");
    let (mut a, mut b) = (BigUint::zero(), BigUint::from(1u32));
    for n in 0..=n_max {
        // (a, b) = (F_n, F_{n+1})
        let got = mu_depth(q, n);
        c.case(got == b, || format!("n={n}: {got} vs {b}"));
        (a, b) = (b.clone(), a + b);
    }
    c.finish()
}

pub fn lucas_identity() -> Check {
    let mut c = CheckBuilder::new(
        "lucas-identity",
        "P in 3..=20, m in 0..=200: V^2 - (P^2-4) U^2 = 4",
    );
    for p in 3u64..=20 {
        for m in 0..=200 {
            let l = lucas(&BigUint::from(p), m).expect("P >= 3");
            let lhs = &l.v * &l.v;
            let rhs = BigUint::from(p * p - 4) * &l.u * &l.u + 4u32;
            c.case(lhs == rhs, || format!("P={p} m={m}"));
        }
    }
    c.finish()
}

pub fn symmetry_checks(max_depth: u32) -> Vec<Check> {
    vec![
        antitranspose_symmetry(SYMMETRY_UV_MAX, max_depth),
        flip_symmetry(max_depth.min(POLY_DEPTH_MAX)),
        left_half_dominance(SYMMETRY_UV_MAX, max_depth),
        column_dominance(max_depth),
        classification(max_depth),
        entry_structure(max_depth.min(POLY_DEPTH_MAX)),
        left_column_bound(),
        left_column_bound_counterexample(),
    ]
}

/// `cell(n, i)` in `T(u,v)` is the antitranspose of `cell(n, 2^n+1-i)` in `T(v,u)`.
pub fn antitranspose_symmetry(uv_max: u64, max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "antitranspose-symmetry",
        format!("u,v in 1..={uv_max}, n in 0..={max_depth}, all cells"),
    );
    for q in grid(uv_max) {
        for n in 0..=max_depth {
            let here = row(&Mat2::identity(), q, n, max_depth).expect("within limit");
            let there = row(&Mat2::identity(), q.swapped(), n, max_depth).expect("within limit");
            let len = here.cells.len();
            for (i, m) in here.cells.iter().enumerate() {
                c.case(*m == antitranspose(&there.cells[len - 1 - i]), || {
                    format!("{} i={}", uvn(q, n), i + 1)
                });
            }
            // the random-access walk agrees with the materialized row
            let last = len as u64;
            for i in [1, last.div_ceil(2), last] {
                let walked = cell(n, i, q).expect("index in range");
                c.case(walked == here.cells[i as usize - 1], || {
                    format!("{} cell {i}", uvn(q, n))
                });
            }
        }
    }
    c.finish()
}

/// Swapping variables and antitransposing the entry polynomials of
/// `cell(n, i)` gives those of `cell(n, 2^n+1-i)`.
pub fn flip_symmetry(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new("flip-symmetry", format!("n in 0..={max_depth}, all cells"));
    for n in 0..=max_depth {
        let width = 1u64 << n;
        for i in 1..=width {
            let a = entry_polys(&cell_word(n, i).expect("in range"));
            let b = entry_polys(&cell_word(n, width + 1 - i).expect("in range"));
            c.case(a.flipped() == b, || format!("n={n} i={i}"));
        }
    }
    c.finish()
}

/// For `u >= v`, mirrored cells in the left half never exceed their partner.
pub fn left_half_dominance(uv_max: u64, max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "left-half-dominance",
        format!("u >= v in 1..={uv_max}, n in 1..={max_depth}, i <= 2^(n-1)"),
    );
    for q in grid(uv_max).filter(|q| q.u() >= q.v()) {
        for n in 1..=max_depth {
            let cells = row(&Mat2::identity(), q, n, max_depth)
                .expect("within limit")
                .cells;
            let len = cells.len();
            for i in 0..len / 2 {
                let (m, mirror) = (&cells[i], &cells[len - 1 - i]);
                c.case(mirror.mu() <= m.mu(), || {
                    format!("{} i={}", uvn(q, n), i + 1)
                });
            }
        }
    }
    c.finish()
}

/// Descendants of `L_u` peak in the left column, of `R_v` in the right.
pub fn column_dominance(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "column-dominance",
        format!("u,v in 1..={SYMMETRY_UV_MAX}, n in 1..={max_depth}"),
    );
    for q in grid(SYMMETRY_UV_MAX) {
        for n in 1..=max_depth {
            let cells = row(&Mat2::identity(), q, n, max_depth)
                .expect("within limit")
                .cells;
            let half = cells.len() / 2;
            for (i, m) in cells.iter().enumerate() {
                let col_max = if i < half {
                    (&m.a).max(&m.c)
                } else {
                    (&m.b).max(&m.d)
                };
                c.case(*col_max == m.mu(), || format!("{} i={}", uvn(q, n), i + 1));
            }
        }
    }
    c.finish()
}

/// Every vertex of depth `>= 1` is exactly one of u-lower / v-upper dominant,
/// according to whether it is a left or a right child.
pub fn classification(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "dominance-classification",
        format!("u,v in 1..={SYMMETRY_UV_MAX}, n in 1..={max_depth}"),
    );
    for q in grid(SYMMETRY_UV_MAX) {
        for n in 1..=max_depth {
            let cells = row(&Mat2::identity(), q, n, max_depth)
                .expect("within limit")
                .cells;
            // the last step of the path is the outermost factor
            for (i, m) in cells.iter().enumerate() {
                let expected = if i % 2 == 0 {
                    DominanceClass::ULowerDominant
                } else {
                    DominanceClass::VUpperDominant
                };
                c.case(classify(m, q) == expected, || {
                    format!("{} i={}", uvn(q, n), i + 1)
                });
            }
        }
    }
    c.finish()
}

/// Entry polynomials of every word are balanced in `XY` (up to the fixed
/// `X` / `Y` factor off the diagonal) and have total degree `<= n`.
pub fn entry_structure(max_depth: u32) -> Check {
    let mut c = CheckBuilder::new(
        "entry-structure",
        format!("all words of depth 0..={max_depth}"),
    );
    for n in 0..=max_depth {
        for i in 1..=1u64 << n {
            let w = cell_word(n, i).expect("in range");
            let e = entry_polys(&w);
            let ok = e.has_balanced_structure()
                && e.max_total_degree() <= n
                && e.eval(MonoidParams::new(2, 3).expect("positive"))
                    == word_to_matrix(&w, MonoidParams::new(2, 3).expect("positive"));
            c.case(ok, || format!("word {w}"));
        }
    }
    c.finish()
}

/// Largest left-column entry over the depth-`2n+1` row.
fn row_left_column_max(q: MonoidParams, n: u64) -> BigUint {
    let depth = 2 * n as u32 + 1;
    row(&Mat2::identity(), q, depth, depth)
        .expect("within limit")
        .cells
        .iter()
        .map(|m| (&m.a).max(&m.c).clone())
        .max()
        .expect("nonempty row")
}

fn gamma_n(q: MonoidParams, n: u64) -> BigUint {
    alpha_gamma(q, &BigUint::from(1u32), &BigUint::from(q.u()), n)
        .expect("nonzero seed")
        .gamma
}

/// At depth `2n+1` no left-column entry exceeds `gamma_n`, and `(L R)^n L`
/// attains it. Holds for `u >= v` and for `u >= 2`; see
/// [`left_column_bound_counterexample`] for `u = 1 < v`.
pub fn left_column_bound() -> Check {
    let mut c = CheckBuilder::new(
        "left-column-bound",
        format!("u,v in 1..={FORMULA_UV_MAX} except u=1<v, n in 0..={LEFT_COLUMN_N_MAX}"),
    );
    for q in grid(FORMULA_UV_MAX).filter(|q| !(q.u() == 1 && q.v() > 1)) {
        for n in 0..=LEFT_COLUMN_N_MAX {
            let (got, bound) = (row_left_column_max(q, n), gamma_n(q, n));
            c.case(got == bound, || {
                format!("{}: row max {got}, gamma {bound}", uvn(q, n))
            });
        }
    }
    c.finish()
}

/// For `u = 1 < v` the left-column bound fails at some odd depth.
pub fn left_column_bound_counterexample() -> Check {
    let mut c = CheckBuilder::new(
        "left-column-bound-counterexample",
        format!("u=1, v in 2..={FORMULA_UV_MAX}, some n in 0..={LEFT_COLUMN_N_MAX}"),
    );
    for v in 2..=FORMULA_UV_MAX {
        let q = MonoidParams::new(1, v).expect("positive");
        let exceeded = (0..=LEFT_COLUMN_N_MAX).any(|n| row_left_column_max(q, n) > gamma_n(q, n));
        c.case(exceeded, || format!("u=1 v={v}: bound never exceeded"));
    }
    c.finish()
}

pub fn polydom_checks() -> Vec<Check> {
    vec![
        order_laws(RANDOM_POLY_PAIRS, POLY_SEED),
        dominance_implies_pointwise(RANDOM_POLY_PAIRS, POLY_SEED),
        converse_counterexample(),
        family_ordering(FAMILY_N_MAX),
        family_successor_relations(FAMILY_N_MAX),
        family_recurrences(RECURRENCE_N_MAX),
        family_matrix_agreement(FAMILY_N_MAX),
        fibonacci_polynomial_link(FAMILY_N_MAX),
        pascal_merge(),
    ]
}

pub fn random_poly(rng: &mut impl Rng) -> PolyN {
    let len = rng.gen_range(0..=8);
    let coeffs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=4)).collect();
    PolyN::from_u64s(&coeffs)
}

/// Some `f` with `f >= g`: push mass of `g` to higher degrees, then add
/// a random polynomial.
pub fn random_dominator(g: &PolyN, rng: &mut impl Rng) -> PolyN {
    let mut coeffs: Vec<BigUint> = g.coeffs().to_vec();
    let top = coeffs.len() + 2;
    coeffs.resize(top, BigUint::zero());
    for _ in 0..rng.gen_range(0..4) {
        let from = rng.gen_range(0..top);
        if coeffs[from].is_zero() {
            continue;
        }
        let to = rng.gen_range(from..top);
        let amount = BigUint::from(rng.gen_range(1..=2u32)).min(coeffs[from].clone());
        coeffs[from] -= &amount;
        coeffs[to] += amount;
    }
    &PolyN::from_coeffs(coeffs) + &random_poly(rng)
}

fn coefficientwise_ge(f: &PolyN, g: &PolyN) -> bool {
    let len = f.coeffs().len().max(g.coeffs().len());
    (0..len).all(|k| f.coeff(k) >= g.coeff(k))
}

/// Reflexivity, antisymmetry, transitivity, degree, additivity, shift and
/// coefficientwise monotonicity.
pub fn order_laws(pairs: usize, seed: u64) -> Check {
    let mut c = CheckBuilder::new(
        "order-laws",
        format!("{pairs} random pairs, seed {seed:#x}"),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let f = random_poly(&mut rng);
        let g = if rng.gen_bool(0.5) {
            random_poly(&mut rng)
        } else {
            random_dominator(&f, &mut rng)
        };
        let h = random_dominator(&g, &mut rng);
        let (fg, gf, gh) = (f.dominates(&g), g.dominates(&f), h.dominates(&g));
        c.case(f.dominates(&f), || format!("reflexivity {f}"));
        c.case(!(fg && gf) || f == g, || format!("antisymmetry {f} / {g}"));
        c.case(gh, || format!("generated dominator {h} / {g}"));
        if gf {
            c.case(h.dominates(&f), || format!("transitivity {h} / {g} / {f}"));
        }
        if fg {
            c.case(f.degree() >= g.degree(), || format!("degree {f} / {g}"));
        }
        let (f2, g2) = (random_poly(&mut rng), random_poly(&mut rng));
        if fg && f2.dominates(&g2) {
            c.case((&f + &f2).dominates(&(&g + &g2)), || {
                format!("additivity {f}+{f2} / {g}+{g2}")
            });
        }
        let (i, j) = (rng.gen_range(0..5), rng.gen_range(0..5));
        let (hi, lo) = (i.max(j), i.min(j));
        c.case(f.shift(hi).dominates(&f.shift(lo)), || {
            format!("shift {f} by {hi} vs {lo}")
        });
        if coefficientwise_ge(&f, &g) {
            c.case(fg, || format!("coefficientwise {f} / {g}"));
        }
    }
    c.finish()
}

/// `f >= g` implies `f(r) >= g(r)` for `r = 1..=10`.
pub fn dominance_implies_pointwise(pairs: usize, seed: u64) -> Check {
    let mut c = CheckBuilder::new(
        "dominance-implies-pointwise",
        format!(
            "{pairs} generated dominating pairs, r in 1..=10, seed {:#x}",
            seed + 1
        ),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed + 1);
    for _ in 0..pairs {
        let g = random_poly(&mut rng);
        let f = random_dominator(&g, &mut rng);
        if !f.dominates(&g) {
            c.fail(format!(
                "generator produced a non-dominating pair {f} / {g}"
            ));
            continue;
        }
        for r in 1..=10u64 {
            c.case(f.eval_u64(r) >= g.eval_u64(r), || {
                format!("{f} / {g} at r={r}")
            });
        }
    }
    c.finish()
}

/// `x^3 + 1` beats `x^2 + x` at every positive integer but does not dominate it.
pub fn converse_counterexample() -> Check {
    let mut c = CheckBuilder::new("converse-counterexample", "x^3+1 vs x^2+x, r in 1..=50");
    let f = PolyN::from_u64s(&[1, 0, 0, 1]);
    let g = PolyN::from_u64s(&[0, 1, 1]);
    c.case(!f.dominates(&g), || "x^3+1 dominates x^2+x".into());
    for r in 1..=50u64 {
        c.case(f.eval_u64(r) >= g.eval_u64(r), || format!("r={r}"));
    }
    c.finish()
}

/// `I_n <= H_n <= G_n` and `H_n + I_n <= F_n + G_n`.
pub fn family_ordering(n_max: usize) -> Check {
    let mut c = CheckBuilder::new("family-ordering", format!("n in 1..={n_max}"));
    for n in 1..=n_max {
        let (f, g) = (f_poly(n), g_poly(n));
        let (h, i) = (h_poly(n).expect("n >= 1"), i_poly(n).expect("n >= 1"));
        c.case(g.dominates(&h), || format!("G_{n} >= H_{n}"));
        c.case(h.dominates(&i), || format!("H_{n} >= I_{n}"));
        c.case((&f + &g).dominates(&(&h + &i)), || {
            format!("F_{n}+G_{n} >= H_{n}+I_{n}")
        });
    }
    c.finish()
}

/// `G_{n+1} >= 2x H_n + I_n`, `H_{n+1} >= F_n + 2 G_n`, `x F_n + G_n = I_{n+1}`.
pub fn family_successor_relations(n_max: usize) -> Check {
    let mut c = CheckBuilder::new("family-successor-relations", format!("n in 1..={n_max}"));
    for n in 1..=n_max {
        let (f, g) = (f_poly(n), g_poly(n));
        let (h, i) = (h_poly(n).expect("n >= 1"), i_poly(n).expect("n >= 1"));
        let g1 = g_poly(n + 1);
        let h1 = h_poly(n + 1).expect("n >= 1");
        let i1 = i_poly(n + 1).expect("n >= 1");
        c.case(g1.dominates(&(&h.scale(2).shift(1) + &i)), || {
            format!("G_{} >= 2xH_{n} + I_{n}", n + 1)
        });
        c.case(h1.dominates(&(&f + &g.scale(2))), || {
            format!("H_{} >= F_{n} + 2G_{n}", n + 1)
        });
        c.case(&f.shift(1) + &g == i1, || {
            format!("xF_{n} + G_{n} = I_{}", n + 1)
        });
    }
    c.finish()
}

/// Binomial closed forms against the recurrences.
pub fn family_recurrences(n_max: usize) -> Check {
    let mut c = CheckBuilder::new(
        "family-recurrences",
        format!("F,G: n in 0..={n_max}; H,I: n in 1..={n_max}"),
    );
    for n in 0..=n_max {
        let (f, g) = fg_recurrence(n);
        c.case(f == f_poly(n) && g == g_poly(n), || format!("F_{n}, G_{n}"));
        if n >= 1 {
            let (h, i) = hi_recurrence(n).expect("n >= 1");
            c.case(
                h == h_poly(n).expect("n >= 1") && i == i_poly(n).expect("n >= 1"),
                || format!("H_{n}, I_{n}"),
            );
        }
    }
    c.finish()
}

/// Left columns of `(L R)^n L` and `(R L)^n L` with `v = 1` are
/// `(F_n, G_n)` and `(H_n, I_n)`, also after evaluating at `u = 1..=5`.
pub fn family_matrix_agreement(n_max: usize) -> Check {
    let mut c = CheckBuilder::new(
        "family-matrix-agreement",
        format!("n in 1..={n_max}, u in 1..=5"),
    );
    for n in 1..=n_max {
        let mut lr = Word::from_letters(vec![Letter::L, Letter::R]).repeat(n);
        lr.push(Letter::L);
        let mut rl = Word::from_letters(vec![Letter::R, Letter::L]).repeat(n);
        rl.push(Letter::L);
        let (f, g) = (f_poly(n), g_poly(n));
        let (h, i) = (h_poly(n).expect("n >= 1"), i_poly(n).expect("n >= 1"));
        c.case(left_column_polys(&lr) == (f.clone(), g.clone()), || {
            format!("(LR)^{n}L")
        });
        c.case(left_column_polys(&rl) == (h.clone(), i.clone()), || {
            format!("(RL)^{n}L")
        });
        for u in 1..=5u64 {
            let q = MonoidParams::new(u, 1).expect("positive");
            let (m1, m2) = (word_to_matrix(&lr, q), word_to_matrix(&rl, q));
            let ok = m1.a == f.eval_u64(u)
                && m1.c == g.eval_u64(u)
                && m2.a == h.eval_u64(u)
                && m2.c == i.eval_u64(u);
            c.case(ok, || format!("n={n} u={u}"));
        }
    }
    c.finish()
}

/// `F_n(x^2)` is the Fibonacci polynomial of index `2n+1`.
pub fn fibonacci_polynomial_link(n_max: usize) -> Check {
    let mut c = CheckBuilder::new(
        "fibonacci-polynomial-link",
        format!("n in 0..={n_max}, index 2n+1"),
    );
    for n in 0..=n_max {
        let m = fibonacci_index_of_f(n);
        c.case(f_poly(n).compose_square() == fibonacci_poly(m), || {
            format!("n={n}")
        });
    }
    c.finish()
}

pub fn pascal_merge() -> Check {
    let mut c = CheckBuilder::new("pascal-merge", "a in 1..=10, b in 2a-2..=2a+8");
    for a in 1..=10usize {
        for b in 2 * a - 2..=2 * a + 8 {
            c.case(pascal_merge_check(a, b) == Ok(true), || {
                format!("a={a} b={b}")
            });
        }
    }
    c.finish()
}

pub fn hash_checks() -> Vec<Check> {
    vec![
        collision_free_below_horizon(),
        known_horizon(),
        determinant_preserved(),
        exact_below_modulus(),
        chunking_independence(),
    ]
}

fn hash_params(u: u64, v: u64, p: u64) -> HashParams {
    HashParams::new(u, v, BigUint::from(p)).expect("grid moduli are prime")
}

/// No two strings of length `<= n0` share a digest.
pub fn collision_free_below_horizon() -> Check {
    let mut c = CheckBuilder::new(
        "collision-free-below-horizon",
        format!("(u,v) in {HASH_UV:?}, p in {HASH_PRIMES:?}"),
    );
    for (u, v) in HASH_UV {
        for p in HASH_PRIMES {
            let params = hash_params(u, v, p);
            let n0 = bound_n0(&params);
            match exhaustive_collision_check(&params, n0 as u32, DEFAULT_COLLISION_LIMIT) {
                Ok(None) => c.case(true, String::new),
                Ok(Some((x, y))) => c.fail(format!("u={u} v={v} p={p} n0={n0}: {x} ~ {y}")),
                Err(e) => c.fail(format!("u={u} v={v} p={p} n0={n0}: {e}")),
            }
        }
    }
    c.finish()
}

pub fn known_horizon() -> Check {
    let mut c = CheckBuilder::new("known-horizon", "u=2 v=3 p=101 gives n0=4");
    let got = bound_n0(&hash_params(2, 3, 101));
    c.case(got == 4, || format!("n0={got}"));
    c.finish()
}

pub fn determinant_preserved() -> Check {
    let mut c = CheckBuilder::new(
        "determinant-preserved",
        "every prefix of 200 random strings of length 64, p=1009",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(POLY_SEED + 2);
    for (u, v) in HASH_UV {
        let params = hash_params(u, v, 1009);
        for _ in 0..50 {
            let mut st = HashState::init(&params);
            for _ in 0..64 {
                st.update_bit(rng.gen());
                c.case(st.det_is_one(), || {
                    format!("u={u} v={v} after {} bits", st.bits_consumed())
                });
            }
        }
    }
    c.finish()
}

/// With `p > mu(T; 16)` nothing reduces: every string of length `<= 16`
/// hashes to its exact product.
pub fn exact_below_modulus() -> Check {
    const LEN: u32 = 16;
    let mut c = CheckBuilder::new(
        "exact-below-modulus",
        format!("(u,v) in {HASH_UV:?}, all strings of length 0..={LEN}"),
    );
    for (u, v) in HASH_UV {
        let q = MonoidParams::new(u, v).expect("positive");
        let mut p = mu_depth(q, LEN as u64) + 1u32;
        while !crate::prime::is_probable_prime(&p) {
            p += 1u32;
        }
        let params = HashParams::new(u, v, p).expect("prime");
        // depth-first over strings, carrying the exact product and the state
        let mut stack = vec![(Mat2::identity(), HashState::init(&params), 0u32)];
        while let Some((m, st, len)) = stack.pop() {
            c.case(st.digest().to_mat2() == m, || {
                format!("u={u} v={v} len={len}")
            });
            if len < LEN {
                for bit in [false, true] {
                    let letter = if bit { Letter::R } else { Letter::L };
                    let mut next = st.clone();
                    next.update_bit(bit);
                    stack.push((&m * &letter.matrix(q), next, len + 1));
                }
            }
        }
    }
    c.finish()
}

/// Splitting the input at any boundary gives the one-shot digest.
pub fn chunking_independence() -> Check {
    let mut c = CheckBuilder::new(
        "chunking-independence",
        "100 random strings of length 0..=48, every split point, p=257",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(POLY_SEED + 3);
    let params = hash_params(2, 3, 257);
    for _ in 0..100 {
        let len = rng.gen_range(0..=48);
        let bits = BitString::new((0..len).map(|_| rng.gen()).collect());
        let whole = hash_string(&params, &bits);
        for split in 0..=len {
            let mut st = HashState::init(&params);
            st.update_bits(bits.bits()[..split].iter().copied());
            let mut resumed = st.clone();
            resumed.update_bits(bits.bits()[split..].iter().copied());
            c.case(resumed.digest() == whole, || {
                format!("{bits} split at {split}")
            });
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Formulas, Suite::Symmetry] {
            let r = run_suite(suite, 6, 6);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn report_format() {
        let r = Report {
            checks: vec![Check {
                name: "x".into(),
                range: "n in 0..=1".into(),
                passed: false,
                detail: "first failure: n=1".into(),
            }],
        };
        assert_eq!(
            r.to_string(),
            "FAIL x [n in 0..=1] first failure: n=1\n1 checks, 1 failed"
        );
        assert!(!r.passed());
    }
}

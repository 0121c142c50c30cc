//! Cross-checking suites: every closed-form quantity is recomputed by an
//! independent exhaustive route and compared, over enumerated, constructed,
//! and seeded-random corpora.
//!
//! Suites return structured results instead of printing; the CLI `verify`
//! command and the acceptance tests are thin wrappers over this module.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::burning::{
    build_h3l, build_hl, is_lazy_burning_set, min_lazy_burning_set, min_lbs_complement_search,
};
use crate::chains::{
    chain_to_cover_sequence, cover_sequence_to_chain, mcs_exhaustive, peel_ordering, scc,
    scc_bounds, square_invariants, validate_cover_sequence, PeelOutcome, Strictness,
};
use crate::groups::{
    cayley_square, coset_columns_predicate, dihedral, direct_product, min_generating_size, sym, z,
    z2_pow, FiniteGroup,
};
use crate::latin::{
    cyclic, enumerate_all, intercalate_power, random_square, serialize, Entry, LatinSquare, LineRef,
};

/// Knobs for the suites. Defaults match the full verification run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Largest order enumerated exhaustively (2..=5; 5 uses the override).
    pub max_order: usize,
    /// Largest cyclic order checked.
    pub cyclic_max: usize,
    /// Largest intercalate power checked.
    pub ipow_max: usize,
    /// Number of random subsets in the characterization suite.
    pub samples: usize,
    /// Base seed for every randomized corpus.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: 4,
            cyclic_max: 16,
            ipow_max: 3,
            samples: 1000,
            seed: 0x5EED,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub message: String,
    /// The offending square in `.ls` form, when one is involved.
    pub square: Option<String>,
    pub witness: serde_json::Value,
}

impl Failure {
    fn new(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            square: None,
            witness: serde_json::Value::Null,
        }
    }

    fn with_square(mut self, sq: &LatinSquare) -> Self {
        self.square = Some(serialize(sq));
        self
    }

    fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = witness;
        self
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn wrap(name: &'static str, inner: impl FnOnce() -> Result<usize, Failure>) -> SuiteResult {
    match inner() {
        Ok(checks) => SuiteResult {
            name,
            checks,
            failures: Vec::new(),
        },
        Err(failure) => SuiteResult {
            name,
            checks: 0,
            failures: vec![failure],
        },
    }
}

/// Every suite, in the canonical order.
pub fn all_suites(opts: &VerifyOptions) -> Vec<SuiteResult> {
    vec![
        suite_exhaustive(opts),
        suite_order_five(opts),
        suite_cyclic(opts),
        suite_intercalates(opts),
        suite_bounds(opts),
        suite_characterization(opts),
        suite_examples(),
        suite_groups(opts),
        suite_roundtrips(opts),
    ]
}

/// Every square of order up to `max_order`: the burning oracles on both
/// hypergraphs, the exhaustive `mcs`, and the complement search must all
/// agree with the `scc`-derived formulas (order 1 uses its special-cased
/// values).
pub fn suite_exhaustive(opts: &VerifyOptions) -> SuiteResult {
    let max_order = opts.max_order.clamp(1, 4);
    wrap("exhaustive-small-orders", move || {
        let mut checks = 0;
        for n in 1..=max_order {
            let squares = enumerate_all(n, false).expect("guarded order");
            for sq in squares {
                checks += check_square_exhaustively(&sq)?;
            }
        }
        Ok(checks)
    })
}

fn check_square_exhaustively(sq: &LatinSquare) -> Result<usize, Failure> {
    let n = sq.order();
    let inv = square_invariants(sq);
    let hl = build_hl(sq);
    let h3l = build_h3l(sq);
    let (hl_size, _) = min_lazy_burning_set(&hl, 0, n * n).expect("full range");
    let (h3l_size, _) = min_lazy_burning_set(&h3l, 0, 3 * n).expect("full range");
    let (mcs_size, _) = mcs_exhaustive(sq, false).expect("guarded order");
    let (complement_size, _) = min_lbs_complement_search(sq, false).expect("guarded order");

    let fail = |what: &str, got: usize, want: usize| {
        Err(
            Failure::new(format!("{}: got {}, expected {}", what, got, want))
                .with_square(sq)
                .with_witness(json!({
                    "scc": inv.scc,
                    "hl_oracle": hl_size,
                    "h3l_oracle": h3l_size,
                    "mcs_oracle": mcs_size,
                    "complement_oracle": complement_size,
                })),
        )
    };

    if hl_size != inv.bl_hl {
        return fail("b_L(H_L) oracle vs formula", hl_size, inv.bl_hl);
    }
    if h3l_size != inv.bl_h3l {
        return fail("b_L(H^L) oracle vs formula", h3l_size, inv.bl_h3l);
    }
    if mcs_size != inv.mcs {
        return fail("mcs oracle vs formula", mcs_size, inv.mcs);
    }
    if complement_size != hl_size {
        return fail(
            "complement search vs subset search",
            complement_size,
            hl_size,
        );
    }
    if n == 1 {
        // the closed forms (and the duality they imply) start at order 2
        return Ok(4);
    }
    if hl_size + 3 * n != h3l_size + n * n {
        return fail(
            "duality b_L(H_L) - n^2 = b_L(H^L) - 3n",
            hl_size,
            h3l_size + n * n - 3 * n,
        );
    }
    Ok(5)
}

/// Order-5 spot check: the cyclic square, the worked 5x5 example, and ten
/// seeded random squares, via the complement search and the `H^L` oracle.
pub fn suite_order_five(opts: &VerifyOptions) -> SuiteResult {
    let seed = opts.seed;
    wrap("order-5-spot-check", move || {
        let mut corpus = vec![cyclic(5).expect("valid order"), examples::square_order5()];
        for i in 0..10 {
            corpus.push(random_square(5, seed.wrapping_add(i)).expect("valid order"));
        }
        let mut checks = 0;
        for sq in &corpus {
            let alpha = scc(sq).expect("order 5").0;
            let (hl_size, _) = min_lbs_complement_search(sq, false).expect("guarded order");
            let want_hl = 25 - 15 + 1 + alpha;
            if hl_size != want_hl {
                return Err(Failure::new(format!(
                    "complement search gave {}, formula {}",
                    hl_size, want_hl
                ))
                .with_square(sq));
            }
            let (h3l_size, _) = min_lazy_burning_set(&build_h3l(sq), 0, 15).expect("full range");
            if h3l_size != alpha + 1 {
                return Err(Failure::new(format!(
                    "H^L oracle gave {}, formula {}",
                    h3l_size,
                    alpha + 1
                ))
                .with_square(sq));
            }
            checks += 2;
        }
        Ok(checks)
    })
}

/// `scc(cyclic(n)) = 2` and `b_L(H_L) = n^2 - 3n + 3` for each order.
pub fn suite_cyclic(opts: &VerifyOptions) -> SuiteResult {
    let max = opts.cyclic_max.max(2);
    wrap("cyclic-family", move || {
        let mut checks = 0;
        for n in 2..=max {
            let sq = cyclic(n).expect("valid order");
            let inv = square_invariants(&sq);
            if inv.scc != 2 {
                return Err(
                    Failure::new(format!("scc(cyclic({})) = {}, expected 2", n, inv.scc))
                        .with_square(&sq),
                );
            }
            if inv.bl_hl != n * n + 3 - 3 * n {
                return Err(Failure::new(format!(
                    "b_L(H_L) formula at cyclic({}) gave {}",
                    n, inv.bl_hl
                ))
                .with_square(&sq));
            }
            checks += 2;
        }
        Ok(checks)
    })
}

/// `scc(I^k) = k + 1`, and the `H^L` oracle returns `k + 2`.
pub fn suite_intercalates(opts: &VerifyOptions) -> SuiteResult {
    let max = opts.ipow_max.clamp(1, 3);
    wrap("intercalate-powers", move || {
        let mut checks = 0;
        for k in 1..=max {
            let sq = intercalate_power(k).expect("valid power");
            let alpha = scc(&sq).expect("order >= 2").0;
            if alpha != k + 1 {
                return Err(
                    Failure::new(format!("scc(I^{}) = {}, expected {}", k, alpha, k + 1))
                        .with_square(&sq),
                );
            }
            let (h3l_size, _) =
                min_lazy_burning_set(&build_h3l(&sq), 0, 3 * sq.order()).expect("full range");
            if h3l_size != k + 2 {
                return Err(Failure::new(format!(
                    "H^L oracle at I^{} gave {}, expected {}",
                    k,
                    h3l_size,
                    k + 2
                ))
                .with_square(&sq));
            }
            checks += 2;
        }
        Ok(checks)
    })
}

/// `2 <= scc <= floor(log2 n) + 1` across every corpus the other suites
/// touch.
pub fn suite_bounds(opts: &VerifyOptions) -> SuiteResult {
    let opts = opts.clone();
    wrap("scc-bounds", move || {
        let mut corpus: Vec<LatinSquare> = Vec::new();
        for n in 2..=opts.max_order.clamp(2, 4) {
            corpus.extend(enumerate_all(n, false).expect("guarded order"));
        }
        corpus.push(examples::square_order5());
        for i in 0..10 {
            corpus.push(random_square(5, opts.seed.wrapping_add(i)).expect("valid order"));
        }
        for n in 2..=opts.cyclic_max.max(2) {
            corpus.push(cyclic(n).expect("valid order"));
        }
        for k in 1..=opts.ipow_max.clamp(1, 3) {
            corpus.push(intercalate_power(k).expect("valid power"));
        }
        let mut checks = 0;
        for sq in &corpus {
            let alpha = scc(sq).expect("order >= 2").0;
            let (lo, hi) = scc_bounds(sq.order()).expect("order >= 2");
            if alpha < lo || alpha > hi {
                return Err(Failure::new(format!(
                    "scc = {} outside [{}, {}] at order {}",
                    alpha,
                    lo,
                    hi,
                    sq.order()
                ))
                .with_square(sq));
            }
            checks += 1;
        }
        Ok(checks)
    })
}

/// Seeded-random subsets `M` of `E(L)`: burning completeness of `M` must
/// coincide with peelability of the complement, and (for complements of at
/// most 8 entries) with an exhaustive search over orderings.
pub fn suite_characterization(opts: &VerifyOptions) -> SuiteResult {
    let opts = opts.clone();
    wrap("peel-characterization", move || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut checks = 0;
        for _ in 0..opts.samples {
            let n = rng.gen_range(3..=5usize);
            let sq = random_square(n, rng.gen()).expect("valid order");
            let seed_entries: Vec<Entry> = sq.entries().filter(|_| rng.gen_bool(0.5)).collect();
            let target: Vec<Entry> = sq.entries().filter(|e| !seed_entries.contains(e)).collect();

            let hl = build_hl(&sq);
            let seed_vertices: Vec<usize> =
                seed_entries.iter().map(|e| sq.entry_vertex(e)).collect();
            let complete = is_lazy_burning_set(&hl, &seed_vertices).expect("in range");
            let peeled = matches!(
                peel_ordering(&sq, &target).expect("valid entries"),
                PeelOutcome::Ordered(_)
            );
            if complete != peeled {
                return Err(Failure::new(format!(
                    "burn completeness {} but peel {}",
                    complete, peeled
                ))
                .with_square(&sq)
                .with_witness(json!({ "seed": seed_entries })));
            }
            checks += 1;
            if target.len() <= 8 {
                let orderable = exists_weak_ordering(&sq, &target);
                if complete != orderable {
                    return Err(Failure::new(format!(
                        "burn completeness {} but permutation oracle {}",
                        complete, orderable
                    ))
                    .with_square(&sq)
                    .with_witness(json!({ "target": target })));
                }
                checks += 1;
            }
        }
        Ok(checks)
    })
}

/// Exhaustive search over orderings of `target` for a weak cover-sequence.
/// Prefixes are pruned as soon as the next entry would have weight 0, which
/// is exact because weights only decrease along a sequence.
fn exists_weak_ordering(sq: &LatinSquare, target: &[Entry]) -> bool {
    fn go(remaining: &mut Vec<Entry>, covered: &mut [Vec<bool>; 3]) -> bool {
        if remaining.is_empty() {
            return true;
        }
        for i in 0..remaining.len() {
            let e = remaining[i];
            let fresh = [!covered[0][e.row], !covered[1][e.col], !covered[2][e.sym]];
            if fresh.iter().all(|&b| !b) {
                continue;
            }
            for (k, coord) in [e.row, e.col, e.sym].into_iter().enumerate() {
                covered[k][coord] = true;
            }
            remaining.swap_remove(i);
            if go(remaining, covered) {
                return true;
            }
            remaining.push(e);
            let last = remaining.len() - 1;
            remaining.swap(i, last);
            for (k, coord) in [e.row, e.col, e.sym].into_iter().enumerate() {
                if fresh[k] {
                    covered[k][coord] = false;
                }
            }
        }
        false
    }
    let n = sq.order();
    let mut covered = [vec![false; n], vec![false; n], vec![false; n]];
    go(&mut target.to_vec(), &mut covered)
}

/// The two curated worked examples: the order-3 burn trace and the order-5
/// square with its known minimum seed, non-minimum seed, and 11-entry
/// cover-sequence.
pub fn suite_examples() -> SuiteResult {
    wrap("worked-examples", || {
        let mut checks = 0;

        // order-3 trace
        let sq3 = examples::square_order3();
        let hl3 = build_hl(&sq3);
        let seed: Vec<usize> = examples::seed_order3()
            .iter()
            .map(|e| sq3.entry_vertex(e))
            .collect();
        let trace = crate::burning::lazy_burn(&hl3, &seed).expect("in range");
        if !(trace.complete && trace.rounds_executed() == 2) {
            return Err(Failure::new("order-3 trace should finish in 2 rounds").with_square(&sq3));
        }
        let round1: Vec<Entry> = trace.rounds[0]
            .iter()
            .map(|&v| sq3.vertex_entry(v))
            .collect();
        let expected1 = vec![
            Entry::new(0, 2, 2),
            Entry::new(2, 0, 2),
            Entry::new(2, 2, 1),
        ];
        if round1 != expected1 {
            return Err(Failure::new(format!("first round burned {:?}", round1)).with_square(&sq3));
        }
        checks += 2;

        // order-5 square
        let sq5 = examples::square_order5();
        let hl5 = build_hl(&sq5);
        let min_seed = examples::min_seed_order5();
        let min_vertices: Vec<usize> = min_seed.iter().map(|e| sq5.entry_vertex(e)).collect();
        if !is_lazy_burning_set(&hl5, &min_vertices).expect("in range") {
            return Err(Failure::new("the 13-entry seed should burn").with_square(&sq5));
        }
        let (best, _) = min_lbs_complement_search(&sq5, false).expect("guarded order");
        if best != min_seed.len() {
            return Err(Failure::new(format!(
                "minimum seed size is {}, the example has {}",
                best,
                min_seed.len()
            ))
            .with_square(&sq5));
        }
        for skip in 0..min_vertices.len() {
            let reduced: Vec<usize> = min_vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| *v)
                .collect();
            if is_lazy_burning_set(&hl5, &reduced).expect("in range") {
                return Err(Failure::new("the 13-entry seed should be minimal").with_square(&sq5));
            }
        }
        checks += 3;

        let nonmin: Vec<usize> = examples::nonmin_seed_order5()
            .iter()
            .map(|e| sq5.entry_vertex(e))
            .collect();
        if !is_lazy_burning_set(&hl5, &nonmin).expect("in range") {
            return Err(Failure::new("the 14-entry seed should burn").with_square(&sq5));
        }
        checks += 1;

        let seq =
            validate_cover_sequence(&sq5, &examples::cover_sequence_order5(), Strictness::Strict)
                .map_err(|e| Failure::new(format!("11-entry sequence invalid: {}", e)))?;
        if seq.len() != 11 {
            return Err(Failure::new("expected an 11-entry sequence"));
        }
        // the non-minimum seed is exactly the complement of the sequence
        let complement =
            crate::chains::lbs_from_weak_cover_sequence(&sq5, &examples::cover_sequence_order5())
                .expect("sequence is weak-valid");
        let mut expected = examples::nonmin_seed_order5();
        expected.sort();
        if complement != expected {
            return Err(
                Failure::new("complement of the sequence should be the 14-entry seed")
                    .with_square(&sq5),
            );
        }
        checks += 2;
        Ok(checks)
    })
}

fn group_corpus() -> Vec<(String, FiniteGroup)> {
    let mut groups: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 1..=12 {
        groups.push((format!("Z{}", n), z(n).expect("valid order")));
    }
    for k in 1..=3 {
        groups.push((format!("Z2^{}", k), z2_pow(k).expect("valid power")));
    }
    groups.push((
        "Z2xZ4".into(),
        direct_product(&z(2).expect("valid"), &z(4).expect("valid")),
    ));
    groups.push(("S3".into(), sym(3).expect("valid")));
    groups.push(("D4".into(), dihedral(4).expect("valid")));
    groups
}

/// `scc(L(G)) = alpha + 1` for the whole group corpus, the `H^L` oracle at
/// `alpha + 2` for orders up to 8, and 200 random coset-formula checks.
pub fn suite_groups(opts: &VerifyOptions) -> SuiteResult {
    let seed = opts.seed;
    wrap("group-suite", move || {
        let mut checks = 0;
        for (name, group) in group_corpus() {
            let alpha = min_generating_size(&group, false).expect("guarded order").0;
            let square = cayley_square(&group);
            let found = square_invariants(&square).scc;
            if found != alpha + 1 {
                return Err(Failure::new(format!(
                    "scc(L({})) = {}, expected alpha + 1 = {}",
                    name,
                    found,
                    alpha + 1
                ))
                .with_square(&square));
            }
            checks += 1;
            if group.order() <= 8 {
                let (h3l_size, _) = min_lazy_burning_set(&build_h3l(&square), 0, 3 * group.order())
                    .expect("full range");
                if h3l_size != alpha + 2 {
                    return Err(Failure::new(format!(
                        "b_L(H^L) oracle at L({}) = {}, expected {}",
                        name,
                        h3l_size,
                        alpha + 2
                    ))
                    .with_square(&square));
                }
                checks += 1;
            }
        }

        // coset-formula samples over groups of order at most 16
        let mut pool: Vec<(String, FiniteGroup)> = Vec::new();
        for n in 2..=16 {
            pool.push((format!("Z{}", n), z(n).expect("valid order")));
        }
        for k in 2..=4 {
            pool.push((format!("Z2^{}", k), z2_pow(k).expect("valid power")));
        }
        let z2 = z(2).expect("valid");
        let z3 = z(3).expect("valid");
        let z4 = z(4).expect("valid");
        let z8 = z(8).expect("valid");
        pool.push(("Z2xZ4".into(), direct_product(&z2, &z4)));
        pool.push(("Z2xZ8".into(), direct_product(&z2, &z8)));
        pool.push(("Z4xZ4".into(), direct_product(&z4, &z4)));
        pool.push(("Z3xZ3".into(), direct_product(&z3, &z3)));
        pool.push(("S3".into(), sym(3).expect("valid")));
        pool.push(("D4".into(), dihedral(4).expect("valid")));
        pool.push(("D5".into(), dihedral(5).expect("valid")));
        pool.push(("D6".into(), dihedral(6).expect("valid")));

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9E3779B97F4A7C15);
        for _ in 0..200 {
            let (name, group) = &pool[rng.gen_range(0..pool.len())];
            let n = group.order();
            let r = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            let mut admissible: Vec<LineRef> = Vec::new();
            for i in 0..n {
                if i != r {
                    admissible.push(LineRef::row(i));
                }
                if i != c {
                    admissible.push(LineRef::col(i));
                }
                admissible.push(LineRef::sym(i));
            }
            let want = rng.gen_range(1..=3usize).min(admissible.len());
            let mut lines: Vec<LineRef> = Vec::with_capacity(want);
            while lines.len() < want {
                let pick = admissible[rng.gen_range(0..admissible.len())];
                if !lines.contains(&pick) {
                    lines.push(pick);
                }
            }
            let outcome = coset_columns_predicate(group, r, c, &lines).expect("valid sample");
            if !outcome.check {
                return Err(Failure::new(format!(
                    "coset formula mismatch on {} with r={}, c={}, lines {:?}",
                    name, r, c, lines
                ))
                .with_square(&cayley_square(group))
                .with_witness(json!({
                    "predicted_cols": outcome.predicted_cols,
                    "closure_cols": outcome.closure_cols,
                })));
            }
            checks += 1;
        }
        Ok(checks)
    })
}

/// Chain-to-sequence and sequence-to-chain round trips over the cyclic and
/// intercalate corpora: lengths, weight profiles, and recovered chain
/// lengths must match the closed forms.
pub fn suite_roundtrips(opts: &VerifyOptions) -> SuiteResult {
    let opts = opts.clone();
    wrap("chain-roundtrips", move || {
        let mut corpus: Vec<LatinSquare> = Vec::new();
        for n in 2..=opts.cyclic_max.max(2) {
            corpus.push(cyclic(n).expect("valid order"));
        }
        for k in 1..=opts.ipow_max.clamp(1, 3) {
            corpus.push(intercalate_power(k).expect("valid power"));
        }
        let mut checks = 0;
        for sq in &corpus {
            let n = sq.order();
            let (alpha, chain) = scc(sq).expect("order >= 2");
            let seq = chain_to_cover_sequence(sq, &chain)
                .map_err(|e| Failure::new(format!("expansion failed: {}", e)).with_square(sq))?;
            if !seq.is_strict() || seq.len() != 3 * n - 1 - alpha {
                return Err(Failure::new(format!(
                    "expanded sequence has length {} (strict: {}), expected {}",
                    seq.len(),
                    seq.is_strict(),
                    3 * n - 1 - alpha
                ))
                .with_square(sq));
            }
            let mut weights = seq.weights().to_vec();
            weights.sort_unstable();
            let mut expected = vec![1usize; seq.len() - alpha];
            expected.extend(std::iter::repeat_n(2, alpha - 1));
            expected.push(3);
            if weights != expected {
                return Err(
                    Failure::new(format!("weight profile {:?}", seq.weights())).with_square(sq)
                );
            }
            let back = cover_sequence_to_chain(sq, &seq)
                .map_err(|e| Failure::new(format!("contraction failed: {}", e)).with_square(sq))?;
            if back.length() != alpha {
                return Err(Failure::new(format!(
                    "recovered chain has length {}, expected {}",
                    back.length(),
                    alpha
                ))
                .with_square(sq));
            }
            checks += 3;
        }
        Ok(checks)
    })
}

/// Frozen data for the worked examples.
pub mod examples {
    use super::*;

    /// The order-3 square whose burn trace is checked cell by cell (it is
    /// the cyclic square).
    pub fn square_order3() -> LatinSquare {
        cyclic(3).expect("valid order")
    }

    /// Seed cells (0,0), (0,1), (1,0) of the order-3 square.
    pub fn seed_order3() -> Vec<Entry> {
        let sq = square_order3();
        vec![sq.entry_at(0, 0), sq.entry_at(0, 1), sq.entry_at(1, 0)]
    }

    /// A 5x5 square with a known minimum lazy burning set of size 13.
    pub fn square_order5() -> LatinSquare {
        LatinSquare::new(
            5,
            &[
                vec![0, 1, 2, 3, 4],
                vec![1, 3, 0, 4, 2],
                vec![2, 4, 3, 1, 0],
                vec![3, 0, 4, 2, 1],
                vec![4, 2, 1, 0, 3],
            ],
        )
        .expect("the example square is Latin")
    }

    /// The 13-entry minimum lazy burning set of [`square_order5`]: cell
    /// (0,0) plus the first four cells of rows 2, 3, and 4.
    pub fn min_seed_order5() -> Vec<Entry> {
        let sq = square_order5();
        let mut seed = vec![sq.entry_at(0, 0)];
        for r in 2..5 {
            for c in 0..4 {
                seed.push(sq.entry_at(r, c));
            }
        }
        seed
    }

    /// The 14-entry non-minimum lazy burning set: the minimum set plus
    /// cell (0,2).
    pub fn nonmin_seed_order5() -> Vec<Entry> {
        let sq = square_order5();
        let mut seed = min_seed_order5();
        seed.push(sq.entry_at(0, 2));
        seed
    }

    /// The 11-entry strict cover-sequence whose complement is the 14-entry
    /// seed, in sequence order.
    pub fn cover_sequence_order5() -> Vec<Entry> {
        let sq = square_order5();
        [
            (0, 3),
            (1, 3),
            (1, 1),
            (0, 1),
            (0, 4),
            (1, 0),
            (1, 2),
            (1, 4),
            (2, 4),
            (3, 4),
            (4, 4),
        ]
        .into_iter()
        .map(|(r, c)| sq.entry_at(r, c))
        .collect()
    }
}

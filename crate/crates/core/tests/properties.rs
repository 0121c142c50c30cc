//! Cross-module property tests over seeded-random squares.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use latinburn::burning::{
    build_h3l, build_hl, is_lazy_burning_set, lazy_burn, min_lbs_complement_search, BurnTrace,
    Hypergraph,
};
use latinburn::chains::{chain_to_cover_sequence, closure, cover_sequence_from_lbs, scc};
use latinburn::latin::{parse, random_square, serialize, LineRef, Subsquare};

/// Checks the trace invariants: seeds are exactly the round-0 vertices, and
/// a vertex burned in round `r >= 1` has a hyperedge whose other members
/// all burned before `r`, with no such edge already satisfied before
/// `r - 1`.
fn assert_trace_invariants(h: &Hypergraph, trace: &BurnTrace) {
    for (v, round) in trace.round_of.iter().enumerate() {
        match round {
            Some(0) => assert!(trace.seed.contains(&v)),
            Some(r) => {
                assert!(!trace.seed.contains(&v));
                let supported = |cutoff: u32| {
                    h.incident_edges(v).iter().any(|&e| {
                        h.edge(e).len() >= 2
                            && h.edge(e)
                                .iter()
                                .filter(|&&u| u != v)
                                .all(|&u| matches!(trace.round_of[u], Some(s) if s < cutoff))
                    })
                };
                assert!(supported(*r), "vertex {} lacks a supporting edge", v);
                assert!(
                    !supported(*r - 1),
                    "vertex {} should have burned earlier",
                    v
                );
            }
            None => assert!(!trace.complete),
        }
    }
}

/// Burns one eligible vertex at a time in a randomized order; the final
/// burned set must match the synchronous engine's.
fn async_burned_set(h: &Hypergraph, seed: &[usize], order_seed: u64) -> Vec<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(order_seed);
    let mut burned = vec![false; h.vertex_count()];
    for &v in seed {
        burned[v] = true;
    }
    loop {
        let mut eligible: Vec<usize> = (0..h.vertex_count())
            .filter(|&v| {
                !burned[v]
                    && h.incident_edges(v).iter().any(|&e| {
                        h.edge(e).len() >= 2 && h.edge(e).iter().all(|&u| u == v || burned[u])
                    })
            })
            .collect();
        if eligible.is_empty() {
            return burned;
        }
        eligible.shuffle(&mut rng);
        burned[eligible[0]] = true;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_serialize_round_trip(n in 1usize..=6, seed: u64) {
        let sq = random_square(n, seed).unwrap();
        prop_assert_eq!(parse(&serialize(&sq)).unwrap(), sq);
    }

    #[test]
    fn burning_is_monotone_in_the_seed(n in 2usize..=4, seed: u64, extra in 0usize..16) {
        let sq = random_square(n, seed).unwrap();
        let h = build_hl(&sq);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xABCD);
        let small: Vec<usize> = (0..n * n).filter(|_| rng.gen_bool(0.3)).collect();
        let mut large = small.clone();
        large.push(extra % (n * n));
        let t1 = lazy_burn(&h, &small).unwrap();
        let t2 = lazy_burn(&h, &large).unwrap();
        for v in 0..n * n {
            if let Some(r1) = t1.round_of[v] {
                // everything the small seed burns, the larger seed burns
                // no later
                let r2 = t2.round_of[v];
                prop_assert!(matches!(r2, Some(r2) if r2 <= r1));
            }
        }
    }

    #[test]
    fn synchronous_and_asynchronous_burns_agree(n in 2usize..=4, seed: u64) {
        let sq = random_square(n, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(!seed);
        for h in [build_hl(&sq), build_h3l(&sq)] {
            let seeds: Vec<usize> =
                (0..h.vertex_count()).filter(|_| rng.gen_bool(0.4)).collect();
            let trace = lazy_burn(&h, &seeds).unwrap();
            assert_trace_invariants(&h, &trace);
            let burned = async_burned_set(&h, &seeds, seed.wrapping_mul(31));
            for (v, &async_burned) in burned.iter().enumerate() {
                prop_assert_eq!(trace.round_of[v].is_some(), async_burned);
            }
        }
    }

    #[test]
    fn closure_matches_h3l_burning(n in 2usize..=5, seed: u64, picks in prop::collection::vec(0usize..1000, 2..5)) {
        let sq = random_square(n, seed).unwrap();
        // random lines spanning at least two kinds
        let mut lines: Vec<LineRef> = picks
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let index = p % n;
                match (p / n + i) % 3 {
                    0 => LineRef::row(index),
                    1 => LineRef::col(index),
                    _ => LineRef::sym(index),
                }
            })
            .collect();
        lines.sort();
        lines.dedup();
        prop_assume!(lines.iter().map(|l| l.kind).collect::<std::collections::BTreeSet<_>>().len() >= 2);

        let closed = closure(&sq, &Subsquare::empty(), &lines).unwrap();
        prop_assert!(closed.is_subsquare_of(&sq));

        let h = build_h3l(&sq);
        let seed_vertices: Vec<usize> = lines.iter().map(|l| l.vertex_index(n)).collect();
        let trace = lazy_burn(&h, &seed_vertices).unwrap();
        let burned_lines: Vec<usize> = (0..3 * n).filter(|&v| trace.round_of[v].is_some()).collect();
        let closed_lines: Vec<usize> =
            closed.lines().iter().map(|l| l.vertex_index(n)).collect();
        prop_assert_eq!(burned_lines, closed_lines);
    }

    #[test]
    fn minimum_witnesses_yield_strict_sequences(n in 2usize..=4, seed: u64) {
        let sq = random_square(n, seed).unwrap();
        let (size, witness) = min_lbs_complement_search(&sq, false).unwrap();
        prop_assert_eq!(size, witness.len());
        let seq = cover_sequence_from_lbs(&sq, &witness).unwrap();
        prop_assert!(seq.is_strict());
        prop_assert_eq!(seq.len() + size, n * n);
        // the whole entry set is a (non-minimal) burning set with an empty,
        // weak-only sequence
        let full: Vec<_> = sq.entries().collect();
        let empty_seq = cover_sequence_from_lbs(&sq, &full).unwrap();
        prop_assert!(empty_seq.is_empty() && !empty_seq.is_strict());
    }

    #[test]
    fn chain_seed_lines_burn_h3l(n in 2usize..=6, seed: u64) {
        let sq = random_square(n, seed).unwrap();
        let (alpha, chain) = scc(&sq).unwrap();
        let h = build_h3l(&sq);
        let seeds: Vec<usize> =
            chain.seed_lines(&sq).iter().map(|l| l.vertex_index(n)).collect();
        prop_assert_eq!(seeds.len(), alpha + 1);
        prop_assert!(is_lazy_burning_set(&h, &seeds).unwrap());
    }

    #[test]
    fn chain_expansion_length_identity(n in 2usize..=6, seed: u64) {
        let sq = random_square(n, seed).unwrap();
        let (alpha, chain) = scc(&sq).unwrap();
        let seq = chain_to_cover_sequence(&sq, &chain).unwrap();
        prop_assert_eq!(seq.len() + alpha, 3 * n - 1);
    }
}

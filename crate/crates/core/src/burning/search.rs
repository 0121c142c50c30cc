//! Exhaustive minimum lazy-burning-set oracles.
//!
//! Two independent routes are provided for `H_L`: a direct subset search
//! over seeds by increasing cardinality, and a complement search that
//! maximizes the length of a weak cover-sequence (the peelable complement
//! of a burning set). They must agree wherever both run.

use std::collections::HashMap;

use crate::latin::{Entry, LatinSquare};

use super::{BurnChecker, BurnError, Hypergraph};

/// Largest order accepted by [`min_lbs_complement_search`] without the
/// override flag.
pub const COMPLEMENT_GUARD: usize = 5;
// Line-coverage states are packed into a u64, which caps the order at 21
// even with the override.
const COMPLEMENT_HARD_CAP: usize = 21;

/// Exhaustive search for the smallest lazy burning set of `h`, scanning
/// subset cardinalities from `lower` to `upper` and, within a cardinality,
/// subsets in lexicographic vertex order. Returns the minimum size and the
/// lexicographically least witness of that size.
pub fn min_lazy_burning_set(
    h: &Hypergraph,
    lower: usize,
    upper: usize,
) -> Result<(usize, Vec<usize>), BurnError> {
    let n = h.vertex_count();
    if lower > upper || upper > n {
        return Err(BurnError::InvalidBounds {
            lower,
            upper,
            vertices: n,
        });
    }
    let mut checker = BurnChecker::new(h);
    for k in lower..=upper {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            if checker.burns_completely(&comb) {
                return Ok((k, comb));
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    Err(BurnError::NoSolutionInRange { upper })
}

/// Advances `comb` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] != i + n - k {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Computes `b_L(H_L)` without burning: searches for a maximum subset of
/// `E(L)` that admits a weak-cover-sequence ordering and returns
/// `n^2 - (that maximum)` together with the complement as a witness seed.
///
/// The search is a depth-first sequence extension memoized on the set of
/// covered lines. An entry extends a sequence exactly when it still covers
/// a new line, so the reachable sequence lengths depend only on that set.
pub fn min_lbs_complement_search(
    sq: &LatinSquare,
    override_guard: bool,
) -> Result<(usize, Vec<Entry>), BurnError> {
    let n = sq.order();
    if !override_guard && n > COMPLEMENT_GUARD {
        return Err(BurnError::OrderTooLarge {
            order: n,
            guard: COMPLEMENT_GUARD,
        });
    }
    if n > COMPLEMENT_HARD_CAP {
        return Err(BurnError::OrderTooLarge {
            order: n,
            guard: COMPLEMENT_HARD_CAP,
        });
    }
    if n == 1 {
        // the peel characterization fails at order 1: the lone entry forms
        // a weak cover-sequence but never burns by propagation
        return Ok((1, vec![sq.entry_at(0, 0)]));
    }

    let entries: Vec<Entry> = sq.entries().collect();
    let masks: Vec<u64> = entries.iter().map(|e| entry_mask(e, n)).collect();
    let mut search = WeakSequenceSearch {
        masks: &masks,
        memo: HashMap::new(),
    };
    let longest = search.longest(0);

    // reconstruct one maximum peel in row-major preference order
    let mut state = 0u64;
    let mut remaining = longest;
    let mut peeled = vec![false; entries.len()];
    while remaining > 0 {
        let pick = (0..entries.len())
            .find(|&i| masks[i] & !state != 0 && search.longest(state | masks[i]) == remaining - 1)
            .expect("memoized optimum is achievable");
        peeled[pick] = true;
        state |= masks[pick];
        remaining -= 1;
    }

    let witness: Vec<Entry> = entries
        .iter()
        .enumerate()
        .filter(|(i, _)| !peeled[*i])
        .map(|(_, e)| *e)
        .collect();
    Ok((witness.len(), witness))
}

pub(crate) fn entry_mask(e: &Entry, n: usize) -> u64 {
    (1 << e.row) | (1 << (n + e.col)) | (1 << (2 * n + e.sym))
}

struct WeakSequenceSearch<'a> {
    masks: &'a [u64],
    memo: HashMap<u64, u32>,
}

impl WeakSequenceSearch<'_> {
    /// Maximum number of further entries a weak cover-sequence with covered
    /// lines `state` can still take.
    fn longest(&mut self, state: u64) -> u32 {
        if let Some(&v) = self.memo.get(&state) {
            return v;
        }
        let mut best = 0;
        for i in 0..self.masks.len() {
            if self.masks[i] & !state != 0 {
                best = best.max(1 + self.longest(state | self.masks[i]));
            }
        }
        self.memo.insert(state, best);
        best
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_h3l, build_hl, is_lazy_burning_set};
    use super::*;
    use crate::latin::{cyclic, intercalate_power};

    #[test]
    fn minimum_seed_of_order_3_hl_is_3() {
        let h = build_hl(&cyclic(3).unwrap());
        let (size, witness) = min_lazy_burning_set(&h, 0, 9).unwrap();
        assert_eq!(size, 3);
        assert!(is_lazy_burning_set(&h, &witness).unwrap());
        // removing any vertex of a minimum witness breaks it
        for skip in 0..witness.len() {
            let reduced: Vec<usize> = witness
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| *v)
                .collect();
            assert!(!is_lazy_burning_set(&h, &reduced).unwrap());
        }
    }

    #[test]
    fn single_seed_suffices_for_the_intercalate() {
        let h = build_hl(&intercalate_power(1).unwrap());
        // exhaustive over the four single-vertex seeds
        let (size, witness) = min_lazy_burning_set(&h, 0, 4).unwrap();
        assert_eq!((size, witness), (1, vec![0]));
    }

    #[test]
    fn h3l_of_cyclic_5_needs_3_lines() {
        let h = build_h3l(&cyclic(5).unwrap());
        let (size, _) = min_lazy_burning_set(&h, 0, 15).unwrap();
        assert_eq!(size, 3);
    }

    #[test]
    fn bounds_are_validated() {
        let h = build_hl(&cyclic(2).unwrap());
        assert!(matches!(
            min_lazy_burning_set(&h, 3, 2),
            Err(BurnError::InvalidBounds { .. })
        ));
        assert!(matches!(
            min_lazy_burning_set(&h, 0, 5),
            Err(BurnError::InvalidBounds { .. })
        ));
        assert!(matches!(
            min_lazy_burning_set(&h, 0, 0),
            Err(BurnError::NoSolutionInRange { upper: 0 })
        ));
    }

    #[test]
    fn full_vertex_set_always_succeeds() {
        let h = build_hl(&cyclic(2).unwrap());
        let (size, _) = min_lazy_burning_set(&h, 0, 4).unwrap();
        assert_eq!(size, 1);
    }

    #[test]
    fn complement_search_matches_subset_search() {
        for sq in [
            cyclic(3).unwrap(),
            cyclic(4).unwrap(),
            intercalate_power(2).unwrap(),
        ] {
            let h = build_hl(&sq);
            let direct = min_lazy_burning_set(&h, 0, sq.order() * sq.order())
                .unwrap()
                .0;
            let (size, witness) = min_lbs_complement_search(&sq, false).unwrap();
            assert_eq!(size, direct);
            let seed: Vec<usize> = witness.iter().map(|e| sq.entry_vertex(e)).collect();
            assert!(is_lazy_burning_set(&h, &seed).unwrap());
        }
    }

    #[test]
    fn complement_search_known_values() {
        assert_eq!(
            min_lbs_complement_search(&cyclic(3).unwrap(), false)
                .unwrap()
                .0,
            3
        );
        // 16 - 12 + 1 + 2
        assert_eq!(
            min_lbs_complement_search(&cyclic(4).unwrap(), false)
                .unwrap()
                .0,
            7
        );
        assert_eq!(
            min_lbs_complement_search(&intercalate_power(2).unwrap(), false)
                .unwrap()
                .0,
            8
        );
        assert_eq!(
            min_lbs_complement_search(&cyclic(1).unwrap(), false)
                .unwrap()
                .0,
            1
        );
    }

    #[test]
    fn complement_search_guard() {
        let sq = cyclic(6).unwrap();
        assert!(matches!(
            min_lbs_complement_search(&sq, false),
            Err(BurnError::OrderTooLarge {
                order: 6,
                guard: COMPLEMENT_GUARD
            })
        ));
        assert_eq!(min_lbs_complement_search(&sq, true).unwrap().0, 36 - 18 + 3);
    }

    #[test]
    fn combinations_cover_all_subsets_in_order() {
        let mut comb = vec![0usize, 1];
        let mut seen = vec![comb.clone()];
        while next_combination(&mut comb, 4) {
            seen.push(comb.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}

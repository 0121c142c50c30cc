//! Cover-sequence algebra: weights, validation, the exhaustive `mcs`
//! oracle, and the constructive conversions between burning sets,
//! cover-sequences, and connected chains.
//!
//! A weak cover-sequence is an ordered list of entries in which every entry
//! represents at least one line (row, column, or symbol) not represented
//! earlier; its weight counts those new lines. A strict cover-sequence
//! additionally covers all `3n` lines, so its weights sum to exactly `3n`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::{build_hl, lazy_burn};
use crate::latin::{Entry, LatinSquare, LineKind, LineRef, Subsquare};

use super::{closure, closure_of_entries, ChainError, ConnectedChain};

/// Largest order accepted by [`mcs_exhaustive`] without the override flag.
pub const MCS_GUARD: usize = 4;
/// Largest order accepted with the override flag.
pub const MCS_GUARD_OVERRIDE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("entry {entry} at position {index} is not an entry of the square")]
    NotAnEntry { index: usize, entry: Entry },
    #[error("entry at position {index} repeats an earlier entry")]
    DuplicateEntry { index: usize },
    #[error("entry at position {index} has weight 0")]
    NotASequence { index: usize },
    #[error("sequence does not cover lines {missing:?}")]
    NotACover { missing: Vec<LineRef> },
    #[error("the given set is not a lazy burning set for H_L")]
    NotABurningSet,
    #[error("sequence is not a strict cover-sequence")]
    NotStrict,
    #[error("entry at position {index} has weight 3 but is not first")]
    MultipleWeight3 { index: usize },
    #[error("order {order} exceeds the guard ({guard})")]
    OrderTooLarge { order: usize, guard: usize },
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strictness {
    Weak,
    Strict,
}

/// A validated cover-sequence with its per-entry weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSequence {
    entries: Vec<Entry>,
    weights: Vec<usize>,
    strict: bool,
}

impl CoverSequence {
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Whether the entry set covers all `3n` lines.
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Checks `entries` as a cover-sequence of `sq` and annotates it with
/// weights.
///
/// Weak mode accepts any sequence whose entries all have weight at least 1;
/// strict mode additionally requires all `3n` lines covered. The returned
/// sequence's `strict` flag reflects actual coverage in either mode.
pub fn validate_cover_sequence(
    sq: &LatinSquare,
    entries: &[Entry],
    strictness: Strictness,
) -> Result<CoverSequence, CoverError> {
    let n = sq.order();
    let mut seen: HashSet<Entry> = HashSet::with_capacity(entries.len());
    let mut covered = [vec![false; n], vec![false; n], vec![false; n]];
    let mut weights = Vec::with_capacity(entries.len());
    for (index, e) in entries.iter().enumerate() {
        if !sq.contains(e) {
            return Err(CoverError::NotAnEntry { index, entry: *e });
        }
        if !seen.insert(*e) {
            return Err(CoverError::DuplicateEntry { index });
        }
        let coords = [e.row, e.col, e.sym];
        let weight = (0..3).filter(|&k| !covered[k][coords[k]]).count();
        if weight == 0 {
            return Err(CoverError::NotASequence { index });
        }
        for k in 0..3 {
            covered[k][coords[k]] = true;
        }
        weights.push(weight);
    }
    let missing: Vec<LineRef> = covered
        .iter()
        .enumerate()
        .flat_map(|(k, flags)| {
            let kind = [LineKind::Row, LineKind::Col, LineKind::Sym][k];
            flags
                .iter()
                .enumerate()
                .filter(|(_, &b)| !b)
                .map(move |(index, _)| LineRef { kind, index })
        })
        .collect();
    let strict = missing.is_empty();
    if strictness == Strictness::Strict && !strict {
        return Err(CoverError::NotACover { missing });
    }
    Ok(CoverSequence {
        entries: entries.to_vec(),
        weights,
        strict,
    })
}

/// Exhaustive maximum over strict cover-sequences of `sq`.
///
/// Depth-first extension over sequences whose entries each add a new line,
/// memoized on the set of covered lines (the extensions available from a
/// prefix depend only on that set), keeping the best length that reaches
/// full coverage.
pub fn mcs_exhaustive(
    sq: &LatinSquare,
    override_guard: bool,
) -> Result<(usize, CoverSequence), CoverError> {
    let n = sq.order();
    let guard = if override_guard {
        MCS_GUARD_OVERRIDE
    } else {
        MCS_GUARD
    };
    if n > guard {
        return Err(CoverError::OrderTooLarge { order: n, guard });
    }

    let entries: Vec<Entry> = sq.entries().collect();
    let masks: Vec<u64> = entries
        .iter()
        .map(|e| (1u64 << e.row) | (1 << (n + e.col)) | (1 << (2 * n + e.sym)))
        .collect();
    let full: u64 = (1u64 << (3 * n)) - 1;
    let mut search = StrictSequenceSearch {
        masks: &masks,
        full,
        memo: HashMap::new(),
    };
    let best = search
        .longest_to_cover(0)
        .expect("every square has a strict cover-sequence");

    // rebuild one optimal sequence, preferring entries in row-major order
    let mut state = 0u64;
    let mut remaining = best;
    let mut picked = Vec::with_capacity(best as usize);
    while remaining > 0 {
        let pick = (0..entries.len())
            .find(|&i| {
                masks[i] & !state != 0
                    && search.longest_to_cover(state | masks[i]) == Some(remaining - 1)
            })
            .expect("memoized optimum is achievable");
        picked.push(entries[pick]);
        state |= masks[pick];
        remaining -= 1;
    }
    let seq = validate_cover_sequence(sq, &picked, Strictness::Strict)?;
    Ok((best as usize, seq))
}

struct StrictSequenceSearch<'a> {
    masks: &'a [u64],
    full: u64,
    memo: HashMap<u64, Option<u32>>,
}

impl StrictSequenceSearch<'_> {
    /// Longest extension from covered-line set `state` to full coverage, or
    /// `None` if no weak extension reaches it.
    fn longest_to_cover(&mut self, state: u64) -> Option<u32> {
        if state == self.full {
            return Some(0);
        }
        if let Some(&v) = self.memo.get(&state) {
            return v;
        }
        let mut best: Option<u32> = None;
        for i in 0..self.masks.len() {
            if self.masks[i] & !state != 0 {
                if let Some(v) = self.longest_to_cover(state | self.masks[i]) {
                    best = Some(best.map_or(v + 1, |b: u32| b.max(v + 1)));
                }
            }
        }
        self.memo.insert(state, best);
        best
    }
}

/// Orders the complement of a lazy burning set `seed` into a cover-sequence
/// by decreasing burn round (latest first), breaking ties lexicographically
/// by `(row, col)`.
///
/// The result is always weak-valid; it is strict exactly when the
/// complement covers every line, which holds whenever `seed` is minimal.
pub fn cover_sequence_from_lbs(
    sq: &LatinSquare,
    seed: &[Entry],
) -> Result<CoverSequence, CoverError> {
    let seed_set = check_entry_set(sq, seed)?;
    let h = build_hl(sq);
    let seed_vertices: Vec<usize> = seed.iter().map(|e| sq.entry_vertex(e)).collect();
    let trace = lazy_burn(&h, &seed_vertices).expect("entry vertices are in range");
    if !trace.complete {
        return Err(CoverError::NotABurningSet);
    }
    let mut rest: Vec<(u32, Entry)> = sq
        .entries()
        .filter(|e| !seed_set.contains(e))
        .map(|e| {
            let round = trace.round_of[sq.entry_vertex(&e)].expect("complete burn");
            (round, e)
        })
        .collect();
    rest.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let entries: Vec<Entry> = rest.into_iter().map(|(_, e)| e).collect();
    validate_cover_sequence(sq, &entries, Strictness::Weak)
}

/// The lazy burning set induced by a weak cover-sequence: everything the
/// sequence does not mention. Propagates validation errors from the
/// sequence.
pub fn lbs_from_weak_cover_sequence(
    sq: &LatinSquare,
    entries: &[Entry],
) -> Result<Vec<Entry>, CoverError> {
    let seq = validate_cover_sequence(sq, entries, Strictness::Weak)?;
    let chosen: HashSet<Entry> = seq.entries().iter().copied().collect();
    Ok(sq.entries().filter(|e| !chosen.contains(e)).collect())
}

/// Result of [`peel_ordering`]: either an ordering of the target set that
/// forms a weak cover-sequence, or the subset that cannot be peeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelOutcome {
    Ordered(Vec<Entry>),
    Stuck { unburned: Vec<Entry> },
}

/// Decides whether `target` admits a weak-cover-sequence ordering by
/// burning `H_L` from its complement; on success the ordering is the
/// reverse burn order. Failure is a value, not an error.
pub fn peel_ordering(sq: &LatinSquare, target: &[Entry]) -> Result<PeelOutcome, CoverError> {
    let target_set = check_entry_set(sq, target)?;
    let h = build_hl(sq);
    let seed: Vec<usize> = sq
        .entries()
        .filter(|e| !target_set.contains(e))
        .map(|e| sq.entry_vertex(&e))
        .collect();
    let trace = lazy_burn(&h, &seed).expect("entry vertices are in range");
    if trace.complete {
        let mut burned: Vec<(u32, Entry)> = target
            .iter()
            .map(|e| {
                (
                    trace.round_of[sq.entry_vertex(e)].expect("complete burn"),
                    *e,
                )
            })
            .collect();
        burned.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(PeelOutcome::Ordered(
            burned.into_iter().map(|(_, e)| e).collect(),
        ))
    } else {
        let mut unburned: Vec<Entry> = target
            .iter()
            .copied()
            .filter(|e| trace.round_of[sq.entry_vertex(e)].is_none())
            .collect();
        unburned.sort();
        Ok(PeelOutcome::Stuck { unburned })
    }
}

fn check_entry_set(sq: &LatinSquare, entries: &[Entry]) -> Result<HashSet<Entry>, CoverError> {
    let mut set = HashSet::with_capacity(entries.len());
    for (index, e) in entries.iter().enumerate() {
        if !sq.contains(e) {
            return Err(CoverError::NotAnEntry { index, entry: *e });
        }
        if !set.insert(*e) {
            return Err(CoverError::DuplicateEntry { index });
        }
    }
    Ok(set)
}

/// Expands a connected chain into a strict cover-sequence: the starting
/// cell, then for each step the bridging entry on the step's witness line,
/// each followed by a maximal run of weight-1 entries (scanned row-major).
///
/// The output has length `3n - 1 - length(chain)` and weight profile
/// `{one 3, (length - 1) 2s, rest 1s}`.
pub fn chain_to_cover_sequence(
    sq: &LatinSquare,
    chain: &ConnectedChain,
) -> Result<CoverSequence, CoverError> {
    chain.validate(sq)?;
    let n = sq.order();
    let mut covered = [vec![false; n], vec![false; n], vec![false; n]];
    let mut out: Vec<Entry> = Vec::new();

    mark(chain.start_cell(sq), &mut covered, &mut out);
    flush_weight_one(sq, &mut covered, &mut out);

    for (step, &line) in chain.witness_lines.iter().enumerate() {
        let prev = &chain.squares[step + 1];
        // an already-selected entry cannot bridge: selected entries lie in
        // `prev`, whose lines exclude `line`
        let bridge = sq
            .line_entries(line)
            .into_iter()
            .find(|e| shares_a_line(e, prev))
            .ok_or_else(|| ChainError::MalformedChain(format!("no bridging entry on {}", line)))?;
        mark(bridge, &mut covered, &mut out);
        flush_weight_one(sq, &mut covered, &mut out);
    }

    validate_cover_sequence(sq, &out, Strictness::Strict)
}

fn shares_a_line(e: &Entry, s: &Subsquare) -> bool {
    s.rows().contains(&e.row) || s.cols().contains(&e.col) || s.syms().contains(&e.sym)
}

fn mark(e: Entry, covered: &mut [Vec<bool>; 3], out: &mut Vec<Entry>) {
    covered[0][e.row] = true;
    covered[1][e.col] = true;
    covered[2][e.sym] = true;
    out.push(e);
}

/// Appends entries of weight exactly 1 (one uncovered line), rescanning in
/// row-major order after each pick, until none remain. Entries already in
/// the sequence have weight 0 and are skipped automatically.
fn flush_weight_one(sq: &LatinSquare, covered: &mut [Vec<bool>; 3], out: &mut Vec<Entry>) {
    loop {
        let next = sq.entries().find(|e| {
            let new_lines = [!covered[0][e.row], !covered[1][e.col], !covered[2][e.sym]];
            new_lines.iter().filter(|&&b| b).count() == 1
        });
        match next {
            Some(e) => mark(e, covered, out),
            None => break,
        }
    }
}

/// Contracts a strict cover-sequence into a connected chain: `L_1` is the
/// closure of the first entry, and each later step closes the previous
/// subsquare with the lines of the first entry outside it.
///
/// The sequence must be strict with its only weight-3 entry first; a later
/// weight-3 entry is rejected. The returned chain always validates and has
/// length at least `scc`.
pub fn cover_sequence_to_chain(
    sq: &LatinSquare,
    seq: &CoverSequence,
) -> Result<ConnectedChain, CoverError> {
    if !seq.is_strict() {
        return Err(CoverError::NotStrict);
    }
    if let Some(i) = seq.weights().iter().skip(1).position(|&w| w == 3) {
        return Err(CoverError::MultipleWeight3 { index: i + 1 });
    }
    let n = sq.order();
    let mut squares = vec![Subsquare::empty()];
    let mut witness_lines = Vec::new();
    let mut current = closure_of_entries(sq, &seq.entries()[..1], &[])?;
    squares.push(current.clone());

    while !current.is_full(n) {
        let e = seq
            .entries()
            .iter()
            .find(|e| !current.contains_entry(e))
            .ok_or_else(|| {
                ChainError::MalformedChain(
                    "strict sequence exhausted before the full square".into(),
                )
            })?;
        let new_lines: Vec<LineRef> = e
            .lines()
            .into_iter()
            .filter(|&l| !current.contains_line(l))
            .collect();
        debug_assert_eq!(new_lines.len(), 2, "a later entry shares exactly one line");
        let next = closure(sq, &current, &new_lines)?;
        witness_lines.push(new_lines[0]);
        squares.push(next.clone());
        current = next;
    }

    let chain = ConnectedChain {
        squares,
        witness_lines,
    };
    chain.validate(sq)?;
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::super::scc;
    use super::*;
    use crate::burning::{build_hl, is_lazy_burning_set};
    use crate::latin::{cyclic, intercalate_power};

    fn entry(sq: &LatinSquare, r: usize, c: usize) -> Entry {
        sq.entry_at(r, c)
    }

    #[test]
    fn weights_of_single_entry() {
        let sq = cyclic(3).unwrap();
        let seq = validate_cover_sequence(&sq, &[Entry::new(0, 0, 0)], Strictness::Weak).unwrap();
        assert_eq!(seq.weights(), &[3]);
        assert!(!seq.is_strict());
    }

    #[test]
    fn duplicate_entries_are_rejected() {
        let sq = cyclic(3).unwrap();
        assert_eq!(
            validate_cover_sequence(
                &sq,
                &[Entry::new(0, 0, 0), Entry::new(0, 0, 0)],
                Strictness::Weak
            ),
            Err(CoverError::DuplicateEntry { index: 1 })
        );
    }

    #[test]
    fn zero_weight_entry_is_flagged() {
        let sq = cyclic(3).unwrap();
        // (2,2,1) has row 2 via (2,0), col 2 via (1,2), sym 1 via (0,1)
        let entries = [
            Entry::new(0, 1, 1),
            Entry::new(1, 2, 0),
            Entry::new(2, 0, 2),
            Entry::new(2, 2, 1),
        ];
        assert_eq!(
            validate_cover_sequence(&sq, &entries, Strictness::Weak),
            Err(CoverError::NotASequence { index: 3 })
        );
    }

    #[test]
    fn strict_mode_reports_missing_lines() {
        let sq = cyclic(2).unwrap();
        let err =
            validate_cover_sequence(&sq, &[Entry::new(0, 0, 0)], Strictness::Strict).unwrap_err();
        match err {
            CoverError::NotACover { missing } => {
                assert_eq!(
                    missing,
                    vec![LineRef::row(1), LineRef::col(1), LineRef::sym(1)]
                );
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn foreign_entries_are_rejected() {
        let sq = cyclic(3).unwrap();
        assert!(matches!(
            validate_cover_sequence(&sq, &[Entry::new(0, 0, 2)], Strictness::Weak),
            Err(CoverError::NotAnEntry { index: 0, .. })
        ));
    }

    #[test]
    fn mcs_matches_formula_on_small_cyclic_squares() {
        assert_eq!(mcs_exhaustive(&cyclic(2).unwrap(), false).unwrap().0, 3);
        assert_eq!(mcs_exhaustive(&cyclic(3).unwrap(), false).unwrap().0, 6);
        assert_eq!(mcs_exhaustive(&cyclic(4).unwrap(), false).unwrap().0, 9);
    }

    #[test]
    fn mcs_witness_is_strict_with_that_length() {
        let sq = intercalate_power(2).unwrap();
        let (len, seq) = mcs_exhaustive(&sq, false).unwrap();
        assert_eq!(len, 8);
        assert_eq!(seq.len(), len);
        assert!(seq.is_strict());
    }

    #[test]
    fn mcs_guard() {
        let sq = cyclic(5).unwrap();
        assert!(matches!(
            mcs_exhaustive(&sq, false),
            Err(CoverError::OrderTooLarge {
                order: 5,
                guard: MCS_GUARD
            })
        ));
        assert_eq!(mcs_exhaustive(&sq, true).unwrap().0, 12);
    }

    #[test]
    fn cover_sequence_from_minimal_seed_is_strict() {
        let sq = cyclic(3).unwrap();
        let seed = [entry(&sq, 0, 0), entry(&sq, 0, 1), entry(&sq, 1, 0)];
        // the seed is minimal: dropping any cell stops the burn
        let h = build_hl(&sq);
        for skip in 0..seed.len() {
            let reduced: Vec<usize> = seed
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, e)| sq.entry_vertex(e))
                .collect();
            assert!(!is_lazy_burning_set(&h, &reduced).unwrap());
        }
        let seq = cover_sequence_from_lbs(&sq, &seed).unwrap();
        assert_eq!(
            seq.entries(),
            &[
                Entry::new(1, 1, 2),
                Entry::new(1, 2, 0),
                Entry::new(2, 1, 0),
                Entry::new(0, 2, 2),
                Entry::new(2, 0, 2),
                Entry::new(2, 2, 1),
            ]
        );
        assert!(seq.is_strict());
        assert_eq!(seq.len(), 6);
    }

    #[test]
    fn cover_sequence_from_full_seed_is_empty() {
        let sq = cyclic(3).unwrap();
        let all: Vec<Entry> = sq.entries().collect();
        let seq = cover_sequence_from_lbs(&sq, &all).unwrap();
        assert!(seq.is_empty());
        assert!(!seq.is_strict());
    }

    #[test]
    fn cover_sequence_from_near_full_seed_is_weak_only() {
        let sq = cyclic(3).unwrap();
        let seed: Vec<Entry> = sq.entries().skip(1).collect();
        let seq = cover_sequence_from_lbs(&sq, &seed).unwrap();
        assert_eq!(seq.entries(), &[Entry::new(0, 0, 0)]);
        assert_eq!(seq.weights(), &[3]);
        assert!(!seq.is_strict());
    }

    #[test]
    fn non_burning_seed_is_rejected() {
        let sq = cyclic(3).unwrap();
        assert_eq!(
            cover_sequence_from_lbs(&sq, &[entry(&sq, 0, 0)]),
            Err(CoverError::NotABurningSet)
        );
    }

    #[test]
    fn lbs_from_weak_sequence_burns() {
        let sq = cyclic(3).unwrap();
        let h = build_hl(&sq);

        let m = lbs_from_weak_cover_sequence(&sq, &[]).unwrap();
        assert_eq!(m.len(), 9);

        let m = lbs_from_weak_cover_sequence(&sq, &[Entry::new(0, 0, 0)]).unwrap();
        assert_eq!(m.len(), 8);
        let seed: Vec<usize> = m.iter().map(|e| sq.entry_vertex(e)).collect();
        assert!(is_lazy_burning_set(&h, &seed).unwrap());
    }

    #[test]
    fn peel_ordering_round_trips_the_minimal_seed() {
        let sq = cyclic(3).unwrap();
        let seed = [entry(&sq, 0, 0), entry(&sq, 0, 1), entry(&sq, 1, 0)];
        let target: Vec<Entry> = sq.entries().filter(|e| !seed.contains(e)).collect();
        match peel_ordering(&sq, &target).unwrap() {
            PeelOutcome::Ordered(order) => {
                assert_eq!(order.len(), 6);
                assert!(validate_cover_sequence(&sq, &order, Strictness::Weak).is_ok());
            }
            PeelOutcome::Stuck { .. } => panic!("expected an ordering"),
        }
    }

    #[test]
    fn peeling_one_full_line_succeeds() {
        // all three entries of a line pairwise share only that line, so any
        // ordering has weights 3, 2, 2
        let sq = cyclic(3).unwrap();
        let target = sq.line_entries(LineRef::row(0));
        match peel_ordering(&sq, &target).unwrap() {
            PeelOutcome::Ordered(order) => {
                let seq = validate_cover_sequence(&sq, &order, Strictness::Weak).unwrap();
                let mut weights = seq.weights().to_vec();
                weights.sort_unstable();
                assert_eq!(weights, vec![2, 2, 3]);
            }
            PeelOutcome::Stuck { .. } => panic!("a single line peels"),
        }
    }

    #[test]
    fn peeling_the_complement_of_one_line_fails() {
        // two full rows cover only 8 lines but need weight 3 + 2 + 4*1 = 9
        let sq = cyclic(3).unwrap();
        let row0: Vec<Entry> = sq.line_entries(LineRef::row(0));
        let target: Vec<Entry> = sq.entries().filter(|e| !row0.contains(e)).collect();
        match peel_ordering(&sq, &target).unwrap() {
            PeelOutcome::Stuck { unburned } => assert_eq!(unburned.len(), 6),
            PeelOutcome::Ordered(_) => panic!("rows 1 and 2 cannot be peeled"),
        }
    }

    #[test]
    fn peel_of_empty_target_is_the_empty_ordering() {
        let sq = cyclic(3).unwrap();
        assert_eq!(
            peel_ordering(&sq, &[]).unwrap(),
            PeelOutcome::Ordered(vec![])
        );
    }

    #[test]
    fn chain_expansion_known_lengths() {
        for (sq, expected_len) in [
            (cyclic(5).unwrap(), 12usize),
            (intercalate_power(1).unwrap(), 3),
            (intercalate_power(2).unwrap(), 8),
        ] {
            let (alpha, chain) = scc(&sq).unwrap();
            let seq = chain_to_cover_sequence(&sq, &chain).unwrap();
            assert!(seq.is_strict());
            assert_eq!(seq.len(), expected_len);
            assert_eq!(seq.len(), 3 * sq.order() - 1 - alpha);
        }
    }

    #[test]
    fn chain_expansion_weight_profile() {
        let sq = intercalate_power(2).unwrap();
        let (_, chain) = scc(&sq).unwrap();
        let seq = chain_to_cover_sequence(&sq, &chain).unwrap();
        let mut weights = seq.weights().to_vec();
        weights.sort_unstable();
        assert_eq!(weights, vec![1, 1, 1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn sequence_contraction_round_trips() {
        for sq in [cyclic(5).unwrap(), intercalate_power(2).unwrap()] {
            let (alpha, chain) = scc(&sq).unwrap();
            let seq = chain_to_cover_sequence(&sq, &chain).unwrap();
            let back = cover_sequence_to_chain(&sq, &seq).unwrap();
            assert_eq!(back.length(), alpha);
            back.validate(&sq).unwrap();
        }
    }

    #[test]
    fn later_weight_3_entry_is_rejected() {
        let sq = cyclic(4).unwrap();
        let entries = [
            Entry::new(0, 0, 0),
            Entry::new(0, 1, 1),
            Entry::new(1, 0, 1),
            Entry::new(3, 3, 2),
            Entry::new(2, 2, 0),
            Entry::new(0, 3, 3),
        ];
        let seq = validate_cover_sequence(&sq, &entries, Strictness::Strict).unwrap();
        assert_eq!(seq.weights()[3], 3);
        assert_eq!(
            cover_sequence_to_chain(&sq, &seq),
            Err(CoverError::MultipleWeight3 { index: 3 })
        );
    }

    #[test]
    fn non_strict_sequence_is_rejected_for_contraction() {
        let sq = cyclic(3).unwrap();
        let seq = validate_cover_sequence(&sq, &[Entry::new(0, 0, 0)], Strictness::Weak).unwrap();
        assert_eq!(
            cover_sequence_to_chain(&sq, &seq),
            Err(CoverError::NotStrict)
        );
    }
}

//! The analysis report: formula-route values, constructive witnesses, and
//! (optionally) the exhaustive-oracle values, with the consistency booleans
//! that drive the exit code.

use serde::{Deserialize, Serialize};

use latinburn::burning::{
    build_h3l, build_hl, is_lazy_burning_set, min_lazy_burning_set, min_lbs_complement_search,
};
use latinburn::chains::{
    chain_to_cover_sequence, lbs_from_weak_cover_sequence, mcs_exhaustive, scc_bounds,
    square_invariants, ConnectedChain,
};
use latinburn::latin::{Entry, LatinSquare, LineRef};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub degenerate_order_one: bool,
    pub scc: usize,
    pub scc_witness: Option<ConnectedChain>,
    pub mcs: usize,
    pub mcs_exhaustive: Option<usize>,
    #[serde(rename = "bl_HL")]
    pub bl_hl: usize,
    #[serde(rename = "bl_HL_oracle")]
    pub bl_hl_oracle: Option<usize>,
    #[serde(rename = "bl_HL_witness")]
    pub bl_hl_witness: Vec<Entry>,
    #[serde(rename = "bl_H3L")]
    pub bl_h3l: usize,
    #[serde(rename = "bl_H3L_oracle")]
    pub bl_h3l_oracle: Option<usize>,
    #[serde(rename = "bl_H3L_witness")]
    pub bl_h3l_witness: Vec<LineRef>,
    pub witnesses_ok: bool,
    /// Present only when oracles ran; true iff all of them matched.
    pub oracles_ok: Option<bool>,
    pub duality_ok: bool,
    pub bounds_ok: bool,
    pub consistent: bool,
}

/// Oracle guards: the subset search on `H_L` is only attempted up to this
/// order, and the `H^L` subset search up to [`H3L_ORACLE_GUARD`].
pub const HL_SUBSET_ORACLE_GUARD: usize = 4;
pub const H3L_ORACLE_GUARD: usize = 8;

pub fn analyze(sq: &LatinSquare, with_oracles: bool, override_guard: bool) -> AnalysisReport {
    let n = sq.order();
    let inv = square_invariants(sq);

    // constructive witnesses via the chain (order 1 has fixed witnesses)
    let (hl_witness, h3l_witness): (Vec<Entry>, Vec<LineRef>) = match &inv.chain {
        None => (
            vec![sq.entry_at(0, 0)],
            vec![LineRef::row(0), LineRef::col(0)],
        ),
        Some(chain) => {
            let seq = chain_to_cover_sequence(sq, chain).expect("scc witness expands");
            let seed = lbs_from_weak_cover_sequence(sq, seq.entries())
                .expect("expanded sequence is weak-valid");
            (seed, chain.seed_lines(sq))
        }
    };
    let hl = build_hl(sq);
    let h3l = build_h3l(sq);
    let hl_seed: Vec<usize> = hl_witness.iter().map(|e| sq.entry_vertex(e)).collect();
    let h3l_seed: Vec<usize> = h3l_witness.iter().map(|l| l.vertex_index(n)).collect();
    let witnesses_ok = hl_witness.len() == inv.bl_hl
        && h3l_witness.len() == inv.bl_h3l
        && is_lazy_burning_set(&hl, &hl_seed).expect("witness in range")
        && is_lazy_burning_set(&h3l, &h3l_seed).expect("witness in range");

    let mut mcs_oracle = None;
    let mut hl_oracle = None;
    let mut h3l_oracle = None;
    let mut oracle_mismatch = false;
    if with_oracles {
        if let Ok((len, _)) = mcs_exhaustive(sq, override_guard) {
            oracle_mismatch |= len != inv.mcs;
            mcs_oracle = Some(len);
        }
        if let Ok((size, _)) = min_lbs_complement_search(sq, override_guard) {
            oracle_mismatch |= size != inv.bl_hl;
            hl_oracle = Some(size);
        }
        if n <= HL_SUBSET_ORACLE_GUARD || override_guard {
            let (size, _) = min_lazy_burning_set(&hl, 0, n * n).expect("full range");
            oracle_mismatch |= size != inv.bl_hl;
            if hl_oracle.is_none() {
                hl_oracle = Some(size);
            }
        }
        if n <= H3L_ORACLE_GUARD || override_guard {
            let (size, _) = min_lazy_burning_set(&h3l, 0, 3 * n).expect("full range");
            oracle_mismatch |= size != inv.bl_h3l;
            h3l_oracle = Some(size);
        }
    }
    let any_oracle = mcs_oracle.is_some() || hl_oracle.is_some() || h3l_oracle.is_some();
    let oracles_ok = any_oracle.then_some(!oracle_mismatch);

    // Duality identity, checked on the oracle route when both sides ran.
    // The identity starts at order 2.
    let duality_ok = match (hl_oracle, h3l_oracle) {
        (Some(a), Some(b)) if n >= 2 => a + 3 * n == b + n * n,
        _ => true,
    };
    let bounds_ok = if n == 1 {
        true
    } else {
        let (lo, hi) = scc_bounds(n).expect("order checked");
        (lo..=hi).contains(&inv.scc)
    };

    let consistent = witnesses_ok && duality_ok && bounds_ok && oracles_ok.unwrap_or(true);
    AnalysisReport {
        order: n,
        degenerate_order_one: inv.degenerate_order_one,
        scc: inv.scc,
        scc_witness: inv.chain,
        mcs: inv.mcs,
        mcs_exhaustive: mcs_oracle,
        bl_hl: inv.bl_hl,
        bl_hl_oracle: hl_oracle,
        bl_hl_witness: hl_witness,
        bl_h3l: inv.bl_h3l,
        bl_h3l_oracle: h3l_oracle,
        bl_h3l_witness: h3l_witness,
        witnesses_ok,
        oracles_ok,
        duality_ok,
        bounds_ok,
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use latinburn::latin::{cyclic, intercalate_power};

    #[test]
    fn formula_only_report() {
        let report = analyze(&cyclic(5).unwrap(), false, false);
        assert_eq!(
            (report.scc, report.mcs, report.bl_hl, report.bl_h3l),
            (2, 12, 13, 3)
        );
        assert!(report.witnesses_ok && report.consistent);
        assert!(report.oracles_ok.is_none());
        assert_eq!(report.bl_hl_witness.len(), 13);
        assert_eq!(report.bl_h3l_witness.len(), 3);
    }

    #[test]
    fn oracle_report_on_intercalate_square() {
        let report = analyze(&intercalate_power(2).unwrap(), true, false);
        assert_eq!(report.bl_hl, 8);
        assert_eq!(report.bl_hl_oracle, Some(8));
        assert_eq!(report.bl_h3l_oracle, Some(4));
        assert_eq!(report.mcs_exhaustive, Some(8));
        assert_eq!(report.oracles_ok, Some(true));
        assert!(report.consistent);
    }

    #[test]
    fn degenerate_order_one_report() {
        let report = analyze(&cyclic(1).unwrap(), true, false);
        assert!(report.degenerate_order_one);
        assert_eq!((report.bl_hl, report.bl_h3l), (1, 2));
        assert!(report.witnesses_ok && report.consistent);
    }

    #[test]
    fn report_round_trips_through_json() {
        let report = analyze(&cyclic(4).unwrap(), true, false);
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains("\"bl_HL\":7"));
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.scc, report.scc);
        assert_eq!(back.bl_hl_witness, report.bl_hl_witness);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

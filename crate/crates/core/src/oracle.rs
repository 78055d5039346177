//! Brute-force PUT: run River under every descending ordering and collect
//! the winners. Exponential; only for cross-checking small elections.
//!
//! Uses `river_naive` so it shares no optimized code with the polynomial
//! check.

use std::collections::BTreeSet;

use crate::ballots::MarginGraph;
use crate::graph::{descending_orderings, OrderingError};
use crate::river::river_naive;

pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub winners: BTreeSet<usize>,
    /// Winner under each ordering, in enumeration order.
    pub winner_log: Vec<usize>,
    /// Every edge that appeared in some River diagram.
    pub union_edges: BTreeSet<(usize, usize)>,
    pub ordering_count: u64,
}

pub fn put_winners_bruteforce(g: &MarginGraph, cap: u64) -> Result<OracleReport, OrderingError> {
    let orderings = descending_orderings(g.graph(), cap)?;
    let ordering_count = orderings.total();
    let mut report = OracleReport {
        winners: BTreeSet::new(),
        winner_log: Vec::with_capacity(orderings.size_hint().0),
        union_edges: BTreeSet::new(),
        ordering_count,
    };
    for o in orderings {
        let d = river_naive(g, &o).expect("enumerated orderings are valid");
        report.winners.insert(d.root());
        report.winner_log.push(d.root());
        report.union_edges.extend(d.edges().iter().map(|e| e.key()));
    }
    Ok(report)
}

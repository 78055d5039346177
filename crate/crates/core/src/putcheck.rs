//! Deciding River winners under Parallel Universe Tiebreaking.
//!
//! For a candidate `w`: build the semi-River diagram, grow the directed
//! Prim tree from `w` inside it, order the margin graph's edges so that
//! tree edges lead each equal-margin group, and run River with that
//! ordering. `w` is a PUT winner exactly when it comes out as the root.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::ballots::{condorcet_winner, MarginGraph};
use crate::graph::{DescendingOrdering, Edge, EdgeId};
use crate::river::{river_fast, RiverDiagram};
use crate::rspt::{directed_prim_with, RsptTree, TiePolicy};
use crate::semiriver::{semi_river, SemiRiverDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetOrderingError {
    #[error("selected edge ({0}, {1}) is not among the edges")]
    NotSubset(usize, usize),
}

/// Orders `edges` by descending weight, placing selected edges ahead of
/// unselected ones of equal weight. Two stable sorts: first by membership,
/// then by weight. Ids index into `edges`.
pub fn set_ordering(
    edges: &[Edge],
    selected: &HashSet<(usize, usize)>,
) -> Result<DescendingOrdering, SetOrderingError> {
    let present: HashSet<(usize, usize)> = edges.iter().map(Edge::key).collect();
    if let Some(&(s, t)) = selected.iter().find(|k| !present.contains(k)) {
        return Err(SetOrderingError::NotSubset(s, t));
    }
    let mut ids: Vec<EdgeId> = (0..edges.len()).collect();
    ids.sort_by_key(|&id| !selected.contains(&edges[id].key()));
    ids.sort_by_key(|&id| std::cmp::Reverse(edges[id].weight));
    Ok(DescendingOrdering::from_edge_ids(ids))
}

/// Outcome of checking one alternative, with everything needed to audit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PutCertificate {
    pub alternative: usize,
    pub verdict: bool,
    pub ordering: DescendingOrdering,
    pub diagram: RiverDiagram,
    pub tree: RsptTree,
}

pub fn constructive_check(g: &MarginGraph, w: usize) -> PutCertificate {
    constructive_check_in(g, &semi_river(g), w, TiePolicy::default())
}

/// The check against a precomputed semi-River diagram, with an explicit
/// tie policy for directed Prim.
pub fn constructive_check_in(
    g: &MarginGraph,
    semi: &SemiRiverDiagram,
    w: usize,
    policy: TiePolicy,
) -> PutCertificate {
    let tree = directed_prim_with(semi.graph(), w, policy).expect("w is an alternative");
    let selected: HashSet<(usize, usize)> = tree.edges().iter().map(Edge::key).collect();
    let ordering = set_ordering(g.edges(), &selected).expect("tree edges are margin edges");
    let diagram = river_fast(g, &ordering).expect("set_ordering yields a valid ordering");
    PutCertificate {
        alternative: w,
        verdict: diagram.root() == w,
        ordering,
        diagram,
        tree,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PutOutcome {
    /// Winner ids, ascending.
    pub winners: Vec<usize>,
    /// One certificate per winner, aligned with `winners`.
    pub certificates: Vec<PutCertificate>,
    /// True when a Condorcet winner short-circuited the other checks.
    pub condorcet_shortcut: bool,
}

/// The full PUT winner set. Checks run in parallel over the shared graph;
/// results are merged by alternative id.
pub fn river_put_winners(g: &MarginGraph, condorcet_shortcut: bool) -> PutOutcome {
    let semi = semi_river(g);
    if condorcet_shortcut {
        if let Some(c) = condorcet_winner(g) {
            let cert = constructive_check_in(g, &semi, c, TiePolicy::default());
            debug_assert!(cert.verdict);
            return PutOutcome {
                winners: vec![c],
                certificates: vec![cert],
                condorcet_shortcut: true,
            };
        }
    }
    let certificates: Vec<PutCertificate> = (0..g.alternative_count())
        .into_par_iter()
        .map(|w| constructive_check_in(g, &semi, w, TiePolicy::default()))
        .filter(|cert| cert.verdict)
        .collect();
    PutOutcome {
        winners: certificates.iter().map(|c| c.alternative).collect(),
        certificates,
        condorcet_shortcut: false,
    }
}

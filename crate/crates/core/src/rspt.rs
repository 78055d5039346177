//! Directed Prim: grow a tree from a root by always taking a heaviest edge
//! from an explored vertex to an unexplored one. Every tree path, and every
//! piece of one, is then a strongest path of the input graph.

use std::collections::{BTreeSet, BinaryHeap};

use thiserror::Error;

use crate::graph::{Edge, WeightedDigraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RsptError {
    #[error("root {root} is not a vertex of a graph with {n} vertices")]
    RootOutOfRange { root: usize, n: usize },
}

/// Which heaviest crossing edge to take when several tie.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TiePolicy {
    /// Lowest `(source, target)` first.
    #[default]
    LowestIds,
    /// Highest `(source, target)` first.
    HighestIds,
}

/// Recursively-strongest-path tree over the vertices reachable from `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsptTree {
    root: usize,
    edges: Vec<Edge>,
    parent: Vec<Option<usize>>,
    explored: Vec<usize>,
}

impl RsptTree {
    pub fn root(&self) -> usize {
        self.root
    }

    /// Tree edges in the order they were taken.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertices in the order they joined the tree, root first.
    pub fn explored(&self) -> &[usize] {
        &self.explored
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.parent.get(v).is_some_and(Option::is_some)
    }

    pub fn spans(&self, n: usize) -> bool {
        self.explored.len() == n
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent.get(v).copied().flatten()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(Edge::key).collect()
    }

    /// The tree path from `u` down to `v`, if `u` is an ancestor of `v`.
    pub fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if !self.contains(v) {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = self.parent(cur)?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

pub fn directed_prim(g: &WeightedDigraph, root: usize) -> Result<RsptTree, RsptError> {
    directed_prim_with(g, root, TiePolicy::LowestIds)
}

/// Directed Prim with a lazy-deletion max-heap: stale entries whose target
/// is already explored are skipped on extraction.
pub fn directed_prim_with(
    g: &WeightedDigraph,
    root: usize,
    policy: TiePolicy,
) -> Result<RsptTree, RsptError> {
    let n = g.vertex_count();
    if root >= n {
        return Err(RsptError::RootOutOfRange { root, n });
    }
    let key = |e: &Edge| -> (u64, i64, i64) {
        let (s, t) = (e.source as i64, e.target as i64);
        match policy {
            TiePolicy::LowestIds => (e.weight, -s, -t),
            TiePolicy::HighestIds => (e.weight, s, t),
        }
    };

    let mut explored = vec![false; n];
    let mut parent = vec![None; n];
    let mut order = vec![root];
    let mut edges = Vec::new();
    let mut heap = BinaryHeap::new();
    explored[root] = true;
    heap.extend(g.out_edges(root).map(|e| (key(e), *e)));

    while let Some((_, e)) = heap.pop() {
        if explored[e.target] {
            continue;
        }
        explored[e.target] = true;
        parent[e.target] = Some(e.source);
        order.push(e.target);
        edges.push(e);
        heap.extend(
            g.out_edges(e.target)
                .filter(|out| !explored[out.target])
                .map(|out| (key(out), *out)),
        );
    }

    Ok(RsptTree {
        root,
        edges,
        parent,
        explored: order,
    })
}

//! The River social choice function.
//!
//! Edges are processed in a descending ordering; an edge `(x, y)` is added
//! to the diagram unless `y` already has an incoming edge (branching
//! condition) or the diagram already holds a path from `y` to `x` (cycle
//! condition). The result is a spanning tree whose root is the winner.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::ballots::MarginGraph;
use crate::graph::{DescendingOrdering, Edge, OrderingError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RiverError {
    #[error("invalid ordering: {0}")]
    Ordering(#[from] OrderingError),
    #[error("diagram is not a rooted spanning tree: {0}")]
    NotATree(String),
}

/// A rooted tree over the alternatives; the immunity certificate of its
/// root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiverDiagram {
    n: usize,
    /// Accepted edges, in acceptance order.
    edges: Vec<Edge>,
    root: usize,
}

impl RiverDiagram {
    /// Assembles a diagram from edges and checks the rooted-tree shape.
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self, RiverError> {
        let root = check_rooted_tree(n, &edges)?;
        Ok(RiverDiagram { n, edges, root })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(Edge::key).collect()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.target == v).map(|e| e.source)
    }
}

/// Checks that `edges` form a tree spanning `0..n` and returns its root:
/// acyclic, in-degree at most one, exactly one in-degree-0 vertex,
/// `n - 1` edges, everything reachable from the root.
pub fn check_rooted_tree(n: usize, edges: &[Edge]) -> Result<usize, RiverError> {
    let fail = |msg: String| Err(RiverError::NotATree(msg));
    if n == 0 {
        return fail("no vertices".into());
    }
    if edges.len() != n - 1 {
        return fail(format!("{} edges for {} vertices", edges.len(), n));
    }
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    for e in edges {
        if e.source >= n || e.target >= n {
            return fail(format!("edge ({}, {}) out of range", e.source, e.target));
        }
        if parent[e.target].replace(e.source).is_some() {
            return fail(format!("vertex {} has two incoming edges", e.target));
        }
        children[e.source].push(e.target);
    }
    let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
    let [root] = roots[..] else {
        return fail(format!("{} vertices without incoming edge", roots.len()));
    };
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &c in &children[u] {
            if !seen[c] {
                seen[c] = true;
                reached += 1;
                queue.push_back(c);
            }
        }
    }
    if reached != n {
        return fail(format!("only {reached} of {n} vertices reachable from root {root}"));
    }
    Ok(root)
}

/// River by the definition: the cycle condition is answered with a fresh
/// BFS over the diagram built so far.
pub fn river_naive(g: &MarginGraph, o: &DescendingOrdering) -> Result<RiverDiagram, RiverError> {
    o.validate(g.graph())?;
    let n = g.alternative_count();
    let mut has_in_edge = vec![false; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut accepted = Vec::with_capacity(n.saturating_sub(1));

    let reaches = |children: &[Vec<usize>], from: usize, to: usize| {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            if u == to {
                return true;
            }
            for &c in &children[u] {
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(c);
                }
            }
        }
        false
    };

    for e in o.edges(g.graph()) {
        if has_in_edge[e.target] || reaches(&children, e.target, e.source) {
            continue;
        }
        has_in_edge[e.target] = true;
        children[e.source].push(e.target);
        accepted.push(e);
        debug_assert!(is_forest(n, &accepted));
    }
    RiverDiagram::from_edges(n, accepted)
}

fn is_forest(n: usize, edges: &[Edge]) -> bool {
    let mut sets = DisjointSets::new(n);
    let mut has_parent = vec![false; n];
    edges.iter().all(|e| {
        !std::mem::replace(&mut has_parent[e.target], true) && sets.union(e.source, e.target)
    })
}

/// River with a has-in-edge table for the branching condition and a
/// disjoint-set forest over River subtrees for the cycle condition.
///
/// When `(x, y)` passes the branching check, `y` has no parent and is
/// therefore the root of its subtree, so a path `y -> x` exists exactly
/// when `x` and `y` share a subtree.
pub fn river_fast(g: &MarginGraph, o: &DescendingOrdering) -> Result<RiverDiagram, RiverError> {
    let graph = g.graph();
    let n = g.alternative_count();
    let mut has_in_edge = vec![false; n];
    let mut trees = DisjointSets::new(n);
    let mut accepted = Vec::with_capacity(n.saturating_sub(1));
    // validation is folded into the scan so every edge is read once
    let mut seen = vec![false; graph.edge_count()];
    let mut previous = u64::MAX;
    let mut valid = o.len() == graph.edge_count();
    for &id in o.edge_ids() {
        let Some(&e) = graph.edges().get(id) else {
            valid = false;
            break;
        };
        if seen[id] || e.weight > previous {
            valid = false;
            break;
        }
        seen[id] = true;
        previous = e.weight;
        if !has_in_edge[e.target] && trees.union(e.source, e.target) {
            has_in_edge[e.target] = true;
            accepted.push(e);
        }
    }
    if !valid {
        return Err(o.validate(graph).expect_err("scan found a defect").into());
    }
    RiverDiagram::from_edges(n, accepted)
}

/// River under the deterministic `lex` tiebreak.
pub fn river(g: &MarginGraph) -> RiverDiagram {
    river_fast(g, &DescendingOrdering::lex(g.graph())).expect("lex ordering is valid")
}

pub fn river_winner(d: &RiverDiagram) -> usize {
    d.root()
}

/// Union by rank with path compression.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn same_set(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

//! Weighted digraph machinery shared by every stage of the pipeline.
//!
//! Vertices are dense ids `0..n`. Edges carry non-negative integer weights
//! and are identified by their position in [`WeightedDigraph::edges`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod ordering;

pub use ordering::{
    descending_orderings, tie_groups, universe_count, DescendingOrdering, DescendingOrderings,
    OrderingError,
};

/// Index into [`WeightedDigraph::edges`].
pub type EdgeId = usize;

/// A directed, weighted edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub weight: u64,
}

impl Edge {
    pub fn new(source: usize, target: usize, weight: u64) -> Self {
        Edge {
            source,
            target,
            weight,
        }
    }

    /// The `(source, target)` pair; unique within one graph.
    pub fn key(&self) -> (usize, usize) {
        (self.source, self.target)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(usize, usize),
}

/// Adjacency-list digraph with a maintained transpose.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

impl WeightedDigraph {
    pub fn new(n: usize) -> Self {
        WeightedDigraph {
            n,
            edges: Vec::new(),
            out_edges: vec![Vec::new(); n],
            in_edges: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut g = WeightedDigraph::new(n);
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, e: Edge) -> Result<EdgeId, GraphError> {
        for v in [e.source, e.target] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if e.source == e.target {
            return Err(GraphError::SelfLoop(e.source));
        }
        if self.find_edge(e.source, e.target).is_some() {
            return Err(GraphError::ParallelEdge(e.source, e.target));
        }
        let id = self.edges.len();
        self.edges.push(e);
        self.out_edges[e.source].push(id);
        self.in_edges[e.target].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.out_edges[v].iter().map(move |&id| &self.edges[id])
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.in_edges[v].iter().map(move |&id| &self.edges[id])
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_edges[v].len()
    }

    pub fn find_edge(&self, source: usize, target: usize) -> Option<EdgeId> {
        self.out_edges
            .get(source)?
            .iter()
            .copied()
            .find(|&id| self.edges[id].target == target)
    }

    pub fn weight(&self, source: usize, target: usize) -> Option<u64> {
        self.find_edge(source, target).map(|id| self.edges[id].weight)
    }

    pub fn edge_keys(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(Edge::key).collect()
    }

    /// Vertices reachable from `start` using only edges of weight at least
    /// `min_weight`. `start` is always included.
    pub fn reachable_from(&self, start: usize, min_weight: u64) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for e in self.out_edges(u) {
                if e.weight >= min_weight && !seen[e.target] {
                    seen[e.target] = true;
                    queue.push_back(e.target);
                }
            }
        }
        seen
    }

    pub fn has_path(&self, from: usize, to: usize) -> bool {
        self.reachable_from(from, 0)[to]
    }
}

/// Maximum path strength, with an explicit sentinel for "no path".
///
/// `Unreachable` orders below every finite strength, so margin 0 and
/// unreachability never compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strength {
    Unreachable,
    Finite(u64),
}

impl Strength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Strength::Finite(w) => Some(w),
            Strength::Unreachable => None,
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strength::Unreachable => write!(f, "-inf"),
            Strength::Finite(w) => write!(f, "{w}"),
        }
    }
}

/// A sequence of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path(pub Vec<usize>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("a path needs at least two vertices")]
    TooShort,
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(usize),
    #[error("no edge ({0}, {1}) in the graph")]
    MissingEdge(usize, usize),
}

/// Smallest edge weight along `path`.
pub fn path_strength(g: &WeightedDigraph, path: &Path) -> Result<u64, PathError> {
    let vs = &path.0;
    if vs.len() < 2 {
        return Err(PathError::TooShort);
    }
    let mut seen = BTreeSet::new();
    for &v in vs {
        if !seen.insert(v) {
            return Err(PathError::RepeatedVertex(v));
        }
    }
    vs.windows(2)
        .map(|w| g.weight(w[0], w[1]).ok_or(PathError::MissingEdge(w[0], w[1])))
        .try_fold(u64::MAX, |acc, w| w.map(|w| acc.min(w)))
}

/// All-pairs strongest path weights by max-min relaxation to a fixpoint.
///
/// `table[u][v]` for `u != v`; the diagonal is left `Unreachable`. This is
/// the reference the directed Prim tree is checked against, so it stays
/// deliberately naive.
pub fn strongest_path_table(g: &WeightedDigraph) -> Vec<Vec<Strength>> {
    let n = g.vertex_count();
    let mut table = vec![vec![Strength::Unreachable; n]; n];
    for e in g.edges() {
        table[e.source][e.target] = table[e.source][e.target].max(Strength::Finite(e.weight));
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            for mid in 0..n {
                let Strength::Finite(first) = table[u][mid] else {
                    continue;
                };
                for v in 0..n {
                    if v == u || v == mid {
                        continue;
                    }
                    if let Strength::Finite(second) = table[mid][v] {
                        let through = Strength::Finite(first.min(second));
                        if through > table[u][v] {
                            table[u][v] = through;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return table;
        }
    }
}

/// Strongest path weight from `u` to `v` (`u != v`).
pub fn strongest_path_weight(g: &WeightedDigraph, u: usize, v: usize) -> Strength {
    assert_ne!(u, v, "strongest path weight is defined for distinct vertices");
    strongest_path_table(g)[u][v]
}

/// Vertices with a path to `x` that avoids every incoming edge of `y`.
///
/// Reverse BFS from `x` that never expands `y`'s predecessors. `x` is
/// always a member; `y` is a member exactly when it is reached.
pub fn ancestors_up_to(g: &WeightedDigraph, x: usize, y: usize) -> BTreeSet<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([x]);
    seen[x] = true;
    while let Some(v) = queue.pop_front() {
        if v == y {
            continue;
        }
        for e in g.in_edges(v) {
            if !seen[e.source] {
                seen[e.source] = true;
                queue.push_back(e.source);
            }
        }
    }
    (0..g.vertex_count()).filter(|&v| seen[v]).collect()
}

/// Whether the subgraph induced by `vertices` is acyclic with `y` as its
/// only in-degree-0 vertex. False when `y` is not in `vertices`.
pub fn is_dag_unique_source(g: &WeightedDigraph, vertices: &BTreeSet<usize>, y: usize) -> bool {
    if !vertices.contains(&y) {
        return false;
    }
    let mut in_degree = vec![0usize; g.vertex_count()];
    for &v in vertices {
        in_degree[v] = g.in_edges(v).filter(|e| vertices.contains(&e.source)).count();
    }
    if vertices.iter().any(|&v| v != y && in_degree[v] == 0) || in_degree[y] != 0 {
        return false;
    }
    // Kahn's algorithm; with y the only source, acyclic iff y drains everything.
    let mut queue = VecDeque::from([y]);
    let mut drained = 0;
    while let Some(u) = queue.pop_front() {
        drained += 1;
        for e in g.out_edges(u) {
            if vertices.contains(&e.target) {
                in_degree[e.target] -= 1;
                if in_degree[e.target] == 0 {
                    queue.push_back(e.target);
                }
            }
        }
    }
    drained == vertices.len()
}

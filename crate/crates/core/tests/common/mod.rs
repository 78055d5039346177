#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use river_put::ballots::{margin_graph, Ballot, MarginGraph, PreferenceProfile};
use river_put::graph::{Edge, Strength, WeightedDigraph};

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("a{i}")).collect()
}

/// `m` single voters with uniformly random rankings over `n` alternatives.
pub fn random_profile(rng: &mut impl Rng, n: usize, m: usize) -> PreferenceProfile {
    let ballots = (0..m)
        .map(|_| {
            let mut ranking: Vec<usize> = (0..n).collect();
            ranking.shuffle(rng);
            Ballot { ranking, weight: 1 }
        })
        .collect();
    PreferenceProfile::new(labels(n), ballots).unwrap()
}

pub fn random_election(rng: &mut impl Rng, n: usize, m: usize) -> MarginGraph {
    margin_graph(&random_profile(rng, n, m))
}

/// A random tournament with weights from `0..max_weight`; zero-weight pairs
/// get both directions.
pub fn random_margin_graph(rng: &mut impl Rng, n: usize, max_weight: u64) -> MarginGraph {
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let w = rng.gen_range(0..max_weight);
            if w == 0 {
                edges.push(Edge::new(x, y, 0));
                edges.push(Edge::new(y, x, 0));
            } else if rng.gen_bool(0.5) {
                edges.push(Edge::new(x, y, w));
            } else {
                edges.push(Edge::new(y, x, w));
            }
        }
    }
    MarginGraph::from_edges(labels(n), edges).unwrap()
}

/// A tournament on `n` vertices whose margins are all distinct.
pub fn uniquely_weighted(rng: &mut impl Rng, n: usize) -> MarginGraph {
    let pairs = n * (n - 1) / 2;
    let mut weights: Vec<u64> = (1..=pairs as u64).collect();
    weights.shuffle(rng);
    let mut next = weights.into_iter();
    let mut edges = Vec::with_capacity(pairs);
    for x in 0..n {
        for y in x + 1..n {
            let w = next.next().unwrap();
            edges.push(if rng.gen_bool(0.5) {
                Edge::new(x, y, w)
            } else {
                Edge::new(y, x, w)
            });
        }
    }
    MarginGraph::from_edges(labels(n), edges).unwrap()
}

/// Arbitrary digraph: each ordered pair present with probability `density`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64, max_weight: u64) -> WeightedDigraph {
    let mut g = WeightedDigraph::new(n);
    for s in 0..n {
        for t in 0..n {
            if s != t && rng.gen_bool(density) {
                g.add_edge(Edge::new(s, t, rng.gen_range(0..max_weight))).unwrap();
            }
        }
    }
    g
}

/// Strongest path weight by exhaustive DFS over simple paths.
pub fn strongest_by_dfs(g: &WeightedDigraph, u: usize, v: usize) -> Strength {
    fn go(
        g: &WeightedDigraph,
        at: usize,
        v: usize,
        bottleneck: u64,
        on_path: &mut Vec<bool>,
        best: &mut Strength,
    ) {
        if at == v {
            *best = (*best).max(Strength::Finite(bottleneck));
            return;
        }
        for e in g.out_edges(at) {
            if !on_path[e.target] {
                on_path[e.target] = true;
                go(g, e.target, v, bottleneck.min(e.weight), on_path, best);
                on_path[e.target] = false;
            }
        }
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[u] = true;
    let mut best = Strength::Unreachable;
    go(g, u, v, u64::MAX, &mut on_path, &mut best);
    best
}

/// Vertices with a path to `x` in `g` after deleting every edge into `y`.
pub fn reverse_reach_without_in_edges(g: &WeightedDigraph, x: usize, y: usize) -> BTreeSet<usize> {
    let pruned = WeightedDigraph::from_edges(
        g.vertex_count(),
        g.edges().iter().copied().filter(|e| e.target != y),
    )
    .unwrap();
    (0..g.vertex_count()).filter(|&v| pruned.has_path(v, x)).collect()
}

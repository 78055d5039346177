//! Descending linear orderings of a graph's edges: the tiebreak object.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Edge, EdgeId, WeightedDigraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("edge id {0} is not an edge of the graph")]
    UnknownEdge(EdgeId),
    #[error("edge id {0} appears more than once in the ordering")]
    DuplicateEdge(EdgeId),
    #[error("ordering covers {found} of {expected} edges")]
    Incomplete { expected: usize, found: usize },
    #[error("ordering increases in weight at position {position}")]
    NotDescending { position: usize },
    #[error("{} descending orderings exceed the cap of {cap}", count.map_or("more than 2^64".to_string(), |c| c.to_string()))]
    TooManyUniverses { count: Option<u64>, cap: u64 },
}

/// A permutation of a graph's edge ids, non-increasing in weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescendingOrdering(Vec<EdgeId>);

impl DescendingOrdering {
    /// Wraps raw edge ids. Consumers call [`validate`](Self::validate)
    /// against the graph they run on.
    pub fn from_edge_ids(ids: Vec<EdgeId>) -> Self {
        DescendingOrdering(ids)
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn into_edge_ids(self) -> Vec<EdgeId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges<'g>(&'g self, g: &'g WeightedDigraph) -> impl Iterator<Item = Edge> + 'g {
        self.0.iter().map(move |&id| g.edge(id))
    }

    pub fn validate(&self, g: &WeightedDigraph) -> Result<(), OrderingError> {
        let mut seen = vec![false; g.edge_count()];
        for &id in &self.0 {
            match seen.get_mut(id) {
                None => return Err(OrderingError::UnknownEdge(id)),
                Some(true) => return Err(OrderingError::DuplicateEdge(id)),
                Some(slot) => *slot = true,
            }
        }
        if self.0.len() != g.edge_count() {
            return Err(OrderingError::Incomplete {
                expected: g.edge_count(),
                found: self.0.len(),
            });
        }
        if let Some(i) = self
            .0
            .windows(2)
            .position(|w| g.edge(w[0]).weight < g.edge(w[1]).weight)
        {
            return Err(OrderingError::NotDescending { position: i + 1 });
        }
        Ok(())
    }

    /// Deterministic tiebreak: weight descending, then `(source, target)`.
    pub fn lex(g: &WeightedDigraph) -> Self {
        let mut ids: Vec<EdgeId> = (0..g.edge_count()).collect();
        ids.sort_by_key(|&id| {
            let e = g.edge(id);
            (std::cmp::Reverse(e.weight), e.source, e.target)
        });
        DescendingOrdering(ids)
    }

    /// The `lex` ordering with every equal-weight group shuffled by a
    /// seeded RNG. Groups never mix, so the result stays descending.
    pub fn seeded_shuffle(g: &WeightedDigraph, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ids = Vec::with_capacity(g.edge_count());
        for mut group in lex_groups(g) {
            group.shuffle(&mut rng);
            ids.extend(group);
        }
        DescendingOrdering(ids)
    }
}

fn lex_groups(g: &WeightedDigraph) -> Vec<Vec<EdgeId>> {
    let lex = DescendingOrdering::lex(g);
    let mut groups: Vec<Vec<EdgeId>> = Vec::new();
    for id in lex.0 {
        match groups.last_mut() {
            Some(group) if g.edge(group[0]).weight == g.edge(id).weight => group.push(id),
            _ => groups.push(vec![id]),
        }
    }
    groups
}

/// Edge ids grouped by equal weight, heaviest group first, ids ascending
/// inside each group.
pub fn tie_groups(g: &WeightedDigraph) -> Vec<Vec<EdgeId>> {
    let mut groups = lex_groups(g);
    for group in &mut groups {
        group.sort_unstable();
    }
    groups
}

/// Number of descending orderings, or `None` if it overflows `u64`.
pub fn universe_count(g: &WeightedDigraph) -> Option<u64> {
    tie_groups(g).iter().try_fold(1u64, |acc, group| {
        (1..=group.len() as u64).try_fold(acc, |acc, k| acc.checked_mul(k))
    })
}

/// Lazily enumerates every descending ordering of `g` exactly once.
///
/// Fails up front when the count exceeds `cap`.
pub fn descending_orderings(
    g: &WeightedDigraph,
    cap: u64,
) -> Result<DescendingOrderings, OrderingError> {
    match universe_count(g) {
        Some(count) if count <= cap => Ok(DescendingOrderings {
            groups: tie_groups(g),
            remaining: count,
        }),
        count => Err(OrderingError::TooManyUniverses { count, cap }),
    }
}

/// Cartesian product of within-group permutations, each group stepping
/// through its permutations in lexicographic order; the last group varies
/// fastest.
#[derive(Clone, Debug)]
pub struct DescendingOrderings {
    groups: Vec<Vec<EdgeId>>,
    remaining: u64,
}

impl DescendingOrderings {
    pub fn total(&self) -> u64 {
        self.remaining
    }
}

impl Iterator for DescendingOrderings {
    type Item = DescendingOrdering;

    fn next(&mut self) -> Option<DescendingOrdering> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let current: Vec<EdgeId> = self.groups.iter().flatten().copied().collect();
        for group in self.groups.iter_mut().rev() {
            if next_permutation(group) {
                break;
            }
        }
        Some(DescendingOrdering(current))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Advances to the next lexicographic permutation; on the last one, resets
/// to sorted and returns false.
fn next_permutation(xs: &mut [EdgeId]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        xs.reverse();
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("pivot has a successor");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

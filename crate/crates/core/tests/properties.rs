mod common;

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use river_put::ballots::{
    condorcet_winner, margin, margin_graph, parse_profile, plurality_scores, write_profile,
    Ballot, MarginGraph, PreferenceProfile,
};
use river_put::graph::{
    ancestors_up_to, descending_orderings, path_strength, strongest_path_table, tie_groups,
    universe_count, DescendingOrdering, Edge, Path, Strength, WeightedDigraph,
};
use river_put::putcheck::{constructive_check_in, river_put_winners, set_ordering};
use river_put::river::{check_rooted_tree, river_fast, river_naive};
use river_put::rspt::{directed_prim, TiePolicy};
use river_put::semiriver::{semi_river, semi_river_ordered};

use common::{labels, random_margin_graph, reverse_reach_without_in_edges, strongest_by_dfs};

fn profile_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = PreferenceProfile> {
    (2..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        let ranking = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        prop::collection::vec((ranking, 1u64..=3), m).prop_map(move |groups| {
            let ballots = groups
                .into_iter()
                .map(|(ranking, weight)| Ballot { ranking, weight })
                .collect();
            PreferenceProfile::new(labels(n), ballots).unwrap()
        })
    })
}

fn election_strategy() -> impl Strategy<Value = MarginGraph> {
    profile_strategy(5, 7).prop_map(|p| margin_graph(&p))
}

/// Random digraphs on up to `max_n` vertices with weights below `max_w`.
fn digraph_strategy(max_n: usize, max_w: u64) -> impl Strategy<Value = WeightedDigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::option::weighted(0.5, 0..max_w), n * n).prop_map(move |cells| {
            let mut g = WeightedDigraph::new(n);
            for (i, w) in cells.into_iter().enumerate() {
                let (s, t) = (i / n, i % n);
                if let (true, Some(w)) = (s != t, w) {
                    g.add_edge(Edge::new(s, t, w)).unwrap();
                }
            }
            g
        })
    })
}

fn ancestors(g: &WeightedDigraph, x: usize) -> BTreeSet<usize> {
    (0..g.vertex_count()).filter(|&v| g.has_path(v, x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn margins_are_antisymmetric(p in profile_strategy(5, 7)) {
        let n = p.alternative_count();
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    prop_assert_eq!(margin(&p, x, y), -margin(&p, y, x));
                    if p.voter_count() % 2 == 1 {
                        prop_assert_ne!(margin(&p, x, y), 0);
                    }
                }
            }
        }
        prop_assert_eq!(plurality_scores(&p).iter().sum::<u64>(), p.voter_count());
    }

    #[test]
    fn profile_text_round_trips(p in profile_strategy(5, 7)) {
        prop_assert_eq!(parse_profile(&write_profile(&p)).unwrap(), p);
    }

    #[test]
    fn condorcet_winner_beats_everyone(p in profile_strategy(5, 7)) {
        let g = margin_graph(&p);
        let n = p.alternative_count();
        let direct: Vec<usize> = (0..n)
            .filter(|&c| (0..n).all(|x| x == c || margin(&p, c, x) > 0))
            .collect();
        prop_assert_eq!(condorcet_winner(&g), direct.first().copied());
        if let Some(c) = condorcet_winner(&g) {
            prop_assert_eq!(g.graph().in_degree(c), 0);
        }
    }

    #[test]
    fn closure_matches_exhaustive_search(g in digraph_strategy(6, 5)) {
        let table = strongest_path_table(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                if u != v {
                    prop_assert_eq!(table[u][v], strongest_by_dfs(&g, u, v));
                    if let Some(w) = g.weight(u, v) {
                        prop_assert!(table[u][v] >= Strength::Finite(w));
                    }
                }
            }
        }
    }

    #[test]
    fn ancestors_up_to_is_pruned_reverse_reachability(g in digraph_strategy(6, 3)) {
        let n = g.vertex_count();
        for x in 0..n {
            for y in 0..n {
                let up_to = ancestors_up_to(&g, x, y);
                prop_assert!(up_to.is_subset(&ancestors(&g, x)));
                if x != y {
                    prop_assert_eq!(&up_to, &reverse_reach_without_in_edges(&g, x, y));
                }
            }
        }
    }

    #[test]
    fn orderings_enumerate_every_universe_once(g in election_strategy()) {
        let Some(expected) = universe_count(g.graph()).filter(|&c| c <= 50_000) else {
            return Ok(());
        };
        let product: u64 = tie_groups(g.graph())
            .iter()
            .map(|grp| (1..=grp.len() as u64).product::<u64>())
            .product();
        prop_assert_eq!(expected, product);
        let mut seen = HashSet::new();
        for o in descending_orderings(g.graph(), expected).unwrap() {
            prop_assert!(o.validate(g.graph()).is_ok());
            prop_assert!(seen.insert(o));
        }
        prop_assert_eq!(seen.len() as u64, expected);
    }

    #[test]
    fn fast_river_matches_naive(g in election_strategy(), seed in any::<u64>()) {
        let o = DescendingOrdering::seeded_shuffle(g.graph(), seed);
        let naive = river_naive(&g, &o).unwrap();
        let fast = river_fast(&g, &o).unwrap();
        prop_assert_eq!(&fast, &naive);
        prop_assert_eq!(check_rooted_tree(g.alternative_count(), fast.edges()), Ok(fast.root()));
        if let Some(c) = condorcet_winner(&g) {
            prop_assert_eq!(fast.root(), c);
        }
    }

    #[test]
    fn skipped_edges_are_blocked_by_stronger_structure(g in election_strategy(), seed in any::<u64>()) {
        let o = DescendingOrdering::seeded_shuffle(g.graph(), seed);
        let n = g.alternative_count();
        let mut parent: Vec<Option<Edge>> = vec![None; n];
        for e in o.edges(g.graph()) {
            if let Some(blocker) = parent[e.target] {
                prop_assert!(blocker.weight >= e.weight);
                continue;
            }
            // y has no parent, so a y -> x path is x's ancestor chain up to y
            let mut cur = e.source;
            let mut strength = u64::MAX;
            let mut reaches = false;
            while let Some(p) = parent[cur] {
                strength = strength.min(p.weight);
                cur = p.source;
                if cur == e.target {
                    reaches = true;
                    break;
                }
            }
            if reaches {
                prop_assert!(strength >= e.weight);
            } else {
                parent[e.target] = Some(e);
            }
        }
        let replay: BTreeSet<(usize, usize)> = parent.iter().flatten().map(Edge::key).collect();
        prop_assert_eq!(replay, river_naive(&g, &o).unwrap().edge_set());
    }

    #[test]
    fn semi_river_ignores_order_within_groups(g in election_strategy(), seed in any::<u64>()) {
        let shuffled = semi_river_ordered(&g, &DescendingOrdering::seeded_shuffle(g.graph(), seed));
        prop_assert_eq!(shuffled.unwrap().edge_set(), semi_river(&g).edge_set());
    }

    #[test]
    fn semi_river_coexistence_law(g in election_strategy()) {
        let d = semi_river(&g);
        prop_assert!(d.edge_set().is_subset(&g.graph().edge_keys()));
        for y in 0..g.alternative_count() {
            for lo in d.graph().in_edges(y) {
                for hi in d.graph().in_edges(y).filter(|hi| hi.weight > lo.weight) {
                    prop_assert!(d.graph().reachable_from(y, hi.weight)[hi.source]);
                }
            }
        }
    }

    #[test]
    fn semi_river_of_unique_margins_is_the_river(n in 2usize..9, seed in any::<u64>()) {
        let g = common::uniquely_weighted(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let river = river_fast(&g, &DescendingOrdering::lex(g.graph())).unwrap();
        prop_assert_eq!(semi_river(&g).edge_set(), river.edge_set());
    }

    #[test]
    fn prim_tree_paths_are_recursively_strongest(g in digraph_strategy(7, 4), root_pick in any::<usize>()) {
        let n = g.vertex_count();
        let root = root_pick % n;
        let t = directed_prim(&g, root).unwrap();
        let table = strongest_path_table(&g);

        let reachable = g.reachable_from(root, 0);
        prop_assert_eq!(t.explored().len(), reachable.iter().filter(|&&r| r).count());
        prop_assert!(t.explored().iter().all(|&v| reachable[v]));
        prop_assert_eq!(check_forest(n, t.edges()), true);
        for e in t.edges() {
            prop_assert_eq!(g.weight(e.source, e.target), Some(e.weight));
        }
        // strongest-path weight from the root never increases along the exploration order
        let from_root: Vec<Strength> = t.explored()[1..].iter().map(|&v| table[root][v]).collect();
        prop_assert!(from_root.windows(2).all(|w| w[0] >= w[1]));

        for &v in t.explored() {
            let full = t.path(root, v).unwrap();
            for i in 0..full.len() {
                for j in i + 1..full.len() {
                    let piece = full[i..=j].to_vec();
                    let (a, b) = (piece[0], piece[piece.len() - 1]);
                    let s = path_strength(&g, &Path(piece)).unwrap();
                    prop_assert_eq!(Strength::Finite(s), table[a][b]);
                }
            }
        }
    }

    #[test]
    fn set_ordering_properties(g in election_strategy(), mask in any::<u64>()) {
        let selected: HashSet<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, e)| e.key())
            .collect();
        let o = set_ordering(g.edges(), &selected).unwrap();
        prop_assert!(o.validate(g.graph()).is_ok());
        let edges: Vec<Edge> = o.edges(g.graph()).collect();
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                prop_assert!(a.weight >= b.weight);
                if a.weight == b.weight {
                    prop_assert!(selected.contains(&a.key()) || !selected.contains(&b.key()));
                }
            }
        }
    }

    #[test]
    fn put_verdicts_are_tie_policy_independent(g in random_graph_strategy()) {
        let d = semi_river(&g);
        for w in 0..g.alternative_count() {
            let low = constructive_check_in(&g, &d, w, TiePolicy::LowestIds);
            let high = constructive_check_in(&g, &d, w, TiePolicy::HighestIds);
            prop_assert_eq!(low.verdict, high.verdict);
            for cert in [&low, &high] {
                if cert.verdict {
                    prop_assert_eq!(cert.diagram.edge_set(), cert.tree.edge_set());
                }
            }
        }
    }

    #[test]
    fn put_winners_are_immune(g in random_graph_strategy()) {
        let outcome = river_put_winners(&g, false);
        prop_assert!(!outcome.winners.is_empty());
        let table = strongest_path_table(g.graph());
        for &w in &outcome.winners {
            for defeat in g.graph().in_edges(w) {
                prop_assert!(table[w][defeat.source] >= Strength::Finite(defeat.weight));
            }
        }
        let shortcut = river_put_winners(&g, true);
        if shortcut.condorcet_shortcut {
            prop_assert_eq!(shortcut.winners, outcome.winners);
        }
    }
}

fn random_graph_strategy() -> impl Strategy<Value = MarginGraph> {
    (2usize..=8, 1u64..=6, any::<u64>()).prop_map(|(n, max_w, seed)| {
        random_margin_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, max_w)
    })
}

fn check_forest(n: usize, edges: &[Edge]) -> bool {
    let mut has_parent = vec![false; n];
    for e in edges {
        if std::mem::replace(&mut has_parent[e.target], true) {
            return false;
        }
    }
    // in-degree <= 1 everywhere; acyclic iff walking parents always ends
    let parent: Vec<Option<usize>> = (0..n)
        .map(|v| edges.iter().find(|e| e.target == v).map(|e| e.source))
        .collect();
    (0..n).all(|v| {
        let mut cur = v;
        for _ in 0..=n {
            match parent[cur] {
                Some(p) => cur = p,
                None => return true,
            }
        }
        false
    })
}

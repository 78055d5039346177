//! Plain River on a large random election, comparing the disjoint-set
//! implementation with the search-based one.
//!
//! `cargo run --release --example fast_river -- 300`

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use river_put::ballots::{margin_graph, Ballot, PreferenceProfile};
use river_put::graph::DescendingOrdering;
use river_put::river::{river_fast, river_naive};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let ballots = (0..1001)
        .map(|_| {
            let mut ranking: Vec<usize> = (0..n).collect();
            ranking.shuffle(&mut rng);
            Ballot { ranking, weight: rng.gen_range(1..4) }
        })
        .collect();
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let profile = PreferenceProfile::new(labels, ballots).unwrap();
    let g = margin_graph(&profile);
    let ordering = DescendingOrdering::seeded_shuffle(g.graph(), 42);

    let start = Instant::now();
    let fast = river_fast(&g, &ordering).unwrap();
    let t_fast = start.elapsed();
    let start = Instant::now();
    let naive = river_naive(&g, &ordering).unwrap();
    let t_naive = start.elapsed();

    assert_eq!(fast, naive);
    println!("{n} alternatives, {} edges", g.edges().len());
    println!("winner {}", g.label(fast.root()));
    println!("disjoint sets {t_fast:?}, search {t_naive:?}");
}

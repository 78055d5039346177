//! Random small elections checked against brute-force enumeration of every
//! tiebreak.
//!
//! `cargo run --release --example oracle_crosscheck -- 500`

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use river_put::ballots::{margin_graph, Ballot, PreferenceProfile};
use river_put::oracle::put_winners_bruteforce;
use river_put::putcheck::river_put_winners;

fn main() {
    let trials: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut checked, mut skipped, mut orderings) = (0, 0, 0u64);
    for _ in 0..trials {
        let n = rng.gen_range(3..=5);
        let ballots = (0..rng.gen_range(1..=7))
            .map(|_| {
                let mut ranking: Vec<usize> = (0..n).collect();
                ranking.shuffle(&mut rng);
                Ballot { ranking, weight: 1 }
            })
            .collect();
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let g = margin_graph(&PreferenceProfile::new(labels, ballots).unwrap());
        let Ok(report) = put_winners_bruteforce(&g, 100_000) else {
            skipped += 1;
            continue;
        };
        let fast: BTreeSet<usize> = river_put_winners(&g, false).winners.into_iter().collect();
        assert_eq!(fast, report.winners, "mismatch on {:?}", g.edges());
        checked += 1;
        orderings += report.ordering_count;
    }
    println!("{checked} elections agree ({orderings} tiebreaks enumerated, {skipped} too large)");
}

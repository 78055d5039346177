//! The semi-River diagram of an election with heavy ties, printed next to
//! the River diagrams it covers.

use std::collections::BTreeSet;

use river_put::ballots::{margin_graph, parse_profile};
use river_put::certificate::semi_river_dot;
use river_put::graph::descending_orderings;
use river_put::river::river_fast;
use river_put::semiriver::semi_river;

const BALLOTS: &str = "\
alternatives: a, b, c, d
1: a > b > c > d
1: b > c > d > a
1: c > d > a > b
1: d > a > c > b
";

fn main() {
    let profile = parse_profile(BALLOTS).unwrap();
    let g = margin_graph(&profile);
    let semi = semi_river(&g);

    let mut covered = BTreeSet::new();
    let mut diagrams = BTreeSet::new();
    for o in descending_orderings(g.graph(), 1_000_000).unwrap() {
        let d = river_fast(&g, &o).unwrap();
        covered.extend(d.edge_set());
        diagrams.insert(d.edge_set());
    }
    println!(
        "{} margin edges, {} in the semi-River, {} used by {} distinct River diagrams",
        g.edges().len(),
        semi.edges().len(),
        covered.len(),
        diagrams.len()
    );
    assert!(covered.is_subset(&semi.edge_set()));
    print!("{}", semi_river_dot(&semi, g.labels()));
}

//! River with parallel-universe tiebreaking on a ballot file, with the
//! verdict and witness diagram for each alternative.
//!
//! `cargo run --example put_winners -- data/election13.txt`

use river_put::ballots::{margin_graph, parse_profile};
use river_put::putcheck::{constructive_check, river_put_winners};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/election11.txt").into());
    let text = std::fs::read_to_string(&path).expect("readable ballot file");
    let profile = parse_profile(&text).unwrap_or_else(|e| panic!("{path}: {e}"));
    let g = margin_graph(&profile);
    let labels = g.labels();

    for w in 0..g.alternative_count() {
        let cert = constructive_check(&g, w);
        let edges: Vec<String> = cert
            .diagram
            .edges()
            .iter()
            .map(|e| format!("{}>{}({})", labels[e.source], labels[e.target], e.weight))
            .collect();
        println!(
            "{:<10} {:<5} root {:<10} {}",
            labels[cert.alternative],
            cert.verdict,
            labels[cert.diagram.root()],
            edges.join(" ")
        );
    }
    let outcome = river_put_winners(&g, false);
    let winners: Vec<&str> = outcome.winners.iter().map(|&w| labels[w].as_str()).collect();
    println!("winners: {}", winners.join(", "));
}

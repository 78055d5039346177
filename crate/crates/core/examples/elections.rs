//! Every method on the two bundled three-candidate elections.
//!
//! Run with `cargo run --example elections`.

use river_put::ballots::{
    borda_scores, condorcet_winner, margin_graph, parse_profile, plurality_scores, top_scorers,
};
use river_put::putcheck::river_put_winners;
use river_put::river::river;

const ELECTIONS: [(&str, &str); 2] = [
    ("11 voters", include_str!("../data/election11.txt")),
    ("13 voters", include_str!("../data/election13.txt")),
];

fn main() {
    for (name, text) in ELECTIONS {
        let profile = parse_profile(text).expect("bundled file parses");
        let labels = profile.labels();
        let g = margin_graph(&profile);
        let names = |ids: &[usize]| {
            ids.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(", ")
        };

        println!("== {name}");
        for e in g.edges() {
            println!("  {} beats {} by {}", labels[e.source], labels[e.target], e.weight);
        }
        match condorcet_winner(&g) {
            Some(w) => println!("condorcet:  {}", labels[w]),
            None => println!("condorcet:  (none)"),
        }
        let plurality = plurality_scores(&profile);
        println!("plurality:  {} {:?}", names(&top_scorers(&plurality)), plurality);
        let borda = borda_scores(&profile);
        println!("borda:      {} {:?}", names(&top_scorers(&borda)), borda);
        println!("river:      {}", labels[river(&g).root()]);
        println!("river-put:  {}", names(&river_put_winners(&g, false).winners));
    }
}

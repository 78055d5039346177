//! Writes the PUT certificates of an election as JSON and reads the witness
//! diagrams back.

use river_put::ballots::{margin_graph, parse_profile};
use river_put::certificate::{river_dot, CertificateRecord};
use river_put::putcheck::river_put_winners;

fn main() {
    let profile = parse_profile(include_str!("../data/election13.txt")).unwrap();
    let g = margin_graph(&profile);
    let outcome = river_put_winners(&g, false);

    let records: Vec<CertificateRecord> = outcome
        .certificates
        .iter()
        .map(|c| CertificateRecord::new(c, g.labels(), g.edges()))
        .collect();
    let json = serde_json::to_string_pretty(&records).unwrap();
    println!("{json}");

    let back: Vec<CertificateRecord> = serde_json::from_str(&json).unwrap();
    for (record, cert) in back.iter().zip(&outcome.certificates) {
        let diagram = record.diagram.to_river(g.labels()).expect("valid diagram");
        assert_eq!(diagram, cert.diagram);
    }
    print!("{}", river_dot(&outcome.certificates[0].diagram, g.labels()));
}

//! Directed Prim from every root of a small digraph; each tree path is a
//! strongest path.

use river_put::graph::{path_strength, strongest_path_table, Edge, Path, WeightedDigraph};
use river_put::rspt::{directed_prim_with, TiePolicy};

fn main() {
    let edges = [
        (0, 1, 4), (1, 2, 6), (2, 0, 2), (0, 3, 5), (3, 2, 5), (2, 4, 3), (4, 1, 7), (3, 4, 1),
    ];
    let g = WeightedDigraph::from_edges(5, edges.map(|(s, t, w)| Edge::new(s, t, w))).unwrap();
    let table = strongest_path_table(&g);

    for root in 0..g.vertex_count() {
        for policy in [TiePolicy::LowestIds, TiePolicy::HighestIds] {
            let tree = directed_prim_with(&g, root, policy).unwrap();
            let tree_edges: Vec<String> = tree
                .edges()
                .iter()
                .map(|e| format!("{}->{}:{}", e.source, e.target, e.weight))
                .collect();
            println!("root {root} {policy:?}: {}", tree_edges.join(" "));
            for &v in &tree.explored()[1..] {
                let path = tree.path(root, v).unwrap();
                let s = path_strength(&g, &Path(path.clone())).unwrap();
                println!("  {path:?} strength {s} (best {:?})", table[root][v]);
            }
        }
    }
}

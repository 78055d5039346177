//! The semi-River diagram: every edge that lands in some River diagram
//! under some tiebreak survives here.
//!
//! Edges are processed one margin level at a time, heaviest first. Each
//! edge of a level is tested against the diagram holding only the accepted
//! edges of strictly higher margin; the survivors of the level are then
//! inserted together.

use std::collections::BTreeSet;

use crate::ballots::MarginGraph;
use crate::graph::{
    ancestors_up_to, is_dag_unique_source, DescendingOrdering, Edge, OrderingError, WeightedDigraph,
};

/// Subgraph of the margin graph, carrying the original margins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiRiverDiagram {
    graph: WeightedDigraph,
}

impl SemiRiverDiagram {
    pub fn graph(&self) -> &WeightedDigraph {
        &self.graph
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.graph.edge_keys()
    }

    pub fn contains(&self, source: usize, target: usize) -> bool {
        self.graph.find_edge(source, target).is_some()
    }
}

/// Branching condition: some in-edge `(z, y)` of `d` heavier than `e` has
/// no path back from `y` to `z` over edges at least as heavy as itself.
///
/// `d` must hold exactly the accepted edges of margin above `e`'s.
pub fn cond_branching(e: Edge, d: &WeightedDigraph) -> bool {
    let y = e.target;
    d.in_edges(y)
        .filter(|rival| rival.weight > e.weight)
        .any(|rival| !d.reachable_from(y, rival.weight)[rival.source])
}

/// Cycle condition: the ancestors of `x` up to `y` in `d` induce a DAG
/// whose only source is `y`.
///
/// `d` must hold exactly the accepted edges of margin above `e`'s.
pub fn cond_cycle(e: Edge, d: &WeightedDigraph) -> bool {
    let ancestors = ancestors_up_to(d, e.source, e.target);
    is_dag_unique_source(d, &ancestors, e.target)
}

pub fn semi_river(g: &MarginGraph) -> SemiRiverDiagram {
    semi_river_ordered(g, &DescendingOrdering::lex(g.graph())).expect("lex ordering is valid")
}

/// The semi-River process driven by an explicit descending ordering. The
/// order inside an equal-margin group does not affect the result.
pub fn semi_river_ordered(
    g: &MarginGraph,
    o: &DescendingOrdering,
) -> Result<SemiRiverDiagram, OrderingError> {
    o.validate(g.graph())?;
    let mut diagram = WeightedDigraph::new(g.alternative_count());
    let edges: Vec<Edge> = o.edges(g.graph()).collect();
    for level in edges.chunk_by(|a, b| a.weight == b.weight) {
        let survivors: Vec<Edge> = level
            .iter()
            .copied()
            .filter(|&e| !cond_branching(e, &diagram) && !cond_cycle(e, &diagram))
            .collect();
        for e in survivors {
            diagram.add_edge(e).expect("margin graph edges are distinct");
        }
    }
    Ok(SemiRiverDiagram { graph: diagram })
}

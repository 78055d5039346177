//! JSON and DOT renderings of diagrams and PUT certificates.
//!
//! Alternatives appear by label. A River diagram reads back from its JSON
//! form into an identical [`RiverDiagram`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Edge;
use crate::putcheck::PutCertificate;
use crate::river::{RiverDiagram, RiverError};
use crate::rspt::RsptTree;
use crate::semiriver::SemiRiverDiagram;

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("unknown alternative {0:?}")]
    UnknownLabel(String),
    #[error("declared root {declared:?} but the edges are rooted at {actual:?}")]
    RootMismatch { declared: String, actual: String },
    #[error(transparent)]
    River(#[from] RiverError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub source: String,
    pub target: String,
    pub margin: u64,
}

impl EdgeRecord {
    fn new(e: &Edge, labels: &[String]) -> Self {
        EdgeRecord {
            source: labels[e.source].clone(),
            target: labels[e.target].clone(),
            margin: e.weight,
        }
    }

    fn to_edge(&self, labels: &[String]) -> Result<Edge, CertificateError> {
        Ok(Edge::new(
            lookup(labels, &self.source)?,
            lookup(labels, &self.target)?,
            self.margin,
        ))
    }
}

fn lookup(labels: &[String], name: &str) -> Result<usize, CertificateError> {
    labels
        .iter()
        .position(|l| l == name)
        .ok_or_else(|| CertificateError::UnknownLabel(name.to_string()))
}

fn records(edges: &[Edge], labels: &[String]) -> Vec<EdgeRecord> {
    edges.iter().map(|e| EdgeRecord::new(e, labels)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    pub edges: Vec<EdgeRecord>,
}

impl DiagramRecord {
    pub fn from_river(d: &RiverDiagram, labels: &[String]) -> Self {
        DiagramRecord {
            root: Some(labels[d.root()].clone()),
            edges: records(d.edges(), labels),
        }
    }

    pub fn from_tree(t: &RsptTree, labels: &[String]) -> Self {
        DiagramRecord {
            root: Some(labels[t.root()].clone()),
            edges: records(t.edges(), labels),
        }
    }

    pub fn from_semi_river(d: &SemiRiverDiagram, labels: &[String]) -> Self {
        DiagramRecord {
            root: None,
            edges: records(d.edges(), labels),
        }
    }

    /// Rebuilds a River diagram, re-checking the rooted-tree shape.
    pub fn to_river(&self, labels: &[String]) -> Result<RiverDiagram, CertificateError> {
        let edges = self
            .edges
            .iter()
            .map(|r| r.to_edge(labels))
            .collect::<Result<Vec<_>, _>>()?;
        let d = RiverDiagram::from_edges(labels.len(), edges)?;
        if let Some(declared) = &self.root {
            if *declared != labels[d.root()] {
                return Err(CertificateError::RootMismatch {
                    declared: declared.clone(),
                    actual: labels[d.root()].clone(),
                });
            }
        }
        Ok(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub alternative: String,
    pub verdict: bool,
    /// The constructed tiebreak, as the full edge sequence.
    pub ordering: Vec<EdgeRecord>,
    pub diagram: DiagramRecord,
    pub tree: DiagramRecord,
}

impl CertificateRecord {
    pub fn new(cert: &PutCertificate, labels: &[String], edges: &[Edge]) -> Self {
        CertificateRecord {
            alternative: labels[cert.alternative].clone(),
            verdict: cert.verdict,
            ordering: cert
                .ordering
                .edge_ids()
                .iter()
                .map(|&id| EdgeRecord::new(&edges[id], labels))
                .collect(),
            diagram: DiagramRecord::from_river(&cert.diagram, labels),
            tree: DiagramRecord::from_tree(&cert.tree, labels),
        }
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A DOT digraph with labelled vertices and margin-labelled edges; `root`,
/// when given, is drawn with a double outline.
pub fn to_dot(name: &str, labels: &[String], edges: &[Edge], root: Option<usize>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", dot_escape(name)).unwrap();
    for (id, label) in labels.iter().enumerate() {
        let shape = if Some(id) == root { ", peripheries=2" } else { "" };
        writeln!(out, "  n{id} [label=\"{}\"{shape}];", dot_escape(label)).unwrap();
    }
    for e in edges {
        writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.source, e.target, e.weight).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn river_dot(d: &RiverDiagram, labels: &[String]) -> String {
    to_dot("river", labels, d.edges(), Some(d.root()))
}

pub fn semi_river_dot(d: &SemiRiverDiagram, labels: &[String]) -> String {
    to_dot("semi_river", labels, d.edges(), None)
}

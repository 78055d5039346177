//! Preference profiles, the ballot file format, majority margins and the
//! margin graph, plus the positional baselines (Plurality, Borda).

use std::collections::{BTreeSet, HashMap};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Edge, GraphError, WeightedDigraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternative {
    pub id: usize,
    pub label: String,
}

/// A group of `weight` voters sharing one strict, complete ranking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ballot {
    pub ranking: Vec<usize>,
    pub weight: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown alternative {name:?}")]
    UnknownAlternative { line: usize, name: String },
    #[error("line {line}: ranking lists {found} of {expected} alternatives")]
    IncompleteRanking {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: alternative {name:?} ranked twice")]
    DuplicateAlternative { line: usize, name: String },
    #[error("missing `alternatives:` header")]
    MissingHeader,
    #[error("alternative label {0:?} declared twice")]
    DuplicateLabel(String),
    #[error("at least two alternatives are required, got {0}")]
    TooFewAlternatives(usize),
    #[error("profile has no voters")]
    NoVoters,
    #[error("ballot {index} is not a permutation of the alternatives")]
    InvalidBallot { index: usize },
}

/// Voters' strict linear orders over a dense set of alternatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceProfile {
    alternatives: Vec<Alternative>,
    ballots: Vec<Ballot>,
}

impl PreferenceProfile {
    pub fn new(labels: Vec<String>, ballots: Vec<Ballot>) -> Result<Self, ProfileError> {
        if labels.len() < 2 {
            return Err(ProfileError::TooFewAlternatives(labels.len()));
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if label.is_empty() {
                return Err(ProfileError::Syntax {
                    line: 0,
                    message: "empty alternative label".into(),
                });
            }
            if !seen.insert(label.as_str()) {
                return Err(ProfileError::DuplicateLabel(label.clone()));
            }
        }
        let n = labels.len();
        for (index, b) in ballots.iter().enumerate() {
            let mut present = vec![false; n];
            let is_perm = b.ranking.len() == n
                && b.ranking
                    .iter()
                    .all(|&a| a < n && !std::mem::replace(&mut present[a], true));
            if !is_perm || b.weight == 0 {
                return Err(ProfileError::InvalidBallot { index });
            }
        }
        if ballots.is_empty() {
            return Err(ProfileError::NoVoters);
        }
        let alternatives = labels
            .into_iter()
            .enumerate()
            .map(|(id, label)| Alternative { id, label })
            .collect();
        Ok(PreferenceProfile {
            alternatives,
            ballots,
        })
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn labels(&self) -> Vec<String> {
        self.alternatives.iter().map(|a| a.label.clone()).collect()
    }

    pub fn alternative_count(&self) -> usize {
        self.alternatives.len()
    }

    pub fn voter_count(&self) -> u64 {
        self.ballots.iter().map(|b| b.weight).sum()
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.alternatives.iter().position(|a| a.label == label)
    }
}

impl FromStr for PreferenceProfile {
    type Err = ProfileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_profile(s)
    }
}

/// Parses the ballot file format:
///
/// ```text
/// # comment
/// alternatives: Alice, Bob, Charlie
/// 4: Alice > Bob > Charlie
/// 3: Bob > Charlie > Alice
/// ```
pub fn parse_profile(text: &str) -> Result<PreferenceProfile, ProfileError> {
    let mut labels: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut ballots = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: &str| ProfileError::Syntax {
            line: line_no,
            message: message.to_string(),
        };
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| syntax("expected `alternatives:` or `COUNT: ranking`"))?;
        let head = head.trim();

        let Some(labels) = labels.as_ref() else {
            if head != "alternatives" {
                return Err(ProfileError::MissingHeader);
            }
            let declared: Vec<String> = body.split(',').map(|l| l.trim().to_string()).collect();
            if declared.iter().any(String::is_empty) {
                return Err(syntax("empty alternative label"));
            }
            for (id, label) in declared.iter().enumerate() {
                if index.insert(label.clone(), id).is_some() {
                    return Err(ProfileError::DuplicateLabel(label.clone()));
                }
            }
            if declared.len() < 2 {
                return Err(ProfileError::TooFewAlternatives(declared.len()));
            }
            labels = Some(declared);
            continue;
        };

        if head == "alternatives" {
            return Err(syntax("duplicate `alternatives:` header"));
        }
        let weight: u64 = head
            .parse()
            .map_err(|_| syntax("ballot count must be a positive integer"))?;
        if weight == 0 {
            return Err(syntax("ballot count must be a positive integer"));
        }
        let mut ranking = Vec::with_capacity(labels.len());
        let mut present = vec![false; labels.len()];
        for name in body.split('>').map(str::trim) {
            if name.is_empty() {
                return Err(syntax("empty entry in ranking"));
            }
            let &id = index.get(name).ok_or_else(|| ProfileError::UnknownAlternative {
                line: line_no,
                name: name.to_string(),
            })?;
            if std::mem::replace(&mut present[id], true) {
                return Err(ProfileError::DuplicateAlternative {
                    line: line_no,
                    name: name.to_string(),
                });
            }
            ranking.push(id);
        }
        if ranking.len() != labels.len() {
            return Err(ProfileError::IncompleteRanking {
                line: line_no,
                expected: labels.len(),
                found: ranking.len(),
            });
        }
        ballots.push(Ballot { ranking, weight });
    }

    let labels = labels.ok_or(ProfileError::MissingHeader)?;
    PreferenceProfile::new(labels, ballots)
}

/// Renders a profile back into the ballot file format.
pub fn write_profile(profile: &PreferenceProfile) -> String {
    let labels = profile.labels();
    let mut out = format!("alternatives: {}\n", labels.join(", "));
    for b in profile.ballots() {
        let names: Vec<&str> = b.ranking.iter().map(|&a| labels[a].as_str()).collect();
        out.push_str(&format!("{}: {}\n", b.weight, names.join(" > ")));
    }
    out
}

/// Weighted count of voters preferring `x` to `y`, minus the reverse.
pub fn margin(profile: &PreferenceProfile, x: usize, y: usize) -> i64 {
    assert_ne!(x, y, "margin is defined for distinct alternatives");
    let n = profile.alternative_count();
    let mut position = vec![0usize; n];
    let mut total = 0i64;
    for b in profile.ballots() {
        for (rank, &a) in b.ranking.iter().enumerate() {
            position[a] = rank;
        }
        let w = b.weight as i64;
        total += if position[x] < position[y] { w } else { -w };
    }
    total
}

/// Full antisymmetric margin matrix; the diagonal is zero.
pub fn margin_matrix(profile: &PreferenceProfile) -> Vec<Vec<i64>> {
    let n = profile.alternative_count();
    let mut m = vec![vec![0i64; n]; n];
    for b in profile.ballots() {
        let w = b.weight as i64;
        for (i, &above) in b.ranking.iter().enumerate() {
            for &below in &b.ranking[i + 1..] {
                m[above][below] += w;
                m[below][above] -= w;
            }
        }
    }
    m
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MarginGraphError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("pair ({0}, {1}) is not covered by a positive edge or a zero-margin pair")]
    InvalidPair(usize, usize),
}

/// Weighted digraph of pairwise majority margins.
///
/// For every pair exactly one edge of positive margin, or both directions
/// at margin zero. Edge ids follow descending margin, then `(source, target)`,
/// so any descending ordering reads the edge list nearly in sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarginGraph {
    graph: WeightedDigraph,
    labels: Vec<String>,
}

impl MarginGraph {
    /// Builds and validates a margin graph from explicit edges.
    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, MarginGraphError> {
        let n = labels.len();
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_by_key(|e| (std::cmp::Reverse(e.weight), e.key()));
        let graph = WeightedDigraph::from_edges(n, edges)?;
        for x in 0..n {
            for y in x + 1..n {
                let ok = match (graph.weight(x, y), graph.weight(y, x)) {
                    (Some(0), Some(0)) => true,
                    (Some(w), None) | (None, Some(w)) => w > 0,
                    _ => false,
                };
                if !ok {
                    return Err(MarginGraphError::InvalidPair(x, y));
                }
            }
        }
        Ok(MarginGraph { graph, labels })
    }

    /// Builds from an antisymmetric margin matrix.
    pub fn from_matrix(labels: Vec<String>, matrix: &[Vec<i64>]) -> Result<Self, MarginGraphError> {
        let n = labels.len();
        if matrix.len() != n {
            return Err(MarginGraphError::LabelCount {
                expected: matrix.len(),
                found: n,
            });
        }
        let mut edges = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && matrix[x][y] >= 0 {
                    edges.push(Edge::new(x, y, matrix[x][y] as u64));
                }
            }
        }
        MarginGraph::from_edges(labels, edges)
    }

    pub fn graph(&self) -> &WeightedDigraph {
        &self.graph
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn alternative_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    /// Signed margin of `x` over `y` as recorded in the graph.
    pub fn margin(&self, x: usize, y: usize) -> i64 {
        match (self.graph.weight(x, y), self.graph.weight(y, x)) {
            (Some(w), _) => w as i64,
            (None, Some(w)) => -(w as i64),
            (None, None) => panic!("no margin between {x} and {y}"),
        }
    }
}

pub fn margin_graph(profile: &PreferenceProfile) -> MarginGraph {
    MarginGraph::from_matrix(profile.labels(), &margin_matrix(profile))
        .expect("a valid profile yields a valid margin graph")
}

/// The alternative with no incoming edge at all, i.e. a strictly positive
/// margin over everyone else.
pub fn condorcet_winner(g: &MarginGraph) -> Option<usize> {
    let unbeaten: Vec<usize> = (0..g.alternative_count())
        .filter(|&v| g.graph().in_degree(v) == 0)
        .collect();
    match unbeaten[..] {
        [c] => Some(c),
        _ => None,
    }
}

/// Weight-summed first-place counts, indexed by alternative id.
pub fn plurality_scores(profile: &PreferenceProfile) -> Vec<u64> {
    let mut scores = vec![0u64; profile.alternative_count()];
    for b in profile.ballots() {
        scores[b.ranking[0]] += b.weight;
    }
    scores
}

/// Borda scores with `n - i + 1` points for rank `i` (1-based).
pub fn borda_scores(profile: &PreferenceProfile) -> Vec<u64> {
    let n = profile.alternative_count() as u64;
    let mut scores = vec![0u64; profile.alternative_count()];
    for b in profile.ballots() {
        for (i, &a) in b.ranking.iter().enumerate() {
            scores[a] += (n - i as u64) * b.weight;
        }
    }
    scores
}

/// Ids attaining the maximum score.
pub fn top_scorers(scores: &[u64]) -> Vec<usize> {
    let Some(&best) = scores.iter().max() else {
        return Vec::new();
    };
    (0..scores.len()).filter(|&a| scores[a] == best).collect()
}

//! Presentation graphs: finite simplicial graphs with edge labels `m ≥ 2`.
//!
//! Vertices are generators, an edge `{s, t}` labelled `m` stands for the braid
//! relation of length `m` between `s` and `t`. Non-adjacent vertices generate
//! a free subgroup.

mod eligibility;
mod hierarchy;
mod structure;
mod symmetry;

pub use eligibility::{eligibility, EligibilityReport, Hypothesis, Route};
pub use hierarchy::{find_twistless_hierarchy, is_twistless_star, twistless_decompositions, Decomposition, HierarchyTree};
pub use structure::{cut_vertices, is_connected, is_twistless, separating_edges, type_class, TypeClass};
pub(crate) use symmetry::lcm;
pub use symmetry::{canonical_key, graph_automorphisms, Permutation};

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Largest graph accepted by the exhaustive decomposition and hierarchy searches.
pub const MAX_SEARCH_VERTICES: usize = 12;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("malformed graph file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid vertex name {0:?}")]
    BadName(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("edge {0}-{1} has label {2}, labels must be at least 2")]
    LabelTooSmall(String, String, i64),
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("multiple edges between {0} and {1}")]
    MultiEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph has {0} vertices, the exhaustive search is capped at {1}")]
    TooLarge(usize, usize),
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<(String, String, i64)>,
}

/// A labelled simplicial graph. Vertex order is the order of the input file
/// and every tie-break in this crate follows it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentationGraph {
    names: Vec<String>,
    labels: Vec<Vec<Option<u32>>>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PresentationGraph {
    /// Builds a graph from vertex names and labelled edges given by name.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, i64)]) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(GraphError::BadName(v.to_string()));
            }
            if index.insert(v.to_string(), names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let n = names.len();
        let mut labels = vec![vec![None; n]; n];
        for (u, v, m) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let i = *index.get(u).ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
            let j = *index.get(v).ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
            if i == j {
                return Err(GraphError::Loop(u.to_string()));
            }
            if *m < 2 {
                return Err(GraphError::LabelTooSmall(u.to_string(), v.to_string(), *m));
            }
            if labels[i][j].is_some() {
                return Err(GraphError::MultiEdge(u.to_string(), v.to_string()));
            }
            let m = u32::try_from(*m).map_err(|_| GraphError::LabelTooSmall(u.to_string(), v.to_string(), *m))?;
            labels[i][j] = Some(m);
            labels[j][i] = Some(m);
        }
        Ok(PresentationGraph { names, labels })
    }

    /// Parses the JSON graph format `{"vertices": [...], "edges": [[u, v, m], ...]}`.
    pub fn parse_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile = serde_json::from_str(text)?;
        Self::new(&file.vertices, &file.edges)
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            vertices: self.names.clone(),
            edges: self.edges().into_iter().map(|(i, j, m)| (self.names[i].clone(), self.names[j].clone(), m as i64)).collect(),
        };
        serde_json::to_string(&file).expect("graph serializes")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.labels[u][v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.labels[u][v].is_some()
    }

    /// Edges as `(i, j, m)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(m) = self.labels[i][j] {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.labels[v].iter().enumerate().filter_map(|(j, l)| l.map(|_| j))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Induced subgraph on `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> PresentationGraph {
        let names = vertices.iter().map(|&v| self.names[v].clone()).collect();
        let labels = vertices.iter().map(|&a| vertices.iter().map(|&b| self.labels[a][b]).collect()).collect();
        PresentationGraph { names, labels }
    }

    /// Edge labels touching the vertex set, sorted; used as a cheap invariant.
    pub(crate) fn label_profile(&self, v: usize, within: u64) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.len()).filter(|&j| within >> j & 1 == 1).filter_map(|j| self.labels[v][j]).collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = PresentationGraph::parse_json(r#"{"vertices":["s","t"],"edges":[["s","t",3]]}"#).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.label(0, 1), Some(3));
        assert_eq!(g.edges(), vec![(0, 1, 3)]);
    }

    #[test]
    fn parses_triangle_in_file_order() {
        let g = PresentationGraph::parse_json(r#"{"vertices":["a","b","c"],"edges":[["a","b",6],["b","c",6],["a","c",6]]}"#).unwrap();
        assert_eq!(g.names(), &["a", "b", "c"]);
        assert_eq!(g.edges().len(), 3);
        assert!(type_class(&g).xxxl);
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            (r#"{"vertices":["s","t"],"edges":[["s","t",1]]}"#, "label"),
            (r#"{"vertices":["s","s"],"edges":[]}"#, "duplicate"),
            (r#"{"vertices":["s","t"],"edges":[["s","s",3]]}"#, "loop"),
            (r#"{"vertices":["s","t"],"edges":[["s","t",3],["t","s",4]]}"#, "multiple"),
            (r#"{"vertices":["s","t"],"edges":[["s","u",3]]}"#, "unknown"),
            (r#"{"vertices":["1s"],"edges":[]}"#, "invalid"),
            (r#"{"vertices":[],"edges":[]}"#, "no vertices"),
        ];
        for (text, needle) in cases {
            let err = PresentationGraph::parse_json(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text}: {err}");
        }
        assert!(matches!(
            PresentationGraph::parse_json(r#"{"vertices":["s","t"],"edges":[["s","t",1]]}"#),
            Err(GraphError::LabelTooSmall(_, _, 1))
        ));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":["a","b","c"],"edges":[["a","b",3],["b","c",4]]}"#;
        let g = PresentationGraph::parse_json(text).unwrap();
        assert_eq!(g.to_json(), text);
    }
}

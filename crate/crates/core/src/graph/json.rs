use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError};

/// JSON form of a graph: `{"n": 3, "edges": [[0,1],[1,2]], "labels": [...]}`.
///
/// Each undirected edge appears exactly once. Writing both `[u,v]` and
/// `[v,u]` is treated as a malformed (asymmetric) listing and rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum JsonGraphError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<&Graph> for GraphDump {
    fn from(g: &Graph) -> Self {
        GraphDump {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }
}

impl TryFrom<GraphDump> for Graph {
    type Error = GraphError;

    fn try_from(d: GraphDump) -> Result<Graph, GraphError> {
        let mut seen = HashSet::new();
        for &[u, v] in &d.edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        let edges: Vec<_> = d.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(d.n, &edges)?;
        match d.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphDump::from(self)).expect("graph dump serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, JsonGraphError> {
        let dump: GraphDump = serde_json::from_str(text)?;
        Ok(Graph::try_from(dump)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_labels() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let text = g.to_json();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]}"#);
        assert_eq!(Graph::from_json(&text).unwrap(), g);
    }

    #[test]
    fn rejects_bad_listings() {
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,1]],"labels":["x"]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0]]}"#).is_err());
        // reversed orientation alone is fine
        assert_eq!(
            Graph::from_json(r#"{"n":2,"edges":[[1,0]]}"#).unwrap(),
            Graph::complete(2)
        );
    }
}

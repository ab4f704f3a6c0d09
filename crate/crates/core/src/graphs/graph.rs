use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Finite undirected simple connected graph with at least two vertices.
///
/// Vertices are addressed by position; labels are kept for output and for
/// naming the vertex generators of graph models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<serde_json::Value>,
    edges: Vec<[serde_json::Value; 2]>,
}

fn label_of(v: &serde_json::Value) -> Result<String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::InvalidGraph(format!("vertex label must be a string or integer, got {other}"))),
    }
}

impl SimpleGraph {
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint {s} is not a vertex")))
        };
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            pairs.push((index(a.as_ref())?, index(b.as_ref())?));
        }
        Self::from_indices(labels, &pairs)
    }

    /// Builds a graph from labels and index pairs, enforcing every invariant.
    pub fn from_indices(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::InvalidGraph("a graph needs at least two vertices".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGraph("duplicate vertex label".into()));
        }
        for l in &labels {
            if l.is_empty() || !l.chars().all(crate::cdga::is_name_char) {
                return Err(Error::InvalidGraph(format!("vertex label {l:?} is not a valid identifier fragment")));
            }
        }
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {}", labels[a])));
            }
            if adj[a][b] {
                return Err(Error::InvalidGraph(format!("repeated edge {}-{}", labels[a], labels[b])));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let neighbors = adj
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &e)| e).map(|(i, _)| i).collect())
            .collect();
        let g = SimpleGraph { labels, adj, neighbors };
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for &b in &self.neighbors[a] {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.len()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether `p` maps edges to edges (and hence non-edges to non-edges).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.len() == self.len()
            && self.edges().into_iter().all(|(a, b)| self.adj[p.apply(a)][p.apply(b)])
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let edges: Vec<[serde_json::Value; 2]> = self
            .edges()
            .into_iter()
            .map(|(a, b)| [self.labels[a].clone().into(), self.labels[b].clone().into()])
            .collect();
        serde_json::to_value(GraphJson {
            vertices: self.labels.iter().map(|l| l.clone().into()).collect(),
            edges,
        })
        .expect("graph serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("graph serializes")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let raw: GraphJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidGraph(format!("malformed graph JSON: {e}")))?;
        let labels = raw.vertices.iter().map(label_of).collect::<Result<Vec<_>>>()?;
        let edges = raw
            .edges
            .iter()
            .map(|[a, b]| Ok((label_of(a)?, label_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let pairs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        SimpleGraph::new(&refs, &pairs)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::InvalidGraph(format!("malformed graph JSON: {e}")))?;
        Self::from_json_value(&v)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.edges().into_iter().map(|(a, b)| format!("{}-{}", self.labels[a], self.labels[b])).collect();
        write!(f, "({} vertices: {})", self.len(), edges.join(", "))
    }
}

/// Bijection of `{0, .., n-1}`; `apply(i)` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle notation over the given labels, e.g. `(a c)`; `()` for the identity.
    pub fn cycle_string(&self, labels: &[String]) -> String {
        let mut seen = vec![false; self.len()];
        let mut out = String::new();
        for start in 0..self.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(labels[i].as_str());
                i = self.0[i];
            }
            out.push_str(&format!("({})", cycle.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SimpleGraph::new(&["a"], &[]).is_err());
        assert!(SimpleGraph::new(&["a", "b"], &[]).is_err());
        assert!(SimpleGraph::new(&["a", "b"], &[("a", "a")]).is_err());
        assert!(SimpleGraph::new(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
        assert!(SimpleGraph::new(&["a", "a"], &[("a", "a")]).is_err());
        assert!(SimpleGraph::new(&["a", "b"], &[("a", "c")]).is_err());
        assert!(SimpleGraph::new(&["a", "b"], &[("a", "b")]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = SimpleGraph::new(&["a", "b", "c"], &[("b", "a"), ("b", "c")]).unwrap();
        let s = g.to_json_string();
        assert_eq!(SimpleGraph::from_json_str(&s).unwrap(), g);
        let h = SimpleGraph::from_json_str(r#"{"vertices":[1,2],"edges":[[1,2]]}"#).unwrap();
        assert_eq!(h.labels(), ["1", "2"]);
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let q = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(p.compose(&q).images(), [2, 1, 0]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(p.cycle_string(&labels), "(a b c)");
    }
}

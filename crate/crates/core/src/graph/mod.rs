//! Dense undirected simple graphs over bit rows, and the set algebra the
//! solvers are written in.

mod clique;
mod graph6;
mod iso;
mod json;
mod pattern;
mod vertex_set;

pub use graph6::{g6_decode, g6_encode};
pub use iso::{find_induced, is_h_free, Embedding};
pub use json::{GraphDump, JsonGraphError};
pub use pattern::{make_pattern, PatternSpec};
pub use vertex_set::VertexSet;

pub(crate) use vertex_set::{low_mask, words_for, WORD};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex set has cap {got}, graph has {expected} vertices")]
    CapMismatch { expected: usize, got: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("pattern must have at least 2 vertices, got {0}")]
    PatternTooSmall(usize),
    #[error("operation undefined on the null graph")]
    NullGraph,
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedG6 { offset: usize, reason: String },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// An undirected simple graph on vertices `0..n`.
///
/// Row `v` is the bitmask of `N(v)`. Rows are kept symmetric and irreflexive by
/// every constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { v: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph from an upper-triangle edge mask, bit `k` for the `k`-th pair in
    /// the order (0,1), (0,2), (1,2), (0,3), ... (graph6 order). Pairs past
    /// the 64th are left nonadjacent.
    pub fn from_pair_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if k < 64 && mask >> k & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Adds `uv`. Panics on a self-loop or out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    /// Makes every vertex of `a` adjacent to every vertex of `b` (shared vertices excluded).
    pub fn join(&mut self, a: &VertexSet, b: &VertexSet) {
        for u in a {
            for v in b {
                if u != v {
                    self.add_edge(u, v);
                }
            }
        }
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v);
        s
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Same adjacency, labels dropped. Equality on graphs compares labels too.
    pub fn unlabeled(&self) -> Graph {
        Graph {
            labels: None,
            ..self.clone()
        }
    }

    fn check_cap(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.cap() != self.n {
            return Err(GraphError::CapMismatch {
                expected: self.n,
                got: s.cap(),
            });
        }
        Ok(())
    }

    /// The complement graph: `uv` is an edge iff it is not one here (`u != v`).
    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            let row = g.row_mut(v);
            for (i, w) in row.iter_mut().enumerate() {
                let lo = i * WORD;
                let valid = low_mask(self.n.min(lo + WORD) - lo);
                *w = !*w & valid;
            }
            row[v / WORD] &= !(1 << (v % WORD));
        }
        g
    }

    /// `G ⊕ S`: flips adjacency of every pair with both ends in `s`.
    pub fn subgraph_complement(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_cap(s)?;
        let mut out = self.clone();
        self.subgraph_complement_into(s, &mut out);
        Ok(out)
    }

    /// Writes `G ⊕ S` into `out`, reusing its storage. `out` must have the same
    /// vertex count (it is overwritten, labels kept).
    pub(crate) fn subgraph_complement_into(&self, s: &VertexSet, out: &mut Graph) {
        debug_assert_eq!(out.n, self.n);
        out.rows.copy_from_slice(&self.rows);
        let sw = s.words();
        for v in s {
            let row = out.row_mut(v);
            for (w, m) in row.iter_mut().zip(sw) {
                *w ^= m;
            }
            // v itself was flipped on; restore irreflexivity
            row[v / WORD] &= !(1 << (v % WORD));
        }
    }

    /// `G[S]`. Vertex `i` of the result is the `i`-th smallest member of `s`.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_cap(s)?;
        let map = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(map.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(g)
    }

    /// `a ∪ b` with `a`'s vertices first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Cross product `a × b`; vertex `(i, j)` has index `i * b.n + j`.
    pub fn cross_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::empty(self.n * m);
        for i in 0..self.n {
            for (j, k) in other.edges() {
                g.add_edge(i * m + j, i * m + k);
            }
        }
        for j in 0..m {
            for (i, k) in self.edges() {
                g.add_edge(i * m + j, k * m + j);
            }
        }
        g
    }

    /// Smallest `k` such that every subgraph has a vertex of degree at most `k`.
    pub fn degeneracy(&self) -> Result<usize, GraphError> {
        if self.n == 0 {
            return Err(GraphError::NullGraph);
        }
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = self.vertices();
        let mut best = 0;
        while let Some(v) = alive.iter().min_by_key(|&v| deg[v]) {
            best = best.max(deg[v]);
            alive.remove(v);
            for u in self.neighbors(v).intersection(&alive).iter() {
                deg[u] -= 1;
            }
        }
        Ok(best)
    }

    /// Every vertex of `x` has the same neighbours outside `x`.
    pub fn is_module(&self, x: &VertexSet) -> bool {
        let outside = x.complement();
        let mut it = x.iter();
        let Some(first) = it.next() else { return true };
        let reference = self.neighbors(first).intersection(&outside);
        it.all(|v| self.neighbors(v).intersection(&outside) == reference)
    }

    pub fn all_adjacent(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|u| b.iter().all(|v| u == v || self.has_edge(u, v)))
    }

    pub fn nonadjacent(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|u| b.iter().all(|v| !self.has_edge(u, v)))
    }

    /// The canonical no-instance `complement(h) × h` for "SC to H-free".
    pub fn no_instance(h: &Graph) -> Result<Graph, GraphError> {
        if h.n < 2 {
            return Err(GraphError::PatternTooSmall(h.n));
        }
        Ok(h.complement().cross_product(h))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

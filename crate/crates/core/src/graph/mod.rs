//! Undirected simple graphs on dense vertex labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored normalized as
//! `(u, v)` with `u < v`, in insertion order; that order is the canonical
//! edge order every combinatorial routine in the crate iterates in.

mod fixtures;
mod generators;
mod io;
mod structure;

use std::fmt;

use thiserror::Error;

pub use fixtures::{fixture_h1, fixture_h2, H1_BOLD, H1_DASHED, H1_THIN};
pub use generators::{
    build_b, build_g_family, complete, complete_bipartite, disjoint_union, generate, petersen,
    GraphKind,
};
pub use io::{parse_edge_list, write_edge_list};
pub use structure::DisjointSet;

/// An undirected edge `{u, v}` stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("vertex sets overlap")]
    Overlap,
    #[error("edge {{{0}, {1}}} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finite undirected simple graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    // (neighbor, edge id), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicates and self-loops are
    /// rejected rather than merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = edge(u, v);
            if adj[e.0].iter().any(|&(x, _)| x == e.1) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            let id = list.len();
            list.push(e);
            adj[e.0].push((e.1, id));
            adj[e.1].push((e.0, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (insertion) order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let row = &self.adj[u];
        row.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|pos| row[pos].1)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; 0 for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Returns a copy with the extra edges appended (after the existing ones).
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Relabels vertices with `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidParameter(
                    "labeling is not a permutation".into(),
                ));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Sorted copy of the edge list, for order-insensitive comparisons.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

/// Sorted, duplicate-free subset of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I>(n: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::InvalidParameter(format!(
                    "vertex {} repeated in set",
                    w[0]
                )));
            }
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(GraphError::VertexOutOfRange { vertex: last, n });
            }
        }
        Ok(VertexSet(v))
    }

    pub fn range(start: usize, end: usize) -> Self {
        VertexSet((start..end).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `0..n` minus this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        let mut mask = vec![true; n];
        for &v in &self.0 {
            mask[v] = false;
        }
        VertexSet((0..n).filter(|&v| mask[v]).collect())
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Partition of `0..n` into nonempty, pairwise disjoint parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<VertexSet>,
    n: usize,
}

impl VertexPartition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self, GraphError> {
        let mut owner = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(GraphError::InvalidPartition(format!("part {i} is empty")));
            }
            for v in part.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {v} is in parts {} and {i}",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(VertexPartition { parts, n })
    }

    /// Builds a partition from a block label per vertex. Labels need not be
    /// contiguous; parts are ordered by first occurrence.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let idx = *map.entry(l).or_insert_with(|| {
                parts.push(Vec::new());
                parts.len() - 1
            });
            parts[idx].push(v);
        }
        VertexPartition {
            parts: parts.into_iter().map(VertexSet).collect(),
            n: labels.len(),
        }
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            parts: (0..n).map(|v| VertexSet(vec![v])).collect(),
            n,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    /// Part index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut l = vec![0; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for v in part.iter() {
                l[v] = i;
            }
        }
        l
    }

    /// Restricted-growth labeling: parts renumbered in order of their
    /// smallest vertex. Two partitions are equal iff their RGS labels are.
    pub fn rgs(&self) -> Vec<usize> {
        canonical_rgs(&self.labels())
    }
}

/// Renumbers arbitrary block labels into restricted-growth form.
pub fn canonical_rgs(labels: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

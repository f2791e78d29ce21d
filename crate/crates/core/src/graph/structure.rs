use std::collections::HashSet;

use super::{edge, Edge, Graph, GraphError, VertexSet};

/// Union–find with union by size and path halving.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}

impl Graph {
    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.order()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.order() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet(members));
        }
        out
    }

    /// A graph with at most one vertex counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff every edge belongs to the graph and together they are acyclic.
    pub fn is_forest(&self, edges: &[Edge]) -> bool {
        let mut ds = DisjointSet::new(self.order());
        let mut seen = HashSet::with_capacity(edges.len());
        edges.iter().all(|&(u, v)| {
            self.has_edge(u, v) && seen.insert(edge(u, v)) && ds.union(u, v)
        })
    }

    /// Greedy spanning forest in canonical edge order; has
    /// `n − #components` edges.
    pub fn max_spanning_forest(&self) -> Vec<Edge> {
        let mut ds = DisjointSet::new(self.order());
        self.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| ds.union(u, v))
            .collect()
    }

    /// `G[S]`, relabeled so the i-th smallest vertex of `S` becomes `i`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, v) in s.iter().enumerate() {
            if v >= self.order() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.order(),
                });
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(s.len(), edges)
    }

    /// `G − E₁` on the same vertex set. Every edge of `E₁` must be in `G`.
    pub fn delete_edges(&self, removed: &[Edge]) -> Result<Graph, GraphError> {
        let mut drop = vec![false; self.size()];
        for &(u, v) in removed {
            let id = self.edge_id(u, v).ok_or(GraphError::MissingEdge(u, v))?;
            drop[id] = true;
        }
        let edges = self
            .edges()
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e);
        Graph::new(self.order(), edges)
    }

    /// `e(X, Y)` for disjoint nonempty `X`, `Y`.
    pub fn cross_edge_count(&self, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
        if x.is_empty() || y.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut side = vec![0u8; self.order()];
        for v in x.iter() {
            side[v] = 1;
        }
        for v in y.iter() {
            if side[v] == 1 {
                return Err(GraphError::Overlap);
            }
            side[v] = 2;
        }
        Ok(self
            .edges()
            .iter()
            .filter(|&&(u, v)| side[u] | side[v] == 3)
            .count())
    }

    /// `e(G[S])`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        let mut inside = vec![false; self.order()];
        for v in s.iter() {
            inside[v] = true;
        }
        self.edges()
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count()
    }

    /// `Σ_{i<j} e(V_i, V_j)` for a block label per vertex.
    pub fn cross_total(&self, labels: &[usize]) -> usize {
        self.edges()
            .iter()
            .filter(|&&(u, v)| labels[u] != labels[v])
            .count()
    }
}

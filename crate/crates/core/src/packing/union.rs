//! Union of `t` graphic matroids by breadth-first augmenting exchanges.
//!
//! Inserting an edge `e₀` searches for a sequence `e₀, e₁, …, e_r` where
//! each `e_{i+1}` lies on the cycle that `e_i` closes in some forest, and
//! `e_r` fits into a forest without closing a cycle. Shifting every edge
//! one step along the sequence adds `e₀` while keeping every forest
//! acyclic. Breadth-first labeling (each edge labeled once) finds a
//! shortest such sequence, which is what makes the simultaneous swaps valid.

use std::collections::VecDeque;

use super::ForestDecomposition;
use crate::graph::{Edge, Graph};

/// Incremental packing of edges into `t` edge-disjoint forests.
#[derive(Debug, Clone)]
pub struct ForestUnion {
    n: usize,
    edges: Vec<Edge>,
    label: Vec<Option<usize>>,
    // forest -> vertex -> (neighbor, edge id)
    adj: Vec<Vec<Vec<(usize, usize)>>>,
    sizes: Vec<usize>,
    // scratch
    parent_edge: Vec<usize>,
    seen_vertex: Vec<u32>,
    seen_edge: Vec<u32>,
    via: Vec<usize>,
    stamp: u32,
}

const NONE: usize = usize::MAX;

impl ForestUnion {
    pub fn new(n: usize, t: usize) -> Self {
        ForestUnion {
            n,
            edges: Vec::new(),
            label: Vec::new(),
            adj: vec![vec![Vec::new(); n]; t],
            sizes: vec![0; t],
            parent_edge: vec![NONE; n],
            seen_vertex: vec![0; n],
            seen_edge: Vec::new(),
            via: Vec::new(),
            stamp: 0,
        }
    }

    /// Number of forests.
    #[inline]
    pub fn forests(&self) -> usize {
        self.adj.len()
    }

    /// Appends an empty forest.
    pub fn add_forest(&mut self) {
        self.adj.push(vec![Vec::new(); self.n]);
        self.sizes.push(0);
    }

    /// Registers an edge without assigning it; returns its local id.
    pub fn register(&mut self, e: Edge) -> usize {
        self.edges.push(e);
        self.label.push(None);
        self.seen_edge.push(0);
        self.via.push(NONE);
        self.edges.len() - 1
    }

    #[inline]
    pub fn label(&self, id: usize) -> Option<usize> {
        self.label[id]
    }

    #[inline]
    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn forest_size(&self, f: usize) -> usize {
        self.sizes[f]
    }

    pub fn assigned(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen_vertex.iter_mut().for_each(|s| *s = 0);
            self.seen_edge.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        self.stamp
    }

    /// Edge ids on the `a`–`b` path in forest `f`, or `None` if `a` and `b`
    /// lie in different trees of `f`.
    fn forest_path(&mut self, f: usize, a: usize, b: usize) -> Option<Vec<usize>> {
        let stamp = self.next_stamp();
        let mut stack = vec![a];
        self.seen_vertex[a] = stamp;
        self.parent_edge[a] = NONE;
        let mut found = false;
        while let Some(u) = stack.pop() {
            if u == b {
                found = true;
                break;
            }
            for &(w, id) in &self.adj[f][u] {
                if self.seen_vertex[w] != stamp {
                    self.seen_vertex[w] = stamp;
                    self.parent_edge[w] = id;
                    stack.push(w);
                }
            }
        }
        if !found {
            return None;
        }
        let mut path = Vec::new();
        let mut v = b;
        while v != a {
            let id = self.parent_edge[v];
            path.push(id);
            let (x, y) = self.edges[id];
            v = if x == v { y } else { x };
        }
        Some(path)
    }

    fn attach(&mut self, id: usize, f: usize) {
        let (u, v) = self.edges[id];
        self.adj[f][u].push((v, id));
        self.adj[f][v].push((u, id));
        self.sizes[f] += 1;
        self.label[id] = Some(f);
    }

    fn detach(&mut self, id: usize) {
        let f = self.label[id].expect("detaching an unassigned edge");
        let (u, v) = self.edges[id];
        self.adj[f][u].retain(|&(_, e)| e != id);
        self.adj[f][v].retain(|&(_, e)| e != id);
        self.sizes[f] -= 1;
        self.label[id] = None;
    }

    /// Puts an unassigned edge straight into forest `f`. Returns false (and
    /// changes nothing) if it would close a cycle there.
    pub fn assign(&mut self, id: usize, f: usize) -> bool {
        debug_assert!(self.label[id].is_none());
        let (u, v) = self.edges[id];
        if self.forest_path(f, u, v).is_some() {
            return false;
        }
        self.attach(id, f);
        true
    }

    /// Moves edge `id` out of its forest and into forest `f`, if acyclic.
    pub fn move_edge(&mut self, id: usize, f: usize) -> bool {
        let (u, v) = self.edges[id];
        if self.label[id] == Some(f) {
            return true;
        }
        if self.forest_path(f, u, v).is_some() {
            return false;
        }
        if self.label[id].is_some() {
            self.detach(id);
        }
        self.attach(id, f);
        true
    }

    /// Removes an edge from its forest, leaving it unassigned.
    pub fn unassign(&mut self, id: usize) {
        if self.label[id].is_some() {
            self.detach(id);
        }
    }

    /// Tries to add an unassigned edge to the union, re-shuffling forests
    /// along a shortest augmenting sequence. Returns whether it was added.
    pub fn insert(&mut self, start: usize) -> bool {
        debug_assert!(self.label[start].is_none());
        let stamp = self.next_stamp();
        self.seen_edge[start] = stamp;
        self.via[start] = NONE;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let (a, b) = self.edges[x];
            for f in 0..self.forests() {
                if self.label[x] == Some(f) {
                    continue;
                }
                match self.forest_path(f, a, b) {
                    None => {
                        self.augment(x, f);
                        return true;
                    }
                    Some(path) => {
                        for y in path {
                            if self.seen_edge[y] != stamp {
                                self.seen_edge[y] = stamp;
                                self.via[y] = x;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment(&mut self, last: usize, free_forest: usize) {
        let mut cur = last;
        let mut target = free_forest;
        loop {
            let old = self.label[cur];
            if old.is_some() {
                self.detach(cur);
            }
            self.attach(cur, target);
            match old {
                None => break,
                Some(o) => {
                    target = o;
                    cur = self.via[cur];
                }
            }
        }
    }

    /// Inserts every unassigned edge once, in id order.
    pub fn saturate(&mut self) {
        for id in 0..self.edges.len() {
            if self.label[id].is_none() {
                self.insert(id);
            }
        }
    }

    /// Current forests, each listed in edge-id order.
    pub fn decomposition(&self) -> ForestDecomposition {
        let mut forests = vec![Vec::new(); self.forests()];
        for (id, l) in self.label.iter().enumerate() {
            if let Some(f) = *l {
                forests[f].push(self.edges[id]);
            }
        }
        ForestDecomposition::new(self.n, forests)
    }

    /// Edges currently in no forest.
    pub fn unassigned(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.label[i].is_none()).collect()
    }

    /// Ids of edges in forest `f`.
    pub fn forest_ids(&self, f: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.label[i] == Some(f))
            .collect()
    }
}

/// Maximum-cardinality union of `t` edge-disjoint forests, inserting edges
/// in canonical order.
pub fn max_forest_union(g: &Graph, t: usize) -> ForestDecomposition {
    union_of_edges(g.order(), g.edges(), t).decomposition()
}

pub(crate) fn union_of_edges(n: usize, edges: &[Edge], t: usize) -> ForestUnion {
    let mut fu = ForestUnion::new(n, t);
    for &e in edges {
        fu.register(e);
    }
    fu.saturate();
    fu
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, petersen};
    use crate::packing::verify_decomposition;

    #[test]
    fn k4_two_spanning_trees() {
        let g = complete(4).unwrap();
        let d = max_forest_union(&g, 2);
        assert_eq!(d.assigned(), 6);
        assert!(verify_decomposition(&g, &d, 2).is_ok());
    }

    #[test]
    fn tree_second_forest_empty() {
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let d = max_forest_union(&g, 2);
        assert_eq!(d.assigned(), 4);
        assert!(d.forest(1).is_empty());
    }

    #[test]
    fn petersen_has_arboricity_two() {
        let g = petersen();
        assert_eq!(max_forest_union(&g, 1).assigned(), 9);
        let d = max_forest_union(&g, 2);
        assert_eq!(d.assigned(), 15);
        assert!(verify_decomposition(&g, &d, 1).is_ok());
    }

    #[test]
    fn seeded_union_keeps_forest_sizes() {
        let g = complete(6).unwrap();
        let mut fu = union_of_edges(6, g.edges(), 2);
        assert_eq!(fu.assigned(), 10);
        fu.add_forest();
        fu.saturate();
        assert_eq!(fu.forest_size(0), 5);
        assert_eq!(fu.forest_size(1), 5);
        assert_eq!(fu.forest_size(2), 5);
    }
}

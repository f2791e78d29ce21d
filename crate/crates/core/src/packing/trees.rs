use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use super::union::union_of_edges;
use super::{ForestDecomposition, PackingError};
use crate::graph::{edge, DisjointSet, Edge, Graph};

/// Why a decomposition was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DecompositionDefect {
    #[error("decomposition is on {got} vertices, graph has {expected}")]
    WrongOrder { got: usize, expected: usize },
    #[error("edge {edge:?} in label {label} is not in the graph")]
    ForeignEdge { label: usize, edge: Edge },
    #[error("edge {edge:?} appears more than once")]
    SharedEdge { edge: Edge },
    #[error("label {label} contains a cycle")]
    Cycle { label: usize },
    #[error("label {label} is not a spanning tree ({edges} edges)")]
    NotSpanning { label: usize, edges: usize },
    #[error("{required} spanning labels required, decomposition has {labels}")]
    TooFewLabels { required: usize, labels: usize },
}

/// Checks that labels are edge-disjoint forests of `g` and that the first
/// `require_spanning` labels are spanning trees.
pub fn verify_decomposition(
    g: &Graph,
    d: &ForestDecomposition,
    require_spanning: usize,
) -> Result<(), DecompositionDefect> {
    if d.order() != g.order() {
        return Err(DecompositionDefect::WrongOrder {
            got: d.order(),
            expected: g.order(),
        });
    }
    if require_spanning > d.len() {
        return Err(DecompositionDefect::TooFewLabels {
            required: require_spanning,
            labels: d.len(),
        });
    }
    let mut used = HashSet::with_capacity(g.size());
    for (label, forest) in d.forests().iter().enumerate() {
        let mut ds = DisjointSet::new(g.order());
        for &(u, v) in forest {
            let e = edge(u, v);
            if !g.has_edge(u, v) {
                return Err(DecompositionDefect::ForeignEdge { label, edge: e });
            }
            if !used.insert(e) {
                return Err(DecompositionDefect::SharedEdge { edge: e });
            }
            if !ds.union(u, v) {
                return Err(DecompositionDefect::Cycle { label });
            }
        }
        if label < require_spanning && forest.len() + 1 != g.order() {
            return Err(DecompositionDefect::NotSpanning {
                label,
                edges: forest.len(),
            });
        }
    }
    Ok(())
}

/// `τ(G)`, the maximum number of edge-disjoint spanning trees, with a
/// packing that attains it. Zero (and no trees) for disconnected graphs.
pub fn tau(g: &Graph) -> Result<(usize, ForestDecomposition), PackingError> {
    let n = g.order();
    if n < 2 {
        return Err(PackingError::TooSmall(n));
    }
    if !g.is_connected() {
        return Ok((0, ForestDecomposition::new(n, Vec::new())));
    }
    let upper = (g.size() / (n - 1)).min(g.min_degree());
    let mut fu = union_of_edges(n, g.edges(), 1);
    let mut best = fu.decomposition();
    let mut t = 1;
    while t < upper {
        let mut next = fu.clone();
        next.add_forest();
        next.saturate();
        if next.assigned() < (t + 1) * (n - 1) {
            break;
        }
        t += 1;
        best = next.decomposition();
        fu = next;
    }
    Ok((t, best))
}

//! Spanning-tree packing and fractional packing numbers.
//!
//! `τ(G)` comes from the graphic-matroid union (`max_forest_union`); `ν_f(G)`
//! comes from partition enumeration (`nu_f_exact`) or is bracketed by
//! `nu_f_bounds`. The two are tied together by the tree packing theorem:
//! `τ(G) ≥ k ⇔ ν_f(G) ≥ k`.

mod strength;
mod trees;
mod union;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexPartition};
use crate::Rational;

pub use strength::{nu_f_bounds, nu_f_exact, NufBounds, DEFAULT_EXACT_LIMIT, LOCAL_SEARCH_RESTARTS};
pub use trees::{tau, verify_decomposition, DecompositionDefect};
pub use union::{max_forest_union, ForestUnion};
pub(crate) use strength::weak_edge_split;
pub(crate) use union::union_of_edges;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("graph needs at least 2 vertices (got {0})")]
    TooSmall(usize),
    #[error("exact enumeration is limited to {limit} vertices (got {n})")]
    ExceedsExactLimit { n: usize, limit: usize },
}

/// Edge-disjoint forests on `0..n`, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestDecomposition {
    n: usize,
    forests: Vec<Vec<Edge>>,
}

impl ForestDecomposition {
    pub fn new(n: usize, forests: Vec<Vec<Edge>>) -> Self {
        ForestDecomposition { n, forests }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of labels `t`.
    #[inline]
    pub fn len(&self) -> usize {
        self.forests.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.forests.is_empty()
    }

    pub fn forest(&self, i: usize) -> &[Edge] {
        &self.forests[i]
    }

    pub fn forests(&self) -> &[Vec<Edge>] {
        &self.forests
    }

    /// Total number of labeled edges.
    pub fn assigned(&self) -> usize {
        self.forests.iter().map(Vec::len).sum()
    }

    pub fn into_forests(self) -> Vec<Vec<Edge>> {
        self.forests
    }
}

/// A partition with `p ≥ 2` parts and its cross-edge ratio
/// `Σ_{i<j} e(V_i, V_j) / (p − 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub partition: VertexPartition,
    pub cross_total: usize,
    pub ratio: Rational,
}

impl PartitionCertificate {
    /// Computes the certificate of a partition with at least two parts.
    pub fn from_partition(g: &Graph, partition: VertexPartition) -> Option<Self> {
        if partition.len() < 2 || partition.universe() != g.order() {
            return None;
        }
        let cross = g.cross_total(&partition.labels());
        Some(PartitionCertificate {
            ratio: Rational::new(cross as i64, partition.len() as i64 - 1),
            cross_total: cross,
            partition,
        })
    }

    /// Recomputes the cross total and ratio against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        Self::from_partition(g, self.partition.clone()).as_ref() == Some(self)
    }
}

//! Property `P(k, d)`: `k` edge-disjoint spanning trees plus, edge-disjoint
//! from them, a forest `F` with `d·|E(F)| > (d − 1)(n − 1)` that is either
//! a spanning tree or has a component with at least `d` edges.
//!
//! One joint witness `(T₁, …, T_k, F)` has to satisfy all three conditions.
//! Certifiers build such a witness; refuters prove none exists.

mod certify;
mod exhaustive;
mod pipeline;
mod refute;

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{DisjointSet, Edge, Graph, GraphError, VertexSet};
use crate::packing::{verify_decomposition, DecompositionDefect, ForestDecomposition};
use crate::{ExactValue, Rational};

pub use certify::{certify_p, sufficient_by_nuf, MAX_SWAP_MOVES};
pub use exhaustive::{refute_exhaustive, DEFAULT_NODE_BUDGET};
pub use pipeline::{bipartition_candidates, check_p, CheckOptions};
pub use refute::{refute_by_bipartition_budget, refute_by_counting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error("P(k, d) needs k ≥ 1 and d ≥ 1 (got k={k}, d={d})")]
    InvalidQuery { k: usize, d: usize },
    #[error("bipartition side must be a proper nonempty subset")]
    ImproperSide,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The pair `(k, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PQuery {
    pub k: usize,
    pub d: usize,
}

impl PQuery {
    pub fn new(k: usize, d: usize) -> Result<Self, PropertyError> {
        if k == 0 || d == 0 {
            return Err(PropertyError::InvalidQuery { k, d });
        }
        Ok(PQuery { k, d })
    }

    /// `k + (d − 1)/d`, the fractional packing level that guarantees `P(k, d)`.
    pub fn fractional_threshold(&self) -> Rational {
        Rational::from_integer(self.k as i64) + Rational::new(self.d as i64 - 1, self.d as i64)
    }
}

/// Forest-size threshold `(d − 1)(n − 1)/d` of condition (b).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub d: usize,
    pub n: usize,
}

impl Threshold {
    pub fn new(d: usize, n: usize) -> Self {
        Threshold { d, n }
    }

    pub fn value(&self) -> Rational {
        Rational::new(
            ((self.d - 1) * self.n.saturating_sub(1)) as i64,
            self.d as i64,
        )
    }

    /// `d·edges > (d − 1)(n − 1)`, in integers.
    #[inline]
    pub fn met_by(&self, edges: usize) -> bool {
        self.d * edges > (self.d - 1) * self.n.saturating_sub(1)
    }

    /// Smallest forest size that meets the threshold.
    pub fn min_edges(&self) -> usize {
        (self.d - 1) * self.n.saturating_sub(1) / self.d + 1
    }
}

/// Edge count of each component of a forest on `0..n` (components with at
/// least one edge only), largest first.
pub fn component_edge_counts(n: usize, forest: &[Edge]) -> Vec<usize> {
    let mut ds = DisjointSet::new(n);
    for &(u, v) in forest {
        ds.union(u, v);
    }
    let mut counts = vec![0usize; n];
    for &(u, _) in forest {
        let r = ds.find(u);
        counts[r] += 1;
    }
    let mut out: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Condition (c) for a forest already known to be acyclic.
pub fn forest_shape_ok(n: usize, forest: &[Edge], d: usize) -> bool {
    forest.len() + 1 == n || component_edge_counts(n, forest).first().is_some_and(|&c| c >= d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PStatus {
    Certified,
    Refuted,
    Unknown,
}

/// Pipeline stage that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Counting,
    FractionalPacking,
    Constructive,
    BipartitionBudget,
    Exhaustive,
    None,
}

impl PStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PStatus::Certified => "certified",
            PStatus::Refuted => "refuted",
            PStatus::Unknown => "unknown",
        }
    }
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Counting => "counting",
            Stage::FractionalPacking => "fractional_packing",
            Stage::Constructive => "constructive",
            Stage::BipartitionBudget => "bipartition_budget",
            Stage::Exhaustive => "exhaustive",
            Stage::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefutationKind {
    Counting,
    BipartitionBudget,
    Exhaustive,
}

/// A refutation and the integers that make its arithmetic checkable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub kind: RefutationKind,
    pub numbers: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<VertexSet>,
}

impl Refutation {
    fn new(kind: RefutationKind, numbers: &[(&str, i64)]) -> Self {
        Refutation {
            kind,
            numbers: numbers.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            side: None,
        }
    }
}

/// Non-constructive evidence from the fractional packing number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalEvidence {
    /// Exact `ν_f` or, when `exact` is false, a lower bound.
    pub nu_f: Rational,
    pub exact: bool,
    pub threshold: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    None,
    /// `k` spanning trees and the forest `F`.
    Decomposition { trees: Vec<Vec<Edge>>, forest: Vec<Edge> },
    Fractional(FractionalEvidence),
    Refutation(Refutation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PVerdict {
    pub status: PStatus,
    pub stage: Stage,
    pub evidence: Evidence,
}

impl PVerdict {
    pub fn unknown(stage: Stage) -> Self {
        PVerdict {
            status: PStatus::Unknown,
            stage,
            evidence: Evidence::None,
        }
    }

    pub(crate) fn refuted(stage: Stage, r: Refutation) -> Self {
        PVerdict {
            status: PStatus::Refuted,
            stage,
            evidence: Evidence::Refutation(r),
        }
    }

    pub(crate) fn certified(stage: Stage, d: ForestDecomposition) -> Self {
        let mut forests = d.into_forests();
        let forest = forests.pop().unwrap_or_default();
        PVerdict {
            status: PStatus::Certified,
            stage,
            evidence: Evidence::Decomposition {
                trees: forests,
                forest,
            },
        }
    }

    pub fn is_certified(&self) -> bool {
        self.status == PStatus::Certified
    }

    pub fn is_refuted(&self) -> bool {
        self.status == PStatus::Refuted
    }

    pub fn is_unknown(&self) -> bool {
        self.status == PStatus::Unknown
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match &self.evidence {
            Evidence::Refutation(r) => Some(r),
            _ => None,
        }
    }

    /// The witness as a `k + 1`-label decomposition, if constructive.
    pub fn decomposition(&self, n: usize) -> Option<ForestDecomposition> {
        match &self.evidence {
            Evidence::Decomposition { trees, forest } => {
                let mut all = trees.clone();
                all.push(forest.clone());
                Some(ForestDecomposition::new(n, all))
            }
            _ => None,
        }
    }
}

impl Serialize for FractionalEvidence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FractionalEvidence", 3)?;
        st.serialize_field("nu_f", &ExactValue::from(self.nu_f))?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("threshold", &ExactValue::from(self.threshold))?;
        st.end()
    }
}

#[derive(Serialize)]
struct EvidenceView<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    trees: Option<&'a [Vec<Edge>]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    forest: Option<&'a [Edge]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    refutation: Option<&'a Refutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fractional: Option<&'a FractionalEvidence>,
}

impl Serialize for PVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut view = EvidenceView {
            trees: None,
            forest: None,
            refutation: None,
            fractional: None,
        };
        match &self.evidence {
            Evidence::None => {}
            Evidence::Decomposition { trees, forest } => {
                view.trees = Some(trees);
                view.forest = Some(forest);
            }
            Evidence::Fractional(f) => view.fractional = Some(f),
            Evidence::Refutation(r) => view.refutation = Some(r),
        }
        let mut st = s.serialize_struct("PVerdict", 3)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("stage", &self.stage)?;
        st.serialize_field("evidence", &view)?;
        st.end()
    }
}

/// Why a proposed `P(k, d)` witness fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateDefect {
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error(transparent)]
    Decomposition(#[from] DecompositionDefect),
    #[error("forest has {edges} edges, needs more than {threshold}")]
    ForestTooSmall { edges: usize, threshold: Rational },
    #[error("forest is not spanning and its largest component has {largest} < {d} edges")]
    NoLargeComponent { largest: usize, d: usize },
}

/// Checks a witness for `P(k, d)`: labels `0..k` spanning trees, label `k`
/// the forest `F`, all edge-disjoint edges of `g`, and conditions (b), (c).
pub fn verify_certificate(g: &Graph, q: PQuery, d: &ForestDecomposition) -> Result<(), CertificateDefect> {
    if d.len() != q.k + 1 {
        return Err(CertificateDefect::LabelCount {
            expected: q.k + 1,
            got: d.len(),
        });
    }
    verify_decomposition(g, d, q.k)?;
    let forest = d.forest(q.k);
    let threshold = Threshold::new(q.d, g.order());
    if !threshold.met_by(forest.len()) {
        return Err(CertificateDefect::ForestTooSmall {
            edges: forest.len(),
            threshold: threshold.value(),
        });
    }
    if !forest_shape_ok(g.order(), forest, q.d) {
        return Err(CertificateDefect::NoLargeComponent {
            largest: component_edge_counts(g.order(), forest).first().copied().unwrap_or(0),
            d: q.d,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, fixture_h1, H1_BOLD, H1_DASHED, H1_THIN};

    #[test]
    fn query_validation() {
        assert!(PQuery::new(0, 3).is_err());
        assert!(PQuery::new(1, 0).is_err());
        assert_eq!(PQuery::new(2, 5).unwrap().fractional_threshold(), Rational::new(14, 5));
    }

    #[test]
    fn threshold_arithmetic() {
        let t = Threshold::new(3, 10);
        assert_eq!(t.value(), Rational::from_integer(6));
        assert!(!t.met_by(6));
        assert!(t.met_by(7));
        assert_eq!(t.min_edges(), 7);
        let t = Threshold::new(4, 11);
        assert_eq!(t.value(), Rational::new(15, 2));
        assert_eq!(t.min_edges(), 8);
    }

    #[test]
    fn k4_certificate() {
        let g = complete(4).unwrap();
        let d = ForestDecomposition::new(4, vec![vec![(0, 1), (1, 2), (2, 3)], vec![(0, 2), (0, 3), (1, 3)]]);
        assert_eq!(verify_certificate(&g, PQuery::new(1, 3).unwrap(), &d), Ok(()));
    }

    #[test]
    fn h1_drawn_witness_fails_condition_c() {
        let g = fixture_h1();
        let d = ForestDecomposition::new(11, vec![H1_BOLD.to_vec(), H1_THIN.to_vec(), H1_DASHED.to_vec()]);
        assert_eq!(
            verify_certificate(&g, PQuery::new(2, 4).unwrap(), &d),
            Err(CertificateDefect::NoLargeComponent { largest: 3, d: 4 })
        );
        assert_eq!(component_edge_counts(11, &H1_DASHED), vec![3, 3, 2]);
    }

    #[test]
    fn non_spanning_trees_rejected() {
        let g = complete(4).unwrap();
        let d = ForestDecomposition::new(4, vec![vec![(0, 1), (1, 2)], vec![(0, 2), (0, 3), (1, 3)]]);
        assert!(matches!(
            verify_certificate(&g, PQuery::new(1, 3).unwrap(), &d),
            Err(CertificateDefect::Decomposition(DecompositionDefect::NotSpanning { .. }))
        ));
    }
}

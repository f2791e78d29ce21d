use std::collections::BTreeSet;

use super::{
    certify_p, refute_by_bipartition_budget, refute_by_counting, refute_exhaustive, sufficient_by_nuf, PQuery,
    PVerdict, Stage, DEFAULT_NODE_BUDGET,
};
use crate::graph::{Graph, VertexSet};
use crate::packing::{nu_f_bounds, weak_edge_split};

/// Knobs for [`check_p`].
#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub exhaustive_budget: u64,
    /// Exhaustive search runs only when `n` and `m` are within these caps.
    pub exhaustive_max_n: usize,
    pub exhaustive_max_m: usize,
    /// Every bipartition is scanned up to this order; above it, candidates
    /// come from the `ν_f` certificate and the weak-edge split.
    pub full_scan_max_n: usize,
    /// Extra sides to try in the budget refuter.
    pub sides: Vec<VertexSet>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            exhaustive_budget: DEFAULT_NODE_BUDGET,
            exhaustive_max_n: 12,
            exhaustive_max_m: 30,
            full_scan_max_n: 16,
            sides: Vec::new(),
        }
    }
}

/// Sides `U` with `e(U, V ∖ U) ≤ k`, explicit ones first, deduplicated up
/// to complement (the side holding vertex 0 is kept).
pub fn bipartition_candidates(g: &Graph, q: PQuery, opts: &CheckOptions) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |members: Vec<usize>, out: &mut Vec<VertexSet>| {
        if members.is_empty() || members.len() >= n {
            return;
        }
        let mut mask = vec![false; n];
        for &v in &members {
            mask[v] = true;
        }
        let key: Vec<usize> = if mask[0] {
            members.clone()
        } else {
            (0..n).filter(|&v| !mask[v]).collect()
        };
        if !seen.insert(key) {
            return;
        }
        let cross = g.edges().iter().filter(|&&(u, v)| mask[u] != mask[v]).count();
        if cross <= q.k {
            out.push(VertexSet::new(n, members).expect("in range"));
        }
    };
    for s in &opts.sides {
        push(s.as_slice().to_vec(), &mut out);
    }
    if n < 2 {
        return out;
    }
    if n <= opts.full_scan_max_n {
        // vertex 0 always in U
        for bits in 0u64..(1u64 << (n - 1)) {
            let members: Vec<usize> = std::iter::once(0)
                .chain((1..n).filter(|&v| bits >> (v - 1) & 1 == 1))
                .collect();
            push(members, &mut out);
        }
        return out;
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    if let Ok(b) = nu_f_bounds(g) {
        groups.extend(b.upper_certificate.partition.parts().iter().map(|p| p.as_slice().to_vec()));
    }
    let weak = weak_edge_split(g);
    let mut roots: Vec<usize> = weak.clone();
    roots.sort_unstable();
    roots.dedup();
    for r in roots {
        groups.push((0..n).filter(|&v| weak[v] == r).collect());
    }
    groups.extend(g.components().into_iter().map(VertexSet::into_vec));
    for members in groups {
        push(members, &mut out);
    }
    out
}

/// Runs counting → fractional packing → constructive → bipartition budget →
/// exhaustive search, returning the first conclusive verdict.
pub fn check_p(g: &Graph, q: PQuery, opts: &CheckOptions) -> PVerdict {
    let v = refute_by_counting(g, q);
    if !v.is_unknown() {
        return v;
    }
    let v = sufficient_by_nuf(g, q);
    if !v.is_unknown() {
        return v;
    }
    let v = certify_p(g, q);
    if !v.is_unknown() {
        return v;
    }
    for side in bipartition_candidates(g, q, opts) {
        if let Ok(v) = refute_by_bipartition_budget(g, q, &side) {
            if !v.is_unknown() {
                return v;
            }
        }
    }
    if g.order() <= opts.exhaustive_max_n && g.size() <= opts.exhaustive_max_m {
        let v = refute_exhaustive(g, q, opts.exhaustive_budget);
        if !v.is_unknown() {
            return v;
        }
    }
    PVerdict::unknown(Stage::None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, fixture_h1, fixture_h2};
    use crate::property_p::PStatus;

    fn q(k: usize, d: usize) -> PQuery {
        PQuery::new(k, d).unwrap()
    }

    #[test]
    fn pipeline_examples() {
        let opts = CheckOptions::default();
        // ν_f(H1) = 14/5 > 2 + 3/4
        let v = check_p(&fixture_h1(), q(2, 4), &opts);
        assert_eq!((v.status, v.stage), (PStatus::Certified, Stage::FractionalPacking));

        let v = check_p(&fixture_h2(), q(7, 15), &opts);
        assert_eq!((v.status, v.stage), (PStatus::Refuted, Stage::BipartitionBudget));
        assert_eq!(v.refutation().unwrap().numbers["budget"], 29);

        let v = check_p(&complete(10).unwrap(), q(3, 9), &opts);
        assert_eq!(v.status, PStatus::Certified);
    }

    #[test]
    fn h2_candidates_include_clique_split() {
        let g = fixture_h2();
        let c = bipartition_candidates(&g, q(7, 15), &CheckOptions::default());
        assert!(c.iter().any(|u| u.as_slice() == (0..16).collect::<Vec<_>>().as_slice()));
    }
}

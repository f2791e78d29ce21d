use std::cmp::Ordering;

use super::{
    component_edge_counts, forest_shape_ok, verify_certificate, Evidence, FractionalEvidence, PQuery,
    PStatus, PVerdict, Stage, Threshold,
};
use crate::graph::{DisjointSet, Edge, Graph};
use crate::packing::{nu_f_bounds, nu_f_exact, union_of_edges, ForestDecomposition, DEFAULT_EXACT_LIMIT};
use crate::Rational;

/// Cap on applied tree/forest swaps in the constructive search.
pub const MAX_SWAP_MOVES: usize = 2000;

/// Certifies `P(k, d)` non-constructively when `ν_f(G) > k + (d − 1)/d`.
///
/// `ν_f` is exact up to [`DEFAULT_EXACT_LIMIT`] vertices; above that the
/// lower bound `τ(G)` is used. The fractional evidence is attached either way.
pub fn sufficient_by_nuf(g: &Graph, q: PQuery) -> PVerdict {
    let n = g.order();
    if n < 2 {
        return PVerdict::unknown(Stage::FractionalPacking);
    }
    let (nu_f, exact) = if n <= DEFAULT_EXACT_LIMIT {
        match nu_f_exact(g, DEFAULT_EXACT_LIMIT) {
            Ok((v, _)) => (v, true),
            Err(_) => return PVerdict::unknown(Stage::FractionalPacking),
        }
    } else {
        match nu_f_bounds(g) {
            Ok(b) if b.lower == b.upper => (b.lower, true),
            Ok(b) => (b.lower, false),
            Err(_) => return PVerdict::unknown(Stage::FractionalPacking),
        }
    };
    let threshold = q.fractional_threshold();
    let status = if nu_f > threshold {
        PStatus::Certified
    } else {
        PStatus::Unknown
    };
    PVerdict {
        status,
        stage: Stage::FractionalPacking,
        evidence: Evidence::Fractional(FractionalEvidence {
            nu_f,
            exact,
            threshold,
        }),
    }
}

/// Tries to build a witness: `k` spanning trees from the forest union,
/// `F` as a maximum extra forest, then tree/forest swaps that grow the
/// largest component of `F`. Never refutes.
pub fn certify_p(g: &Graph, q: PQuery) -> PVerdict {
    let n = g.order();
    if n < 2 {
        return PVerdict::unknown(Stage::Constructive);
    }
    let mut fu = union_of_edges(n, g.edges(), q.k);
    if fu.assigned() < q.k * (n - 1) {
        return PVerdict::unknown(Stage::Constructive);
    }
    // Seeded saturation never shrinks a forest, so the trees stay spanning.
    fu.add_forest();
    fu.saturate();
    let mut forests = fu.decomposition().into_forests();
    let forest = forests.pop().unwrap_or_default();
    if !Threshold::new(q.d, n).met_by(forest.len()) {
        return PVerdict::unknown(Stage::Constructive);
    }
    let mut trees = forests;
    let mut forest = forest;
    if !forest_shape_ok(n, &forest, q.d) {
        swap_search(n, q.d, &mut trees, &mut forest);
        if !forest_shape_ok(n, &forest, q.d) {
            return PVerdict::unknown(Stage::Constructive);
        }
    }
    trees.push(forest);
    let d = ForestDecomposition::new(n, trees);
    debug_assert_eq!(verify_certificate(g, q, &d), Ok(()));
    if verify_certificate(g, q, &d).is_err() {
        return PVerdict::unknown(Stage::Constructive);
    }
    PVerdict::certified(Stage::Constructive, d)
}

/// Steepest-ascent on the sorted component edge counts of `F`. A move takes
/// a tree edge `f` joining two components of `F` and an `F` edge `h` that
/// reconnects the tree after `f` leaves: `T − f + h` stays spanning and
/// `F − h + f` stays a forest of the same size.
fn swap_search(n: usize, d: usize, trees: &mut [Vec<Edge>], forest: &mut [Edge]) {
    let mut score = component_edge_counts(n, forest);
    for _ in 0..MAX_SWAP_MOVES {
        if forest_shape_ok(n, forest, d) {
            return;
        }
        let comp = forest_components(n, forest);
        let mut best: Option<(Vec<usize>, usize, usize, usize)> = None;
        for (ti, tree) in trees.iter().enumerate() {
            for (fi, &(a, b)) in tree.iter().enumerate() {
                if comp[a] == comp[b] {
                    continue;
                }
                let side = tree_side(n, tree, fi, a);
                for (hi, &(x, y)) in forest.iter().enumerate() {
                    if side[x] == side[y] {
                        continue;
                    }
                    let mut candidate = forest.to_vec();
                    candidate[hi] = (a, b);
                    let s = component_edge_counts(n, &candidate);
                    let better = match &best {
                        Some((bs, ..)) => s.cmp(bs) == Ordering::Greater,
                        None => s.cmp(&score) == Ordering::Greater,
                    };
                    if better {
                        best = Some((s, ti, fi, hi));
                    }
                }
            }
        }
        match best {
            Some((s, ti, fi, hi)) => {
                std::mem::swap(&mut trees[ti][fi], &mut forest[hi]);
                score = s;
            }
            None => return,
        }
    }
}

fn forest_components(n: usize, forest: &[Edge]) -> Vec<usize> {
    let mut ds = DisjointSet::new(n);
    for &(u, v) in forest {
        ds.union(u, v);
    }
    (0..n).map(|v| ds.find(v)).collect()
}

/// Marks the side containing `root` after deleting edge `skip` from `tree`.
fn tree_side(n: usize, tree: &[Edge], skip: usize, root: usize) -> Vec<bool> {
    let mut ds = DisjointSet::new(n);
    for (i, &(u, v)) in tree.iter().enumerate() {
        if i != skip {
            ds.union(u, v);
        }
    }
    let r = ds.find(root);
    (0..n).map(|v| ds.find(v) == r).collect()
}

impl FractionalEvidence {
    /// Margin `ν_f − (k + (d − 1)/d)`.
    pub fn margin(&self) -> Rational {
        self.nu_f - self.threshold
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, fixture_h1, petersen};

    fn q(k: usize, d: usize) -> PQuery {
        PQuery::new(k, d).unwrap()
    }

    #[test]
    fn nuf_examples() {
        let v = sufficient_by_nuf(&complete(6).unwrap(), q(2, 5));
        assert!(v.is_certified());
        match v.evidence {
            Evidence::Fractional(e) => {
                assert_eq!(e.nu_f, Rational::from_integer(3));
                assert!(e.exact);
                assert_eq!(e.margin(), Rational::new(1, 5));
            }
            _ => panic!("expected fractional evidence"),
        }
        assert!(sufficient_by_nuf(&petersen(), q(1, 3)).is_unknown());
        let two = disjoint_union(&complete(3).unwrap(), &complete(3).unwrap());
        assert!(sufficient_by_nuf(&two, q(1, 2)).is_unknown());
    }

    #[test]
    fn constructive_examples() {
        let g = complete(4).unwrap();
        let v = certify_p(&g, q(1, 3));
        assert!(v.is_certified());
        assert_eq!(verify_certificate(&g, q(1, 3), &v.decomposition(4).unwrap()), Ok(()));

        let g = complete(10).unwrap();
        let v = certify_p(&g, q(3, 9));
        assert!(v.is_certified());
        assert_eq!(verify_certificate(&g, q(3, 9), &v.decomposition(10).unwrap()), Ok(()));

        // The drawn witness of H1 fails (c), but another one exists.
        let g = fixture_h1();
        let v = certify_p(&g, q(2, 4));
        assert!(v.is_certified());
        assert_eq!(verify_certificate(&g, q(2, 4), &v.decomposition(11).unwrap()), Ok(()));
        assert!(certify_p(&petersen(), q(1, 3)).is_unknown());
    }

    #[test]
    fn swap_search_grows_a_component() {
        // Path tree 0-1-2-3-4 and F = {02, 13}: trading tree edge 12 for 02
        // leaves F = {12, 13}, a single 2-edge component.
        let mut trees = vec![vec![(0, 1), (1, 2), (2, 3), (3, 4)]];
        let mut forest = vec![(0, 2), (1, 3)];
        swap_search(5, 2, &mut trees, &mut forest);
        assert_eq!(component_edge_counts(5, &forest), vec![2]);
        let mut ds = DisjointSet::new(5);
        assert_eq!(trees[0].len(), 4);
        assert!(trees[0].iter().all(|&(u, v)| ds.union(u, v)));
    }
}

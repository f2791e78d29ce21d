use super::{PQuery, PVerdict, Refutation, RefutationKind, Stage, Threshold};
use crate::graph::{Edge, Graph};
use crate::packing::{tau, union_of_edges, ForestDecomposition};

/// Default cap on enumeration nodes (one node per forest visited).
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Complete decision by enumerating candidate forests `F` in canonical edge
/// order and testing `G − F` for `k` edge-disjoint spanning trees.
///
/// Certified with a witness if some `F` works, refuted once the search space
/// is exhausted, unknown if `budget` nodes were not enough.
pub fn refute_exhaustive(g: &Graph, q: PQuery, budget: u64) -> PVerdict {
    let n = g.order();
    if n < 2 {
        return PVerdict::unknown(Stage::Exhaustive);
    }
    let (t, _) = tau(g).expect("n ≥ 2");
    if t < q.k {
        return PVerdict::refuted(
            Stage::Exhaustive,
            Refutation::new(RefutationKind::Exhaustive, &[("tau", t as i64), ("k", q.k as i64)]),
        );
    }
    let s_min = Threshold::new(q.d, n).min_edges();
    let s_max = (n - 1).min(g.size() - q.k * (n - 1));
    if s_min > s_max {
        return PVerdict::refuted(
            Stage::Exhaustive,
            Refutation::new(
                RefutationKind::Exhaustive,
                &[("min_forest", s_min as i64), ("max_forest", s_max as i64), ("nodes", 0)],
            ),
        );
    }
    let mut search = Search::new(g, q, s_min, s_max, budget);
    match search.run(0) {
        Outcome::Found(d) => PVerdict::certified(Stage::Exhaustive, d),
        Outcome::Exhausted => PVerdict::refuted(
            Stage::Exhaustive,
            Refutation::new(
                RefutationKind::Exhaustive,
                &[
                    ("min_forest", s_min as i64),
                    ("max_forest", s_max as i64),
                    ("nodes", search.nodes as i64),
                ],
            ),
        ),
        Outcome::OutOfBudget => PVerdict::unknown(Stage::Exhaustive),
    }
}

enum Outcome {
    Found(ForestDecomposition),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    q: PQuery,
    s_min: usize,
    s_max: usize,
    budget: u64,
    nodes: u64,
    // union-find without path compression so merges can be undone
    parent: Vec<usize>,
    size: Vec<usize>,
    comp_edges: Vec<usize>,
    largest: usize,
    deg_f: Vec<usize>,
    in_f: Vec<bool>,
    forest: Vec<Edge>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, q: PQuery, s_min: usize, s_max: usize, budget: u64) -> Self {
        let n = g.order();
        Search {
            g,
            q,
            s_min,
            s_max,
            budget,
            nodes: 0,
            parent: (0..n).collect(),
            size: vec![1; n],
            comp_edges: vec![0; n],
            largest: 0,
            deg_f: vec![0; n],
            in_f: vec![false; g.size()],
            forest: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn shape_ok(&self) -> bool {
        self.forest.len() + 1 == self.g.order() || self.largest >= self.q.d
    }

    /// Decomposition of `G − F` into `k` spanning trees, if one exists.
    fn trees_in_complement(&self) -> Option<Vec<Vec<Edge>>> {
        let n = self.g.order();
        let rest: Vec<Edge> = self
            .g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| !self.in_f[i])
            .map(|(_, &e)| e)
            .collect();
        let fu = union_of_edges(n, &rest, self.q.k);
        (fu.assigned() == self.q.k * (n - 1)).then(|| fu.decomposition().into_forests())
    }

    fn run(&mut self, start: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::OutOfBudget;
        }
        if self.forest.len() >= self.s_min {
            // Removing more edges only shrinks G − F, so a failed tree test
            // rules out every extension of F.
            match self.trees_in_complement() {
                None => return Outcome::Exhausted,
                Some(mut trees) if self.shape_ok() => {
                    trees.push(self.forest.clone());
                    return Outcome::Found(ForestDecomposition::new(self.g.order(), trees));
                }
                Some(_) => {}
            }
        }
        if self.forest.len() == self.s_max {
            return Outcome::Exhausted;
        }
        let m = self.g.size();
        for j in start..m {
            if self.forest.len() + (m - j) < self.s_min {
                break;
            }
            let (u, v) = self.g.edges()[j];
            // every vertex keeps at least k edges for the trees
            if self.g.degree(u) - self.deg_f[u] <= self.q.k || self.g.degree(v) - self.deg_f[v] <= self.q.k {
                continue;
            }
            let (ru, rv) = (self.find(u), self.find(v));
            if ru == rv {
                continue;
            }
            let (big, small) = if self.size[ru] >= self.size[rv] { (ru, rv) } else { (rv, ru) };
            let saved_largest = self.largest;
            let saved_edges = self.comp_edges[big];
            self.parent[small] = big;
            self.size[big] += self.size[small];
            self.comp_edges[big] += self.comp_edges[small] + 1;
            self.largest = self.largest.max(self.comp_edges[big]);
            self.deg_f[u] += 1;
            self.deg_f[v] += 1;
            self.in_f[j] = true;
            self.forest.push((u, v));

            let out = self.run(j + 1);

            self.forest.pop();
            self.in_f[j] = false;
            self.deg_f[u] -= 1;
            self.deg_f[v] -= 1;
            self.largest = saved_largest;
            self.comp_edges[big] = saved_edges;
            self.size[big] -= self.size[small];
            self.parent[small] = small;

            match out {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        Outcome::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, fixture_h1, petersen};
    use crate::property_p::verify_certificate;

    fn q(k: usize, d: usize) -> PQuery {
        PQuery::new(k, d).unwrap()
    }

    #[test]
    fn k4_certified() {
        let g = complete(4).unwrap();
        let v = refute_exhaustive(&g, q(1, 3), DEFAULT_NODE_BUDGET);
        assert!(v.is_certified());
        assert_eq!(verify_certificate(&g, q(1, 3), &v.decomposition(4).unwrap()), Ok(()));
    }

    #[test]
    fn petersen_refuted() {
        assert!(refute_exhaustive(&petersen(), q(1, 3), DEFAULT_NODE_BUDGET).is_refuted());
        assert!(refute_exhaustive(&petersen(), q(2, 2), DEFAULT_NODE_BUDGET).is_refuted());
    }

    #[test]
    fn h1_has_a_witness() {
        let g = fixture_h1();
        let v = refute_exhaustive(&g, q(2, 4), DEFAULT_NODE_BUDGET);
        assert!(v.is_certified());
        let d = v.decomposition(11).unwrap();
        assert_eq!(verify_certificate(&g, q(2, 4), &d), Ok(()));
        assert!(refute_exhaustive(&g, q(2, 5), DEFAULT_NODE_BUDGET).is_refuted());
    }

    #[test]
    fn tiny_budget_is_unknown() {
        assert!(refute_exhaustive(&fixture_h1(), q(2, 4), 5).is_unknown());
    }
}

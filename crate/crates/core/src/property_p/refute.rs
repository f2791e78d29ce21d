use super::{PQuery, PVerdict, PropertyError, Refutation, RefutationKind, Stage};
use crate::graph::{Graph, VertexSet};
use crate::packing::tau;

/// Refutes when `τ(G) < k` or when the edges left after any `k` spanning
/// trees cannot meet the forest threshold: `d·(m − k(n − 1)) ≤ (d − 1)(n − 1)`.
pub fn refute_by_counting(g: &Graph, q: PQuery) -> PVerdict {
    let n = g.order();
    if n < 2 {
        return PVerdict::unknown(Stage::Counting);
    }
    let (t, _) = tau(g).expect("n ≥ 2");
    if t < q.k {
        return PVerdict::refuted(
            Stage::Counting,
            Refutation::new(RefutationKind::Counting, &[("tau", t as i64), ("k", q.k as i64)]),
        );
    }
    let (n, m, k, d) = (n as i64, g.size() as i64, q.k as i64, q.d as i64);
    let residual = m - k * (n - 1);
    let lhs = d * residual;
    let rhs = (d - 1) * (n - 1);
    if lhs <= rhs {
        return PVerdict::refuted(
            Stage::Counting,
            Refutation::new(
                RefutationKind::Counting,
                &[
                    ("n", n),
                    ("m", m),
                    ("k", k),
                    ("d", d),
                    ("tau", t as i64),
                    ("residual", residual),
                    ("lhs", lhs),
                    ("rhs", rhs),
                ],
            ),
        );
    }
    PVerdict::unknown(Stage::Counting)
}

/// Budget argument across the cut `(U, W)`.
///
/// With `c = e(U, W)`: `c < k` leaves some tree without a cross edge. With
/// `c = k` each tree spends exactly one cross edge and restricts to spanning
/// trees of `G[U]` and `G[W]`, so `F` has at most
/// `B = min(|U| − 1, e(U) − k(|U| − 1)) + min(|W| − 1, e(W) − k(|W| − 1))`
/// edges. `c > k` is inconclusive.
pub fn refute_by_bipartition_budget(g: &Graph, q: PQuery, u: &VertexSet) -> Result<PVerdict, PropertyError> {
    let n = g.order();
    if u.is_empty() || u.len() >= n || u.iter().any(|v| v >= n) {
        return Err(PropertyError::ImproperSide);
    }
    let w = u.complement(n);
    let c = g.cross_edge_count(u, &w)?;
    let side = |r: Refutation| Refutation { side: Some(u.clone()), ..r };
    let k = q.k as i64;
    if (c as i64) < k {
        return Ok(PVerdict::refuted(
            Stage::BipartitionBudget,
            side(Refutation::new(
                RefutationKind::BipartitionBudget,
                &[("cross", c as i64), ("k", k)],
            )),
        ));
    }
    if c > q.k {
        return Ok(PVerdict::unknown(Stage::BipartitionBudget));
    }
    let (nu, nw) = (u.len() as i64, w.len() as i64);
    let (eu, ew) = (g.edges_within(u) as i64, g.edges_within(&w) as i64);
    let spare_u = eu - k * (nu - 1);
    let spare_w = ew - k * (nw - 1);
    let mut numbers = vec![
        ("cross", c as i64),
        ("k", k),
        ("d", q.d as i64),
        ("n", n as i64),
        ("side_order", nu),
        ("other_order", nw),
        ("side_edges", eu),
        ("other_edges", ew),
        ("side_spare", spare_u),
        ("other_spare", spare_w),
    ];
    if spare_u < 0 || spare_w < 0 {
        return Ok(PVerdict::refuted(
            Stage::BipartitionBudget,
            side(Refutation::new(RefutationKind::BipartitionBudget, &numbers)),
        ));
    }
    let budget = (nu - 1).min(spare_u) + (nw - 1).min(spare_w);
    let d = q.d as i64;
    let lhs = d * budget;
    let rhs = (d - 1) * (n as i64 - 1);
    numbers.extend([("budget", budget), ("lhs", lhs), ("rhs", rhs)]);
    if lhs <= rhs {
        Ok(PVerdict::refuted(
            Stage::BipartitionBudget,
            side(Refutation::new(RefutationKind::BipartitionBudget, &numbers)),
        ))
    } else {
        Ok(PVerdict::unknown(Stage::BipartitionBudget))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_b, complete, complete_bipartite, disjoint_union, fixture_h2, petersen};

    fn q(k: usize, d: usize) -> PQuery {
        PQuery::new(k, d).unwrap()
    }

    fn num(v: &PVerdict, key: &str) -> i64 {
        v.refutation().unwrap().numbers[key]
    }

    #[test]
    fn counting_examples() {
        let v = refute_by_counting(&petersen(), q(1, 3));
        assert!(v.is_refuted());
        assert_eq!((num(&v, "residual"), num(&v, "lhs"), num(&v, "rhs")), (6, 18, 18));

        let v = refute_by_counting(&complete(5).unwrap(), q(2, 4));
        assert_eq!((num(&v, "residual"), num(&v, "lhs"), num(&v, "rhs")), (2, 8, 12));

        let v = refute_by_counting(&complete_bipartite(7, 7).unwrap(), q(3, 7));
        assert_eq!((num(&v, "residual"), num(&v, "lhs"), num(&v, "rhs")), (10, 70, 78));

        let v = refute_by_counting(&complete(5).unwrap(), q(3, 2));
        assert_eq!(num(&v, "tau"), 2);

        let two = disjoint_union(&complete(4).unwrap(), &complete(4).unwrap());
        assert!(refute_by_counting(&two, q(1, 1)).is_refuted());
        assert!(refute_by_counting(&complete(10).unwrap(), q(3, 9)).is_unknown());
    }

    #[test]
    fn budget_on_h2() {
        let g = fixture_h2();
        let v = refute_by_bipartition_budget(&g, q(7, 15), &VertexSet::range(0, 16)).unwrap();
        assert!(v.is_refuted());
        assert_eq!(num(&v, "budget"), 29);
        assert_eq!((num(&v, "lhs"), num(&v, "rhs")), (435, 448));
        assert_eq!((num(&v, "side_spare"), num(&v, "other_spare")), (13, 24));
    }

    #[test]
    fn budget_other_cases() {
        let g = build_b(12, 5, 2).unwrap();
        let v = refute_by_bipartition_budget(&g, q(3, 4), &VertexSet::range(0, 5)).unwrap();
        assert!(v.is_refuted());
        assert_eq!(num(&v, "cross"), 2);

        let k4 = complete(4).unwrap();
        let u = VertexSet::new(4, [0]).unwrap();
        assert!(refute_by_bipartition_budget(&k4, q(1, 3), &u).unwrap().is_unknown());
        assert_eq!(
            refute_by_bipartition_budget(&k4, q(1, 3), &VertexSet::range(0, 4)),
            Err(PropertyError::ImproperSide)
        );
    }
}

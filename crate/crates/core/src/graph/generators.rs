use super::{edge, Graph, GraphError};

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    DisjointUnion(Box<Graph>, Box<Graph>),
}

pub fn generate(kind: GraphKind) -> Result<Graph, GraphError> {
    match kind {
        GraphKind::Complete(n) => complete(n),
        GraphKind::CompleteBipartite(a, b) => complete_bipartite(a, b),
        GraphKind::Petersen => Ok(petersen()),
        GraphKind::DisjointUnion(g, h) => Ok(disjoint_union(&g, &h)),
    }
}

fn clique_edges(lo: usize, hi: usize) -> impl Iterator<Item = (usize, usize)> {
    (lo..hi).flat_map(move |u| (u + 1..hi).map(move |v| (u, v)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("K_n needs n ≥ 1".into()));
    }
    Graph::new(n, clique_edges(0, n))
}

/// `K_{a,b}` with side A on `0..a` and side B on `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::InvalidParameter(
            "K_{a,b} needs a, b ≥ 1".into(),
        ));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes `(i, i+5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::new(10, outer.chain(inner).chain(spokes)).expect("petersen edges are valid")
}

/// `G ∪ H` with H's labels shifted by `|V(G)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(g.order() + h.order(), edges).expect("disjoint union of simple graphs is simple")
}

/// `K_s` on `0..s`, `K_{n-s}` on `s..n`, and `k` edges from vertex 0 to
/// `s..s+k`.
pub fn build_b(n: usize, s: usize, k: usize) -> Result<Graph, GraphError> {
    if s == 0 {
        return Err(GraphError::InvalidParameter("B_{n,s}^k needs s ≥ 1".into()));
    }
    if n < s + k {
        return Err(GraphError::InvalidParameter(format!(
            "B_{{n,s}}^k needs n ≥ s + k (n={n}, s={s}, k={k})"
        )));
    }
    let cross: Vec<_> = (0..k).map(|j| (0, s + j)).collect();
    build_g_family(n, s, &cross)
}

/// Member of the family `K_s ∪ K_{n-s}` plus the given cross edges. Each
/// pair is `(i, j)` with `i` on the `K_s` side and `j` on the other.
pub fn build_g_family(n: usize, s: usize, cross: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if s == 0 || s > n {
        return Err(GraphError::InvalidParameter(format!(
            "clique split s={s} invalid for n={n}"
        )));
    }
    for &(i, j) in cross {
        if i >= s || j < s || j >= n {
            return Err(GraphError::InvalidParameter(format!(
                "cross pair ({i}, {j}) does not join K_{s} to K_{}",
                n - s
            )));
        }
    }
    let edges = clique_edges(0, s)
        .chain(clique_edges(s, n))
        .chain(cross.iter().map(|&(i, j)| edge(i, j)));
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_five() {
        let g = complete(5).unwrap();
        assert_eq!(g.size(), 10);
        assert_eq!(g.min_degree(), 4);
        assert!(complete(0).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn union_of_cliques() {
        let g = disjoint_union(&complete(5).unwrap(), &complete(6).unwrap());
        assert_eq!(g.order(), 11);
        assert_eq!(g.size(), 25);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn bipartite_sides() {
        let g = complete_bipartite(3, 2).unwrap();
        assert_eq!(g.size(), 6);
        assert!(g.has_edge(0, 3) && !g.has_edge(0, 1) && !g.has_edge(3, 4));
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn b_graph_counts() {
        let g = build_b(11, 5, 1).unwrap();
        assert_eq!(g.size(), 26);
        assert_eq!(g.min_degree(), 4);
        let g0 = build_b(11, 5, 0).unwrap();
        assert!(!g0.is_connected());
        assert!(build_b(5, 4, 2).is_err());
    }

    #[test]
    fn b_is_a_family_member() {
        let b = build_b(12, 5, 3).unwrap();
        let g = build_g_family(12, 5, &[(0, 5), (0, 6), (0, 7)]).unwrap();
        assert_eq!(b, g);
    }

    #[test]
    fn family_member_counts() {
        let g = build_g_family(11, 5, &[(0, 5), (1, 6)]).unwrap();
        assert_eq!(g.size(), 27);
        assert!(g.is_connected());
        assert!(matches!(
            build_g_family(11, 5, &[(0, 5), (0, 5)]),
            Err(GraphError::DuplicateEdge(0, 5))
        ));
        assert!(build_g_family(11, 5, &[(5, 6)]).is_err());
    }

    #[test]
    fn b_min_degree_is_delta() {
        for delta in 2..8 {
            for k in 1..=delta {
                let n = 2 * delta + 3;
                let g = build_b(n, delta + 1, k - 1).unwrap();
                assert_eq!(g.min_degree(), delta, "delta={delta} k={k}");
            }
        }
    }
}

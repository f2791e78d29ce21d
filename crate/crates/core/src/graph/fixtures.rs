//! Counterexample graphs.
//!
//! `H1` vertices, in label order, sit at the drawing coordinates
//! (−2,2) (−1,2) (−1,1) (−2,1) (1,2) (1,1) (2,2) (2,1) (−1,−½) (1,−½) (0,−1).

use super::{Edge, Graph};

/// Forest drawn dashed: three paths with 3, 3 and 2 edges.
pub const H1_DASHED: [Edge; 8] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (4, 5),
    (5, 6),
    (6, 7),
    (8, 9),
    (9, 10),
];

/// First spanning tree (bold).
pub const H1_BOLD: [Edge; 10] = [
    (1, 3),
    (0, 3),
    (0, 2),
    (3, 8),
    (8, 10),
    (7, 10),
    (5, 7),
    (5, 9),
    (4, 7),
    (4, 6),
];

/// Second spanning tree (thin).
pub const H1_THIN: [Edge; 10] = [
    (1, 4),
    (4, 10),
    (6, 10),
    (6, 9),
    (7, 9),
    (2, 5),
    (2, 8),
    (0, 8),
    (3, 10),
    (2, 9),
];

/// 11 vertices, 28 edges, minimum degree 4.
pub fn fixture_h1() -> Graph {
    let edges = H1_DASHED.iter().chain(&H1_BOLD).chain(&H1_THIN).copied();
    Graph::new(11, edges).expect("H1 transcription is a simple graph")
}

/// `K16` on 0..15 minus {0,1} and {2,3}, `K17` on 16..32, and vertex 16
/// joined to 0..6.
pub fn fixture_h2() -> Graph {
    let removed = [(0, 1), (2, 3)];
    let left = (0..16usize)
        .flat_map(|u| (u + 1..16).map(move |v| (u, v)))
        .filter(|e| !removed.contains(e));
    let right = (16..33usize).flat_map(|u| (u + 1..33).map(move |v| (u, v)));
    let cross = (0..7).map(|u| (u, 16));
    Graph::new(33, left.chain(right).chain(cross)).expect("H2 is a simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1_counts() {
        let g = fixture_h1();
        assert_eq!(g.order(), 11);
        assert_eq!(g.size(), 28);
        assert_eq!(g.min_degree(), 4);
        let sum: usize = g.degrees().iter().sum();
        assert_eq!(sum, 56);
    }

    #[test]
    fn h1_drawn_sets() {
        let g = fixture_h1();
        assert!(g.is_forest(&H1_DASHED));
        assert!(g.is_forest(&H1_BOLD) && H1_BOLD.len() == 10);
        assert!(g.is_forest(&H1_THIN) && H1_THIN.len() == 10);
        let rest = g.delete_edges(&H1_DASHED).unwrap();
        assert_eq!(rest.size(), 20);
        assert!(rest.is_connected());
    }

    #[test]
    fn h2_counts() {
        let g = fixture_h2();
        assert_eq!(g.order(), 33);
        assert_eq!(g.size(), 261);
        assert_eq!(g.min_degree(), 15);
        let x = super::super::VertexSet::range(0, 16);
        let y = super::super::VertexSet::range(16, 33);
        assert_eq!(g.cross_edge_count(&x, &y).unwrap(), 7);
    }
}

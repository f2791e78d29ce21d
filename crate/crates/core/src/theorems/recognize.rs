use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Outcome of matching `G` against the family `B(n, s, k)`: cliques `K_s` and
/// `K_{n−s}` joined by `k` edges sharing the hub, a vertex of `K_s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BRecognition {
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hub: Option<usize>,
    /// `labeling[v]` is the vertex of `build_b(n, s, k)` that `v` maps to.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BParams {
    pub n: usize,
    pub s: usize,
    pub k: usize,
}

impl BRecognition {
    fn none() -> Self {
        BRecognition {
            matched: false,
            params: None,
            hub: None,
            labeling: None,
        }
    }
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().all(|&v| g.degree(v) >= vs.len() - 1)
        && vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Every way of reading `G` as `B(n, s, k)` with hub `h`, in hub order.
fn matches_at(g: &Graph, h: usize) -> Vec<(BParams, Vec<usize>)> {
    let n = g.order();
    let rest: Vec<usize> = (0..n).filter(|&v| v != h).collect();
    let without = VertexSet::new(n, rest.iter().copied()).expect("in range");
    let Ok(sub) = g.induced_subgraph(&without) else {
        return Vec::new();
    };
    let comps: Vec<Vec<usize>> = sub
        .components()
        .into_iter()
        .map(|c| c.iter().map(|i| rest[i]).collect())
        .collect();
    if comps.len() > 2 || !comps.iter().all(|c| is_clique(g, c)) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let sides: Vec<(Vec<usize>, Vec<usize>)> = match comps.as_slice() {
        [] => vec![(Vec::new(), Vec::new())],
        [c] => vec![(Vec::new(), c.clone()), (c.clone(), Vec::new())],
        [a, b] => vec![(a.clone(), b.clone()), (b.clone(), a.clone())],
        _ => unreachable!(),
    };
    for (own, other) in sides {
        if !own.iter().all(|&v| g.has_edge(h, v)) {
            continue;
        }
        let s = own.len() + 1;
        let (joined, apart): (Vec<usize>, Vec<usize>) = other.iter().partition(|&&v| g.has_edge(h, v));
        let k = joined.len();
        let mut labeling = vec![0; n];
        labeling[h] = 0;
        for (i, &v) in own.iter().enumerate() {
            labeling[v] = 1 + i;
        }
        for (i, &v) in joined.iter().chain(&apart).enumerate() {
            labeling[v] = s + i;
        }
        out.push((BParams { n, s, k }, labeling));
    }
    out
}

/// First structural match of `G` as some `B(n, s, k)`, scanning hubs in
/// vertex order.
pub fn recognize_b(g: &Graph) -> BRecognition {
    for h in 0..g.order() {
        if let Some((p, labeling)) = matches_at(g, h).into_iter().next() {
            return BRecognition {
                matched: true,
                params: Some(p),
                hub: Some(h),
                labeling: Some(labeling),
            };
        }
    }
    BRecognition::none()
}

/// Whether `G ≅ B(n, s, k)` for these exact parameters.
pub fn is_b_graph(g: &Graph, s: usize, k: usize) -> BRecognition {
    for h in 0..g.order() {
        for (p, labeling) in matches_at(g, h) {
            if p.s == s && p.k == k {
                return BRecognition {
                    matched: true,
                    params: Some(p),
                    hub: Some(h),
                    labeling: Some(labeling),
                };
            }
        }
    }
    BRecognition::none()
}

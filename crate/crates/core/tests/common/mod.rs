#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treepack::{Graph, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// Random graph of order `n` with exactly `m` edges.
pub fn gnm(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    let mut all = pairs(n);
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, all).unwrap()
}

/// `K_n` with `j` random edges removed.
pub fn complete_minus(rng: &mut ChaCha8Rng, n: usize, j: usize) -> Graph {
    gnm(rng, n, n * (n - 1) / 2 - j)
}

/// Graph on `2..=n_max` vertices, each pair present independently.
pub fn graph_strategy(n_min: usize, n_max: usize) -> impl Strategy<Value = Graph> {
    (n_min..=n_max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

pub fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for &(u, v) in edges {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Every set partition of `0..n` as a label vector, by plain recursion.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            rec(i + 1, n, labels, blocks.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Minimum of cross/(parts − 1) over partitions with at least two parts.
pub fn nu_f_oracle(g: &Graph) -> Rational {
    let mut best: Option<Rational> = None;
    for labels in all_partitions(g.order()) {
        let parts = labels.iter().max().map_or(0, |m| m + 1);
        if parts < 2 {
            continue;
        }
        let cross = g.edges().iter().filter(|&&(u, v)| labels[u] != labels[v]).count();
        let r = Rational::new(cross as i64, parts as i64 - 1);
        best = Some(best.map_or(r, |b| b.min(r)));
    }
    best.expect("n ≥ 2")
}

/// Size of the largest union of `t` forests, from the matroid union rank
/// formula `min over X ⊆ E of |E ∖ X| + t·r(X)`.
pub fn union_rank_oracle(g: &Graph, t: usize) -> usize {
    let m = g.size();
    assert!(m <= 16, "subset enumeration only");
    let edges = g.edges();
    (0u32..1 << m)
        .map(|mask| {
            let x: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let rank = g.order() - component_count(g.order(), &x);
            (m - x.len()) + t * rank
        })
        .min()
        .unwrap()
}

pub fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

//! Fractional packing number
//! `ν_f(G) = min_{|P| ≥ 2} Σ_{i<j} e(V_i, V_j) / (|P| − 1)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{tau, PackingError, PartitionCertificate};
use crate::graph::{canonical_rgs, Graph, VertexPartition};
use crate::Rational;

/// Largest order for which `nu_f_exact` enumerates all set partitions.
pub const DEFAULT_EXACT_LIMIT: usize = 12;

/// Seeded random restarts of the partition local search.
pub const LOCAL_SEARCH_RESTARTS: u64 = 20;

/// `a/b < c/d` for nonnegative numerators and positive denominators.
#[inline]
fn less(a: usize, b: usize, c: usize, d: usize) -> bool {
    (a as u128) * (d as u128) < (c as u128) * (b as u128)
}

struct Enumeration<'a> {
    n: usize,
    earlier: &'a [Vec<usize>],
    labels: Vec<usize>,
    // incumbent ratio best_cross / best_den
    best_cross: usize,
    best_den: usize,
    best_labels: Vec<usize>,
    seeded: bool,
}

impl Enumeration<'_> {
    fn dfs(&mut self, v: usize, used: usize, cross: usize) {
        if v == self.n {
            if used >= 2 {
                let den = used - 1;
                let better = less(cross, den, self.best_cross, self.best_den)
                    || (self.seeded && cross * self.best_den == self.best_cross * den);
                if better {
                    self.best_cross = cross;
                    self.best_den = den;
                    self.best_labels.clone_from(&self.labels);
                    self.seeded = false;
                }
            }
            return;
        }
        let p_max = used + (self.n - v);
        if p_max >= 2 && less(self.best_cross, self.best_den, cross, p_max - 1) {
            return;
        }
        for b in 0..=used {
            let delta = self.earlier[v]
                .iter()
                .filter(|&&u| self.labels[u] != b)
                .count();
            self.labels[v] = b;
            self.dfs(v + 1, used + usize::from(b == used), cross + delta);
        }
    }
}

/// Exact `ν_f(G)` by enumerating restricted-growth strings, together with
/// the lexicographically first minimizing partition.
pub fn nu_f_exact(g: &Graph, max_n: usize) -> Result<(Rational, PartitionCertificate), PackingError> {
    let n = g.order();
    if n < 2 {
        return Err(PackingError::TooSmall(n));
    }
    if n > max_n {
        return Err(PackingError::ExceedsExactLimit { n, limit: max_n });
    }
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).filter(|&u| u < v).collect())
        .collect();
    let mut search = Enumeration {
        n,
        earlier: &earlier,
        labels: vec![0; n],
        best_cross: g.size(),
        best_den: n - 1,
        best_labels: (0..n).collect(),
        seeded: true,
    };
    search.dfs(0, 0, 0);
    let cert = PartitionCertificate::from_partition(g, VertexPartition::from_labels(&search.best_labels))
        .expect("enumeration only records partitions with two or more parts");
    Ok((cert.ratio, cert))
}

/// Bracket on `ν_f(G)`: `τ(G) ≤ ν_f(G) ≤ upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NufBounds {
    pub lower: Rational,
    pub upper: Rational,
    pub upper_certificate: PartitionCertificate,
}

/// Local-search state: block label per vertex (contiguous `0..p`).
#[derive(Clone)]
struct State {
    labels: Vec<usize>,
    sizes: Vec<usize>,
    cross: usize,
}

impl State {
    fn new(g: &Graph, labels: &[usize]) -> Self {
        let labels = canonical_rgs(labels);
        let p = labels.iter().max().map_or(0, |&m| m + 1);
        let mut sizes = vec![0; p];
        for &l in &labels {
            sizes[l] += 1;
        }
        State {
            cross: g.cross_total(&labels),
            labels,
            sizes,
        }
    }

    fn parts(&self) -> usize {
        self.sizes.len()
    }
}

enum Move {
    Relocate { v: usize, to: usize },
    SplitOff { v: usize },
    Merge { a: usize, b: usize },
    SplitComponents { block: usize },
}

fn neighbor_counts(g: &Graph, labels: &[usize], v: usize, p: usize) -> Vec<usize> {
    let mut c = vec![0; p];
    for w in g.neighbors(v) {
        c[labels[w]] += 1;
    }
    c
}

fn block_components(g: &Graph, labels: &[usize], block: usize) -> Vec<Vec<usize>> {
    let members: Vec<usize> = (0..g.order()).filter(|&v| labels[v] == block).collect();
    let mut ds = crate::graph::DisjointSet::new(g.order());
    for &(u, v) in g.edges() {
        if labels[u] == block && labels[v] == block {
            ds.union(u, v);
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for v in members {
        let r = ds.find(v);
        match roots.iter().position(|&x| x == r) {
            Some(i) => comps[i].push(v),
            None => {
                roots.push(r);
                comps.push(vec![v]);
            }
        }
    }
    comps
}

/// Steepest descent over relocate / split / merge moves.
fn descend(g: &Graph, start: &[usize]) -> State {
    let mut s = State::new(g, start);
    let limit = 4 * g.order() * g.order() + 16;
    for _ in 0..limit {
        let p = s.parts();
        if p < 2 {
            break;
        }
        let mut best: Option<(usize, usize, Move)> = None;
        let consider = |cross: usize, parts: usize, mv: Move, best: &mut Option<(usize, usize, Move)>| {
            if parts < 2 {
                return;
            }
            let improves = match best {
                Some((c, q, _)) => less(cross, parts - 1, *c, *q - 1),
                None => less(cross, parts - 1, s.cross, p - 1),
            };
            if improves {
                *best = Some((cross, parts, mv));
            }
        };
        for v in 0..g.order() {
            let a = s.labels[v];
            let counts = neighbor_counts(g, &s.labels, v, p);
            let emptied = s.sizes[a] == 1;
            for (to, &cnt) in counts.iter().enumerate() {
                if to == a {
                    continue;
                }
                let cross = s.cross + counts[a] - cnt;
                let parts = if emptied { p - 1 } else { p };
                consider(cross, parts, Move::Relocate { v, to }, &mut best);
            }
            if !emptied {
                consider(s.cross + counts[a], p + 1, Move::SplitOff { v }, &mut best);
            }
        }
        if p >= 3 {
            let mut between = vec![0usize; p * p];
            for &(u, v) in g.edges() {
                let (a, b) = (s.labels[u], s.labels[v]);
                if a != b {
                    between[a.min(b) * p + a.max(b)] += 1;
                }
            }
            for a in 0..p {
                for b in a + 1..p {
                    consider(s.cross - between[a * p + b], p - 1, Move::Merge { a, b }, &mut best);
                }
            }
        }
        for block in 0..p {
            let comps = block_components(g, &s.labels, block).len();
            if comps > 1 {
                consider(s.cross, p + comps - 1, Move::SplitComponents { block }, &mut best);
            }
        }

        let Some((_, _, mv)) = best else { break };
        let mut labels = s.labels.clone();
        match mv {
            Move::Relocate { v, to } => labels[v] = to,
            Move::SplitOff { v } => labels[v] = p,
            Move::Merge { a, b } => labels.iter_mut().filter(|l| **l == b).for_each(|l| *l = a),
            Move::SplitComponents { block } => {
                for (i, comp) in block_components(g, &s.labels, block).iter().enumerate().skip(1) {
                    for &v in comp {
                        labels[v] = p + i - 1;
                    }
                }
            }
        }
        s = State::new(g, &labels);
    }
    s
}

/// Components after discarding edges whose endpoints share few common
/// neighbours; separates dense blocks joined by a handful of edges.
pub(crate) fn weak_edge_split(g: &Graph) -> Vec<usize> {
    let threshold = g.min_degree() / 2;
    let mut ds = crate::graph::DisjointSet::new(g.order());
    for &(u, v) in g.edges() {
        let common = g.neighbors(u).filter(|&w| g.has_edge(v, w)).count();
        if common >= threshold {
            ds.union(u, v);
        }
    }
    (0..g.order()).map(|v| ds.find(v)).collect()
}

fn random_start(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.gen_range(2..=n.min(4));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut labels = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        labels[v] = if i < p { i } else { rng.gen_range(0..p) };
    }
    labels
}

/// Lower bound `τ(G)` and an upper bound from the best partition found by
/// local search (deterministic starts plus seeds `0..20`).
pub fn nu_f_bounds(g: &Graph) -> Result<NufBounds, PackingError> {
    let n = g.order();
    let (t, _) = tau(g)?;
    let lower = Rational::from_integer(t as i64);

    let comps = g.components();
    let mut starts: Vec<Vec<usize>> = Vec::new();
    if comps.len() >= 2 {
        let mut labels = vec![0; n];
        for (i, c) in comps.iter().enumerate() {
            for v in c.iter() {
                labels[v] = i;
            }
        }
        starts.push(labels);
    }
    starts.push((0..n).collect());
    starts.push(weak_edge_split(g));
    starts.extend((0..LOCAL_SEARCH_RESTARTS).map(|seed| random_start(n, seed)));

    let results: Vec<State> = starts.par_iter().map(|s| descend(g, s)).collect();
    let best = results
        .into_iter()
        .filter(|s| s.parts() >= 2)
        .min_by(|x, y| {
            let (a, b) = (x.cross * (y.parts() - 1), y.cross * (x.parts() - 1));
            a.cmp(&b).then_with(|| x.labels.cmp(&y.labels))
        })
        .expect("singleton start always has two or more parts");
    let cert = PartitionCertificate::from_partition(g, VertexPartition::from_labels(&best.labels))
        .expect("at least two parts");
    Ok(NufBounds {
        lower,
        upper: cert.ratio,
        upper_certificate: cert,
    })
}

mod common;

use std::time::Instant;

use common::*;
use rand::seq::SliceRandom;
use rand::Rng;
use treepack::graph::{build_b, complete, fixture_h1, fixture_h2};
use treepack::theorems::{
    eval_t16, eval_t17, eval_t41, is_b_graph, lambda2_threshold, random_validation, recognize_b, Conclusion, Evaluator,
    Family, Status, ValidationConfig,
};
use treepack::{Graph, Rational};

fn binom2u(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Degree multiset and size admit some `B(n, s, k)` reading.
fn degrees_could_be_b(g: &Graph) -> bool {
    let n = g.order();
    let mut have = g.degrees();
    have.sort_unstable();
    (1..=n).any(|s| {
        (0..=n - s).any(|k| {
            if g.size() != binom2u(s) + binom2u(n - s) + k {
                return false;
            }
            let mut want = vec![s - 1 + k];
            want.extend(std::iter::repeat_n(s - 1, s - 1));
            want.extend(std::iter::repeat_n(n - s, k));
            want.extend(std::iter::repeat_n(n - s - 1, n - s - k));
            want.sort_unstable();
            want == have
        })
    })
}

#[test]
fn hub_joined_cliques_are_recognized_after_relabeling() {
    let mut r = rng(50);
    let mut cases = 0;
    for s in 5..=8 {
        for k in 0..=3 {
            for n in s + k..=14 {
                if n - s < k.max(1) {
                    continue;
                }
                let b = build_b(n, s, k).unwrap();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut r);
                let g = b.relabel(&perm).unwrap();
                let rec = is_b_graph(&g, s, k);
                assert!(rec.matched, "B({n},{s},{k})");
                let back = g.relabel(rec.labeling.as_ref().unwrap()).unwrap();
                assert_eq!(back.sorted_edges(), b.sorted_edges());
                let any = recognize_b(&g);
                let p = any.params.unwrap();
                assert_eq!(p.n, n);
                assert_eq!(build_b(p.n, p.s, p.k).unwrap().size(), g.size());
                let back = g.relabel(any.labeling.as_ref().unwrap()).unwrap();
                assert_eq!(back.sorted_edges(), build_b(p.n, p.s, p.k).unwrap().sorted_edges());
                assert!(degrees_could_be_b(&g));
                cases += 1;
            }
        }
    }
    assert!(cases > 100);
}

#[test]
fn other_graphs_are_rejected() {
    let mut r = rng(51);
    let mut rejected = 0;
    // one cross edge away from the hub
    for _ in 0..60 {
        let s = r.gen_range(4..=7);
        let n = r.gen_range(s + 4..=14);
        let k = r.gen_range(1..=3);
        let u = r.gen_range(1..s);
        let v = r.gen_range(s + k..n);
        let g = build_b(n, s, k).unwrap().with_edges([(u, v)]).unwrap();
        assert!(!recognize_b(&g).matched);
        rejected += 1;
    }
    // random graphs whose degrees rule the family out
    while rejected < 160 {
        let n = r.gen_range(5..=12);
        let x = r.gen_range(0.3..0.95);
        let g = gnp(&mut r, n, x);
        if degrees_could_be_b(&g) {
            continue;
        }
        assert!(!recognize_b(&g).matched, "{:?}", g.edges());
        rejected += 1;
    }
    assert!(!recognize_b(&fixture_h1()).matched);
    assert!(!recognize_b(&fixture_h2()).matched);
}

#[test]
fn zero_alpha_matches_adjacency_theorem() {
    let mut r = rng(52);
    for _ in 0..50 {
        let n = r.gen_range(6..=11);
        let j = r.gen_range(0..=4);
        let g = complete_minus(&mut r, n, j);
        for k in 1..=3 {
            let a = eval_t17(&g, k).unwrap();
            let b = eval_t41(&g, k, Rational::from_integer(0)).unwrap();
            assert_eq!(a.clauses, b.clauses);
            assert_eq!((a.hypothesis, a.conclusion, a.consistent), (b.hypothesis, b.conclusion, b.consistent));
            assert_eq!(a.verdict, b.verdict);
        }
    }
}

#[test]
fn thresholds_are_exact() {
    assert_eq!(lambda2_threshold(9, 3, Rational::from_integer(0)), Rational::new(74, 9));
    assert_eq!(lambda2_threshold(9, 3, Rational::new(1, 2)), Rational::new(155, 18));
    let r = eval_t17(&complete(10).unwrap(), 3).unwrap();
    assert_eq!(r.hypothesis, Status::Holds);
    assert_eq!(r.conclusion, Conclusion::PCertified);
}

#[test]
fn extremal_graph_is_a_boundary_case() {
    let b = build_b(25, 11, 2).unwrap();
    let r = eval_t16(&b, 3).unwrap();
    assert_eq!(r.hypothesis, Status::Boundary);
    assert_eq!(r.conclusion, Conclusion::ExtremalB);
    assert!(r.verdict.is_refuted());
    assert!(r.consistent);

    // one more cross edge from the hub
    let g = b.with_edges([(0, 13)]).unwrap();
    let r = eval_t16(&g, 3).unwrap();
    assert_eq!(r.clauses[2].status, Status::Holds);
    assert!(r.clauses[2].value > r.clauses[2].bound.unwrap());
    assert!(!r.b_recognition.as_ref().unwrap().matched);
    assert_eq!(r.conclusion, Conclusion::PCertified);
    assert!(r.consistent);
}

#[test]
fn evaluator_reuses_cached_values() {
    let ev = Evaluator::default();
    let g = complete(9).unwrap();
    let mut case = ev.case(&g).unwrap();
    let first = case.t17(2).unwrap();
    assert_eq!(case.t17(2).unwrap(), first);
    assert_eq!(case.t41(2, Rational::from_integer(0)).unwrap().verdict, first.verdict);
}

fn dense_and_b_config(seed: u64, samples: usize) -> ValidationConfig {
    ValidationConfig {
        seed,
        families: vec![
            Family::Dense { n_min: 10, n_max: 14, max_removed: 3, samples },
            Family::BSupergraph { n: 25, s: 11, k: 2, max_extra: 3, samples: 50 },
        ],
        k_values: vec![1, 2, 3],
        alphas: ["0", "1/4", "1/2", "3/4"].map(String::from).to_vec(),
        exhaustive_budget: 100_000_000,
    }
}

#[test]
fn validation_finds_no_violations() {
    let start = Instant::now();
    let report = random_validation(&dense_and_b_config(2024, 40)).unwrap();
    assert!(report.passed, "{:#?}", report.violations);
    assert_eq!(report.skipped, 0);
    assert_eq!(report.samples, 90);
    let t16 = &report.tallies["T1.6"];
    assert_eq!(t16.holds_refuted, 0);
    assert!(t16.hypothesis_boundary >= 1, "{t16:?}");
    for key in ["T1.7", "T4.1"] {
        let t = &report.tallies[key];
        assert_eq!(t.holds_refuted, 0);
        assert!(t.hypothesis_holds > 0);
    }
    eprintln!("validation over {} samples took {:?}", report.samples, start.elapsed());
}

#[test]
fn validation_is_reproducible() {
    let cfg = ValidationConfig {
        families: vec![Family::Gnp { n_min: 6, n_max: 9, p: 0.8, samples: 12 }],
        ..dense_and_b_config(9, 8)
    };
    let a = random_validation(&cfg).unwrap();
    let b = random_validation(&cfg).unwrap();
    assert_eq!(a, b);
}

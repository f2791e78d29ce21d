mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use treepack::graph::{complete, complete_bipartite, disjoint_union, fixture_h1, petersen, H1_BOLD, H1_THIN};
use treepack::packing::{max_forest_union, nu_f_bounds, nu_f_exact, tau, verify_decomposition};
use treepack::{ForestDecomposition, Graph, Rational};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn forest_union_matches_rank_formula(g in graph_strategy(2, 6), t in 1usize..=3) {
        prop_assume!(g.size() <= 12);
        let d = max_forest_union(&g, t);
        prop_assert_eq!(d.len(), t);
        prop_assert!(verify_decomposition(&g, &d, 0).is_ok());
        prop_assert_eq!(d.assigned(), union_rank_oracle(&g, t));
    }

    #[test]
    fn forest_union_is_monotone_in_t(g in graph_strategy(2, 9)) {
        let mut last = 0;
        for t in 1..=4 {
            let a = max_forest_union(&g, t).assigned();
            prop_assert!(a >= last);
            prop_assert!(a <= g.size() && a <= t * (g.order() - 1));
            last = a;
        }
    }

    #[test]
    fn nu_f_exact_agrees_with_brute_force(g in graph_strategy(2, 7)) {
        let (v, cert) = nu_f_exact(&g, 12).unwrap();
        prop_assert_eq!(v, nu_f_oracle(&g));
        prop_assert!(cert.verify(&g));
        prop_assert_eq!(cert.ratio, v);
        prop_assert!(v <= Rational::new(g.size() as i64, g.order() as i64 - 1));
        prop_assert_eq!(v == Rational::from_integer(0), !g.is_connected());
    }

    #[test]
    fn nu_f_bounds_sandwich(g in graph_strategy(2, 9)) {
        let b = nu_f_bounds(&g).unwrap();
        let exact = nu_f_oracle(&g);
        prop_assert!(b.lower <= exact && exact <= b.upper);
        prop_assert!(b.upper_certificate.verify(&g));
        prop_assert_eq!(b.upper_certificate.ratio, b.upper);
    }
}

#[test]
fn tree_packing_equivalence_on_random_graphs() {
    let mut r = rng(0x7ee);
    let mut discrepancies = Vec::new();
    for sample in 0..300 {
        let n = r.gen_range(2..=8);
        let p = r.gen_range(0.3..1.0);
        let g = gnp(&mut r, n, p);
        let (t, d) = tau(&g).unwrap();
        assert!(verify_decomposition(&g, &d, t).is_ok());
        let nu = nu_f_oracle(&g);
        for k in 1..=3 {
            if (t >= k) != (nu >= Rational::from_integer(k as i64)) {
                discrepancies.push((sample, k, t, nu));
            }
        }
    }
    assert!(discrepancies.is_empty(), "{discrepancies:?}");
}

#[test]
fn packing_regressions() {
    assert_eq!(tau(&petersen()).unwrap().0, 1);
    for k in 1..=5 {
        assert_eq!(tau(&complete(2 * k + 1).unwrap()).unwrap().0, k);
    }
    for k in 2..=4 {
        assert_eq!(tau(&complete_bipartite(2 * k + 1, 2 * k + 1).unwrap()).unwrap().0, k);
    }
    let h1 = fixture_h1();
    let (t, d) = tau(&h1).unwrap();
    assert_eq!(t, 2);
    assert!(verify_decomposition(&h1, &d, 2).is_ok());
    let drawn = ForestDecomposition::new(11, vec![H1_BOLD.to_vec(), H1_THIN.to_vec()]);
    assert!(verify_decomposition(&h1, &drawn, 2).is_ok());
    let split = disjoint_union(&complete(5).unwrap(), &complete(6).unwrap());
    assert_eq!(tau(&split).unwrap().0, 0);
    assert_eq!(nu_f_exact(&split, 12).unwrap().0, Rational::from_integer(0));
}

#[test]
fn dense_graphs_keep_an_extra_tree() {
    // K_n minus k edges, 2k+3 ≤ n ≤ 2k+6
    let mut r = rng(36);
    for k in 1..=3usize {
        for n in 2 * k + 3..=2 * k + 6 {
            for _ in 0..50 {
                let g = complete_minus(&mut r, n, k);
                let (t, d) = tau(&g).unwrap();
                assert!(t > k, "K_{n} minus {k} edges: tau {t}");
                assert!(verify_decomposition(&g, &d, t).is_ok());
            }
        }
    }
}

#[test]
fn binomial_exchange() {
    for a in 2..=30i64 {
        for x in a..=30 {
            for y in a..=30 {
                assert!(binom2(x) + binom2(y) <= binom2(a) + binom2(x + y - a), "a={a} x={x} y={y}");
            }
        }
    }
}

#[test]
fn binomial_merge() {
    // every composition (a_1, …, a_p) with Σa_i ≤ 20, a_i ≥ 1
    fn rec(parts: &mut Vec<i64>, sum: i64, checked: &mut usize) {
        if !parts.is_empty() {
            let p = parts.len() as i64;
            let lhs: i64 = parts.iter().map(|&a| binom2(a)).sum();
            assert!(lhs <= binom2(sum - p + 1), "{parts:?}");
            *checked += 1;
        }
        for a in 1..=20 - sum {
            parts.push(a);
            rec(parts, sum + a, checked);
            parts.pop();
        }
    }
    let mut checked = 0;
    rec(&mut Vec::new(), 0, &mut checked);
    assert_eq!(checked, (1 << 20) - 1);
}

#[test]
fn decomposition_defects() {
    let k4 = complete(4).unwrap();
    let cyc = ForestDecomposition::new(4, vec![vec![(0, 1), (1, 2), (0, 2)]]);
    assert!(verify_decomposition(&k4, &cyc, 0).is_err());
    let shared = ForestDecomposition::new(4, vec![vec![(0, 1)], vec![(0, 1)]]);
    assert!(verify_decomposition(&k4, &shared, 0).is_err());
    let short = ForestDecomposition::new(4, vec![vec![(0, 1), (1, 2)]]);
    assert!(verify_decomposition(&k4, &short, 0).is_ok());
    assert!(verify_decomposition(&k4, &short, 1).is_err());
}

#[test]
fn tau_is_invariant_under_relabeling() {
    let mut r = rng(5);
    for _ in 0..40 {
        let n = r.gen_range(3..=9);
        let g = gnp(&mut r, n, 0.6);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let h: Graph = g.relabel(&perm).unwrap();
        assert_eq!(tau(&g).unwrap().0, tau(&h).unwrap().0);
        assert_eq!(nu_f_exact(&g, 12).unwrap().0, nu_f_exact(&h, 12).unwrap().0);
    }
}

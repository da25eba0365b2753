mod common;

use gelab_core::corpus::random_graph;
use gelab_core::independent::{
    alpha, enumerate_maximal_independent_sets, enumerate_maximum_weighted_independent_sets,
    max_weighted_independent_set, Limits,
};
use gelab_core::oracle::{brute_alpha, brute_max_weight, brute_maximal_independent_sets, brute_maximum_weighted_sets};
use gelab_core::{Graph, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lim() -> Limits {
    Limits::default()
}

fn members(sets: &[gelab_core::IndependentSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.members().to_vec()).collect()
}

fn agrees_with_brute_force(g: &Graph, weights: &[Rational]) {
    let maximal = enumerate_maximal_independent_sets(g, &lim()).unwrap();
    assert_eq!(members(&maximal), brute_maximal_independent_sets(g).unwrap());
    if g.n() > 0 {
        assert_eq!(alpha(g, &lim()).unwrap().value, brute_alpha(g).unwrap());
    }
    let best = max_weighted_independent_set(g, weights, &lim()).unwrap();
    assert_eq!(best.value, brute_max_weight(g, weights).unwrap());
    assert_eq!(best.witness.weight(weights), best.value);
    let sum: Rational = weights.iter().sum();
    if sum.is_positive() {
        let p = gelab_core::Distribution::normalized(weights.to_vec()).unwrap();
        let normalized: Vec<Rational> = p.exact_weights().unwrap().to_vec();
        let family = enumerate_maximum_weighted_independent_sets(g, &p, &lim()).unwrap();
        assert_eq!(members(&family), brute_maximum_weighted_sets(g, &normalized).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sum_is_twice_edge_count(g in common::graph(0, 14)) {
        let degrees: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degrees, 2 * g.edge_count());
        for (u, v) in g.edges() {
            prop_assert!(g.has_edge(v, u));
            prop_assert!(u != v);
        }
    }

    #[test]
    fn maximal_sets_dominate(g in common::graph(0, 14)) {
        for s in enumerate_maximal_independent_sets(&g, &lim()).unwrap() {
            prop_assert!(g.is_independent(s.members()));
            for v in (0..g.n()).filter(|&v| !s.contains(v)) {
                prop_assert!(g.neighbors(v).iter().any(|&u| s.contains(u)));
            }
        }
    }

    #[test]
    fn alpha_is_largest_maximal_set(g in common::graph(1, 14)) {
        let sets = enumerate_maximal_independent_sets(&g, &lim()).unwrap();
        let a = alpha(&g, &lim()).unwrap();
        prop_assert_eq!(a.value, sets.iter().map(|s| s.len()).max().unwrap());
        prop_assert_eq!(a.witness.len(), a.value);
    }

    #[test]
    fn uniform_weights_give_alpha_over_n(g in common::graph(1, 14)) {
        let n = g.n();
        let w = vec![Rational::new(1, n as i64); n];
        let best = max_weighted_independent_set(&g, &w, &lim()).unwrap();
        let a = alpha(&g, &lim()).unwrap().value;
        prop_assert_eq!(best.value, Rational::new(a as i64, n as i64));
    }

    #[test]
    fn scaling_keeps_the_witness(
        g in common::graph(1, 12),
        raw in proptest::collection::vec(0i64..=9, 12),
        c in 1i64..=7,
        d in 1i64..=7,
    ) {
        let w: Vec<Rational> = raw[..g.n()].iter().map(|&x| Rational::from_integer(x)).collect();
        let factor = Rational::new(c, d);
        let scaled: Vec<Rational> = w.iter().map(|x| x * &factor).collect();
        let a = max_weighted_independent_set(&g, &w, &lim()).unwrap();
        let b = max_weighted_independent_set(&g, &scaled, &lim()).unwrap();
        prop_assert_eq!(&a.value * &factor, b.value);
        prop_assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn brute_force_equivalence(g in common::graph(0, 12), raw in proptest::collection::vec(0i64..=4, 12)) {
        let w: Vec<Rational> = raw[..g.n()].iter().map(|&x| Rational::from_integer(x)).collect();
        agrees_with_brute_force(&g, &w);
    }
}

#[test]
fn brute_force_equivalence_at_sixteen_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for density in [0.2, 0.5, 0.8] {
        let g = random_graph(&mut rng, 16, density);
        let w: Vec<Rational> = (0..16).map(|v| Rational::from_integer((v % 5) as i64)).collect();
        agrees_with_brute_force(&g, &w);
    }
}

#[test]
fn known_values() {
    let k2 = Graph::complete(2);
    let best = max_weighted_independent_set(&k2, &[Rational::new(1, 3), Rational::new(2, 3)], &lim()).unwrap();
    assert_eq!((best.value, best.witness.members()), (Rational::new(2, 3), &[1][..]));
    let c5 = Graph::cycle(5);
    let best = max_weighted_independent_set(&c5, &vec![Rational::new(1, 5); 5], &lim()).unwrap();
    assert_eq!(best.value, Rational::new(2, 5));
    let zero = max_weighted_independent_set(&c5, &vec![Rational::zero(); 5], &lim()).unwrap();
    assert_eq!(zero.value, Rational::zero());
    assert_eq!(alpha(&c5, &lim()).unwrap().value, 2);
    assert_eq!(alpha(&Graph::complete(6), &lim()).unwrap().value, 1);
    assert_eq!(alpha(&Graph::empty(6), &lim()).unwrap().value, 6);
}

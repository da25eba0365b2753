mod common;

use gelab_core::corpus::connected_graphs;
use gelab_core::independent::{alpha, enumerate_maximal_independent_sets, maximum_independent_sets, Limits};
use gelab_core::lp::simplex::{Constraint, LinearProgram, LpOutcome, Relation};
use gelab_core::lp::{
    b_fold_realization, fractional_chromatic_number, fractional_clique, integralize_cover, uniform_cover_feasible,
};
use gelab_core::{Graph, Rational};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn greedy_colors(g: &Graph) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let used: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    color.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// The covering LP `min sum w_I : sum_{I ∋ v} w_I >= 1`, solved directly.
fn covering_optimum(g: &Graph) -> Rational {
    let sets = enumerate_maximal_independent_sets(g, &lim()).unwrap();
    let lp = LinearProgram {
        objective: vec![Rational::one(); sets.len()],
        constraints: (0..g.n())
            .map(|v| Constraint {
                coeffs: sets
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(v))
                    .map(|(j, _)| (j, Rational::one()))
                    .collect(),
                relation: Relation::Ge,
                rhs: Rational::one(),
            })
            .collect(),
    };
    match lp.solve() {
        LpOutcome::Optimal(s) => s.objective,
        other => panic!("covering LP: {other:?}"),
    }
}

fn symmetric_iff_uniform_cover(g: &Graph) {
    let n = g.n();
    let a = alpha(g, &lim()).unwrap().value;
    let chi = fractional_chromatic_number(g, &lim()).unwrap().0;
    let family = maximum_independent_sets(g, &lim()).unwrap();
    let target: Vec<usize> = (0..n).collect();
    let cover = uniform_cover_feasible(g, &family, &target, &lim()).unwrap();
    assert_eq!(chi == Rational::new(n as i64, a as i64), cover.is_some(), "{g:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chi_f_is_sandwiched(g in common::graph(1, 12)) {
        let n = g.n() as i64;
        let a = alpha(&g, &lim()).unwrap().value as i64;
        let chi = fractional_chromatic_number(&g, &lim()).unwrap().0;
        prop_assert!(Rational::new(n, a) <= chi);
        prop_assert!(chi <= Rational::from(greedy_colors(&g)));
    }

    #[test]
    fn primal_and_dual_agree(g in common::graph(1, 11)) {
        let (chi, coloring) = fractional_chromatic_number(&g, &lim()).unwrap();
        let (clique_value, clique) = fractional_clique(&g, &lim()).unwrap();
        prop_assert_eq!(&covering_optimum(&g), &chi);
        prop_assert_eq!(&clique_value, &chi);
        prop_assert_eq!(coloring.total(), &chi);
        prop_assert!(coloring.coverage(g.n()).iter().all(|c| *c >= Rational::one()));
        for s in enumerate_maximal_independent_sets(&g, &lim()).unwrap() {
            prop_assert!(s.weight(&clique) <= Rational::one());
        }
    }

    #[test]
    fn uniform_cover_iff_chi_f_is_n_over_alpha_on_random_graphs(g in common::graph(1, 14)) {
        symmetric_iff_uniform_cover(&g);
    }

    #[test]
    fn integralized_covers_recount(g in common::graph(1, 12)) {
        let family = enumerate_maximal_independent_sets(&g, &lim()).unwrap();
        let target: Vec<usize> = (0..g.n()).collect();
        if let Some(fc) = uniform_cover_feasible(&g, &family, &target, &lim()).unwrap() {
            let cm = integralize_cover(&fc).unwrap();
            prop_assert!(cm.fold() >= 1);
            let mut counts = vec![0u64; g.n()];
            for (s, m) in cm.multiplicities() {
                prop_assert!(g.is_independent(s.members()));
                for &v in s.members() {
                    counts[v] += m;
                }
            }
            prop_assert!(counts.iter().all(|&c| c == cm.fold()));
        }
    }

    #[test]
    fn b_fold_colorings_are_proper(g in common::graph(1, 12)) {
        let chi = fractional_chromatic_number(&g, &lim()).unwrap().0;
        let cm = b_fold_realization(&g, &lim()).unwrap();
        prop_assert_eq!(cm.ratio(), chi);
        let colors = cm.colors(g.n());
        for c in &colors {
            prop_assert_eq!(c.len() as u64, cm.fold());
        }
        for (u, v) in g.edges() {
            prop_assert!(colors[u].iter().all(|c| !colors[v].contains(c)));
        }
    }
}

#[test]
fn uniform_cover_iff_chi_f_is_n_over_alpha_on_all_small_graphs() {
    for g in connected_graphs(8) {
        symmetric_iff_uniform_cover(&g);
    }
}

#[test]
fn known_values() {
    let chi = |g: &Graph| fractional_chromatic_number(g, &lim()).unwrap().0;
    assert_eq!(chi(&Graph::complete(5)), Rational::from_integer(5));
    assert_eq!(chi(&Graph::cycle(5)), Rational::new(5, 2));
    assert_eq!(chi(&Graph::empty(4)), Rational::one());
    assert_eq!(chi(&Graph::empty(0)), Rational::zero());
    assert_eq!(chi(&Graph::petersen()), Rational::new(5, 2));
    assert_eq!(chi(&Graph::hypercube(3)), Rational::from_integer(2));

    let cm = b_fold_realization(&Graph::petersen(), &lim()).unwrap();
    assert_eq!(cm.ratio(), Rational::new(5, 2));
}

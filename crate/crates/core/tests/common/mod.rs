#![allow(dead_code)]

use gelab_core::{Distribution, Graph, Rational};
use proptest::prelude::*;

/// Graphs on `min_n..=max_n` vertices with independently chosen edges.
pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Exact distribution on `n` vertices with small integer numerators; zeros
/// allowed, never all zero.
pub fn distribution(n: usize) -> impl Strategy<Value = Distribution> {
    proptest::collection::vec(0i64..=6, n)
        .prop_filter("nonzero total", |c| c.iter().any(|&x| x > 0))
        .prop_map(|c| Distribution::normalized(c.into_iter().map(Rational::from_integer).collect()).unwrap())
}

/// Strictly positive exact distribution on `n` vertices.
pub fn positive_distribution(n: usize) -> impl Strategy<Value = Distribution> {
    proptest::collection::vec(1i64..=6, n)
        .prop_map(|c| Distribution::normalized(c.into_iter().map(Rational::from_integer).collect()).unwrap())
}

/// A graph together with a distribution on its vertices.
pub fn graph_and_distribution(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, Distribution)> {
    graph(min_n, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), distribution(n))
    })
}

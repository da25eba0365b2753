//! Test corpora: every connected graph up to isomorphism on few vertices,
//! named families, and seeded random graphs and distributions.

use std::collections::HashSet;

use rand::Rng;

use crate::distribution::Distribution;
use crate::graph::Graph;
use crate::rational::Rational;

/// Isomorphism-invariant code of a graph on at most 11 vertices: the
/// largest upper-triangle adjacency bit string over all labellings that
/// respect the color-refinement partition.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_form(g).0
}

/// The canonical code together with the graph relabelled to attain it.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.n();
    assert!(n * n.saturating_sub(1) / 2 <= 64, "canonical codes support at most 11 vertices");
    let cells = refine(g);
    let mut order = Vec::with_capacity(n);
    let mut best = (0u64, Vec::new());
    search(g, &cells, 0, &mut order, &mut best);
    let perm = best.1;
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let h = Graph::from_edges(n, g.edges().map(|(u, v)| (pos[u], pos[v]))).expect("relabelling keeps the graph simple");
    (best.0, h)
}

/// Cells of the stable coloring, ordered by color.
fn refine(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        color = signatures.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn search(g: &Graph, cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, best: &mut (u64, Vec<usize>)) {
    if cell == cells.len() {
        let code = code_of(g, order);
        if best.1.is_empty() || code > best.0 {
            *best = (code, order.clone());
        }
        return;
    }
    permute(g, cells, cell, &mut cells[cell].clone(), 0, order, best);
}

fn permute(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    items: &mut Vec<usize>,
    k: usize,
    order: &mut Vec<usize>,
    best: &mut (u64, Vec<usize>),
) {
    if k == items.len() {
        let len = order.len();
        order.extend_from_slice(items);
        search(g, cells, cell + 1, order, best);
        order.truncate(len);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(g, cells, cell, items, k + 1, order, best);
        items.swap(k, i);
    }
}

/// All connected graphs on `1..=max_n` vertices, one per isomorphism class,
/// in canonical labelling, ordered by vertex count and then code.
///
/// Counts for `n = 1..=8` are 1, 1, 2, 6, 21, 112, 853, 11117.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    let mut layer = vec![(0u64, Graph::empty(1))];
    out.push(Graph::empty(1));
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, base) in &layer {
            for nbrs in 1u32..(1 << (n - 1)) {
                let mut g = Graph::empty(n);
                for (u, v) in base.edges() {
                    g.add_edge(u, v).expect("valid edge");
                }
                for u in (0..n - 1).filter(|&u| nbrs & (1 << u) != 0) {
                    g.add_edge(u, n - 1).expect("valid edge");
                }
                let (code, h) = canonical_form(&g);
                if seen.insert(code) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        out.extend(next.iter().map(|(_, g)| g.clone()));
        layer = next;
    }
    out
}

/// Named graphs with their conventional names.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("K{n}"), Graph::complete(n)));
        out.push((format!("E{n}"), Graph::empty(n)));
        out.push((format!("P{n}"), Graph::path(n)));
    }
    for n in 3..=10 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    for m in 1..=4 {
        out.push((format!("K{m},{m}"), Graph::complete_bipartite(m, m)));
    }
    for n in 2..=6 {
        out.push((format!("S{n}"), Graph::star(n)));
    }
    out.push(("Q3".into(), Graph::hypercube(3)));
    out.push(("Petersen".into(), Graph::petersen()));
    out
}

/// Vertex-transitive members of [`named_graphs`].
pub fn vertex_transitive_graphs() -> Vec<(String, Graph)> {
    named_graphs()
        .into_iter()
        .filter(|(name, _)| {
            name.starts_with('K')
                || name.starts_with('E')
                || name.starts_with('C')
                || name == "Q3"
                || name == "Petersen"
        })
        .collect()
}

/// Erdős–Rényi graph `G(n, edge_prob)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Random spanning subgraph keeping each edge with probability `keep`.
pub fn random_spanning_subgraph<R: Rng>(rng: &mut R, g: &Graph, keep: f64) -> Graph {
    let edges: Vec<_> = g.edges().filter(|_| rng.gen_bool(keep)).collect();
    Graph::from_edges(g.n(), edges).expect("subgraph of a simple graph")
}

/// Exact distribution `c_v / sum c` with integers `c_v` drawn from
/// `0..=max_numerator` (from `1..=max_numerator` unless `allow_zeros`).
/// At least one vertex is always positive.
pub fn random_rational_distribution<R: Rng>(
    rng: &mut R,
    n: usize,
    max_numerator: i64,
    allow_zeros: bool,
) -> Distribution {
    assert!(n > 0 && max_numerator >= 1);
    let low = if allow_zeros { 0 } else { 1 };
    let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(low..=max_numerator)).collect();
    if c.iter().all(|&x| x == 0) {
        let v = rng.gen_range(0..n);
        c[v] = rng.gen_range(1..=max_numerator);
    }
    Distribution::normalized(c.into_iter().map(Rational::from_integer).collect()).expect("positive total")
}

/// Floating-point distribution with every entry at least `floor / n`.
pub fn random_positive_distribution<R: Rng>(rng: &mut R, n: usize, floor: f64) -> Distribution {
    let raw: Vec<f64> = (0..n).map(|_| floor + rng.gen::<f64>()).collect();
    let sum: f64 = raw.iter().sum();
    let mut w: Vec<f64> = raw.iter().map(|x| x / sum).collect();
    let drift = 1.0 - w.iter().sum::<f64>();
    w[0] += drift;
    Distribution::numeric(w).expect("normalized weights")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_graph_counts() {
        let g = connected_graphs(6);
        let mut counts = [0usize; 7];
        for h in &g {
            assert!(h.is_connected());
            counts[h.n()] += 1;
        }
        assert_eq!(counts[1..], [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let c5 = Graph::cycle(5);
        let relabelled = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&c5), canonical_code(&relabelled));
        assert_ne!(canonical_code(&c5), canonical_code(&Graph::path(5)));
        let (code, h) = canonical_form(&Graph::petersen());
        assert_eq!(canonical_code(&h), code);
    }

    #[test]
    fn random_distributions_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_rational_distribution(&mut rng, 6, 5, true);
            assert!(!p.support().is_empty());
            let q = random_positive_distribution(&mut rng, 6, 0.1);
            assert!(q.is_strictly_positive());
        }
    }
}

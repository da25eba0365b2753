//! Graph constructions: edge union, vertex substitution, rational blow-up,
//! and the symmetry hardness gadget.
//!
//! Every construction labels its output `0..n` deterministically and exposes
//! the map from input labels to output labels.

use std::ops::Range;

use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{lcm_of_denominators, Rational};

/// `F ∪ G` on a common vertex set: the union of the edge sets.
pub fn union(f: &Graph, g: &Graph) -> Result<Graph> {
    if f.n() != g.n() {
        return Err(Error::VertexSetMismatch { left: f.n(), right: g.n() });
    }
    let mut out = f.clone();
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    Ok(out)
}

/// Result of substituting a graph `F` for a vertex `v` of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub graph: Graph,
    /// New label of each vertex of `G`; `None` for the replaced vertex.
    pub g_labels: Vec<Option<usize>>,
    /// New label of each vertex of `F`.
    pub f_labels: Vec<usize>,
}

impl Substitution {
    fn labels(n_g: usize, v: usize, n_f: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let g_labels = (0..n_g)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let f_labels = (0..n_f).map(|x| n_g - 1 + x).collect();
        (g_labels, f_labels)
    }
}

/// `G_{v <- F}`: delete `v` and join every vertex of `F` to the former
/// neighbours of `v`. The remaining vertices of `G` keep their relative
/// order and come first; the vertices of `F` follow in their own order.
pub fn substitute(g: &Graph, v: usize, f: &Graph) -> Result<Substitution> {
    if v >= g.n() {
        return Err(Error::VertexNotFound(v));
    }
    let (g_labels, f_labels) = Substitution::labels(g.n(), v, f.n());
    let mut out = Graph::empty(g.n() - 1 + f.n());
    for (a, b) in g.edges() {
        match (g_labels[a], g_labels[b]) {
            (Some(x), Some(y)) => out.add_edge(x, y)?,
            (None, Some(y)) | (Some(y), None) => {
                for &x in &f_labels {
                    out.add_edge(x, y)?;
                }
            }
            (None, None) => unreachable!("graph has no self-loops"),
        }
    }
    for (a, b) in f.edges() {
        out.add_edge(f_labels[a], f_labels[b])?;
    }
    Ok(Substitution { graph: out, g_labels, f_labels })
}

/// `P_{v <- Q}` in the labels of [`substitute`]: vertices of `G` other than
/// `v` keep `P(x)` and vertex `x` of `F` gets `P(v) Q(x)`.
///
/// The result is exact when both inputs are.
pub fn substitute_distribution(p: &Distribution, v: usize, q: &Distribution) -> Result<Distribution> {
    if v >= p.len() {
        return Err(Error::VertexNotFound(v));
    }
    match (p.exact_weights(), q.exact_weights()) {
        (Some(pw), Some(qw)) => {
            let mut w: Vec<Rational> = pw.iter().enumerate().filter(|(u, _)| *u != v).map(|(_, x)| x.clone()).collect();
            w.extend(qw.iter().map(|x| &pw[v] * x));
            Distribution::exact(w)
        }
        _ => {
            let pw = p.probs();
            let mut w: Vec<f64> = pw.iter().enumerate().filter(|(u, _)| *u != v).map(|(_, x)| *x).collect();
            w.extend(q.probs().iter().map(|x| pw[v] * x));
            Distribution::numeric(w)
        }
    }
}

/// Bookkeeping of a blow-up: `p_v = counts[v] / m`, and the copies of `v`
/// are the labels `offsets[v] .. offsets[v] + counts[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub counts: Vec<u64>,
    pub m: u64,
    pub offsets: Vec<usize>,
}

impl BlowupSpec {
    pub fn copies(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v] + self.counts[v] as usize
    }
}

/// Replaces each vertex `v` by an independent set of `n_v` copies, where
/// `p_v = n_v / m` and `m` is the least common denominator. Copies of `u`
/// and `v` are adjacent iff `uv` is an edge. The uniform distribution on
/// the result has entropy `H(G, P)`.
pub fn blow_up(g: &Graph, p: &Distribution) -> Result<(Graph, BlowupSpec)> {
    p.check_len(g.n())?;
    let weights = p.exact_weights().ok_or(Error::NotRational)?;
    if let Some(v) = weights.iter().position(Rational::is_zero) {
        return Err(Error::ZeroWeightVertex(v));
    }
    let m = Rational::from(lcm_of_denominators(weights.iter()));
    let counts = weights.iter().map(|w| (w * &m).to_u64().ok_or(Error::Overflow)).collect::<Result<Vec<u64>>>()?;
    let m = m.to_u64().ok_or(Error::Overflow)?;
    let mut offsets = Vec::with_capacity(g.n());
    let mut total = 0usize;
    for &c in &counts {
        offsets.push(total);
        total = total.checked_add(usize::try_from(c).map_err(|_| Error::Overflow)?).ok_or(Error::Overflow)?;
    }
    let spec = BlowupSpec { counts, m, offsets };
    let mut out = Graph::empty(total);
    for (u, v) in g.edges() {
        for x in spec.copies(u) {
            for y in spec.copies(v) {
                out.add_edge(x, y)?;
            }
        }
    }
    Ok((out, spec))
}

/// Parameters of the hardness gadget on `A ∪ V(F) × B` with
/// `|A| = |B| = k - 1`.
///
/// Labels: `A` is `0 .. k-1`, then `(v, b)` is `(k-1) + v (k-1) + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    f: Graph,
    k: usize,
}

impl GadgetSpec {
    pub fn new(f: Graph, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        if f.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(GadgetSpec { f, k })
    }

    pub fn f(&self) -> &Graph {
        &self.f
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(k - 1)(1 + n(F))`.
    pub fn vertex_count(&self) -> usize {
        (self.k - 1) * (1 + self.f.n())
    }

    pub fn a_labels(&self) -> Range<usize> {
        0..self.k - 1
    }

    /// Indices of `B`; these are coordinates, not vertex labels.
    pub fn b_labels(&self) -> Range<usize> {
        0..self.k - 1
    }

    pub fn pair_label(&self, v: usize, b: usize) -> usize {
        assert!(v < self.f.n() && b < self.k - 1);
        (self.k - 1) + v * (self.k - 1) + b
    }

    /// Inverse of [`GadgetSpec::pair_label`]; `None` for labels in `A`.
    pub fn pair_of(&self, label: usize) -> Option<(usize, usize)> {
        let r = self.k - 1;
        if label < r || label >= self.vertex_count() {
            return None;
        }
        Some(((label - r) / r, (label - r) % r))
    }
}

/// The gadget graph: `A ∪ V(F) × B` with
/// every `a` adjacent to every `(v, b)`,
/// `(v, b) ~ (v', b')` when `v != v'` and `b != b'`, and
/// `(v, b) ~ (v', b)` when `vv'` is an edge of `F`.
///
/// Its independence number is `max(alpha(F), k - 1)`, and it is symmetric
/// iff `alpha(F) <= k - 1`.
pub fn hardness_gadget(spec: &GadgetSpec) -> Graph {
    let n_f = spec.f.n();
    let mut g = Graph::empty(spec.vertex_count());
    let add = |g: &mut Graph, x: usize, y: usize| g.add_edge(x, y).expect("gadget labels are in range and distinct");
    for a in spec.a_labels() {
        for v in 0..n_f {
            for b in spec.b_labels() {
                add(&mut g, a, spec.pair_label(v, b));
            }
        }
    }
    for v in 0..n_f {
        for w in v + 1..n_f {
            for b in spec.b_labels() {
                for c in spec.b_labels() {
                    if b != c || spec.f.has_edge(v, w) {
                        add(&mut g, spec.pair_label(v, b), spec.pair_label(w, c));
                    }
                }
            }
        }
    }
    g
}

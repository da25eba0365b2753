//! Independent-set enumeration and the combinatorial oracles built on it:
//! the independence number, maximum weighted independent sets, and the full
//! family of maximum weighted independent sets.
//!
//! All enumeration goes through Bron–Kerbosch run on the complement view
//! (cliques of the complement are independent sets here). Vertex sets are
//! `u64` bitmasks internally, so no graph above 64 vertices is enumerated
//! regardless of the configured cap.

use std::ops::Add;

use num_traits::Zero;

use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::graph::{mask_members, Graph, IndependentSet};
use crate::rational::Rational;

pub const DEFAULT_VERTEX_CAP: usize = 40;
/// Hard ceiling imposed by the bitmask representation.
pub const MAX_VERTEX_CAP: usize = 64;
pub const DEFAULT_SET_CAP: usize = 1_000_000;

/// Guardrails for exponential enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count any enumeration accepts (clamped to 64).
    pub max_vertices: usize,
    /// Largest number of sets any single enumeration may produce.
    pub max_sets: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: DEFAULT_VERTEX_CAP, max_sets: DEFAULT_SET_CAP }
    }
}

impl Limits {
    pub fn with_vertex_cap(max_vertices: usize) -> Self {
        Limits { max_vertices, ..Limits::default() }
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        let cap = self.max_vertices.min(MAX_VERTEX_CAP);
        if n > cap {
            return Err(Error::VertexCapExceeded { n, cap });
        }
        Ok(())
    }
}

/// Maximum total weight of an independent set, with a witness attaining it.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedAlpha<W = Rational> {
    pub value: W,
    pub witness: IndependentSet,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Masks of all maximal independent sets of the subgraph induced by
/// `within`, in no particular order.
pub(crate) fn maximal_independent_masks(adj: &[u64], within: u64, max_sets: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    if within == 0 {
        out.push(0);
        return Ok(out);
    }
    bron_kerbosch(adj, 0, within, 0, &mut out, max_sets)?;
    Ok(out)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>, cap: usize) -> Result<()> {
    if p == 0 {
        if x == 0 {
            if out.len() >= cap {
                return Err(Error::SetCapExceeded { cap });
            }
            out.push(r);
        }
        return Ok(());
    }
    // Pivot on the vertex with the fewest neighbors among the candidates:
    // in the complement view that is the vertex with the most candidate
    // neighbors. Ties go to the lowest label.
    let mut pivot = 0;
    let mut best = u32::MAX;
    for u in mask_members(p | x) {
        let c = (p & adj[u]).count_ones();
        if c < best {
            best = c;
            pivot = u;
        }
    }
    let branch = p & (adj[pivot] | (1u64 << pivot));
    for v in mask_members(branch) {
        let keep = !(adj[v] | (1u64 << v));
        bron_kerbosch(adj, r | (1u64 << v), p & keep, x & keep, out, cap)?;
        p &= !(1u64 << v);
        x |= 1u64 << v;
    }
    Ok(())
}

fn sort_lex(masks: &mut [u64]) {
    masks.sort_by_cached_key(|&m| mask_members(m).collect::<Vec<_>>());
}

/// Every inclusion-maximal independent set of `g`, each exactly once, in
/// lexicographic order of sorted member lists.
pub fn enumerate_maximal_independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<IndependentSet>> {
    limits.check_vertices(g.n())?;
    let mut masks = maximal_independent_masks(&g.masks(), full_mask(g.n()), limits.max_sets)?;
    sort_lex(&mut masks);
    Ok(masks.into_iter().map(IndependentSet::from_mask).collect())
}

/// Independence number `alpha(G)` with a maximum independent set.
pub fn alpha(g: &Graph, limits: &Limits) -> Result<WeightedAlpha<usize>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    max_weighted_independent_set(g, &vec![1usize; g.n()], limits)
}

/// All independent sets of size `alpha(G)`, in lexicographic order.
pub fn maximum_independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<IndependentSet>> {
    let a = alpha(g, limits)?.value;
    Ok(enumerate_maximal_independent_sets(g, limits)?.into_iter().filter(|s| s.len() == a).collect())
}

/// Maximum weighted independent set for nonnegative weights.
///
/// Only vertices with positive weight are searched; the witness is a
/// maximal independent set of that subgraph and is not extended by
/// zero-weight vertices. Ties go to the first set in lexicographic order.
pub fn max_weighted_independent_set<W>(g: &Graph, weights: &[W], limits: &Limits) -> Result<WeightedAlpha<W>>
where
    W: Clone + PartialOrd + Zero + Add<Output = W>,
{
    if weights.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), actual: weights.len() });
    }
    limits.check_vertices(g.n())?;
    let zero = W::zero();
    let mut support = 0u64;
    for (v, w) in weights.iter().enumerate() {
        // NaN has no ordering and is rejected too.
        if w.partial_cmp(&zero).map_or(true, |o| o.is_lt()) {
            return Err(Error::InvalidWeight { vertex: v });
        }
        if *w > zero {
            support |= 1u64 << v;
        }
    }
    let mut masks = maximal_independent_masks(&g.masks(), support, limits.max_sets)?;
    sort_lex(&mut masks);
    let weight_of = |m: u64| mask_members(m).fold(W::zero(), |acc, v| acc + weights[v].clone());
    let mut best_mask = masks[0];
    let mut best = weight_of(best_mask);
    for &m in &masks[1..] {
        let w = weight_of(m);
        if w > best {
            best = w;
            best_mask = m;
        }
    }
    Ok(WeightedAlpha { value: best, witness: IndependentSet::from_mask(best_mask) })
}

/// `alpha_P` and the maximum-weight independent sets of `G[supp(P)]`.
///
/// Every independent set of `G` with weight `alpha_P` is one of the returned
/// sets plus some zero-weight vertices; this is the family canonicalized to
/// the support.
pub fn maximum_weighted_sets_on_support(
    g: &Graph,
    p: &Distribution,
    limits: &Limits,
) -> Result<(Rational, Vec<IndependentSet>)> {
    p.check_len(g.n())?;
    let weights = p.exact_weights().ok_or(Error::NotExact)?;
    limits.check_vertices(g.n())?;
    let support = p.support().iter().fold(0u64, |m, &v| m | (1u64 << v));
    let mut masks = maximal_independent_masks(&g.masks(), support, limits.max_sets)?;
    sort_lex(&mut masks);
    let sets: Vec<(Rational, u64)> =
        masks.into_iter().map(|m| (mask_members(m).map(|v| &weights[v]).sum(), m)).collect();
    let best = sets.iter().map(|(w, _)| w).max().cloned().unwrap_or_default();
    let cores = sets.into_iter().filter(|(w, _)| *w == best).map(|(_, m)| IndependentSet::from_mask(m)).collect();
    Ok((best, cores))
}

/// Every independent set of `g` whose `P`-weight equals `alpha_P` exactly,
/// in lexicographic order.
///
/// With zero-probability vertices this includes each maximum-weight set of
/// the support extended by every independent choice of compatible
/// zero-weight vertices.
pub fn enumerate_maximum_weighted_independent_sets(
    g: &Graph,
    p: &Distribution,
    limits: &Limits,
) -> Result<Vec<IndependentSet>> {
    let (_, cores) = maximum_weighted_sets_on_support(g, p, limits)?;
    let adj = g.masks();
    let support = p.support().iter().fold(0u64, |m, &v| m | (1u64 << v));
    let zero_weight = full_mask(g.n()) & !support;
    let mut out: Vec<u64> = Vec::new();
    for core in cores {
        let core = core.mask();
        let blocked = mask_members(core).fold(0u64, |m, v| m | adj[v]);
        let free = zero_weight & !blocked;
        extend_independent(&adj, core, free, &mut out, limits.max_sets)?;
    }
    sort_lex(&mut out);
    Ok(out.into_iter().map(IndependentSet::from_mask).collect())
}

/// Pushes `base | T` for every independent `T` within `free`.
fn extend_independent(adj: &[u64], base: u64, free: u64, out: &mut Vec<u64>, cap: usize) -> Result<()> {
    if free == 0 {
        if out.len() >= cap {
            return Err(Error::SetCapExceeded { cap });
        }
        out.push(base);
        return Ok(());
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1u64 << v);
    extend_independent(adj, base, rest, out, cap)?;
    extend_independent(adj, base | (1u64 << v), rest & !adj[v], out, cap)
}

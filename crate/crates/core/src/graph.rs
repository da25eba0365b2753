//! Simple undirected graphs on vertices `0..n` and their independent sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A simple undirected graph with vertex labels `0..n`.
///
/// Adjacency is stored as sorted neighbor lists; the relation is kept
/// symmetric and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            position[v] = i;
        }
        let mut sub = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = position[w];
                if j != usize::MAX && i < j {
                    sub.add_edge(i, j)?;
                }
            }
        }
        Ok(sub)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect()).collect();
        Graph { adj }
    }

    /// True when no two of `vertices` are adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Adjacency rows as bitmasks. Requires `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj.iter().map(|ns| ns.iter().fold(0u64, |m, &v| m | (1 << v))).collect()
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Graph { adj }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
        Graph::from_edges(m + n, edges).expect("valid bipartite graph")
    }

    /// The star `K_{1,n}` centered at vertex 0.
    pub fn star(n: usize) -> Self {
        Graph::complete_bipartite(1, n)
    }

    /// The `d`-dimensional hypercube on `2^d` vertices.
    pub fn hypercube(d: u32) -> Self {
        let n = 1usize << d;
        let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))));
        Graph::from_edges(n, edges).expect("valid hypercube")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// A set of pairwise non-adjacent vertices, kept as a sorted member list.
///
/// Ordering is lexicographic on the sorted member list; every enumeration in
/// this crate reports sets in that order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndependentSet {
    members: Vec<usize>,
}

impl IndependentSet {
    /// Validates `members` against `g`.
    pub fn new(g: &Graph, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !g.is_independent(&members) {
            return Err(Error::NotIndependent(members));
        }
        Ok(IndependentSet { members })
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        IndependentSet { members: mask_members(mask).collect() }
    }

    /// Members given by a local bitmask, translated through `labels`.
    pub(crate) fn from_mask_labels(mask: u64, labels: &[usize]) -> Self {
        let mut members: Vec<usize> = mask_members(mask).map(|i| labels[i]).collect();
        members.sort_unstable();
        IndependentSet { members }
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        IndependentSet { members }
    }

    pub(crate) fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Characteristic vector of length `n`.
    pub fn indicator(&self, n: usize) -> Vec<f64> {
        let mut x = vec![0.0; n];
        for &v in &self.members {
            x[v] = 1.0;
        }
        x
    }

    /// Total weight `sum_{v in I} w_v`.
    pub fn weight(&self, weights: &[Rational]) -> Rational {
        self.members.iter().map(|&v| &weights[v]).sum()
    }
}

impl fmt::Debug for IndependentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.members).finish()
    }
}

pub(crate) fn mask_members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

//! Graph entropy `H(G, P) = min_{a in VP(G)} sum_v p_v lg(1/a_v)`.
//!
//! The minimum is computed by Frank–Wolfe over the vertex packing polytope.
//! The linear minimization step is a maximum weighted independent set with
//! weights `p_v / a_v`, and every iterate is carried as an explicit convex
//! combination of independent sets, which certifies membership in `VP(G)`.
//! The Frank–Wolfe duality gap bounds the distance to the optimum.
//!
//! Only the subgraph induced by the support of `P` matters: the solver works
//! there and reports zero coordinates elsewhere. Logarithms are base 2.

use std::f64::consts::LN_2;

use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::graph::{mask_members, Graph, IndependentSet};
use crate::independent::{
    enumerate_maximal_independent_sets, max_weighted_independent_set, maximal_independent_masks, Limits,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;
const LINE_SEARCH_BISECTIONS: usize = 50;
/// Allowed drift between a point's coordinates and its decomposition.
pub const DECOMPOSITION_TOLERANCE: f64 = 1e-12;

/// Which Frank–Wolfe update rule to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Variant {
    /// Plain conditional gradient: always step toward the oracle vertex.
    Classic,
    /// Also allow steps away from the worst active independent set. Same
    /// oracle and gap certificate, but linear rather than `O(1/t)`
    /// convergence on this strongly convex objective.
    #[default]
    AwayStep,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyOptions {
    /// Target duality gap in bits.
    pub tol: f64,
    pub max_iterations: usize,
    pub variant: Variant,
    pub limits: Limits,
}

impl Default for EntropyOptions {
    fn default() -> Self {
        EntropyOptions {
            tol: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            variant: Variant::default(),
            limits: Limits::default(),
        }
    }
}

impl EntropyOptions {
    pub fn with_tol(tol: f64) -> Self {
        EntropyOptions { tol, ..Self::default() }
    }
}

/// A point of `VP(G)` together with a convex combination of independent
/// sets that realizes it.
#[derive(Clone, Debug, PartialEq)]
pub struct PolytopePoint {
    coords: Vec<f64>,
    decomposition: Vec<(IndependentSet, f64)>,
}

impl PolytopePoint {
    /// Builds the point `sum_I w_I 1_I`. Weights must be nonnegative and sum
    /// to one.
    pub fn from_decomposition(n: usize, decomposition: Vec<(IndependentSet, f64)>) -> Result<Self> {
        let mut total = 0.0;
        let mut coords = vec![0.0; n];
        for (i, (set, w)) in decomposition.iter().enumerate() {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::InvalidWeight { vertex: i });
            }
            if let Some(&v) = set.members().iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            total += w;
            for &v in set.members() {
                coords[v] += w;
            }
        }
        if (total - 1.0).abs() > DECOMPOSITION_TOLERANCE {
            return Err(Error::NotNormalized { sum: total.to_string() });
        }
        Ok(PolytopePoint { coords, decomposition })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn decomposition(&self) -> &[(IndependentSet, f64)] {
        &self.decomposition
    }
}

/// Outcome of [`entropy`].
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyResult {
    /// Objective at the returned minimizer, an upper bound on `H(G, P)`.
    pub value: f64,
    pub minimizer: PolytopePoint,
    /// Frank–Wolfe duality gap; `value - gap` is a lower bound on `H(G, P)`.
    pub gap: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl EntropyResult {
    pub fn lower_bound(&self) -> f64 {
        self.value - self.gap
    }
}

/// `sum_{v in supp(P)} p_v lg(1/a_v)`.
pub fn objective(p: &Distribution, coords: &[f64]) -> Result<f64> {
    p.check_len(coords.len())?;
    let mut total = 0.0;
    for v in p.support() {
        let a = coords[v];
        if a.is_nan() || a <= 0.0 {
            return Err(Error::DomainError { vertex: v });
        }
        total -= p.prob(v) * a.log2();
    }
    Ok(total)
}

/// Gradient of [`objective`]: `-p_v / (a_v ln 2)` on the support, zero off it.
pub fn gradient(p: &Distribution, coords: &[f64]) -> Result<Vec<f64>> {
    p.check_len(coords.len())?;
    let mut grad = vec![0.0; coords.len()];
    for v in p.support() {
        let a = coords[v];
        if a.is_nan() || a <= 0.0 {
            return Err(Error::DomainError { vertex: v });
        }
        grad[v] = -p.prob(v) / (a * LN_2);
    }
    Ok(grad)
}

/// The vertex of `VP(G)` minimizing `<gradient, s>`.
///
/// For a gradient that is nonpositive everywhere this is a maximum weighted
/// independent set for the weights `-gradient`. An all-zero gradient returns
/// the first maximal independent set in lexicographic order.
pub fn linear_minimization_oracle(g: &Graph, gradient: &[f64], limits: &Limits) -> Result<IndependentSet> {
    if gradient.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), actual: gradient.len() });
    }
    if let Some(v) = gradient.iter().position(|x| x.is_nan() || *x > 0.0) {
        return Err(Error::InvalidGradient { vertex: v });
    }
    if gradient.iter().all(|x| *x == 0.0) {
        let first = enumerate_maximal_independent_sets(g, limits)?.swap_remove(0);
        return Ok(first);
    }
    let weights: Vec<f64> = gradient.iter().map(|x| -x).collect();
    Ok(max_weighted_independent_set(g, &weights, limits)?.witness)
}

#[derive(Clone, Copy, Debug)]
struct Atom {
    mask: u64,
    weight: f64,
}

/// Solver state on the support-induced subgraph, in local labels.
struct Solver<'a> {
    probs: Vec<f64>,
    mass: f64,
    /// Maximal independent sets of the support subgraph, lexicographic.
    vertices: &'a [u64],
    atoms: Vec<Atom>,
    coords: Vec<f64>,
}

impl Solver<'_> {
    fn refresh_coords(&mut self) {
        let total: f64 = self.atoms.iter().map(|a| a.weight).sum();
        for a in &mut self.atoms {
            a.weight /= total;
        }
        self.coords.iter_mut().for_each(|x| *x = 0.0);
        for a in &self.atoms {
            for v in mask_members(a.mask) {
                self.coords[v] += a.weight;
            }
        }
    }

    fn value(&self) -> f64 {
        -self.probs.iter().zip(&self.coords).map(|(p, a)| p * a.log2()).sum::<f64>()
    }

    /// `sum_{v in mask} p_v / a_v`, i.e. `-<grad, 1_mask> ln 2`.
    fn score(&self, ratios: &[f64], mask: u64) -> f64 {
        mask_members(mask).map(|v| ratios[v]).sum()
    }

    /// Directional derivative of the objective along `dir` at `a + t dir`;
    /// `+inf` once a support coordinate reaches zero.
    fn slope(&self, dir: &[f64], t: f64) -> f64 {
        let mut s = 0.0;
        for ((p, a), d) in self.probs.iter().zip(&self.coords).zip(dir) {
            if *d == 0.0 {
                continue;
            }
            let x = a + t * d;
            if x <= 0.0 {
                return f64::INFINITY;
            }
            s -= p * d / x;
        }
        s / LN_2
    }

    /// Exact line search on `[0, max_step]` by bisection on the derivative.
    fn line_search(&self, dir: &[f64], max_step: f64, iteration: usize) -> f64 {
        let start = self.slope(dir, 0.0);
        if !start.is_finite() || start >= 0.0 {
            return (2.0 / (iteration as f64 + 2.0)).min(max_step);
        }
        let end = self.slope(dir, max_step);
        if end <= 0.0 {
            return max_step;
        }
        let (mut lo, mut hi) = (0.0, max_step);
        for _ in 0..LINE_SEARCH_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            let s = self.slope(dir, mid);
            if s.is_nan() {
                return (2.0 / (iteration as f64 + 2.0)).min(max_step);
            }
            if s <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    fn fw_vertex(&self, ratios: &[f64]) -> (u64, f64) {
        let mut best = (self.vertices[0], self.score(ratios, self.vertices[0]));
        for &m in &self.vertices[1..] {
            let s = self.score(ratios, m);
            if s > best.1 {
                best = (m, s);
            }
        }
        best
    }

    fn away_atom(&self, ratios: &[f64]) -> (usize, f64) {
        let mut best = (0, self.score(ratios, self.atoms[0].mask));
        for (i, a) in self.atoms.iter().enumerate().skip(1) {
            let s = self.score(ratios, a.mask);
            if s < best.1 {
                best = (i, s);
            }
        }
        best
    }

    fn fw_step(&mut self, target: u64, iteration: usize) {
        let dir: Vec<f64> =
            self.coords.iter().enumerate().map(|(v, a)| if target >> v & 1 == 1 { 1.0 - a } else { -a }).collect();
        let step = self.line_search(&dir, 1.0, iteration);
        if step <= 0.0 {
            return;
        }
        for a in &mut self.atoms {
            a.weight *= 1.0 - step;
        }
        match self.atoms.iter_mut().find(|a| a.mask == target) {
            Some(a) => a.weight += step,
            None => self.atoms.push(Atom { mask: target, weight: step }),
        }
        self.atoms.retain(|a| a.weight > 0.0);
    }

    /// Returns false when the line search makes no progress.
    fn away_step(&mut self, index: usize, iteration: usize) -> bool {
        let away = self.atoms[index];
        let max_step = away.weight / (1.0 - away.weight);
        let dir: Vec<f64> =
            self.coords.iter().enumerate().map(|(v, a)| if away.mask >> v & 1 == 1 { a - 1.0 } else { *a }).collect();
        let step = self.line_search(&dir, max_step, iteration);
        if step <= 0.0 {
            return false;
        }
        for a in &mut self.atoms {
            a.weight *= 1.0 + step;
        }
        if step >= max_step {
            self.atoms.swap_remove(index);
        } else {
            self.atoms[index].weight -= step;
            if self.atoms[index].weight <= 0.0 {
                self.atoms.swap_remove(index);
            }
        }
        true
    }
}

/// Greedy cover of the local vertex set: repeatedly take a maximal
/// independent set of the still-uncovered vertices, scanning labels upward.
fn greedy_cover(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut remaining: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut cover = Vec::new();
    while remaining != 0 {
        let mut set = 0u64;
        let mut blocked = 0u64;
        for v in mask_members(remaining) {
            if blocked >> v & 1 == 0 {
                set |= 1u64 << v;
                blocked |= adj[v];
            }
        }
        remaining &= !set;
        cover.push(set);
    }
    cover
}

/// Computes `H(G, P)` to within `options.tol` bits.
///
/// On success `result.gap <= tol` and the optimum lies in
/// `[result.value - result.gap, result.value]`. If the iteration cap is hit
/// first, the best point found so far is returned inside
/// [`Error::NonConvergence`].
pub fn entropy(g: &Graph, p: &Distribution, options: &EntropyOptions) -> Result<EntropyResult> {
    if !(options.tol > 0.0 && options.tol.is_finite()) {
        return Err(Error::InvalidTolerance(options.tol));
    }
    p.check_len(g.n())?;
    let support = p.support();
    if support.is_empty() {
        return Err(Error::NotNormalized { sum: "0".into() });
    }
    options.limits.check_vertices(support.len())?;
    let sub = g.induced_subgraph(&support)?;
    let adj = sub.masks();
    let local_n = support.len();
    let full = if local_n == 64 { u64::MAX } else { (1u64 << local_n) - 1 };
    let mut vertices = maximal_independent_masks(&adj, full, options.limits.max_sets)?;
    vertices.sort_by_cached_key(|&m| mask_members(m).collect::<Vec<_>>());

    let cover = greedy_cover(&adj);
    let w0 = 1.0 / cover.len() as f64;
    let probs: Vec<f64> = support.iter().map(|&v| p.prob(v)).collect();
    let mut solver = Solver {
        mass: probs.iter().sum(),
        probs,
        vertices: &vertices,
        atoms: cover.into_iter().map(|mask| Atom { mask, weight: w0 }).collect(),
        coords: vec![0.0; local_n],
    };
    solver.refresh_coords();

    let mut iterations = 0;
    let (gap, converged) = loop {
        let ratios: Vec<f64> = solver.probs.iter().zip(&solver.coords).map(|(p, a)| p / a).collect();
        let (target, target_score) = solver.fw_vertex(&ratios);
        let gap = ((target_score - solver.mass) / LN_2).max(0.0);
        if gap <= options.tol {
            break (gap, true);
        }
        if iterations >= options.max_iterations {
            break (gap, false);
        }
        let mut stepped = false;
        if options.variant == Variant::AwayStep && solver.atoms.len() > 1 {
            let (index, away_score) = solver.away_atom(&ratios);
            let away_gap = (solver.mass - away_score) / LN_2;
            if away_gap > gap {
                stepped = solver.away_step(index, iterations);
            }
        }
        if !stepped {
            solver.fw_step(target, iterations);
        }
        solver.refresh_coords();
        iterations += 1;
    };

    let value = solver.value();
    let n = g.n();
    let mut coords = vec![0.0; n];
    for (i, &v) in support.iter().enumerate() {
        coords[v] = solver.coords[i];
    }
    let mut decomposition: Vec<(IndependentSet, f64)> =
        solver.atoms.iter().map(|a| (IndependentSet::from_mask_labels(a.mask, &support), a.weight)).collect();
    decomposition.sort_by(|x, y| x.0.cmp(&y.0));
    let result =
        EntropyResult { value, minimizer: PolytopePoint { coords, decomposition }, gap, iterations, converged };
    if converged {
        Ok(result)
    } else {
        Err(Error::NonConvergence(Box::new(result)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn solve(g: &Graph, p: &Distribution) -> EntropyResult {
        entropy(g, p, &EntropyOptions::default()).unwrap()
    }

    /// Grid search of `-(1/2) lg a - (1/2) lg(1 - a)` over `a in (0, 1)`.
    fn k2_uniform_grid_minimum() -> f64 {
        (1..100_000)
            .map(|i| i as f64 / 100_000.0)
            .map(|a| -0.5 * a.log2() - 0.5 * (1.0 - a).log2())
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn empty_graph_has_zero_entropy() {
        for n in 1..6 {
            let r = solve(&Graph::empty(n), &Distribution::uniform(n));
            assert_eq!(r.value, 0.0);
            assert_eq!(r.gap, 0.0);
        }
        let p = Distribution::numeric(vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        assert_eq!(solve(&Graph::empty(4), &p).value, 0.0);
    }

    #[test]
    fn k2_uniform_is_one_bit() {
        let r = solve(&Graph::complete(2), &Distribution::uniform(2));
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!((k2_uniform_grid_minimum() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cycle5_uniform_is_lg_five_halves() {
        let r = solve(&Graph::cycle(5), &Distribution::uniform(5));
        assert!(r.converged && r.gap <= 1e-9);
        assert!((r.value - 2.5f64.log2()).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn minimizer_is_consistent() {
        let g = Graph::petersen();
        let p = Distribution::numeric((1..=10).map(|i| i as f64 / 55.0).collect()).unwrap();
        let r = solve(&g, &p);
        let x = PolytopePoint::from_decomposition(10, r.minimizer.decomposition().to_vec()).unwrap();
        for (a, b) in x.coords().iter().zip(r.minimizer.coords()) {
            assert!((a - b).abs() < DECOMPOSITION_TOLERANCE);
        }
        for (set, _) in r.minimizer.decomposition() {
            assert!(g.is_independent(set.members()));
        }
        assert!((objective(&p, r.minimizer.coords()).unwrap() - r.value).abs() < 1e-12);
    }

    #[test]
    fn off_support_vertices_are_ignored() {
        // Triangle with the mass on one edge behaves like K2.
        let third = Rational::new(1, 2);
        let p = Distribution::exact(vec![third.clone(), third, Rational::zero()]).unwrap();
        let r = solve(&Graph::complete(3), &p);
        assert!((r.value - 1.0).abs() < 1e-9);
        assert_eq!(r.minimizer.coords()[2], 0.0);
        let r = solve(&Graph::complete(2), &Distribution::point_mass(2, 0));
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn classic_variant_reaches_loose_tolerance() {
        let opts = EntropyOptions { tol: 1e-4, variant: Variant::Classic, ..Default::default() };
        let r = entropy(&Graph::cycle(5), &Distribution::uniform(5), &opts).unwrap();
        assert!(r.lower_bound() <= 2.5f64.log2() && 2.5f64.log2() <= r.value + 1e-12);
    }

    #[test]
    fn iteration_cap_reports_best_so_far() {
        let opts = EntropyOptions { tol: 1e-12, max_iterations: 3, variant: Variant::Classic, ..Default::default() };
        let p = Distribution::numeric(vec![0.1, 0.2, 0.3, 0.15, 0.25]).unwrap();
        match entropy(&Graph::cycle(5), &p, &opts) {
            Err(Error::NonConvergence(r)) => {
                assert!(!r.converged);
                assert_eq!(r.iterations, 3);
                assert!(r.gap > 1e-12);
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_tolerance() {
        let g = Graph::complete(2);
        let p = Distribution::uniform(2);
        for tol in [0.0, -1.0, f64::NAN] {
            assert!(matches!(entropy(&g, &p, &EntropyOptions::with_tol(tol)), Err(Error::InvalidTolerance(_))));
        }
    }

    #[test]
    fn objective_examples() {
        let u2 = Distribution::uniform(2);
        assert!((objective(&u2, &[0.5, 0.5]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(objective(&Distribution::point_mass(2, 0), &[1.0, 0.0]).unwrap(), 0.0);
        let u5 = Distribution::uniform(5);
        let v = objective(&u5, &[0.4; 5]).unwrap();
        assert!((v - 2.5f64.log2()).abs() < 1e-15);
        assert!(matches!(objective(&u2, &[1.0, 0.0]), Err(Error::DomainError { vertex: 1 })));
    }

    #[test]
    fn oracle_examples() {
        let lim = Limits::default();
        let s = linear_minimization_oracle(&Graph::complete(2), &[-1.0, -2.0], &lim).unwrap();
        assert_eq!(s.members(), &[1]);
        let s = linear_minimization_oracle(&Graph::cycle(5), &[-3.0; 5], &lim).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        let s = linear_minimization_oracle(&Graph::cycle(5), &[0.0; 5], &lim).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        assert!(matches!(
            linear_minimization_oracle(&Graph::complete(2), &[-1.0, 0.5], &lim),
            Err(Error::InvalidGradient { vertex: 1 })
        ));
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let p = Distribution::numeric(vec![0.2, 0.3, 0.5]).unwrap();
        let a = [0.4, 0.7, 0.25];
        let g = gradient(&p, &a).unwrap();
        for v in 0..3 {
            let h = 1e-6;
            let mut up = a;
            let mut dn = a;
            up[v] += h;
            dn[v] -= h;
            let fd = (objective(&p, &up).unwrap() - objective(&p, &dn).unwrap()) / (2.0 * h);
            assert!((fd - g[v]).abs() < 1e-6);
        }
    }
}

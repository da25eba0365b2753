//! Brute-force reference implementations for testing.
//!
//! Nothing here reuses the enumeration, LP or Frank–Wolfe code: sets come
//! from plain subset loops, and entropy is minimized by projected gradient
//! over convex-combination weights on the maximal independent sets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::CoverMultiset;
use crate::rational::Rational;

/// Largest graph the subset loops accept.
pub const BRUTE_VERTEX_CAP: usize = 20;
/// Largest graph [`brute_entropy`] accepts.
pub const BRUTE_ENTROPY_CAP: usize = 10;
/// Seeds of the multi-start in [`brute_entropy`]; seed 0 starts from uniform
/// weights.
pub const SEEDS: std::ops::Range<u64> = 0..5;
const MAX_GRADIENT_STEPS: usize = 20_000;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::VertexCapExceeded { n: g.n(), cap });
    }
    Ok(())
}

fn subset_is_independent(g: &Graph, mask: u32) -> bool {
    (0..g.n()).all(|u| mask & (1 << u) == 0 || (u + 1..g.n()).all(|v| mask & (1 << v) == 0 || !g.has_edge(u, v)))
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Every independent set, as a bitmask, in increasing mask order.
fn independent_masks(g: &Graph) -> Result<Vec<u32>> {
    check_cap(g, BRUTE_VERTEX_CAP)?;
    Ok((0u32..1 << g.n()).filter(|&m| subset_is_independent(g, m)).collect())
}

/// `alpha(G)` by checking all `2^n` subsets.
pub fn brute_alpha(g: &Graph) -> Result<usize> {
    Ok(independent_masks(g)?.into_iter().map(|m| m.count_ones() as usize).max().unwrap_or(0))
}

/// All inclusion-maximal independent sets, sorted lexicographically.
pub fn brute_maximal_independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut out: Vec<Vec<usize>> = independent_masks(g)?
        .into_iter()
        .filter(|&m| (0..n).all(|v| m & (1 << v) != 0 || !subset_is_independent(g, m | (1 << v))))
        .map(|m| members(m, n))
        .collect();
    out.sort();
    Ok(out)
}

/// Maximum total weight of an independent set.
pub fn brute_max_weight(g: &Graph, weights: &[Rational]) -> Result<Rational> {
    let n = g.n();
    Ok(independent_masks(g)?
        .into_iter()
        .map(|m| members(m, n).iter().map(|&v| &weights[v]).sum::<Rational>())
        .max()
        .unwrap_or_default())
}

/// Every independent set of maximum total weight, sorted lexicographically.
pub fn brute_maximum_weighted_sets(g: &Graph, weights: &[Rational]) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let best = brute_max_weight(g, weights)?;
    let mut out: Vec<Vec<usize>> = independent_masks(g)?
        .into_iter()
        .map(|m| members(m, n))
        .filter(|s| s.iter().map(|&v| &weights[v]).sum::<Rational>() == best)
        .collect();
    out.sort();
    Ok(out)
}

/// Euclidean projection onto the probability simplex.
fn project_simplex(y: &[f64]) -> Vec<f64> {
    let mut sorted = y.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (i, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - 1.0) / (i + 1) as f64;
        if u - t > 0.0 {
            theta = t;
        }
    }
    y.iter().map(|&x| (x - theta).max(0.0)).collect()
}

struct Problem<'a> {
    sets: Vec<Vec<usize>>,
    p: &'a [f64],
    n: usize,
}

impl Problem<'_> {
    fn coords(&self, lambda: &[f64]) -> Vec<f64> {
        let mut a = vec![0.0; self.n];
        for (set, &l) in self.sets.iter().zip(lambda) {
            for &v in set {
                a[v] += l;
            }
        }
        a
    }

    fn value(&self, lambda: &[f64]) -> f64 {
        let a = self.coords(lambda);
        let mut f = 0.0;
        for (&pv, &av) in self.p.iter().zip(&a) {
            if pv > 0.0 {
                if av <= 0.0 {
                    return f64::INFINITY;
                }
                f -= pv * av.log2();
            }
        }
        f
    }

    fn gradient(&self, lambda: &[f64]) -> Vec<f64> {
        let a = self.coords(lambda);
        self.sets
            .iter()
            .map(|set| {
                -set.iter().filter(|&&v| self.p[v] > 0.0).map(|&v| self.p[v] / a[v]).sum::<f64>()
                    / std::f64::consts::LN_2
            })
            .collect()
    }

    /// Projected gradient with Armijo backtracking, stopped when the
    /// gradient mapping has norm at most `precision` or after
    /// `MAX_GRADIENT_STEPS` steps. Every iterate is feasible, so the value
    /// is an upper bound either way.
    fn minimize(&self, mut lambda: Vec<f64>, precision: f64) -> f64 {
        let mut f = self.value(&lambda);
        let mut step = 1.0;
        for _ in 0..MAX_GRADIENT_STEPS {
            let grad = self.gradient(&lambda);
            let mut accepted = false;
            while step > 1e-20 {
                let trial: Vec<f64> = lambda.iter().zip(&grad).map(|(l, g)| l - step * g).collect();
                let next = project_simplex(&trial);
                let diff: Vec<f64> = next.iter().zip(&lambda).map(|(a, b)| a - b).collect();
                let decrease: f64 = grad.iter().zip(&diff).map(|(g, d)| g * d).sum();
                let sq: f64 = diff.iter().map(|d| d * d).sum();
                if sq.sqrt() / step <= precision {
                    return f;
                }
                let f_next = self.value(&next);
                if f_next <= f + 1e-4 * decrease {
                    lambda = next;
                    f = f_next;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if !accepted {
                return f;
            }
            step *= 2.0;
        }
        f
    }
}

/// Upper bound on `H(G, P)` from a single start.
pub fn brute_entropy_seeded(g: &Graph, p: &Distribution, precision: f64, seed: u64) -> Result<f64> {
    check_cap(g, BRUTE_ENTROPY_CAP)?;
    p.check_len(g.n())?;
    if precision.is_nan() || precision <= 0.0 {
        return Err(Error::InvalidTolerance(precision));
    }
    let problem = Problem { sets: brute_maximal_independent_sets(g)?, p: p.probs(), n: g.n() };
    let k = problem.sets.len();
    let start = if seed == 0 {
        vec![1.0 / k as f64; k]
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw: Vec<f64> = (0..k).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
        let sum: f64 = raw.iter().sum();
        raw.into_iter().map(|x| x / sum).collect()
    };
    Ok(problem.minimize(start, precision))
}

/// Upper bound on `H(G, P)`: the best of the starts in [`SEEDS`].
pub fn brute_entropy(g: &Graph, p: &Distribution, precision: f64) -> Result<f64> {
    let mut best = f64::INFINITY;
    for seed in SEEDS {
        best = best.min(brute_entropy_seeded(g, p, precision, seed)?);
    }
    Ok(best)
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub reasons: Vec<String>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.reasons.is_empty()
    }
}

/// Re-checks a maximizer certificate: every set independent with weight
/// exactly the brute-force `alpha_P`, and every support vertex covered
/// exactly `fold >= 1` times.
pub fn verify_certificate(g: &Graph, p: &Distribution, cm: &CoverMultiset) -> Verification {
    let mut reasons = Vec::new();
    let n = g.n();
    if p.len() != n {
        reasons.push(format!("distribution has {} entries for {n} vertices", p.len()));
        return Verification { reasons };
    }
    let Some(weights) = p.exact_weights() else {
        reasons.push("distribution is not exact".into());
        return Verification { reasons };
    };
    let alpha_p = match brute_max_weight(g, weights) {
        Ok(a) => Some(a),
        Err(e) => {
            reasons.push(format!("cannot compute alpha_P: {e}"));
            None
        }
    };
    let mut counts = vec![0u64; n];
    for (set, m) in cm.multiplicities() {
        let s = set.members();
        if let Some(&v) = s.iter().find(|&&v| v >= n) {
            reasons.push(format!("set {s:?} has vertex {v} outside the graph"));
            continue;
        }
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                if g.has_edge(u, v) {
                    reasons.push(format!("set {s:?} contains edge {u}-{v}"));
                }
            }
        }
        if let Some(a) = &alpha_p {
            let w: Rational = s.iter().map(|&v| &weights[v]).sum();
            if w != *a {
                reasons.push(format!("set {s:?} has weight {w}, alpha_P is {a}"));
            }
        }
        for &v in s {
            counts[v] += m;
        }
    }
    if cm.fold() == 0 {
        reasons.push("fold is zero".into());
    }
    for v in p.support() {
        if counts[v] != cm.fold() {
            reasons.push(format!("vertex {v} covered {} times, fold is {}", counts[v], cm.fold()));
        }
    }
    Verification { reasons }
}

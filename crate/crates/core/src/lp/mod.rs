//! Exact linear programming over independent sets: the fractional chromatic
//! number, uniform fractional covers, and integral (b-fold) covers.
//!
//! Columns of the covering LP are the *maximal* independent sets only.
//! Shrinking a set never improves coverage, so any optimal fractional
//! coloring over all independent sets can be pushed onto maximal ones with
//! the same total; the optimum is unchanged.

pub mod simplex;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, IndependentSet};
use crate::independent::{enumerate_maximal_independent_sets, Limits};
use crate::rational::{lcm_of_denominators, Rational};
use simplex::{Constraint, LinearProgram, LpOutcome, Relation};

/// Nonnegative rational weights on independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalColoring {
    weights: Vec<(IndependentSet, Rational)>,
    total: Rational,
}

impl FractionalColoring {
    /// Drops zero weights and merges repeated sets.
    pub fn new(weights: impl IntoIterator<Item = (IndependentSet, Rational)>) -> Result<Self> {
        let mut merged: BTreeMap<IndependentSet, Rational> = BTreeMap::new();
        for (i, (set, w)) in weights.into_iter().enumerate() {
            if w.is_negative() {
                return Err(Error::InvalidWeight { vertex: i });
            }
            if !w.is_zero() {
                *merged.entry(set).or_default() += &w;
            }
        }
        let total = merged.values().sum();
        Ok(FractionalColoring { weights: merged.into_iter().collect(), total })
    }

    pub fn weights(&self) -> &[(IndependentSet, Rational)] {
        &self.weights
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    /// `sum_{I ∋ v} w_I` for every vertex `v < n`.
    pub fn coverage(&self, n: usize) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); n];
        for (set, w) in &self.weights {
            for &v in set.members() {
                c[v] += w;
            }
        }
        c
    }
}

/// A multiset of independent sets covering `covered` exactly `fold` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMultiset {
    multiplicities: Vec<(IndependentSet, u64)>,
    fold: u64,
    covered: Vec<usize>,
}

impl CoverMultiset {
    pub fn multiplicities(&self) -> &[(IndependentSet, u64)] {
        &self.multiplicities
    }

    pub fn fold(&self) -> u64 {
        self.fold
    }

    pub fn covered(&self) -> &[usize] {
        &self.covered
    }

    /// Number of sets counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.multiplicities.iter().map(|(_, m)| m).sum()
    }

    /// `|S| / fold`; zero for the empty multiset.
    pub fn ratio(&self) -> Rational {
        if self.fold == 0 {
            return Rational::zero();
        }
        Rational::from_big(self.size().into(), self.fold.into())
    }

    /// The b-fold coloring induced by the multiset: each copy of each set is
    /// one color, and vertex `v` receives the colors of the copies containing
    /// it. Vertices `>= n` are ignored.
    pub fn colors(&self, n: usize) -> Vec<Vec<u64>> {
        let mut colors = vec![Vec::new(); n];
        let mut next = 0u64;
        for (set, m) in &self.multiplicities {
            for c in next..next + m {
                for &v in set.members() {
                    if v < n {
                        colors[v].push(c);
                    }
                }
            }
            next += m;
        }
        colors
    }
}

fn coloring_from_lp(sets: &[IndependentSet], weights: &[Rational]) -> Result<FractionalColoring> {
    FractionalColoring::new(sets.iter().cloned().zip(weights.iter().cloned()))
}

/// Optimal fractional coloring and fractional clique of `g`.
struct ChromaticSolution {
    value: Rational,
    coloring: FractionalColoring,
    clique: Vec<Rational>,
}

/// Solves the packing LP `max sum x_v : sum_{v in I} x_v <= 1` over maximal
/// independent sets `I`, reads the covering solution off its duals, and
/// checks both exactly.
fn solve_chromatic(g: &Graph, limits: &Limits) -> Result<ChromaticSolution> {
    let n = g.n();
    if n == 0 {
        return Ok(ChromaticSolution {
            value: Rational::zero(),
            coloring: FractionalColoring::new([])?,
            clique: Vec::new(),
        });
    }
    let sets = enumerate_maximal_independent_sets(g, limits)?;
    let lp = LinearProgram {
        objective: vec![-Rational::one(); n],
        constraints: sets
            .iter()
            .map(|s| Constraint {
                coeffs: s.members().iter().map(|&v| (v, Rational::one())).collect(),
                relation: Relation::Le,
                rhs: Rational::one(),
            })
            .collect(),
    };
    let solution = match lp.solve() {
        LpOutcome::Optimal(s) => s,
        other => return Err(Error::CertificateMismatch(format!("packing LP ended {other:?}"))),
    };
    let value = -&solution.objective;
    let weights: Vec<Rational> = solution.duals.iter().map(|y| -y).collect();
    let coloring = coloring_from_lp(&sets, &weights)?;

    // Weak duality: a feasible coloring and a feasible clique of equal value
    // are both optimal.
    if coloring.total() != &value {
        return Err(Error::CertificateMismatch(format!(
            "coloring total {} differs from clique value {value}",
            coloring.total()
        )));
    }
    if let Some(v) = coloring.coverage(n).iter().position(|c| *c < Rational::one()) {
        return Err(Error::CertificateMismatch(format!("vertex {v} under-covered")));
    }
    let clique = solution.x;
    if clique.iter().any(Rational::is_negative)
        || sets.iter().any(|s| s.weight(&clique) > Rational::one())
        || clique.iter().sum::<Rational>() != value
    {
        return Err(Error::CertificateMismatch("fractional clique infeasible".into()));
    }
    Ok(ChromaticSolution { value, coloring, clique })
}

/// Exact fractional chromatic number with an optimal fractional coloring
/// supported on maximal independent sets. The empty graph on zero vertices
/// has value 0.
pub fn fractional_chromatic_number(g: &Graph, limits: &Limits) -> Result<(Rational, FractionalColoring)> {
    let s = solve_chromatic(g, limits)?;
    Ok((s.value, s.coloring))
}

/// Optimal fractional clique: nonnegative vertex weights with at most unit
/// weight on every independent set and total equal to `chi_f(G)`.
pub fn fractional_clique(g: &Graph, limits: &Limits) -> Result<(Rational, Vec<Rational>)> {
    let s = solve_chromatic(g, limits)?;
    Ok((s.value, s.clique))
}

/// Looks for `y >= 0` over `family` with `sum_{I ∋ v} y_I = 1` for every
/// `v` in `target`. Returns the (basic) solution if one exists.
pub fn uniform_cover_feasible(
    g: &Graph,
    family: &[IndependentSet],
    target: &[usize],
    limits: &Limits,
) -> Result<Option<FractionalColoring>> {
    limits.check_vertices(g.n())?;
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for set in family {
        if let Some(&v) = set.members().iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !g.is_independent(set.members()) {
            return Err(Error::NotIndependent(set.members().to_vec()));
        }
    }
    if let Some(&v) = target.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let lp = LinearProgram {
        objective: vec![Rational::one(); family.len()],
        constraints: target
            .iter()
            .map(|&v| Constraint {
                coeffs: family
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(v))
                    .map(|(j, _)| (j, Rational::one()))
                    .collect(),
                relation: Relation::Eq,
                rhs: Rational::one(),
            })
            .collect(),
    };
    let solution = match lp.solve() {
        LpOutcome::Optimal(s) => s,
        LpOutcome::Infeasible => return Ok(None),
        LpOutcome::Unbounded => return Err(Error::CertificateMismatch("cover LP unbounded".into())),
    };
    let cover = coloring_from_lp(family, &solution.x)?;
    let coverage = cover.coverage(g.n());
    if target.iter().any(|&v| coverage[v] != Rational::one()) {
        return Err(Error::CertificateMismatch("cover LP solution is not uniform".into()));
    }
    Ok(Some(cover))
}

/// Scales a uniform fractional cover to integers: with `r` the least common
/// multiple of the weight denominators, each set gets multiplicity `r w_I`.
/// Every vertex met by some set must then lie in the same number of sets.
pub fn integralize_cover(fc: &FractionalColoring) -> Result<CoverMultiset> {
    if fc.weights().is_empty() {
        return Ok(CoverMultiset { multiplicities: Vec::new(), fold: 0, covered: Vec::new() });
    }
    let r = Rational::from(lcm_of_denominators(fc.weights().iter().map(|(_, w)| w)));
    let multiplicities = fc
        .weights()
        .iter()
        .map(|(set, w)| {
            let m = (&r * w).to_u64().ok_or(Error::Overflow)?;
            Ok((set.clone(), m))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for (set, m) in &multiplicities {
        for &v in set.members() {
            let c = counts.entry(v).or_default();
            *c = c.checked_add(*m).ok_or(Error::Overflow)?;
        }
    }
    let mut folds = counts.values();
    let fold = *folds.next().unwrap_or(&0);
    if folds.any(|&c| c != fold) {
        return Err(Error::NotUniform);
    }
    Ok(CoverMultiset { multiplicities, fold, covered: counts.into_keys().collect() })
}

/// Removes excess coverage from an optimal fractional coloring so every
/// vertex is covered exactly once, shrinking sets in label and lexicographic
/// order. The total weight is unchanged.
fn tighten(coloring: &FractionalColoring, n: usize) -> Result<FractionalColoring> {
    let mut entries: Vec<(Vec<usize>, Rational)> =
        coloring.weights().iter().map(|(s, w)| (s.members().to_vec(), w.clone())).collect();
    let one = Rational::one();
    for v in 0..n {
        let coverage: Rational = entries.iter().filter(|(s, _)| s.contains(&v)).map(|(_, w)| w).sum();
        let mut excess = &coverage - &one;
        let mut split = Vec::new();
        for (set, w) in entries.iter_mut() {
            if !excess.is_positive() {
                break;
            }
            if !set.contains(&v) {
                continue;
            }
            let shrunk: Vec<usize> = set.iter().copied().filter(|&u| u != v).collect();
            if *w <= excess {
                excess -= &*w;
                *set = shrunk;
            } else {
                split.push((shrunk, excess.clone()));
                *w -= &excess;
                excess = Rational::zero();
            }
        }
        entries.extend(split);
    }
    FractionalColoring::new(entries.into_iter().map(|(s, w)| (IndependentSet::from_sorted_unchecked(s), w)))
}

/// A b-fold coloring realizing `chi_f(G) = chi_b(G) / b`, as a multiset of
/// independent sets covering every vertex exactly `fold = b` times.
pub fn b_fold_realization(g: &Graph, limits: &Limits) -> Result<CoverMultiset> {
    let (chi_f, coloring) = fractional_chromatic_number(g, limits)?;
    let exact = tighten(&coloring, g.n())?;
    if exact.total() != &chi_f || exact.coverage(g.n()).iter().any(|c| *c != Rational::one()) {
        return Err(Error::CertificateMismatch("tightened coloring lost optimality".into()));
    }
    let cover = integralize_cover(&exact)?;
    if cover.ratio() != chi_f {
        return Err(Error::CertificateMismatch(format!("|S|/b = {} but chi_f = {chi_f}", cover.ratio())));
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn chi(g: &Graph) -> Rational {
        fractional_chromatic_number(g, &lim()).unwrap().0
    }

    fn set(g: &Graph, m: &[usize]) -> IndependentSet {
        IndependentSet::new(g, m.to_vec()).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        for n in 1..7 {
            assert_eq!(chi(&Graph::complete(n)), Rational::from(n));
            assert_eq!(chi(&Graph::empty(n)), Rational::one());
        }
        assert_eq!(chi(&Graph::cycle(5)), Rational::new(5, 2));
        assert_eq!(chi(&Graph::cycle(7)), Rational::new(7, 3));
        assert_eq!(chi(&Graph::petersen()), Rational::new(5, 2));
        assert_eq!(chi(&Graph::empty(0)), Rational::zero());
    }

    #[test]
    fn chromatic_certificate_is_feasible() {
        let g = Graph::petersen();
        let (value, coloring) = fractional_chromatic_number(&g, &lim()).unwrap();
        assert_eq!(coloring.total(), &value);
        assert!(coloring.coverage(10).iter().all(|c| *c >= Rational::one()));
        let (clique_value, clique) = fractional_clique(&g, &lim()).unwrap();
        assert_eq!(clique_value, value);
        assert_eq!(clique.iter().sum::<Rational>(), value);
    }

    #[test]
    fn uniform_cover_examples() {
        let c5 = Graph::cycle(5);
        let family = enumerate_maximal_independent_sets(&c5, &lim()).unwrap();
        let fc = uniform_cover_feasible(&c5, &family, &[0, 1, 2, 3, 4], &lim()).unwrap().unwrap();
        assert_eq!(fc.weights().len(), 5);
        assert!(fc.weights().iter().all(|(_, w)| *w == Rational::new(1, 2)));

        let k2 = Graph::complete(2);
        assert!(uniform_cover_feasible(&k2, &[set(&k2, &[0])], &[0, 1], &lim()).unwrap().is_none());

        let e3 = Graph::empty(3);
        let fc = uniform_cover_feasible(&e3, &[set(&e3, &[0, 1, 2])], &[0, 1, 2], &lim()).unwrap().unwrap();
        assert_eq!(fc.weights()[0].1, Rational::one());

        assert!(matches!(uniform_cover_feasible(&k2, &[], &[0], &lim()), Err(Error::EmptyFamily)));
    }

    #[test]
    fn integralize_examples() {
        let c5 = Graph::cycle(5);
        let family = enumerate_maximal_independent_sets(&c5, &lim()).unwrap();
        let fc = FractionalColoring::new(family.into_iter().map(|s| (s, Rational::new(1, 2)))).unwrap();
        let cm = integralize_cover(&fc).unwrap();
        assert_eq!(cm.fold(), 2);
        assert!(cm.multiplicities().iter().all(|(_, m)| *m == 1));
        assert_eq!(cm.size(), 5);
        assert_eq!(cm.covered(), &[0, 1, 2, 3, 4]);

        let k1 = Graph::empty(1);
        let cm = integralize_cover(&FractionalColoring::new([(set(&k1, &[0]), Rational::one())]).unwrap()).unwrap();
        assert_eq!((cm.size(), cm.fold()), (1, 1));

        // Vertex 0 covered 1/3 + 2/3, vertex 1 only 2/3.
        let e2 = Graph::empty(2);
        let fc =
            FractionalColoring::new([(set(&e2, &[0]), Rational::new(1, 3)), (set(&e2, &[0, 1]), Rational::new(2, 3))])
                .unwrap();
        assert!(matches!(integralize_cover(&fc), Err(Error::NotUniform)));
        // Disjoint sets of weights 1/3 and 2/3 covering two vertices once each
        // is not uniform either: r = 3 gives counts 1 and 2.
        let fc =
            FractionalColoring::new([(set(&e2, &[0]), Rational::new(1, 3)), (set(&e2, &[1]), Rational::new(2, 3))])
                .unwrap();
        assert!(matches!(integralize_cover(&fc), Err(Error::NotUniform)));
    }

    fn assert_b_fold(g: &Graph, cm: &CoverMultiset) {
        let colors = cm.colors(g.n());
        for c in &colors {
            assert_eq!(c.len() as u64, cm.fold());
        }
        for (u, v) in g.edges() {
            assert!(colors[u].iter().all(|c| !colors[v].contains(c)));
        }
    }

    #[test]
    fn b_fold_examples() {
        let c5 = Graph::cycle(5);
        let cm = b_fold_realization(&c5, &lim()).unwrap();
        assert_eq!((cm.size(), cm.fold()), (5, 2));
        assert_b_fold(&c5, &cm);

        let k3 = Graph::complete(3);
        let cm = b_fold_realization(&k3, &lim()).unwrap();
        assert_eq!((cm.size(), cm.fold()), (3, 1));
        assert!(cm.multiplicities().iter().all(|(s, _)| s.len() == 1));

        let p = Graph::petersen();
        let cm = b_fold_realization(&p, &lim()).unwrap();
        assert_eq!(cm.ratio(), Rational::new(5, 2));
        assert_b_fold(&p, &cm);

        // A star over-covers its leaves in any maximal-set solution.
        let star = Graph::star(3);
        let cm = b_fold_realization(&star, &lim()).unwrap();
        assert_eq!(cm.ratio(), Rational::from_integer(2));
        assert_b_fold(&star, &cm);
    }
}

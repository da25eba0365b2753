//! Exact decisions for entropy-maximizing distributions and symmetric graphs.
//!
//! `P` maximizes `H(G, .)` exactly when the maximum `P`-weight independent
//! sets contain a multiset that covers `supp(P)` uniformly. `G` is symmetric
//! (the uniform distribution maximizes its entropy) exactly when
//! `chi_f(G) = n / alpha(G)`. Both tests are carried out in rational
//! arithmetic; floating point only appears in [`entropy_equals_log_chi_f`].

use crate::distribution::Distribution;
use crate::entropy::{entropy, EntropyOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independent::{alpha, maximum_independent_sets, maximum_weighted_sets_on_support, Limits};
use crate::lp::{fractional_chromatic_number, integralize_cover, uniform_cover_feasible, CoverMultiset};
use crate::rational::Rational;

/// Why a distribution is not a maximizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    /// No multiset of maximum-weight independent sets covers the support
    /// uniformly.
    NoUniformCover,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::NoUniformCover => "NoUniformCover",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizerVerdict {
    pub is_maximizer: bool,
    /// `chi_f` of the subgraph induced by the support, in that subgraph's
    /// labels.
    pub chi_f_support: Rational,
    pub alpha_p: Rational,
    /// Uniform cover of the support by maximum-weight sets, in the labels of
    /// the input graph. Present iff `is_maximizer`.
    pub certificate: Option<CoverMultiset>,
    /// Present iff not `is_maximizer`.
    pub reason: Option<Reason>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub is_symmetric: bool,
    pub chi_f: Rational,
    pub n_over_alpha: Rational,
    /// Uniform cover of `V(G)` by maximum independent sets. Present iff
    /// `is_symmetric`.
    pub certificate: Option<CoverMultiset>,
}

/// Decides whether `p` maximizes `H(G, .)`.
///
/// Sets that differ only in zero-probability vertices have equal weight and
/// are identified with their intersection with the support before the cover
/// test.
pub fn is_entropy_maximizer(g: &Graph, p: &Distribution, limits: &Limits) -> Result<MaximizerVerdict> {
    p.check_len(g.n())?;
    if !p.is_exact() {
        return Err(Error::NotExact);
    }
    let support = p.support();
    let induced = g.induced_subgraph(&support)?;
    let (chi_f_support, _) = fractional_chromatic_number(&induced, limits)?;
    let (alpha_p, family) = maximum_weighted_sets_on_support(g, p, limits)?;
    let cover = uniform_cover_feasible(g, &family, &support, limits)?;
    let verdict = match cover {
        Some(fc) => {
            let cm = integralize_cover(&fc)?;
            MaximizerVerdict { is_maximizer: true, chi_f_support, alpha_p, certificate: Some(cm), reason: None }
        }
        None => MaximizerVerdict {
            is_maximizer: false,
            chi_f_support,
            alpha_p,
            certificate: None,
            reason: Some(Reason::NoUniformCover),
        },
    };
    Ok(verdict)
}

/// Decides whether the uniform distribution maximizes `H(G, .)` by comparing
/// `chi_f(G)` with `n / alpha(G)`.
pub fn is_symmetric(g: &Graph, limits: &Limits) -> Result<SymmetryVerdict> {
    let a = alpha(g, limits)?.value;
    let (chi_f, _) = fractional_chromatic_number(g, limits)?;
    let n_over_alpha = Rational::new(g.n() as i64, a as i64);
    if chi_f != n_over_alpha {
        return Ok(SymmetryVerdict { is_symmetric: false, chi_f, n_over_alpha, certificate: None });
    }
    let family = maximum_independent_sets(g, limits)?;
    let target: Vec<usize> = (0..g.n()).collect();
    let fc = uniform_cover_feasible(g, &family, &target, limits)?
        .ok_or_else(|| Error::CertificateMismatch("chi_f = n/alpha but maximum sets admit no uniform cover".into()))?;
    let cm = integralize_cover(&fc)?;
    Ok(SymmetryVerdict { is_symmetric: true, chi_f, n_over_alpha, certificate: Some(cm) })
}

/// Numerical check of `H(G, P) = lg chi_f(G[supp(P)])`: true when the two
/// differ by at most `tol` plus the solver's duality gap.
pub fn entropy_equals_log_chi_f(g: &Graph, p: &Distribution, tol: f64, limits: &Limits) -> Result<bool> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let options = EntropyOptions { limits: *limits, ..EntropyOptions::default() };
    let h = entropy(g, p, &options)?;
    let induced = g.induced_subgraph(&p.support())?;
    let (chi_f, _) = fractional_chromatic_number(&induced, limits)?;
    Ok((h.value - chi_f.to_f64().log2()).abs() <= tol + h.gap)
}

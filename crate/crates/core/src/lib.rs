//! Graph entropy with certified accuracy, exact fractional chromatic numbers,
//! and exact decisions for entropy-maximizing distributions and symmetric
//! graphs.
//!
//! ```
//! use gelab_core::{entropy, fractional_chromatic_number, Distribution, EntropyOptions, Graph, Limits, Rational};
//!
//! let c5 = Graph::cycle(5);
//! let h = entropy(&c5, &Distribution::uniform(5), &EntropyOptions::default()).unwrap();
//! let (chi_f, _) = fractional_chromatic_number(&c5, &Limits::default()).unwrap();
//! assert_eq!(chi_f, Rational::new(5, 2));
//! assert!((h.value - chi_f.to_f64().log2()).abs() <= 1e-9 + h.gap);
//! ```

pub mod characterization;
pub mod constructions;
pub mod corpus;
pub mod distribution;
pub mod entropy;
pub mod error;
pub mod graph;
pub mod independent;
pub mod lp;
pub mod oracle;
pub mod rational;

pub use characterization::{
    entropy_equals_log_chi_f, is_entropy_maximizer, is_symmetric, MaximizerVerdict, Reason, SymmetryVerdict,
};
pub use constructions::{
    blow_up, hardness_gadget, substitute, substitute_distribution, union, BlowupSpec, GadgetSpec, Substitution,
};
pub use distribution::Distribution;
pub use entropy::{entropy, objective, EntropyOptions, EntropyResult, PolytopePoint, Variant};
pub use error::{Error, Result};
pub use graph::{Graph, IndependentSet};
pub use independent::{
    alpha, enumerate_maximal_independent_sets, enumerate_maximum_weighted_independent_sets,
    max_weighted_independent_set, maximum_independent_sets, Limits, WeightedAlpha,
};
pub use lp::{
    b_fold_realization, fractional_chromatic_number, fractional_clique, integralize_cover, uniform_cover_feasible,
    CoverMultiset, FractionalColoring,
};
pub use rational::Rational;

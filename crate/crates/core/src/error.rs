use thiserror::Error;

use crate::entropy::EntropyResult;

/// Errors produced by gelab-core operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    VertexCapExceeded { n: usize, cap: usize },

    #[error("more than {cap} independent sets would be enumerated")]
    SetCapExceeded { cap: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertices {0:?} do not form an independent set")]
    NotIndependent(Vec<usize>),

    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("weight of vertex {vertex} is negative or not finite")]
    InvalidWeight { vertex: usize },

    #[error("probabilities sum to {sum}, not 1")]
    NotNormalized { sum: String },

    #[error("operation requires exact rational probabilities")]
    NotExact,

    #[error("gradient entry {vertex} is positive or not finite")]
    InvalidGradient { vertex: usize },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("objective is infinite: coordinate of support vertex {vertex} is zero")]
    DomainError { vertex: usize },

    #[error("Frank-Wolfe stopped after {} iterations with gap {:e}", .0.iterations, .0.gap)]
    NonConvergence(Box<EntropyResult>),

    #[error("per-vertex coverage is not uniform over the covered vertices")]
    NotUniform,

    #[error("independent-set family is empty")]
    EmptyFamily,

    #[error("multiplicity does not fit in 64 bits")]
    Overflow,

    #[error("graphs have different vertex counts ({left} vs {right})")]
    VertexSetMismatch { left: usize, right: usize },

    #[error("vertex {0} not found")]
    VertexNotFound(usize),

    #[error("blow-up requires exact rational probabilities")]
    NotRational,

    #[error("vertex {0} has zero probability; restrict to the support first")]
    ZeroWeightVertex(usize),

    #[error("gadget parameter k must be at least 2, got {0}")]
    InvalidK(usize),

    #[error("certificate check failed: {0}")]
    CertificateMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

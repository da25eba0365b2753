//! Probability distributions on the vertex set of a graph.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Tolerance on the total mass of a floating-point distribution.
pub const NUMERIC_SUM_TOLERANCE: f64 = 1e-12;

/// Vertex-indexed probabilities.
///
/// An exact distribution carries rational weights summing to exactly one
/// (and their `f64` images); a numeric one carries only `f64` weights
/// summing to one within [`NUMERIC_SUM_TOLERANCE`].
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    float: Vec<f64>,
    exact: Option<Vec<Rational>>,
}

impl Distribution {
    pub fn exact(weights: Vec<Rational>) -> Result<Self> {
        if let Some(v) = weights.iter().position(Rational::is_negative) {
            return Err(Error::InvalidWeight { vertex: v });
        }
        let sum: Rational = weights.iter().sum();
        if sum != Rational::one() {
            return Err(Error::NotNormalized { sum: sum.to_string() });
        }
        Ok(Distribution { float: weights.iter().map(Rational::to_f64).collect(), exact: Some(weights) })
    }

    pub fn numeric(weights: Vec<f64>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidWeight { vertex: v });
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > NUMERIC_SUM_TOLERANCE {
            return Err(Error::NotNormalized { sum: sum.to_string() });
        }
        Ok(Distribution { float: weights, exact: None })
    }

    /// Rescales nonnegative rational weights to sum to one.
    pub fn normalized(weights: Vec<Rational>) -> Result<Self> {
        if let Some(v) = weights.iter().position(Rational::is_negative) {
            return Err(Error::InvalidWeight { vertex: v });
        }
        let sum: Rational = weights.iter().sum();
        if sum.is_zero() {
            return Err(Error::NotNormalized { sum: "0".into() });
        }
        Distribution::exact(weights.iter().map(|w| w / &sum).collect())
    }

    /// The uniform distribution `1/n` (exact). Requires `n >= 1`.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform distribution on an empty vertex set");
        let w = Rational::new(1, n as i64);
        Distribution::exact(vec![w; n]).expect("uniform weights sum to one")
    }

    /// All mass on vertex `v`.
    pub fn point_mass(n: usize, v: usize) -> Self {
        assert!(v < n);
        let mut w = vec![Rational::zero(); n];
        w[v] = Rational::one();
        Distribution::exact(w).expect("point mass sums to one")
    }

    pub fn len(&self) -> usize {
        self.float.len()
    }

    pub fn is_empty(&self) -> bool {
        self.float.is_empty()
    }

    pub fn prob(&self, v: usize) -> f64 {
        self.float[v]
    }

    pub fn probs(&self) -> &[f64] {
        &self.float
    }

    /// Rational weights, when this distribution is exact.
    pub fn exact_weights(&self) -> Option<&[Rational]> {
        self.exact.as_deref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Vertices with strictly positive probability, ascending.
    pub fn support(&self) -> Vec<usize> {
        match &self.exact {
            Some(w) => (0..w.len()).filter(|&v| w[v].is_positive()).collect(),
            None => (0..self.float.len()).filter(|&v| self.float[v] > 0.0).collect(),
        }
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.support().len() == self.len()
    }

    /// Restriction to `vertices`, renormalized. Vertex `i` of the result is
    /// `vertices[i]` here.
    pub fn restrict(&self, vertices: &[usize]) -> Result<Distribution> {
        match &self.exact {
            Some(w) => Distribution::normalized(vertices.iter().map(|&v| w[v].clone()).collect()),
            None => {
                let w: Vec<f64> = vertices.iter().map(|&v| self.float[v]).collect();
                let sum: f64 = w.iter().sum();
                if sum <= 0.0 {
                    return Err(Error::NotNormalized { sum: sum.to_string() });
                }
                Distribution::numeric(w.iter().map(|x| x / sum).collect())
            }
        }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: self.len() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_requires_unit_mass() {
        let half = Rational::new(1, 2);
        assert!(Distribution::exact(vec![half.clone(), half.clone()]).is_ok());
        assert!(matches!(
            Distribution::exact(vec![half.clone(), Rational::new(1, 3)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            Distribution::exact(vec![Rational::new(3, 2), Rational::new(-1, 2)]),
            Err(Error::InvalidWeight { vertex: 1 })
        ));
    }

    #[test]
    fn numeric_tolerance() {
        assert!(Distribution::numeric(vec![0.5, 0.5 + 1e-13]).is_ok());
        assert!(Distribution::numeric(vec![0.5, 0.5 + 1e-9]).is_err());
        assert!(Distribution::numeric(vec![f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn support_is_positive_coordinates() {
        let d = Distribution::exact(vec![Rational::new(1, 2), Rational::zero(), Rational::new(1, 2)]).unwrap();
        assert_eq!(d.support(), vec![0, 2]);
        assert!(!d.is_strictly_positive());
        let r = d.restrict(&[2]).unwrap();
        assert_eq!(r.exact_weights().unwrap(), &[Rational::one()]);
    }
}

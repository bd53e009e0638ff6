use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Monomial;

/// Strictly positive integer weight per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightedGrading(Vec<u32>);

impl WeightedGrading {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Invalid(format!("weight of variable {pos} must be positive")));
        }
        Ok(WeightedGrading(weights))
    }

    pub fn standard(nvars: usize) -> Self {
        WeightedGrading(vec![1; nvars])
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.0)
    }

    pub fn total_weight(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).sum()
    }
}

impl TryFrom<Vec<u32>> for WeightedGrading {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        WeightedGrading::new(v)
    }
}

impl From<WeightedGrading> for Vec<u32> {
    fn from(g: WeightedGrading) -> Self {
        g.0
    }
}

/// Outcome of asking for the weighted degree of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(u64),
    /// Two terms of different weighted degree.
    Inhomogeneous { first: Monomial, second: Monomial },
    Zero,
}

impl WeightedDegree {
    pub fn value(&self) -> Option<u64> {
        match self {
            WeightedDegree::Homogeneous(d) => Some(*d),
            _ => None,
        }
    }
}

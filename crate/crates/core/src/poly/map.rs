use std::collections::HashMap;

use super::{Polynomial, VarList, WeightedGrading};
use crate::error::{Error, Result};

/// A quasi-homogeneous polynomial self-map `C^N -> C^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialMap {
    components: Vec<Polynomial>,
    grading: WeightedGrading,
    codomain_degrees: Vec<u64>,
}

impl PolynomialMap {
    /// Builds the map, reading each codomain degree off its component.
    pub fn new(components: Vec<Polynomial>, grading: WeightedGrading) -> Result<Self> {
        let degrees = components
            .iter()
            .map(|c| c.homogeneous_degree(&grading))
            .collect::<Result<Vec<_>>>()?;
        Self::with_degrees(components, grading, degrees)
    }

    pub fn with_degrees(
        components: Vec<Polynomial>,
        grading: WeightedGrading,
        codomain_degrees: Vec<u64>,
    ) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Invalid("map has no components".into()));
        };
        let vars = first.vars().clone();
        if components.len() != vars.len() {
            return Err(Error::Invalid(format!(
                "map has {} components in {} variables",
                components.len(),
                vars.len()
            )));
        }
        if grading.len() != vars.len() || codomain_degrees.len() != components.len() {
            return Err(Error::Invalid("grading or degree list has the wrong length".into()));
        }
        for (c, &d) in components.iter().zip(&codomain_degrees) {
            c.vars().ensure_same(&vars)?;
            if c.homogeneous_degree(&grading)? != d {
                return Err(Error::Invalid(format!("component `{c}` does not have degree {d}")));
            }
        }
        Ok(PolynomialMap { components, grading, codomain_degrees })
    }

    pub fn vars(&self) -> &VarList {
        self.components[0].vars()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.grading
    }

    pub fn codomain_degrees(&self) -> &[u64] {
        &self.codomain_degrees
    }

    /// `sum(codomain degrees) - sum(domain weights)`, the degree of the Jacobian.
    pub fn jacobian_degree(&self) -> i64 {
        self.codomain_degrees.iter().sum::<u64>() as i64 - self.grading.total_weight() as i64
    }

    /// Determinant of the matrix of partial derivatives.
    pub fn jacobian_determinant(&self) -> Polynomial {
        let n = self.components.len();
        let matrix: Vec<Vec<Polynomial>> = self
            .components
            .iter()
            .map(|c| (0..n).map(|j| c.derivative(j)).collect())
            .collect();
        determinant(&matrix, self.vars())
    }
}

/// Determinant by Laplace expansion along rows, memoized on the set of used columns.
fn determinant(matrix: &[Vec<Polynomial>], vars: &VarList) -> Polynomial {
    let n = matrix.len();
    assert!(n < 32, "determinant size out of range");
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    minor(matrix, 0, 0, vars, &mut memo)
}

fn minor(
    matrix: &[Vec<Polynomial>],
    row: usize,
    used: u32,
    vars: &VarList,
    memo: &mut HashMap<u32, Polynomial>,
) -> Polynomial {
    let n = matrix.len();
    if row == n {
        return Polynomial::one(vars);
    }
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(vars);
    let mut sign_positive = true;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &matrix[row][col];
        if !entry.is_zero() {
            let sub = minor(matrix, row + 1, used | (1 << col), vars, memo);
            let prod = entry * &sub;
            acc = if sign_positive { &acc + &prod } else { &acc - &prod };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(used, acc.clone());
    acc
}

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarList, WeightedGrading};

use super::MonomialOrder;

/// An ideal given by generators over an ordered variable list, with an optional grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: VarList,
    grading: Option<WeightedGrading>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(vars: &VarList, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            g.vars().ensure_same(vars)?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal { vars: vars.clone(), grading: None, generators: gens })
    }

    pub fn with_grading(mut self, grading: WeightedGrading) -> Result<Self> {
        if grading.len() != self.vars.len() {
            return Err(Error::Invalid(format!(
                "grading has {} weights for {} variables",
                grading.len(),
                self.vars.len()
            )));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn grading(&self) -> Option<&WeightedGrading> {
        self.grading.as_ref()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Weighted grevlex for the ideal's grading, or standard grevlex without one.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::WeightedGrevlex(
            self.grading.clone().unwrap_or_else(|| WeightedGrading::standard(self.vars.len())),
        )
    }

    /// Ideal generated by all pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.vars.ensure_same(&other.vars)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        let mut out = Ideal::new(&self.vars, gens)?;
        out.grading = self.grading.clone();
        Ok(out)
    }

    /// Image under the substitution `x_i -> images[i]`; zero images of generators are pruned.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute(images, &self.vars))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Ideal::new(&self.vars, gens)?;
        out.grading = self.grading.clone();
        Ok(out)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

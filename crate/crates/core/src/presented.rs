//! Rings given by generators and relations, and their JSON fixture form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, GroebnerBasis, GroebnerConfig, Ideal};
use crate::poly::{parse_polynomial, Polynomial, PolynomialMap, VarList, WeightedGrading};
use crate::series::RationalSeries;

/// Where a presentation came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Cohomology presentation of the Grassmannian of `k`-planes in `n`-space.
    Grassmann { n: usize, k: usize },
    /// Jet ring of truncation order `order` over `parent`.
    Jet { parent: Box<Provenance>, order: usize },
    Custom,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Grassmann { n, k } => write!(f, "grassmann({n},{k})"),
            Provenance::Jet { parent, order } => write!(f, "jet({parent},{order})"),
            Provenance::Custom => write!(f, "custom"),
        }
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Invalid(format!("unrecognized provenance `{s}`"));
        if s == "custom" {
            return Ok(Provenance::Custom);
        }
        if let Some(inner) = s.strip_prefix("grassmann(").and_then(|r| r.strip_suffix(')')) {
            let (n, k) = inner.split_once(',').ok_or_else(bad)?;
            return Ok(Provenance::Grassmann {
                n: n.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
            });
        }
        if let Some(inner) = s.strip_prefix("jet(").and_then(|r| r.strip_suffix(')')) {
            let (parent, order) = inner.rsplit_once(',').ok_or_else(bad)?;
            return Ok(Provenance::Jet {
                parent: Box::new(parent.parse()?),
                order: order.parse().map_err(|_| bad())?,
            });
        }
        Err(bad())
    }
}

/// Variables with weights, plus relations that are quasi-homogeneous for those weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedRing {
    vars: VarList,
    grading: WeightedGrading,
    relations: Vec<Polynomial>,
    provenance: Provenance,
}

impl PresentedRing {
    /// Zero relations are kept (they count toward the presentation) but ignored by [`Self::ideal`].
    pub fn new(
        vars: VarList,
        grading: WeightedGrading,
        relations: Vec<Polynomial>,
        provenance: Provenance,
    ) -> Result<Self> {
        if grading.len() != vars.len() {
            return Err(Error::Invalid(format!(
                "{} weights for {} variables",
                grading.len(),
                vars.len()
            )));
        }
        for r in &relations {
            r.vars().ensure_same(&vars)?;
            if !r.is_zero() {
                r.homogeneous_degree(&grading)?;
            }
        }
        Ok(PresentedRing { vars, grading, relations, provenance })
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn grading(&self) -> &WeightedGrading {
        &self.grading
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.vars, self.relations.iter().cloned())
            .and_then(|i| i.with_grading(self.grading.clone()))
            .expect("relations validated at construction")
    }

    pub fn groebner(&self, config: &GroebnerConfig) -> Result<GroebnerBasis> {
        let ideal = self.ideal();
        buchberger_with(&ideal, &ideal.default_order(), config)
    }

    pub fn hilbert_series(&self, config: &GroebnerConfig) -> Result<RationalSeries> {
        self.groebner(config)?.hilbert_series(&self.grading)
    }

    /// The relations as a self-map, when there are as many relations as variables.
    pub fn to_map(&self) -> Result<PolynomialMap> {
        PolynomialMap::new(self.relations.clone(), self.grading.clone())
    }

    pub fn from_fixture(f: &RingFixture) -> Result<Self> {
        let vars = VarList::new(&f.variables)?;
        let grading = match &f.weights {
            Some(w) => WeightedGrading::new(w.clone())?,
            None => WeightedGrading::standard(vars.len()),
        };
        let relations = f
            .generators
            .iter()
            .map(|g| parse_polynomial(g, &vars))
            .collect::<Result<Vec<_>>>()?;
        let provenance = match &f.provenance {
            Some(p) => p.parse()?,
            None => Provenance::Custom,
        };
        Self::new(vars, grading, relations, provenance)
    }

    pub fn to_fixture(&self) -> RingFixture {
        RingFixture {
            variables: self.vars.names().to_vec(),
            weights: Some(self.grading.weights().to_vec()),
            generators: self.relations.iter().map(|r| r.to_string()).collect(),
            provenance: Some(self.provenance.to_string()),
        }
    }
}

/// JSON schema shared by ideal fixtures and ring presentations:
/// `{ "variables": [...], "weights": [...], "generators": [...], "provenance": "..." }`.
/// Missing weights default to 1; missing provenance means `custom`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFixture {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl RingFixture {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("fixture JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn provenance_round_trip() {
        for text in ["grassmann(4,2)", "jet(grassmann(2,1),3)", "jet(jet(custom,2),2)", "custom"] {
            let p: Provenance = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("grassmann(4)".parse::<Provenance>().is_err());
    }

    #[test]
    fn fixture_round_trip() {
        let json = r#"{ "variables": ["a0","a1","a2"], "weights": [1,2,3],
                        "generators": ["a0^2", "a0*a1", "a0*a2 + a1^2"] }"#;
        let f = RingFixture::from_json(json).unwrap();
        let ring = PresentedRing::from_fixture(&f).unwrap();
        assert_eq!(ring.provenance(), &Provenance::Custom);
        let again = PresentedRing::from_fixture(&RingFixture::from_json(&ring.to_fixture().to_json()).unwrap()).unwrap();
        assert_eq!(again, ring);
    }

    #[test]
    fn rejects_inhomogeneous_relation() {
        let f = RingFixture {
            variables: vec!["x".into(), "y".into()],
            weights: None,
            generators: vec!["x^2 + y".into()],
            provenance: None,
        };
        assert!(matches!(PresentedRing::from_fixture(&f), Err(Error::NotQuasiHomogeneous { .. })));
    }
}

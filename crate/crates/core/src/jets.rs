//! Jet rings: truncation order `d` means maps from `Spec C[z]/(z^d)`, so each variable `x`
//! yields `d` jet variables `x^(0), ..., x^(d-1)`.
//!
//! The jet grading gives `x^(j)` weight `w(x) + j`, i.e. `z` has weight 1.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerConfig, Ideal};
use crate::poly::{Polynomial, VarList, WeightedGrading};
use crate::presented::{PresentedRing, Provenance};
use crate::series::RationalSeries;

/// Statement of the grading convention, carried into serialized invariants.
pub const JET_GRADING_ASSUMPTION: &str = "weight of x^(j) is weight of x plus j";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetPresentation {
    base: PresentedRing,
    order: usize,
    result: PresentedRing,
}

impl JetPresentation {
    pub fn base(&self) -> &PresentedRing {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.result
    }

    /// Index of `x_i^(j)` in the jet variable list.
    pub fn jet_index(&self, i: usize, j: usize) -> usize {
        j * self.base.vars().len() + i
    }
}

/// `a -> a0, a1, ...`; names already ending in a digit get an underscore (`p1 -> p1_0`).
pub fn jet_variable_name(base: &str, j: usize) -> String {
    if base.ends_with(|c: char| c.is_ascii_digit()) {
        format!("{base}_{j}")
    } else {
        format!("{base}{j}")
    }
}

/// Truncated power series in `z` with polynomial coefficients.
type Truncated = Vec<Polynomial>;

fn truncated_mul(a: &Truncated, b: &Truncated, vars: &VarList) -> Truncated {
    let d = a.len();
    (0..d)
        .map(|k| (0..=k).fold(Polynomial::zero(vars), |acc, i| &acc + &(&a[i] * &b[k - i])))
        .collect()
}

/// Substitutes `x_i -> sum_j x_i^(j) z^j` in every relation, truncates mod `z^d`, and emits
/// the coefficient of each `z^j`. Relations are grouped by `j`, then by base relation; zero
/// coefficients are kept so the count is exactly `d` times the base count.
pub fn jet_presentation(base: &PresentedRing, d: usize) -> Result<JetPresentation> {
    if d == 0 {
        return Err(Error::OutOfRange("jet order must be at least 1".into()));
    }
    let n = base.vars().len();
    let names: Vec<String> =
        (0..d).flat_map(|j| base.vars().names().iter().map(move |x| jet_variable_name(x, j))).collect();
    let vars = VarList::new(&names)?;
    let weights: Vec<u32> =
        (0..d).flat_map(|j| base.grading().weights().iter().map(move |w| w + j as u32)).collect();

    let series: Vec<Truncated> =
        (0..n).map(|i| (0..d).map(|j| Polynomial::var(&vars, j * n + i)).collect()).collect();
    let mut one: Truncated = vec![Polynomial::zero(&vars); d];
    one[0] = Polynomial::one(&vars);

    let mut by_order: Vec<Vec<Polynomial>> = vec![Vec::new(); d];
    for rel in base.relations() {
        let mut total: Truncated = vec![Polynomial::zero(&vars); d];
        for (m, c) in rel.terms() {
            let mut prod = one.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    prod = truncated_mul(&prod, &series[i], &vars);
                }
            }
            for (t, p) in total.iter_mut().zip(&prod) {
                *t = &*t + &p.scale(c);
            }
        }
        for (j, coeff) in total.into_iter().enumerate() {
            by_order[j].push(coeff);
        }
    }
    let relations = by_order.into_iter().flatten().collect();
    let provenance = Provenance::Jet { parent: Box::new(base.provenance().clone()), order: d };
    let result = PresentedRing::new(vars, WeightedGrading::new(weights)?, relations, provenance)?;
    Ok(JetPresentation { base: base.clone(), order: d, result })
}

/// Image of `ideal` under a substitution given by variable name; unnamed variables are fixed.
pub fn apply_substitution(ideal: &Ideal, assignment: &HashMap<String, Polynomial>) -> Result<Ideal> {
    let vars = ideal.vars();
    for (name, image) in assignment {
        if vars.index_of(name).is_none() {
            return Err(Error::UnknownVariable(name.clone()));
        }
        image.vars().ensure_same(vars)?;
    }
    let images: Vec<Polynomial> = (0..vars.len())
        .map(|i| assignment.get(vars.name(i)).cloned().unwrap_or_else(|| Polynomial::var(vars, i)))
        .collect();
    ideal.substitute(&images)
}

/// Groebner-derived invariants of a jet ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JetInvariants {
    pub krull_dimension: usize,
    pub finite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    /// Under the jet grading.
    #[serde(serialize_with = "display")]
    pub hilbert_series: RationalSeries,
    /// Under unit weights, when every relation is homogeneous for them.
    #[serde(serialize_with = "display_opt", skip_serializing_if = "Option::is_none")]
    pub hilbert_series_unit_weights: Option<RationalSeries>,
    pub grading: &'static str,
}

fn display<S: serde::Serializer>(v: &RationalSeries, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn display_opt<S: serde::Serializer>(v: &Option<RationalSeries>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

pub fn jet_invariants(jet: &JetPresentation, config: &GroebnerConfig) -> Result<JetInvariants> {
    ring_invariants(jet.ring(), config)
}

/// The same invariants for any presented ring.
pub fn ring_invariants(ring: &PresentedRing, config: &GroebnerConfig) -> Result<JetInvariants> {
    let gb = ring.groebner(config)?;
    let finite = gb.is_zero_dimensional();
    let standard = WeightedGrading::standard(ring.vars().len());
    let unit_homogeneous =
        ring.relations().iter().all(|r| r.is_zero() || r.homogeneous_degree(&standard).is_ok());
    Ok(JetInvariants {
        krull_dimension: gb.krull_dimension(),
        finite,
        dimension: if finite { Some(gb.standard_monomials()?.len()) } else { None },
        hilbert_series: gb.hilbert_series(ring.grading())?,
        hilbert_series_unit_weights: if unit_homogeneous { Some(gb.hilbert_series(&standard)?) } else { None },
        grading: JET_GRADING_ASSUMPTION,
    })
}

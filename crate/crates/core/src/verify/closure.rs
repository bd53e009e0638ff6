//! Strata of the closure of an upward flow, indexed by the dominance lower set.

use serde::Serialize;

use crate::grassmann::{grassmann_multiplicity, DivisorData};
use crate::weights::{fundamental_decomposition, lower_set, weyl_orbit_size, DominantWeight};

pub const NO_FORMULA: &str = "no closed formula: a fundamental coefficient exceeds 1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureStratum {
    pub lambda: DominantWeight,
    pub alpha: Vec<i64>,
    /// All `alpha_i` with `i < n` vanish: `lambda` is a multiple of the determinant.
    pub central: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor_multiplicities: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grassmann_multiplicity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grassmann_multiplicity_coefficients: Option<Vec<i64>>,
    /// At most one divisor point, the situation in which the product formula is stated.
    /// Reported, not enforced.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisor_reduced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub mu: DominantWeight,
    pub weyl_orbit_size: String,
    pub strata: Vec<ClosureStratum>,
}

/// For each `lambda <= mu` whose fundamental coefficients `alpha_1..alpha_{n-1}` are all 0 or
/// 1, the Grassmannian product `prod_i [n i]_t^{m_i}` with `m_i = alpha_{n-i}`; other strata
/// carry [`NO_FORMULA`].
pub fn closure_vs_grassmann_dimensions(mu: &DominantWeight) -> ClosureReport {
    let n = mu.rank();
    let strata = lower_set(mu)
        .into_iter()
        .map(|lambda| {
            let alpha = fundamental_decomposition(&lambda).alpha;
            let inner = &alpha[..n - 1];
            let central = inner.iter().all(|&a| a == 0);
            let mut s = ClosureStratum {
                lambda,
                alpha: alpha.clone(),
                central,
                divisor_multiplicities: None,
                grassmann_multiplicity: None,
                grassmann_multiplicity_coefficients: None,
                divisor_reduced: None,
                note: None,
            };
            if inner.iter().all(|&a| a == 0 || a == 1) {
                let m: Vec<u32> = (1..n).map(|i| alpha[n - i - 1] as u32).collect();
                let d = DivisorData::new(n as u32, m.clone()).expect("n - 1 multiplicities");
                let poly = grassmann_multiplicity(&d);
                s.divisor_reduced = Some(d.is_reduced_point());
                s.divisor_multiplicities = Some(m);
                s.grassmann_multiplicity = Some(poly.to_string());
                s.grassmann_multiplicity_coefficients = poly.to_i64_vec();
            } else {
                s.note = Some(NO_FORMULA);
            }
            s
        })
        .collect();
    ClosureReport { mu: mu.clone(), weyl_orbit_size: weyl_orbit_size(mu).to_string(), strata }
}

//! Local multiplicity algebras of quasi-homogeneous maps and their structure checks.
//!
//! For a quasi-homogeneous map `h = (h_1, ..., h_N)` whose fiber over the origin is the
//! origin alone, the quotient `Q = C[x]/(h_1, ..., h_N)` is a finite graded algebra. The
//! checks here confirm, with exact arithmetic, that `Q` is Gorenstein with socle spanned by
//! the Jacobian determinant, that it satisfies Poincare duality degree by degree, and that its
//! Poincare polynomial equals the equivariant multiplicity
//! `prod (1 - t^d_i) / prod (1 - t^w_j)`.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, GroebnerBasis, GroebnerConfig, Ideal, MonomialOrder};
use crate::linalg::Matrix;
use crate::poly::{format_monomial, Monomial, Polynomial, PolynomialMap, Rational};
use crate::series::{IntPoly, RationalSeries};

/// Multiset of positive weights, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightMultiset(Vec<u32>);

impl WeightMultiset {
    pub fn new(mut weights: Vec<u32>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::Invalid("weights must be positive".into()));
        }
        weights.sort_unstable();
        Ok(WeightMultiset(weights))
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

    pub fn multiplicity(&self, w: u32) -> usize {
        self.0.iter().filter(|&&x| x == w).count()
    }

    /// `(weight, multiplicity)` pairs in increasing weight.
    pub fn counts(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &w in &self.0 {
            match out.last_mut() {
                Some((x, c)) if *x == w => *c += 1,
                _ => out.push((w, 1)),
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for WeightMultiset {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        WeightMultiset::new(v)
    }
}

impl From<WeightMultiset> for Vec<u32> {
    fn from(w: WeightMultiset) -> Self {
        w.0
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts().iter().map(|(w, c)| format!("{w}x{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `prod_{d in codomain} (1 - t^d) / prod_{w in domain} (1 - t^w)`, reduced.
pub fn equivariant_multiplicity(domain: &WeightMultiset, codomain: &WeightMultiset) -> RationalSeries {
    let to_u64 = |w: &WeightMultiset| w.weights().iter().map(|&x| x as u64).collect::<Vec<_>>();
    RationalSeries::from_degrees(&to_u64(codomain), &to_u64(domain))
}

/// Torus weights on the Hitchin base `prod_{i=1}^n H^0(C, K^i)` for a curve of genus `g`:
/// weight 1 with multiplicity `g`, weight `i >= 2` with multiplicity `(2i - 1)(g - 1)`.
pub fn hitchin_base_weights(n: u32, genus: u32) -> Result<WeightMultiset> {
    if genus < 2 {
        return Err(Error::OutOfRange(format!("genus {genus} < 2")));
    }
    if n < 1 {
        return Err(Error::OutOfRange("rank must be at least 1".into()));
    }
    let mut weights = vec![1; genus as usize];
    for i in 2..=n {
        weights.extend(std::iter::repeat_n(i, ((2 * i - 1) * (genus - 1)) as usize));
    }
    WeightMultiset::new(weights)
}

/// Why a quotient could not be built.
#[derive(Debug, Clone, PartialEq)]
pub enum QuotientError {
    /// The fiber over the origin is positive-dimensional; the basis is kept for further analysis.
    NotFinite(Box<GroebnerBasis>),
    Algebra(Error),
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::NotFinite(gb) => {
                write!(f, "quotient is not finite-dimensional (Krull dimension {})", gb.krull_dimension())
            }
            QuotientError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for QuotientError {}

impl From<Error> for QuotientError {
    fn from(e: Error) -> Self {
        QuotientError::Algebra(e)
    }
}

/// Sparse column: `(row, value)` pairs.
type Column = Vec<(usize, Rational)>;

/// `C[x]/(h)` for a map with zero-dimensional fiber, with its standard-monomial basis.
#[derive(Clone, Debug)]
pub struct FiniteGradedAlgebra {
    map: PolynomialMap,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    degrees: Vec<u64>,
    index: HashMap<Monomial, usize>,
    /// `mult[i][b]` = coordinates of `x_i * basis[b]`.
    mult: Vec<Vec<Column>>,
}

pub fn build_quotient(map: &PolynomialMap) -> std::result::Result<FiniteGradedAlgebra, QuotientError> {
    build_quotient_with(map, &GroebnerConfig::default())
}

pub fn build_quotient_with(
    map: &PolynomialMap,
    config: &GroebnerConfig,
) -> std::result::Result<FiniteGradedAlgebra, QuotientError> {
    let vars = map.vars().clone();
    let ideal = Ideal::new(&vars, map.components().iter().cloned())?.with_grading(map.grading().clone())?;
    let gb = buchberger_with(&ideal, &MonomialOrder::WeightedGrevlex(map.grading().clone()), config)?;
    if !gb.is_zero_dimensional() {
        return Err(QuotientError::NotFinite(Box::new(gb)));
    }
    let basis = gb.standard_monomials()?;
    let degrees: Vec<u64> = basis.iter().map(|m| map.grading().degree(m)).collect();
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut algebra = FiniteGradedAlgebra { map: map.clone(), gb, basis, degrees, index, mult: Vec::new() };
    let n = vars.len();
    let mut mult = Vec::with_capacity(n);
    for i in 0..n {
        let xi = Monomial::var(n, i);
        let cols = algebra
            .basis
            .iter()
            .map(|b| algebra.sparse_coordinates(&Polynomial::monomial(&vars, b.mul(&xi), Rational::one())))
            .collect::<Result<Vec<_>>>()?;
        mult.push(cols);
    }
    algebra.mult = mult;
    Ok(algebra)
}

/// Homogeneous basis of the socle, grouped by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Socle {
    /// Coordinate vectors in the standard-monomial basis.
    pub vectors: Vec<Vec<Rational>>,
    pub degrees: Vec<u64>,
    pub elements: Vec<Polynomial>,
}

impl Socle {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Pairing matrix between the degree-`degree` and degree-`dual_degree` pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePairing {
    pub degree: u64,
    pub dual_degree: u64,
    pub matrix: Matrix,
    pub rank: usize,
    pub perfect: bool,
}

impl FiniteGradedAlgebra {
    pub fn map(&self) -> &PolynomialMap {
        &self.map
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn top_degree(&self) -> u64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn basis_element(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.map.vars(), self.basis[i].clone(), Rational::one())
    }

    fn indices_in_degree(&self, k: u64) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.degrees[i] == k).collect()
    }

    fn sparse_coordinates(&self, p: &Polynomial) -> Result<Column> {
        let nf = self.gb.normal_form(p)?;
        let mut col: Column = nf
            .terms()
            .iter()
            .map(|(m, c)| (*self.index.get(m).expect("normal form lies in the standard span"), c.clone()))
            .collect();
        col.sort_by_key(|(i, _)| *i);
        Ok(col)
    }

    /// Coordinates of the class of `p` in the standard-monomial basis.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.basis.len()];
        for (i, c) in self.sparse_coordinates(p)? {
            v[i] = c;
        }
        Ok(v)
    }

    /// Product in the quotient, returned in normal form.
    pub fn multiply(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.gb.normal_form(&a.try_mul(b)?)
    }

    /// Coefficient of `t^k` counts standard monomials of weighted degree `k`.
    pub fn poincare_polynomial(&self) -> IntPoly {
        let mut counts = vec![0i64; self.top_degree() as usize + 1];
        for &d in &self.degrees {
            counts[d as usize] += 1;
        }
        if self.basis.is_empty() {
            return IntPoly::zero();
        }
        IntPoly::from_i64(&counts)
    }

    /// Annihilator of the maximal ideal, solved degree by degree from the multiplication
    /// matrices of the variables.
    pub fn socle(&self) -> Socle {
        let n = self.map.vars().len();
        let mut socle = Socle { vectors: Vec::new(), degrees: Vec::new(), elements: Vec::new() };
        let mut seen_degrees: Vec<u64> = self.degrees.clone();
        seen_degrees.sort_unstable();
        seen_degrees.dedup();
        for k in seen_degrees {
            let cols = self.indices_in_degree(k);
            // Rows: (variable, target basis index); columns: basis elements of degree k.
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for i in 0..n {
                let mut block = vec![vec![Rational::zero(); cols.len()]; self.basis.len()];
                for (c, &b) in cols.iter().enumerate() {
                    for (r, v) in &self.mult[i][b] {
                        block[*r][c] = v.clone();
                    }
                }
                rows.extend(block.into_iter().filter(|row| row.iter().any(|x| !x.is_zero())));
            }
            let kernel = if rows.is_empty() {
                (0..cols.len())
                    .map(|c| (0..cols.len()).map(|j| if j == c { Rational::one() } else { Rational::zero() }).collect())
                    .collect()
            } else {
                Matrix::from_rows(rows).kernel()
            };
            for kv in kernel {
                let mut full = vec![Rational::zero(); self.basis.len()];
                for (c, &b) in cols.iter().enumerate() {
                    full[b] = kv[c].clone();
                }
                let element = Polynomial::from_terms(
                    self.map.vars(),
                    full.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (self.basis[i].clone(), x.clone())),
                );
                socle.vectors.push(full);
                socle.degrees.push(k);
                socle.elements.push(element);
            }
        }
        socle
    }

    /// Normal form of the Jacobian determinant of the defining map.
    pub fn jacobian_class(&self) -> Result<Polynomial> {
        self.gb.normal_form(&self.map.jacobian_determinant())
    }

    /// The Jacobian class is nonzero and proportional to a one-dimensional socle.
    pub fn jacobian_spans_socle(&self) -> Result<bool> {
        let socle = self.socle();
        if socle.dimension() != 1 {
            return Ok(false);
        }
        let j = self.coordinates(&self.map.jacobian_determinant())?;
        Ok(proportional(&j, &socle.vectors[0]))
    }

    /// Pairing `(a, b) = l(a * b)` where `l` reads off the socle coordinate, normalized so
    /// that `l(J) = 1` when the Jacobian class is nonzero there. One matrix per degree `k`
    /// in `0..=m`, pairing degree `k` against degree `m - k`.
    pub fn pairing_matrices(&self) -> Result<Vec<DegreePairing>> {
        let socle = self.socle();
        if socle.dimension() != 1 {
            return Err(Error::SocleNotOneDimensional(socle.dimension()));
        }
        let s = &socle.vectors[0];
        let pivot = s.iter().position(|x| !x.is_zero()).expect("nonzero socle vector");
        let j = self.coordinates(&self.map.jacobian_determinant())?;
        let scale = if j[pivot].is_zero() { s[pivot].clone() } else { j[pivot].clone() };

        // functional[a] is the row vector b -> l(basis[a] * basis[b]).
        let dim = self.basis.len();
        let mut ell = vec![Rational::zero(); dim];
        ell[pivot] = Rational::one() / scale;
        let mut functional: Vec<Option<Vec<Rational>>> = vec![None; dim];
        for a in 0..dim {
            let m = &self.basis[a];
            if m.is_one() {
                functional[a] = Some(ell.clone());
                continue;
            }
            // Standard monomials form an order ideal: m / x_i is standard and ordered earlier.
            let i = m.support().next().expect("non-constant monomial");
            let mut prev = m.exponents().to_vec();
            prev[i] -= 1;
            let p = self.index[&Monomial::new(prev)];
            let phi = functional[p].as_ref().expect("divisor processed first");
            let row: Vec<Rational> = (0..dim)
                .map(|b| self.mult[i][b].iter().map(|(c, v)| &phi[*c] * v).sum())
                .collect();
            functional[a] = Some(row);
        }

        let top = self.top_degree();
        let mut out = Vec::new();
        for k in 0..=top {
            let rows = self.indices_in_degree(k);
            let cols = self.indices_in_degree(top - k);
            let matrix = Matrix::from_rows(
                rows.iter()
                    .map(|&a| {
                        let phi = functional[a].as_ref().expect("all computed");
                        cols.iter().map(|&b| phi[b].clone()).collect()
                    })
                    .collect(),
            );
            let matrix = if rows.is_empty() || cols.is_empty() { Matrix::zeros(rows.len(), cols.len()) } else { matrix };
            let rank = matrix.rank();
            let perfect = rows.len() == cols.len() && rank == rows.len();
            out.push(DegreePairing { degree: k, dual_degree: top - k, matrix, rank, perfect });
        }
        Ok(out)
    }
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(p) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if a[p].is_zero() {
        return false;
    }
    let ratio = &a[p] / &b[p];
    a.iter().zip(b).all(|(x, y)| *x == &ratio * y)
}

/// Every clause of the structure theorem, evaluated exactly. For a map with
/// positive-dimensional fiber only the fields up to `equivariant_multiplicity` are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub finite_dimensional: bool,
    pub krull_dimension: usize,
    pub groebner_basis: Vec<String>,
    pub domain_weights: Vec<u32>,
    pub codomain_degrees: Vec<u64>,
    pub expected_top_degree: i64,
    pub equivariant_multiplicity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poincare_polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poincare_coefficients: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_zero_one_dimensional: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub socle_degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub socle_basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein_socle_dim1: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub socle_in_top_degree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobian_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub socle_is_jacobian: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_ranks: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_perfect_per_degree: Option<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_perfect: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palindromic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonnegative: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poincare_equals_equivariant_multiplicity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_at_one: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension_equals_m_at_one: Option<bool>,
}

impl StructureReport {
    /// Names of the boolean clauses that are false or missing.
    pub fn failed_clauses(&self) -> Vec<&'static str> {
        let clauses: [(&'static str, Option<bool>); 11] = [
            ("finite_dimensional", Some(self.finite_dimensional)),
            ("degree_zero_one_dimensional", self.degree_zero_one_dimensional),
            ("gorenstein_socle_dim1", self.gorenstein_socle_dim1),
            ("socle_in_top_degree", self.socle_in_top_degree),
            ("socle_is_jacobian", self.socle_is_jacobian),
            ("pairing_perfect", self.pairing_perfect),
            ("palindromic", self.palindromic),
            ("monic", self.monic),
            ("nonnegative", self.nonnegative),
            ("poincare_equals_equivariant_multiplicity", self.poincare_equals_equivariant_multiplicity),
            ("dimension_equals_m_at_one", self.dimension_equals_m_at_one),
        ];
        clauses.iter().filter(|(_, v)| *v != Some(true)).map(|(n, _)| *n).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_clauses().is_empty()
    }
}

pub fn verify_structure_theorem(map: &PolynomialMap) -> Result<StructureReport> {
    verify_structure_theorem_with(map, &GroebnerConfig::default())
}

/// Runs every check. Only resource limits and internal errors are returned as `Err`;
/// mathematical failures are report content.
pub fn verify_structure_theorem_with(map: &PolynomialMap, config: &GroebnerConfig) -> Result<StructureReport> {
    let domain = WeightMultiset::new(map.grading().weights().to_vec())?;
    let codomain_u32: Vec<u32> = map
        .codomain_degrees()
        .iter()
        .map(|&d| u32::try_from(d).map_err(|_| Error::OutOfRange(format!("degree {d}"))))
        .collect::<Result<_>>()?;
    let codomain = WeightMultiset::new(codomain_u32)?;
    let em = equivariant_multiplicity(&domain, &codomain);

    let (algebra, gb) = match build_quotient_with(map, config) {
        Ok(a) => {
            let gb = a.groebner_basis().clone();
            (Some(a), gb)
        }
        Err(QuotientError::NotFinite(gb)) => (None, *gb),
        Err(QuotientError::Algebra(e)) => return Err(e),
    };
    let mut report = StructureReport {
        finite_dimensional: algebra.is_some(),
        krull_dimension: gb.krull_dimension(),
        groebner_basis: gb.polynomials().iter().map(|p| p.to_string()).collect(),
        domain_weights: map.grading().weights().to_vec(),
        codomain_degrees: map.codomain_degrees().to_vec(),
        expected_top_degree: map.jacobian_degree(),
        equivariant_multiplicity: em.to_string(),
        dimension: None,
        basis: None,
        poincare_polynomial: None,
        poincare_coefficients: None,
        top_degree: None,
        degree_zero_one_dimensional: None,
        socle_degrees: None,
        socle_basis: None,
        gorenstein_socle_dim1: None,
        socle_in_top_degree: None,
        jacobian_class: None,
        socle_is_jacobian: None,
        pairing_ranks: None,
        pairing_perfect_per_degree: None,
        pairing_perfect: None,
        palindromic: None,
        monic: None,
        nonnegative: None,
        poincare_equals_equivariant_multiplicity: None,
        m_at_one: None,
        dimension_equals_m_at_one: None,
    };
    let Some(q) = algebra else {
        return Ok(report);
    };

    let vars = map.vars();
    let poincare = q.poincare_polynomial();
    let top = q.top_degree();
    report.dimension = Some(q.dimension());
    report.basis = Some(q.basis().iter().map(|m| format_monomial(vars, m)).collect());
    report.poincare_polynomial = Some(poincare.to_string());
    report.poincare_coefficients = poincare.to_i64_vec();
    report.top_degree = Some(top);
    report.degree_zero_one_dimensional = Some(poincare.coeff(0).is_one());

    let socle = q.socle();
    report.socle_degrees = Some(socle.degrees.clone());
    report.socle_basis = Some(socle.elements.iter().map(|p| p.to_string()).collect());
    report.gorenstein_socle_dim1 = Some(socle.dimension() == 1);
    report.socle_in_top_degree = Some(
        socle.dimension() >= 1
            && socle.degrees.iter().all(|&d| d == top)
            && top as i64 == map.jacobian_degree(),
    );
    report.jacobian_class = Some(q.jacobian_class()?.to_string());
    report.socle_is_jacobian = Some(q.jacobian_spans_socle()?);

    match q.pairing_matrices() {
        Ok(pairings) => {
            report.pairing_ranks = Some(pairings.iter().map(|p| p.rank).collect());
            report.pairing_perfect_per_degree = Some(pairings.iter().map(|p| p.perfect).collect());
            report.pairing_perfect = Some(pairings.iter().all(|p| p.perfect));
        }
        Err(Error::SocleNotOneDimensional(_)) => report.pairing_perfect = Some(false),
        Err(e) => return Err(e),
    }

    report.palindromic = Some(poincare.is_palindromic());
    report.monic = Some(poincare.is_monic());
    report.nonnegative = Some(poincare.is_nonnegative());
    report.poincare_equals_equivariant_multiplicity = Some(em.as_polynomial() == Some(&poincare));
    let m1 = em.as_polynomial().map(|p| p.eval_at_one());
    report.m_at_one = m1.as_ref().and_then(|v| v.to_i64());
    report.dimension_equals_m_at_one =
        Some(m1.is_some_and(|v| !v.is_negative() && v.to_usize() == Some(q.dimension())));
    Ok(report)
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::grading::{WeightedDegree, WeightedGrading};
use super::monomial::grevlex_cmp;
use super::{Monomial, Rational, VarList};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in descending graded reverse lexicographic order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VarList,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(vars: &VarList) -> Self {
        Polynomial { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(vars: &VarList, c: Rational) -> Self {
        Self::from_terms(vars, vec![(Monomial::one(vars.len()), c)])
    }

    pub fn one(vars: &VarList) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarList, i: usize) -> Self {
        Self::from_terms(vars, vec![(Monomial::var(vars.len(), i), Rational::one())])
    }

    pub fn monomial(vars: &VarList, m: Monomial, c: Rational) -> Self {
        Self::from_terms(vars, vec![(m, c)])
    }

    /// Collects like terms, drops zeros, and sorts into canonical order.
    pub fn from_terms(vars: &VarList, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial length does not match variable count");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex_cmp(b.0.exponents(), a.0.exponents()));
        Polynomial { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        Ok(Self::from_terms(
            &self.vars,
            self.terms.iter().chain(other.terms.iter()).cloned(),
        ))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        Ok(Self::from_terms(
            &self.vars,
            self.terms
                .iter()
                .cloned()
                .chain(other.terms.iter().map(|(m, c)| (m.clone(), -c))),
        ))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.vars.ensure_same(&other.vars)?;
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(&self.vars, acc))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        Self::from_terms(&self.vars, self.terms.iter().map(|(t, a)| (t.mul(m), a * c)))
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[i] > 0).map(|(m, c)| {
            let e = m.exponents()[i];
            let mut m = m.clone();
            m.exponents_mut()[i] -= 1;
            (m, c * Rational::from_integer(BigInt::from(e)))
        });
        Self::from_terms(&self.vars, terms)
    }

    pub fn weighted_degree(&self, g: &WeightedGrading) -> WeightedDegree {
        let mut iter = self.terms.iter();
        let Some((first, _)) = iter.next() else {
            return WeightedDegree::Zero;
        };
        let d = g.degree(first);
        for (m, _) in iter {
            if g.degree(m) != d {
                return WeightedDegree::Inhomogeneous { first: first.clone(), second: m.clone() };
            }
        }
        WeightedDegree::Homogeneous(d)
    }

    /// Weighted degree, or an error carrying printable witnesses.
    pub fn homogeneous_degree(&self, g: &WeightedGrading) -> Result<u64> {
        match self.weighted_degree(g) {
            WeightedDegree::Homogeneous(d) => Ok(d),
            WeightedDegree::Zero => Err(Error::ZeroPolynomial),
            WeightedDegree::Inhomogeneous { first, second } => Err(Error::NotQuasiHomogeneous {
                first: format_monomial(&self.vars, &first),
                second: format_monomial(&self.vars, &second),
            }),
        }
    }

    /// Substitute `images[i]` for variable `i`. All images share a target variable list.
    pub fn substitute(&self, images: &[Polynomial], target: &VarList) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::Invalid(format!(
                "substitution has {} images for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        for img in images {
            img.vars.ensure_same(target)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut result = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            result = &result + &term;
        }
        Ok(result)
    }

    /// Move into a different variable list via an index map (`old index -> new index`).
    pub fn embed(&self, target: &VarList, index_map: &[usize]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[index_map[i]] += x;
            }
            (Monomial::new(e), c.clone())
        });
        Self::from_terms(target, terms)
    }

    /// Clear denominators and common content so the result has coprime integer coefficients
    /// and a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.terms.iter().map(|(_, c)| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints[0].is_negative() {
            g = -g;
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .zip(ints)
                .map(|((m, _), v)| (m.clone(), Rational::from_integer(v / &g)))
                .collect(),
        }
    }
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;

    /// Panics on mismatched variable lists; use [`Polynomial::try_add`] to get an error instead.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn format_monomial(vars: &VarList, m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars.name(i).to_string() } else { format!("{}^{}", vars.name(i), e) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", format_monomial(&self.vars, m))?;
            } else {
                write!(f, "{}*{}", abs, format_monomial(&self.vars, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} over [{}])", self.vars)
    }
}

//! Exact multivariate polynomials over the rationals.

mod grading;
mod map;
mod monomial;
mod parse;
mod polynomial;
mod vars;

pub use grading::{WeightedDegree, WeightedGrading};
pub use map::PolynomialMap;
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use vars::VarList;

pub(crate) use monomial::revlex_tiebreak;
pub(crate) use polynomial::format_monomial;

/// Exact rational coefficient, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

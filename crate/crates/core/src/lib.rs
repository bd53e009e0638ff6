//! Exact computation with local multiplicity algebras of quasi-homogeneous maps: Groebner
//! bases over the rationals, Hilbert series, Gorenstein/duality checks, Grassmannian
//! cohomology presentations, jet rings, and dominance combinatorics for `GL_n` weights.

pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod jets;
pub mod linalg;
pub mod multiplicity;
pub mod poly;
pub mod presented;
pub mod series;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, GroebnerConfig, Ideal, MonomialOrder};
pub use multiplicity::{FiniteGradedAlgebra, StructureReport, WeightMultiset};
pub use poly::{parse_polynomial, Monomial, Polynomial, PolynomialMap, Rational, VarList, WeightedGrading};
pub use presented::{PresentedRing, Provenance, RingFixture};
pub use series::{IntPoly, RationalSeries};
pub use weights::DominantWeight;

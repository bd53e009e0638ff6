use std::cmp::Ordering;

use crate::poly::{revlex_tiebreak, Monomial, WeightedGrading};

/// A monomial order. All variants are well-orders compatible with multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Weighted degree first, reverse lexicographic tie break.
    WeightedGrevlex(WeightedGrading),
    Lex,
    /// Block order: compare the first `split` variables with `first`, then the rest with `second`.
    Elimination { split: usize, first: Box<MonomialOrder>, second: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder::WeightedGrevlex(WeightedGrading::standard(nvars))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(a.exponents(), b.exponents())
    }

    pub(crate) fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::WeightedGrevlex(g) => {
                let w = g.weights();
                let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                da.cmp(&db).then_with(|| revlex_tiebreak(a, b))
            }
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination { split, first, second } => first
                .cmp_slices(&a[..*split], &b[..*split])
                .then_with(|| second.cmp_slices(&a[*split..], &b[*split..])),
        }
    }

    /// The grading this order refines, if it is a weighted grevlex order.
    pub fn grading(&self) -> Option<&WeightedGrading> {
        match self {
            MonomialOrder::WeightedGrevlex(g) => Some(g),
            _ => None,
        }
    }
}

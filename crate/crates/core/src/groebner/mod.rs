//! Groebner bases over the rationals and the ideal-theoretic queries built on them.

mod basis;
mod hilbert;
mod ideal;
mod order;
mod reduce;

pub use basis::{buchberger, buchberger_with, GroebnerBasis, GroebnerConfig};
pub use ideal::Ideal;
pub use order::MonomialOrder;

use crate::error::Result;
use crate::poly::{Monomial, Polynomial, VarList, WeightedGrading};

/// `I ∩ J` by eliminating an auxiliary variable `t` from `t*I + (1 - t)*J`.
pub fn ideal_intersection(i: &Ideal, j: &Ideal, config: &GroebnerConfig) -> Result<Ideal> {
    intersection_with_basis(i, j, config).map(|(ideal, _)| ideal)
}

/// [`ideal_intersection`], also returning the elimination basis over `(_t, vars...)`.
pub fn intersection_with_basis(i: &Ideal, j: &Ideal, config: &GroebnerConfig) -> Result<(Ideal, GroebnerBasis)> {
    i.vars().ensure_same(j.vars())?;
    let n = i.vars().len();
    let mut names = vec!["_t".to_string()];
    names.extend(i.vars().names().iter().cloned());
    let big = VarList::new_unchecked(names);
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;

    let gens = i
        .generators()
        .iter()
        .map(|g| &t * &g.embed(&big, &shift))
        .chain(j.generators().iter().map(|g| &one_minus_t * &g.embed(&big, &shift)));
    let order = MonomialOrder::Elimination {
        split: 1,
        first: Box::new(MonomialOrder::Lex),
        second: Box::new(i.default_order()),
    };
    let gb = buchberger_with(&Ideal::new(&big, gens)?, &order, config)?;

    let projected = gb
        .polynomials()
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|p| {
            let terms = p.terms().iter().map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), c.clone()));
            Polynomial::from_terms(i.vars(), terms)
        });
    let out = Ideal::new(i.vars(), projected)?;
    let out = match i.grading() {
        Some(g) => out.with_grading(g.clone())?,
        None => out,
    };
    Ok((out, gb))
}

/// Equality of ideals, by comparing reduced bases in `i`'s default order.
pub fn ideal_equal(i: &Ideal, j: &Ideal, config: &GroebnerConfig) -> Result<bool> {
    i.vars().ensure_same(j.vars())?;
    let order = i.default_order();
    Ok(buchberger_with(i, &order, config)? == buchberger_with(j, &order, config)?)
}

/// A generator of one ideal that is not in the other, if any. Useful as a failure witness
/// for [`ideal_equal`]: returns `(generator, its nonzero normal form)`.
pub fn inequality_witness(
    i: &Ideal,
    j: &Ideal,
    config: &GroebnerConfig,
) -> Result<Option<(Polynomial, Polynomial)>> {
    let order = i.default_order();
    let gi = buchberger_with(i, &order, config)?;
    let gj = buchberger_with(j, &order, config)?;
    for (gens, gb) in [(i.generators(), &gj), (j.generators(), &gi)] {
        for g in gens {
            let r = gb.normal_form(g)?;
            if !r.is_zero() {
                return Ok(Some((g.clone(), r)));
            }
        }
    }
    Ok(None)
}

/// Hilbert series of `R/I` for an ideal generated by quasi-homogeneous elements.
pub fn hilbert_series_of(ideal: &Ideal, grading: &WeightedGrading, config: &GroebnerConfig) -> Result<crate::series::RationalSeries> {
    for g in ideal.generators() {
        g.homogeneous_degree(grading)?;
    }
    let gb = buchberger_with(ideal, &MonomialOrder::WeightedGrevlex(grading.clone()), config)?;
    gb.hilbert_series(grading)
}

#[cfg(test)]
mod tests;

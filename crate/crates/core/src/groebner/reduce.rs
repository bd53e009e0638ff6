//! Order-sorted polynomial storage and the division algorithm.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational, VarList};

/// Terms sorted ascending in a fixed monomial order; the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct OrderedPoly {
    pub(crate) terms: Vec<(Monomial, Rational)>,
}

impl OrderedPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        OrderedPoly { terms }
    }

    pub(crate) fn to_poly(&self, vars: &VarList) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub(crate) fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero polynomial").1
    }

    pub(crate) fn make_monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let lc = self.lc().clone();
        if !lc.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &lc;
            }
        }
    }

    /// `self - c * m * g`, merging in order.
    pub(crate) fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &OrderedPoly, order: &MonomialOrder) -> OrderedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (m, c) = b.next().expect("peeked");
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let diff = x - y;
                    if !diff.is_zero() {
                        out.push((m.clone(), diff));
                    }
                }
            }
        }
        OrderedPoly { terms: out }
    }
}

/// Full reduction of `p` modulo `basis`. The remainder has no term divisible by any
/// leading monomial of the basis.
pub(crate) fn reduce(p: &OrderedPoly, basis: &[&OrderedPoly], order: &MonomialOrder) -> OrderedPoly {
    let mut p = p.clone();
    let mut remainder_desc: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        match basis.iter().find(|g| g.lm().divides(lm)) {
            Some(g) => {
                let q = g.lm().quotient_of(lm).expect("divides");
                let c = lc / g.lc();
                p = p.sub_scaled(&c, &q, g, order);
            }
            None => {
                let t = p.terms.pop().expect("nonempty");
                remainder_desc.push(t);
            }
        }
    }
    remainder_desc.reverse();
    OrderedPoly { terms: remainder_desc }
}

pub(crate) fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly, order: &MonomialOrder) -> OrderedPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&lcm).expect("lcm");
    let mg = g.lm().quotient_of(&lcm).expect("lcm");
    let zero = OrderedPoly { terms: Vec::new() };
    let a = zero.sub_scaled(&-(Rational::one() / f.lc()), &mf, f, order);
    a.sub_scaled(&(Rational::one() / g.lc()), &mg, g, order)
}

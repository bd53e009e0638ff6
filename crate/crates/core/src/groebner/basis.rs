use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{format_monomial, Monomial, Polynomial, VarList, WeightedGrading};
use crate::series::RationalSeries;

use super::hilbert::hilbert_numerator;
use super::reduce::{reduce, s_polynomial, OrderedPoly};
use super::{Ideal, MonomialOrder};

/// Limits for the Buchberger loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pair reductions before giving up with [`Error::ResourceLimit`].
    pub max_pair_reductions: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pair_reductions: 200_000 }
    }
}

/// A reduced Groebner basis: monic, no term of any element divisible by another element's
/// leading monomial, sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    vars: VarList,
    order: MonomialOrder,
    elems: Vec<OrderedPoly>,
}

/// Reduced Groebner basis of `ideal` under `order`, with the default resource cap.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, order, &GroebnerConfig::default())
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

pub fn buchberger_with(ideal: &Ideal, order: &MonomialOrder, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    let vars = ideal.vars().clone();
    let nvars = vars.len();
    let unit = || GroebnerBasis {
        vars: vars.clone(),
        order: order.clone(),
        elems: vec![OrderedPoly::from_poly(&Polynomial::one(&vars), order)],
    };

    let mut basis: Vec<OrderedPoly> = Vec::new();
    for g in ideal.generators() {
        let mut p = OrderedPoly::from_poly(g, order);
        p.make_monic();
        if p.lm().is_one() {
            return Ok(unit());
        }
        basis.push(p);
    }

    // Pending pairs, kept sorted descending by lcm so the smallest is popped first.
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let add_pairs = |basis: &[OrderedPoly], new: usize, pending: &mut Vec<Pair>, set: &mut HashSet<(usize, usize)>| {
        for i in 0..new {
            pending.push(Pair { i, j: new, lcm: basis[i].lm().lcm(basis[new].lm()) });
            set.insert((i, new));
        }
        pending.sort_by(|a, b| order.cmp(&b.lcm, &a.lcm).then_with(|| (b.i, b.j).cmp(&(a.i, a.j))));
    };
    for k in 1..basis.len() {
        add_pairs(&basis, k, &mut pending, &mut pending_set);
    }

    let mut reductions = 0usize;
    while let Some(pair) = pending.pop() {
        pending_set.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        if fi.lm().is_coprime(fj.lm()) {
            continue;
        }
        // Chain criterion: some k whose leading monomial divides the lcm, with both
        // pairs (i,k) and (j,k) already treated.
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&pair.lcm)
                && !pending_set.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending_set.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > config.max_pair_reductions {
            return Err(Error::ResourceLimit { cap: config.max_pair_reductions });
        }
        let s = s_polynomial(fi, fj, order);
        let refs: Vec<&OrderedPoly> = basis.iter().collect();
        let mut h = reduce(&s, &refs, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return Ok(unit());
        }
        basis.push(h);
        add_pairs(&basis, basis.len() - 1, &mut pending, &mut pending_set);
    }

    let elems = interreduce(basis, order);
    let gb = GroebnerBasis { vars: vars.clone(), order: order.clone(), elems };
    for g in ideal.generators() {
        if !gb.normal_form(g)?.is_zero() {
            return Err(Error::Invalid(format!("generator `{g}` did not reduce to zero")));
        }
    }
    debug_assert!(gb.elems.iter().all(|e| e.lm().nvars() == nvars));
    Ok(gb)
}

fn interreduce(basis: Vec<OrderedPoly>, order: &MonomialOrder) -> Vec<OrderedPoly> {
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<OrderedPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&OrderedPoly> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p).collect();
            let mut r = reduce(&minimal[i], &others, order);
            r.make_monic();
            r
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    reduced
}

impl GroebnerBasis {
    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|e| e.to_poly(&self.vars)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm().clone()).collect()
    }

    /// True for the basis `{1}` of the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|e| e.lm().is_one())
    }

    /// Unique remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        p.vars().ensure_same(&self.vars)?;
        let refs: Vec<&OrderedPoly> = self.elems.iter().collect();
        Ok(reduce(&OrderedPoly::from_poly(p, &self.order), &refs, &self.order).to_poly(&self.vars))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Every S-polynomial of a pair of basis elements reduces to zero. Checks all pairs,
    /// without the criteria used during construction; returns the offending S-polynomial
    /// remainder on failure.
    pub fn certify(&self) -> std::result::Result<(), String> {
        let refs: Vec<&OrderedPoly> = self.elems.iter().collect();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let s = s_polynomial(&self.elems[i], &self.elems[j], &self.order);
                let r = reduce(&s, &refs, &self.order);
                if !r.is_zero() {
                    return Err(format!(
                        "S({}, {}) reduces to {}",
                        self.elems[i].to_poly(&self.vars),
                        self.elems[j].to_poly(&self.vars),
                        r.to_poly(&self.vars)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.vars.len();
        if self.is_unit() {
            return true;
        }
        let mut has_power = vec![false; n];
        for lm in self.leading_monomials() {
            if let Some((i, _)) = lm.as_pure_power() {
                has_power[i] = true;
            }
        }
        has_power.into_iter().all(|b| b)
    }

    /// Monomials outside the leading-monomial ideal, ascending in the basis order
    /// (weighted degree first for weighted grevlex).
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let n = self.vars.len();
        let lms = self.leading_monomials();
        let mut bounds = vec![u32::MAX; n];
        for lm in &lms {
            if let Some((i, e)) = lm.as_pure_power() {
                bounds[i] = bounds[i].min(e);
            }
        }
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        collect_standard(0, &mut current, &bounds, &lms, &mut out);
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(out)
    }

    /// Largest set of variables containing the support of no leading monomial.
    /// The unit ideal reports 0.
    pub fn krull_dimension(&self) -> usize {
        let n = self.vars.len();
        if self.is_unit() {
            return 0;
        }
        let mut supports: Vec<Vec<usize>> =
            self.leading_monomials().iter().map(|m| m.support().collect()).collect();
        supports.sort_by_key(|s| s.len());
        supports.dedup();
        let mut chosen = vec![false; n];
        let mut best = n;
        min_hitting_set(&supports, &mut chosen, 0, &mut best);
        n - best
    }

    /// Hilbert series of the quotient, as a reduced ratio over `prod (1 - t^w)`.
    pub fn hilbert_series(&self, grading: &WeightedGrading) -> Result<RationalSeries> {
        if grading.len() != self.vars.len() {
            return Err(Error::Invalid("grading length does not match variable count".into()));
        }
        for p in self.polynomials() {
            p.homogeneous_degree(grading)?;
        }
        let numerator = hilbert_numerator(self.leading_monomials(), grading.weights());
        let denominator = grading
            .weights()
            .iter()
            .fold(crate::series::IntPoly::one(), |acc, &w| &acc * &crate::series::IntPoly::one_minus_t_pow(w as usize));
        Ok(RationalSeries::new(numerator, denominator))
    }

    pub fn describe_leading_monomials(&self) -> Vec<String> {
        self.leading_monomials().iter().map(|m| format_monomial(&self.vars, m)).collect()
    }
}

fn collect_standard(var: usize, current: &mut Vec<u32>, bounds: &[u32], lms: &[Monomial], out: &mut Vec<Monomial>) {
    if var == current.len() {
        out.push(Monomial::new(current.clone()));
        return;
    }
    let mut e = 0;
    while e < bounds[var] {
        current[var] = e;
        // Prune on the partial exponent vector: later variables are still zero, so a
        // divisor found here divides every extension.
        let m = Monomial::new(current.clone());
        if lms.iter().any(|l| l.divides(&m)) {
            break;
        }
        collect_standard(var + 1, current, bounds, lms, out);
        e += 1;
    }
    current[var] = 0;
}

fn min_hitting_set(sets: &[Vec<usize>], chosen: &mut [bool], count: usize, best: &mut usize) {
    let Some(unhit) = sets.iter().find(|s| !s.iter().any(|&v| chosen[v])) else {
        *best = (*best).min(count);
        return;
    };
    if count + 1 >= *best {
        return;
    }
    for &v in unhit {
        chosen[v] = true;
        min_hitting_set(sets, chosen, count + 1, best);
        chosen[v] = false;
    }
}

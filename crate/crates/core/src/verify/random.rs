//! Seeded random quasi-homogeneous complete intersections.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::groebner::{buchberger_with, GroebnerConfig, Ideal, MonomialOrder};
use crate::poly::{Monomial, Polynomial, PolynomialMap, Rational, VarList, WeightedGrading};

/// Bounds for [`random_complete_intersection`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomCiBounds {
    pub min_vars: usize,
    pub max_vars: usize,
    pub max_weight: u32,
    pub max_degree: u64,
    /// Bounds on `prod d_i / prod w_i`, the dimension of the quotient.
    pub min_dimension: u64,
    pub max_dimension: u64,
    pub max_terms: usize,
}

impl Default for RandomCiBounds {
    fn default() -> Self {
        RandomCiBounds { min_vars: 2, max_vars: 4, max_weight: 3, max_degree: 5, min_dimension: 4, max_dimension: 300, max_terms: 5 }
    }
}

/// All monomials in `weights.len()` variables of weighted degree exactly `d`.
pub fn monomials_of_degree(weights: &[u32], d: u64) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let w = weights[i] as u64;
        for e in 0..=left / w {
            cur[i] = e as u32;
            go(weights, i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    out
}

/// Draws maps until one has a zero-dimensional fiber. Components are sparse random
/// combinations of monomials of the chosen degree with small nonzero integer coefficients.
pub fn random_complete_intersection(rng: &mut ChaCha8Rng, bounds: &RandomCiBounds) -> PolynomialMap {
    let config = GroebnerConfig::default();
    loop {
        let n = rng.gen_range(bounds.min_vars.max(1)..=bounds.max_vars);
        let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=bounds.max_weight)).collect();
        let min_w = *weights.iter().min().expect("n >= 1") as u64;
        let degrees: Vec<u64> = (0..n).map(|_| rng.gen_range(min_w.max(1)..=bounds.max_degree)).collect();
        let num: u64 = degrees.iter().product();
        let den: u64 = weights.iter().map(|&w| w as u64).product();
        if !num.is_multiple_of(den) || num / den > bounds.max_dimension || num / den < bounds.min_dimension {
            continue;
        }
        let names: Vec<String> = (0..n).map(|i| format!("x{}", i + 1)).collect();
        let vars = VarList::new(&names).expect("valid names");
        let mut comps = Vec::with_capacity(n);
        for &d in &degrees {
            let mut pool = monomials_of_degree(&weights, d);
            if pool.is_empty() {
                break;
            }
            pool.shuffle(rng);
            let take = rng.gen_range(1..=bounds.max_terms.min(pool.len()));
            let terms = pool.into_iter().take(take).map(|m| {
                let mut c: i64 = rng.gen_range(1..=5);
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                (m, Rational::from_integer(c.into()))
            });
            comps.push(Polynomial::from_terms(&vars, terms));
        }
        if comps.len() != n {
            continue;
        }
        let grading = WeightedGrading::new(weights).expect("positive weights");
        let Ok(map) = PolynomialMap::with_degrees(comps, grading.clone(), degrees) else {
            continue;
        };
        let ideal = Ideal::new(&vars, map.components().iter().cloned()).expect("same vars");
        match buchberger_with(&ideal, &MonomialOrder::WeightedGrevlex(grading), &config) {
            Ok(gb) if gb.is_zero_dimensional() && !gb.is_unit() => return map,
            _ => continue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(&[1, 2], 4).len(), 3);
        assert_eq!(monomials_of_degree(&[1, 1, 1], 2).len(), 6);
        assert!(monomials_of_degree(&[2], 3).is_empty());
    }

    #[test]
    fn draws_are_reproducible() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..3)
                .map(|_| random_complete_intersection(&mut rng, &RandomCiBounds::default()))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
    }
}

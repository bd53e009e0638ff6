//! Hilbert-series numerators of monomial ideals by pivot recursion:
//! `N(I) = N(I + (p)) + t^deg(p) * N(I : p)`.

use crate::poly::Monomial;
use crate::series::IntPoly;

/// Numerator `N` with `HS(R/I) = N(t) / prod (1 - t^w_j)`.
pub(crate) fn hilbert_numerator(gens: Vec<Monomial>, weights: &[u32]) -> IntPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return IntPoly::one();
    }
    if pairwise_coprime(&gens) {
        return gens.iter().fold(IntPoly::one(), |acc, m| {
            &acc * &IntPoly::one_minus_t_pow(m.weighted_degree(weights) as usize)
        });
    }

    // Pivot on the variable shared by the most generators, at its smallest positive exponent.
    let n = weights.len();
    let (var, _) = (0..n)
        .map(|i| (i, gens.iter().filter(|g| g.exponents()[i] > 0).count()))
        .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        .expect("at least one variable");
    let e = gens
        .iter()
        .map(|g| g.exponents()[var])
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    let mut pivot = vec![0; n];
    pivot[var] = e;
    let pivot = Monomial::new(pivot);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents().to_vec();
            ex[var] = ex[var].saturating_sub(e);
            Monomial::new(ex)
        })
        .collect();

    let shift = IntPoly::term(1, pivot.weighted_degree(weights) as usize);
    &hilbert_numerator(with_pivot, weights) + &(&shift * &hilbert_numerator(colon, weights))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if !a.is_coprime(b) {
                return false;
            }
        }
    }
    true
}

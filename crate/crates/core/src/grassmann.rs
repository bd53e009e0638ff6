//! Gaussian binomials and presented cohomology rings of Grassmannians.
//!
//! Grading is by Chern degree: a class of real degree `2i` has `t`-degree `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::GroebnerConfig;
use crate::poly::{Polynomial, VarList, WeightedGrading};
use crate::presented::{PresentedRing, Provenance};
use crate::series::{IntPoly, RationalSeries};

/// `[n k]_t = prod_{i=1}^k (1 - t^{n-i+1}) / (1 - t^i)`, by exact division.
pub fn gaussian_binomial(n: u32, k: u32) -> Result<IntPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    let mut acc = IntPoly::one();
    for i in 1..=k {
        acc = &acc * &IntPoly::one_minus_t_pow((n - i + 1) as usize);
        acc = acc
            .div_exact(&IntPoly::one_minus_t_pow(i as usize))
            .expect("partial Gaussian products are polynomials");
    }
    Ok(acc)
}

/// Cohomology ring of the Grassmannian of `k`-planes in `C^n`:
/// `C[p_1..p_k, q_1..q_{n-k}]` modulo the coefficients of `x^0, ..., x^{n-1}` in
/// `(p_k + ... + p_1 x^{k-1} + x^k)(q_{n-k} + ... + q_1 x^{n-k-1} + x^{n-k}) - x^n`.
pub fn grassmann_presentation(n: u32, k: u32) -> Result<PresentedRing> {
    if k < 1 || k >= n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n - 1, got n = {n}, k = {k}")));
    }
    let (n, k) = (n as usize, k as usize);
    let names: Vec<String> =
        (1..=k).map(|i| format!("p{i}")).chain((1..=n - k).map(|j| format!("q{j}"))).collect();
    let vars = VarList::new(&names)?;
    let weights: Vec<u32> = (1..=k).chain(1..=n - k).map(|w| w as u32).collect();
    // c(i) for i = 0 is the implicit leading 1.
    let p = |i: usize| if i == 0 { Polynomial::one(&vars) } else { Polynomial::var(&vars, i - 1) };
    let q = |j: usize| if j == 0 { Polynomial::one(&vars) } else { Polynomial::var(&vars, k + j - 1) };
    // The coefficient of x^{n-m} is sum_{i+j=m} p_i q_j, of weighted degree m.
    let relations = (0..n)
        .map(|power| {
            let m = n - power;
            (m.saturating_sub(n - k)..=m.min(k)).fold(Polynomial::zero(&vars), |acc, i| &acc + &(&p(i) * &q(m - i)))
        })
        .collect();
    PresentedRing::new(
        vars,
        WeightedGrading::new(weights)?,
        relations,
        Provenance::Grassmann { n, k },
    )
}

/// Multiplicities `m_1, ..., m_{n-1}` of the divisor points; positions are irrelevant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorData {
    n: u32,
    m: Vec<u32>,
}

impl DivisorData {
    pub fn new(n: u32, m: Vec<u32>) -> Result<Self> {
        if n < 1 || m.len() != (n - 1) as usize {
            return Err(Error::Invalid(format!("rank {n} needs {} multiplicities, got {}", n.saturating_sub(1), m.len())));
        }
        Ok(DivisorData { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.m
    }

    /// The sum of multiplicities is at most one, i.e. the divisor is a single reduced point.
    pub fn is_reduced_point(&self) -> bool {
        self.m.iter().sum::<u32>() <= 1
    }
}

/// `prod_i [n i]_t^{m_i}`.
pub fn grassmann_multiplicity(d: &DivisorData) -> IntPoly {
    d.m.iter().enumerate().fold(IntPoly::one(), |acc, (idx, &mi)| {
        let g = gaussian_binomial(d.n, idx as u32 + 1).expect("1 <= i < n");
        &acc * &g.pow(mi)
    })
}

/// Hilbert series of the tensor product: the product of the individual series.
pub fn product_hilbert(rings: &[PresentedRing], config: &GroebnerConfig) -> Result<RationalSeries> {
    rings.iter().try_fold(RationalSeries::one(), |acc, r| Ok(acc.mul(&r.hilbert_series(config)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rel_strings(r: &PresentedRing) -> Vec<String> {
        r.relations().iter().map(|p| p.to_string()).collect()
    }

    /// Number of k-subsets of {0..n-1} with a given sum of (element - position), computed by
    /// brute force: the inversion-count description of the Gaussian binomial.
    fn subset_count_oracle(n: u32, k: u32) -> Vec<i64> {
        let mut counts = vec![0i64; (k * (n - k) + 1) as usize];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() != k {
                continue;
            }
            let deg: u32 = (0..n).filter(|b| mask & (1 << b) != 0).enumerate().map(|(pos, b)| b - pos as u32).sum();
            counts[deg as usize] += 1;
        }
        counts
    }

    fn binomial(n: u32, k: u32) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 1).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert_eq!(gaussian_binomial(4, 2).unwrap(), IntPoly::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(5, 0).unwrap(), IntPoly::one());
        assert_eq!(gaussian_binomial(4, 2).unwrap().to_string(), "1 + t + 2*t^2 + t^3 + t^4");
        assert!(gaussian_binomial(2, 3).is_err());
    }

    #[test]
    fn gaussian_matches_subset_oracle_duality_and_pascal() {
        for n in 0..=10u32 {
            for k in 0..=n {
                let g = gaussian_binomial(n, k).unwrap();
                assert_eq!(g.to_i64_vec().unwrap(), subset_count_oracle(n, k), "n={n} k={k}");
                assert_eq!(g.eval_at_one(), BigInt::from(binomial(n, k)));
                assert_eq!(g, gaussian_binomial(n, n - k).unwrap());
                if n >= 1 && k >= 1 && k < n {
                    let rhs = &gaussian_binomial(n - 1, k - 1).unwrap()
                        + &(&IntPoly::term(1, k as usize) * &gaussian_binomial(n - 1, k).unwrap());
                    assert_eq!(g, rhs);
                }
            }
        }
    }

    #[test]
    fn presentations() {
        let r = grassmann_presentation(2, 1).unwrap();
        assert_eq!(r.vars().names(), ["p1", "q1"]);
        assert_eq!(rel_strings(&r), ["p1*q1", "p1 + q1"]);

        let r = grassmann_presentation(4, 2).unwrap();
        assert_eq!(r.grading().weights(), &[1, 2, 1, 2]);
        assert_eq!(rel_strings(&r), ["p2*q2", "p2*q1 + p1*q2", "p1*q1 + p2 + q2", "p1 + q1"]);

        let r = grassmann_presentation(3, 1).unwrap();
        assert_eq!(rel_strings(&r), ["p1*q2", "p1*q1 + q2", "p1 + q1"]);
        let degs: Vec<u64> = r.relations().iter().map(|p| p.homogeneous_degree(r.grading()).unwrap()).collect();
        assert_eq!(degs, [3, 2, 1]);

        assert!(grassmann_presentation(3, 0).is_err());
        assert!(grassmann_presentation(3, 3).is_err());
        assert_eq!(r.provenance().to_string(), "grassmann(3,1)");
    }

    #[test]
    fn multiplicity_products() {
        let cfg = GroebnerConfig::default();
        assert_eq!(grassmann_multiplicity(&DivisorData::new(2, vec![1]).unwrap()), IntPoly::from_i64(&[1, 1]));
        assert_eq!(
            grassmann_multiplicity(&DivisorData::new(4, vec![0, 1, 0]).unwrap()),
            gaussian_binomial(4, 2).unwrap()
        );
        assert_eq!(
            grassmann_multiplicity(&DivisorData::new(3, vec![1, 1]).unwrap()),
            IntPoly::from_i64(&[1, 2, 3, 2, 1])
        );
        assert!(DivisorData::new(3, vec![1]).is_err());

        let g21 = grassmann_presentation(2, 1).unwrap();
        assert_eq!(
            product_hilbert(&[g21.clone(), g21], &cfg).unwrap().as_polynomial(),
            Some(&IntPoly::from_i64(&[1, 2, 1]))
        );
        assert_eq!(product_hilbert(&[], &cfg).unwrap(), RationalSeries::one());
        let g42 = grassmann_presentation(4, 2).unwrap();
        assert_eq!(
            product_hilbert(&[g42], &cfg).unwrap().as_polynomial(),
            Some(&grassmann_multiplicity(&DivisorData::new(4, vec![0, 1, 0]).unwrap()))
        );
    }
}

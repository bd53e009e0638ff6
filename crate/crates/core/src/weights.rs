//! Dominant weights of `GL_n`: dominance order, lower sets, Weyl orbits, fundamental
//! coordinates.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing integer vector `mu_1 >= ... >= mu_n`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Invalid("a weight needs at least one entry".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(DominantWeight(entries))
    }

    /// `omega_k = (1, ..., 1, 0, ..., 0)` with `k` ones; `omega_n` is the determinant.
    pub fn fundamental(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::OutOfRange(format!("omega_{k} in GL_{n}")));
        }
        Self::new((0..n).map(|i| i64::from(i < k)).collect())
    }

    pub fn scaled(&self, c: i64) -> Result<Self> {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    fn prefix_sums(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().scan(0i64, |acc, x| {
            *acc += x;
            Some(*acc)
        })
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        DominantWeight::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Comma-separated integers, optionally parenthesized: `2,0,0` or `(2,0,0)`.
impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Invalid(format!("bad weight entry `{x}`"))))
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(entries)
    }
}

/// `lambda <= mu`: equal totals and every partial sum of `lambda` at most that of `mu`.
/// Weights with different totals are incomparable.
pub fn dominance_leq(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    if lambda.rank() != mu.rank() {
        return Err(Error::Invalid(format!("ranks {} and {} differ", lambda.rank(), mu.rank())));
    }
    if lambda.total() != mu.total() {
        return Ok(false);
    }
    Ok(lambda.prefix_sums().zip(mu.prefix_sums()).all(|(a, b)| a <= b))
}

/// All dominant `lambda <= mu`, in descending lexicographic order.
pub fn lower_set(mu: &DominantWeight) -> Vec<DominantWeight> {
    let n = mu.rank();
    let bounds: Vec<i64> = mu.prefix_sums().collect();
    let (hi, lo, total) = (mu.0[0], mu.0[n - 1], mu.total());
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    descend(&mut current, 0, hi, lo, total, &bounds, &mut out);
    out
}

fn descend(
    current: &mut Vec<i64>,
    sum: i64,
    cap: i64,
    lo: i64,
    total: i64,
    bounds: &[i64],
    out: &mut Vec<DominantWeight>,
) {
    let i = current.len();
    let n = bounds.len();
    if i == n {
        if sum == total {
            out.push(DominantWeight(current.clone()));
        }
        return;
    }
    let remaining_after = (n - i - 1) as i64;
    let mut x = cap;
    while x >= lo {
        let s = sum + x;
        // The remaining entries lie in [lo, x]; the total must still be reachable.
        if s <= bounds[i] && s + remaining_after * lo <= total && s + remaining_after * x >= total {
            current.push(x);
            descend(current, s, x, lo, total, bounds, out);
            current.pop();
        }
        x -= 1;
    }
}

/// `|W . mu| = n! / prod (multiplicity of each distinct entry)!`.
pub fn weyl_orbit_size(mu: &DominantWeight) -> BigUint {
    let factorial = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
    let mut denom = BigUint::one();
    let mut run = 1;
    for w in mu.0.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    denom *= factorial(run);
    factorial(mu.rank()) / denom
}

/// Coordinates of `mu = sum alpha_i omega_i` and the divisor exponents read off them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalDecomposition {
    /// `alpha_i = mu_i - mu_{i+1}` for `i < n`, `alpha_n = mu_n`.
    pub alpha: Vec<i64>,
    /// `(alpha_n, alpha_{n-1}, ..., alpha_1)`.
    pub delta_exponents: Vec<i64>,
}

impl FundamentalDecomposition {
    /// `sum alpha_i omega_i`.
    pub fn recompose(&self) -> Vec<i64> {
        let n = self.alpha.len();
        (0..n).map(|i| self.alpha[i..].iter().sum()).collect()
    }
}

pub fn fundamental_decomposition(mu: &DominantWeight) -> FundamentalDecomposition {
    let n = mu.rank();
    let alpha: Vec<i64> = (0..n).map(|i| if i + 1 < n { mu.0[i] - mu.0[i + 1] } else { mu.0[i] }).collect();
    let delta_exponents = alpha.iter().rev().copied().collect();
    FundamentalDecomposition { alpha, delta_exponents }
}

/// Minimal in dominance order, i.e. `mu - (c, ..., c)` is a 0/1 vector.
pub fn is_minuscule(mu: &DominantWeight) -> bool {
    mu.0[0] - mu.0[mu.rank() - 1] <= 1
}

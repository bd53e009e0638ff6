//! Univariate integer polynomials in `t` and reduced rational functions built from them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Rational;

/// Dense integer polynomial in one formal variable `t`, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `c * t^k`
    pub fn term(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    /// `1 - t^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        &Self::one() - &Self::term(1, k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut r = IntPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Coefficients read the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.to_i64()).collect()
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale_down(&self, d: &BigInt) -> IntPoly {
        IntPoly(self.0.iter().map(|c| c / d).collect())
    }

    /// Exact quotient in `Z[t]`, if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = rational_divmod(&to_rational(self), &to_rational(divisor));
        if !r.is_empty() {
            return None;
        }
        q.iter()
            .map(|c| if c.is_integer() { Some(c.to_integer()) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Primitive greatest common divisor, normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = to_rational(self);
        let mut b = to_rational(other);
        while !b.is_empty() {
            let (_, r) = rational_divmod(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            return IntPoly::zero();
        }
        let g = primitive_from_rational(&a);
        if g.leading_coeff().is_negative() {
            -&g
        } else {
            g
        }
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

fn to_rational(p: &IntPoly) -> Vec<Rational> {
    p.0.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rational_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn primitive_from_rational(v: &[Rational]) -> IntPoly {
    let lcm = v.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints = IntPoly::new(v.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect());
    let g = ints.content();
    ints.scale_down(&g)
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// A ratio of integer polynomials in `t`, kept in lowest terms.
///
/// The denominator is normalized to a positive constant term (it always has a nonzero
/// constant term for the series built here); when the constant term vanishes, its leading
/// coefficient is made positive instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalSeries {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        if numerator.is_zero() {
            return RationalSeries { numerator, denominator: IntPoly::one() };
        }
        let g = numerator.gcd(&denominator);
        let mut num = numerator.div_exact(&g).expect("gcd divides numerator");
        let mut den = denominator.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.scale_down(&c);
            den = den.scale_down(&c);
        }
        let sign_ref = if den.coeff(0).is_zero() { den.leading_coeff() } else { den.coeff(0) };
        if sign_ref.is_negative() {
            num = -&num;
            den = -&den;
        }
        RationalSeries { numerator: num, denominator: den }
    }

    pub fn polynomial(p: IntPoly) -> Self {
        RationalSeries { numerator: p, denominator: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::polynomial(IntPoly::one())
    }

    /// `prod (1 - t^d) / prod (1 - t^w)`
    pub fn from_degrees(numerator_degrees: &[u64], denominator_degrees: &[u64]) -> Self {
        let prod = |ds: &[u64]| {
            ds.iter().fold(IntPoly::one(), |acc, &d| &acc * &IntPoly::one_minus_t_pow(d as usize))
        };
        Self::new(prod(numerator_degrees), prod(denominator_degrees))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    pub fn as_polynomial(&self) -> Option<&IntPoly> {
        (self.denominator == IntPoly::one()).then_some(&self.numerator)
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        RationalSeries::new(&self.numerator * &other.numerator, &self.denominator * &other.denominator)
    }

    /// First `n` power-series coefficients; requires a denominator with constant term 1.
    pub fn expand(&self, n: usize) -> Option<Vec<BigInt>> {
        if !self.denominator.coeff(0).is_one() {
            return None;
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.numerator.coeff(k);
            for j in 1..=k.min(self.denominator.0.len().saturating_sub(1)) {
                c -= self.denominator.coeff(j) * &out[k - j];
            }
            out.push(c);
        }
        Some(out)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_polynomial() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "{}/{}", parenthesize(&self.numerator), parenthesize(&self.denominator)),
        }
    }
}

fn parenthesize(p: &IntPoly) -> String {
    if p.0.iter().filter(|c| !c.is_zero()).count() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalSeries({self})")
    }
}

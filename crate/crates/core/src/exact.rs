//! Exact arithmetic: rationals, dense rational polynomials, and values of the
//! form `c·π^p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::float::DoubleDouble;

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: acc = C(n, i) before the update.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::Domain("rational with zero denominator".into()));
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Self(self.0.recip()))
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// `self^e` for any integer exponent; zero to a negative power is an error.
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::Domain("zero to a negative power".into()));
        }
        Ok(Self(num_traits::Pow::pow(&self.0, e)))
    }

    /// Nearest f64 (correctly rounded for in-range values).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Checked exact conversion from a finite f64 (every finite double is a
    /// dyadic rational).
    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Self)
            .ok_or_else(|| Error::Domain(format!("{x} is not finite")))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse rational from {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            None => Ok(Self::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
            Some((p, q)) => {
                let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
                let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
                Self::new(p, q)
            }
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
// Division by zero panics, as for BigRational; use `recip` for a checked path.
rational_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Exact value `coeff · π^pi_power`. A zero coefficient forces `pi_power = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiScalar {
    coeff: Rational,
    pi_power: i32,
}

impl PiScalar {
    pub fn new(coeff: Rational, pi_power: i32) -> Self {
        let pi_power = if coeff.is_zero() { 0 } else { pi_power };
        Self { coeff, pi_power }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), 0)
    }

    pub fn rational(r: Rational) -> Self {
        Self::new(r, 0)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.coeff * r, self.pi_power)
    }

    /// Exact sum; defined only when both terms share a π-power or one is zero.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_power != other.pi_power {
            return Err(Error::Inexact(format!(
                "cannot add π^{} and π^{} exactly as a single scalar",
                self.pi_power, other.pi_power
            )));
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.pi_power))
    }

    /// Value as f64; π^p is formed in double-double so the only sizeable
    /// rounding is the final one.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let pp = DoubleDouble::PI.powi(self.pi_power);
        let c = self.coeff.to_f64();
        // Recover the rounding error of the coefficient too.
        let c_lo = (&self.coeff - &Rational::from_f64(c).unwrap_or_default()).to_f64();
        DoubleDouble::new(c, c_lo).mul(pp).to_f64()
    }

    /// LaTeX rendering, e.g. `\frac{1}{6}\pi^{2}`.
    pub fn to_latex(&self) -> String {
        let c = &self.coeff;
        let sign = if c.is_negative() { "-" } else { "" };
        let a = c.abs();
        let body = if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        };
        if self.pi_power == 0 {
            format!("{sign}{body}")
        } else {
            format!("{sign}{body}\\pi^{{{}}}", self.pi_power)
        }
    }
}

impl fmt::Display for PiScalar {
    /// `p/q * pi^n`, with the `pi^0` factor omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_power == 0 {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{} * pi^{}", self.coeff, self.pi_power)
        }
    }
}

impl fmt::Debug for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PiScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('*') {
            None => Ok(Self::rational(s.parse()?)),
            Some((c, p)) => {
                let p = p.trim();
                let power = p
                    .strip_prefix("pi^")
                    .and_then(|e| e.parse::<i32>().ok())
                    .ok_or_else(|| Error::Domain(format!("cannot parse π-power from {p:?}")))?;
                Ok(Self::new(c.trim().parse()?, power))
            }
        }
    }
}

impl Mul for &PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: &PiScalar) -> PiScalar {
        PiScalar::new(&self.coeff * &rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar::new(-self.coeff, self.pi_power)
    }
}

/// Exact finite sum `Σ c_p · π^p` over distinct powers.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PiSum {
    terms: BTreeMap<i32, Rational>,
}

impl PiSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, coeff: &Rational, pi_power: i32) {
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(pi_power).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&pi_power);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing π-power.
    pub fn terms(&self) -> impl Iterator<Item = PiScalar> + '_ {
        self.terms.iter().map(|(p, c)| PiScalar::new(c.clone(), *p))
    }

    /// The sum as a single `PiScalar`, if it has at most one term.
    pub fn single(&self) -> Option<PiScalar> {
        match self.terms.len() {
            0 => Some(PiScalar::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms().map(|t| t.to_f64()).sum()
    }
}

impl From<PiScalar> for PiSum {
    fn from(s: PiScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(s.coeff(), s.pi_power());
        out
    }
}

impl fmt::Display for PiSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PiSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense polynomial with rational coefficients, index = degree. Trailing
/// zeros are trimmed; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        Self { coeffs: c }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == Rational::one())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in f64 after rounding each coefficient.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(Rational::to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    /// Exact `∫₀¹ p(x) dx = Σ cᵢ/(i+1)`.
    pub fn integral_01(&self) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += &(c / &Rational::from(i as i64 + 1));
        }
        acc
    }

    /// Coefficients of `p(1 − x)`.
    pub fn reflect(&self) -> Self {
        // Horner in the ring: acc ← acc·(1 − x) + c.
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] += a;
                next[i + 1] -= a;
            }
            next[0] += c;
            acc = next;
        }
        Self::new(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Divide by `(x − root)`, returning quotient and remainder `p(root)`.
    pub fn div_linear(&self, root: &Rational) -> (Self, Rational) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Self::zero(), Rational::zero());
        }
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return (Self::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    /// Coefficients low-to-high as a bracketed `p/q` list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Poly> for Vec<String> {
    fn from(p: Poly) -> Self {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for Poly {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        Ok(Poly::new(
            v.iter().map(|s| s.parse()).collect::<Result<_>>()?,
        ))
    }
}

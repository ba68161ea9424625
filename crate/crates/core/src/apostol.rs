//! Apostol-Euler and Apostol-Bernoulli polynomials at a fixed complex
//! parameter λ, and the real derivative tables they carry on the unit circle.
//!
//! Expanding `2e^{xz} = (λe^z + 1) Σ 𝓔_k(x;λ) z^k/k!` and matching `z^n`
//! gives the recurrence
//!
//! ```text
//! (1 + λ) 𝓔_n(x;λ) = 2x^n − λ Σ_{j<n} C(n, j) 𝓔_j(x;λ)
//! ```
//!
//! which is how the coefficients are produced here. With `λ = e^{iμ}`,
//! `i^k e^{iμ/2} 𝓔_k(1/2; λ)` and `i^{k+1} e^{iμ} 𝓔_k(1; −λ)` are real: they
//! are the derivatives of `sec(μ/2)` and `−cot(μ/2)`.

use std::ops::{Add, Mul};

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::classical::bernoulli_poly;
use crate::error::{domain, Error, Result};
use crate::exact::{binomial, Poly, Rational};
use crate::series::{dist_to_even_pi, SINGULAR_GUARD};

/// Default relative tolerance on the imaginary residue of a value that must
/// be real.
pub const DEFAULT_TOL_IMAG: f64 = 1e-9;

/// Dense polynomial with complex f64 coefficients, index = degree.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CPoly {
    coeffs: Vec<Complex64>,
}

impl CPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Length minus one; trailing exact zeros are not trimmed.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Coefficients of an exact rational polynomial, rounded to f64.
    pub fn from_poly(p: &Poly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| Complex64::new(c.to_f64(), 0.0))
                .collect(),
        )
    }
}

impl Add<&CPoly> for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        CPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).copied().unwrap_or(zero)
                        + rhs.coeffs.get(i).copied().unwrap_or(zero)
                })
                .collect(),
        )
    }
}

impl Mul<Complex64> for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: Complex64) -> CPoly {
        self.scale(rhs)
    }
}

/// Builds a finite complex number, rejecting NaN and infinities.
pub fn complex(re: f64, im: f64) -> Result<Complex64> {
    if !re.is_finite() || !im.is_finite() {
        return domain(format!(
            "complex parameter must be finite, got ({re}, {im})"
        ));
    }
    Ok(Complex64::new(re, im))
}

fn check_lambda(lambda: Complex64) -> Result<()> {
    if !lambda.re.is_finite() || !lambda.im.is_finite() {
        return domain(format!("λ must be finite, got {lambda}"));
    }
    if lambda == Complex64::new(0.0, 0.0) {
        return domain("λ = 0 is excluded for Apostol polynomials");
    }
    if (lambda + 1.0).norm() <= SINGULAR_GUARD {
        return domain(format!(
            "λ = −1 is excluded: 2e^(xz)/(λe^z+1) has a pole at z = 0 (got λ = {lambda})"
        ));
    }
    Ok(())
}

fn binom_f64(n: usize, k: usize) -> f64 {
    binomial(n as u64, k as u64)
        .to_f64()
        .unwrap_or(f64::INFINITY)
}

/// `𝓔_0(x;λ), …, 𝓔_k(x;λ)`.
pub fn apostol_euler_family(k: usize, lambda: Complex64) -> Result<Vec<CPoly>> {
    check_lambda(lambda)?;
    let inv = (lambda + 1.0).inv();
    let mut out: Vec<CPoly> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(2.0, 0.0);
        for (j, prev) in out.iter().enumerate() {
            let w = lambda * binom_f64(n, j);
            for (i, a) in prev.coeffs.iter().enumerate() {
                c[i] -= w * a;
            }
        }
        for a in &mut c {
            *a *= inv;
        }
        out.push(CPoly::new(c));
    }
    Ok(out)
}

/// `𝓔_n(x;λ) = Σ_i x^i · num[i](λ) / (1+λ)^{n+1}` with `num[i] ∈ ℚ[λ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicApostolEuler {
    /// Power of `(1+λ)` in the denominator.
    pub denom_power: usize,
    /// Coefficient of `x^i`, as a polynomial in λ.
    pub num: Vec<Poly>,
}

impl SymbolicApostolEuler {
    /// Numerator at a rational `x`, as a polynomial in λ.
    pub fn at_x(&self, x: &Rational) -> Poly {
        self.num
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &acc.scale(x) + c)
    }

    pub fn derivative_x(&self) -> Self {
        let num = self
            .num
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from(i as i64)))
            .collect();
        Self {
            denom_power: self.denom_power,
            num,
        }
    }

    pub fn eval(&self, x: f64, lambda: Complex64) -> Complex64 {
        let num = self
            .num
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                let c = c
                    .to_f64_coeffs()
                    .iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |a, b| a * lambda + b);
                acc * x + c
            });
        num / (lambda + 1.0).powu(self.denom_power as u32)
    }
}

/// `𝓔_0, …, 𝓔_k` exactly in `ℚ[λ]`, from
/// `(1+λ)𝓔_n = 2x^n − λ Σ_{j<n} C(n,j) 𝓔_j`, i.e.
/// `num_n = 2x^n(1+λ)^n − λ Σ_{j<n} C(n,j) (1+λ)^{n−j−1} num_j`.
pub fn apostol_euler_symbolic(k: usize) -> Vec<SymbolicApostolEuler> {
    let one_plus = Poly::from_i64(&[1, 1]);
    let lam = Poly::monomial(1);
    let mut pows = vec![Poly::from_i64(&[1])];
    for _ in 0..k {
        let next = pows.last().expect("nonempty") * &one_plus;
        pows.push(next);
    }
    let mut out: Vec<SymbolicApostolEuler> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut num = vec![Poly::zero(); n + 1];
        num[n] = pows[n].scale(&Rational::from(2));
        for (j, prev) in out.iter().enumerate() {
            let w = -Rational::from(binomial(n as u64, j as u64));
            let factor = (&lam * &pows[n - j - 1]).scale(&w);
            for (i, c) in prev.num.iter().enumerate() {
                num[i] = &num[i] + &(c * &factor);
            }
        }
        out.push(SymbolicApostolEuler {
            denom_power: n + 1,
            num,
        });
    }
    out
}

/// `𝓔_k(x;λ)`; degree exactly `k`. λ ∈ {0, −1} is a domain error.
pub fn apostol_euler_poly(k: usize, lambda: Complex64) -> Result<CPoly> {
    let mut fam = apostol_euler_family(k, lambda)?;
    Ok(fam.pop().expect("family has k + 1 members"))
}

/// `𝓑_k(x;λ)` from `z e^{xz}/(λe^z − 1)`. For λ = 1 these are the Bernoulli
/// polynomials; otherwise matching coefficients gives
/// `(λ−1)𝓑_n = n x^{n−1} − λ Σ_{j<n} C(n,j) 𝓑_j`, so `𝓑_0 = 0` and `𝓑_n`
/// has degree `n − 1`.
pub fn apostol_bernoulli_poly(k: usize, lambda: Complex64) -> Result<CPoly> {
    if !lambda.re.is_finite() || !lambda.im.is_finite() || lambda == Complex64::new(0.0, 0.0) {
        return domain(format!("λ must be finite and nonzero, got {lambda}"));
    }
    if lambda == Complex64::new(1.0, 0.0) {
        return Ok(CPoly::from_poly(&bernoulli_poly(k)));
    }
    if (lambda - 1.0).norm() <= SINGULAR_GUARD {
        return domain(format!(
            "λ too close to 1 for the λ ≠ 1 recurrence: {lambda}"
        ));
    }
    let inv = (lambda - 1.0).inv();
    let mut out: Vec<CPoly> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut c = vec![Complex64::new(0.0, 0.0); n.max(1)];
        if n >= 1 {
            c[n - 1] = Complex64::new(n as f64, 0.0);
        }
        for (j, prev) in out.iter().enumerate() {
            let w = lambda * binom_f64(n, j);
            for (i, a) in prev.coeffs.iter().enumerate() {
                c[i] -= w * a;
            }
        }
        for a in &mut c {
            *a *= inv;
        }
        out.push(CPoly::new(c));
    }
    Ok(out.pop().expect("k + 1 members"))
}

/// `i^n`.
pub fn i_pow(n: usize) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn real_part_checked(z: Complex64, tol_imag: f64, what: impl FnOnce() -> String) -> Result<f64> {
    let allowed = tol_imag * z.re.abs().max(1.0);
    if z.im.abs() > allowed || !z.re.is_finite() {
        return Err(Error::Consistency {
            what: what(),
            defect: z.im.abs(),
            tolerance: allowed,
        });
    }
    Ok(z.re)
}

/// `𝐄_k(μ) = i^k e^{iμ/2} 𝓔_k(1/2; e^{iμ})` for |μ| < π, with the default
/// imaginary-residue tolerance.
pub fn ek_mu(k: usize, mu: f64) -> Result<f64> {
    ek_mu_with_tol(k, mu, DEFAULT_TOL_IMAG)
}

/// As [`ek_mu`]; the imaginary residue must stay within
/// `tol_imag · max(1, |value|)`.
pub fn ek_mu_with_tol(k: usize, mu: f64, tol_imag: f64) -> Result<f64> {
    let z = ek_mu_complex(k, mu)?;
    real_part_checked(z, tol_imag, || {
        format!("imaginary residue of E_{k}(μ = {mu})")
    })
}

/// The unreduced complex value behind [`ek_mu`].
pub fn ek_mu_complex(k: usize, mu: f64) -> Result<Complex64> {
    if !mu.is_finite() || mu.abs() >= std::f64::consts::PI {
        return domain(format!("E_k(μ) needs |μ| < π, got μ = {mu}"));
    }
    let lambda = Complex64::cis(mu);
    let p = apostol_euler_poly(k, lambda)?;
    Ok(i_pow(k) * Complex64::cis(mu / 2.0) * p.eval_real(0.5))
}

/// `𝐄̃_k(μ) = i^{k+1} e^{iμ} 𝓔_k(1; −e^{iμ})` for `k ≥ 1`, μ ∉ 2πℤ.
pub fn ek_tilde_mu(k: usize, mu: f64) -> Result<f64> {
    ek_tilde_mu_with_tol(k, mu, DEFAULT_TOL_IMAG)
}

pub fn ek_tilde_mu_with_tol(k: usize, mu: f64, tol_imag: f64) -> Result<f64> {
    if k == 0 {
        return domain(
            "Ẽ_0(μ) from the Apostol route is −1/tan(μ/2) − i, not real; use the cotangent table",
        );
    }
    let z = ek_tilde_mu_complex(k, mu)?;
    real_part_checked(z, tol_imag, || {
        format!("imaginary residue of Ẽ_{k}(μ = {mu})")
    })
}

/// The unreduced complex value behind [`ek_tilde_mu`] (also defined at `k = 0`).
pub fn ek_tilde_mu_complex(k: usize, mu: f64) -> Result<Complex64> {
    if !mu.is_finite() || dist_to_even_pi(mu) <= SINGULAR_GUARD {
        return domain(format!("Ẽ_k(μ) needs μ away from 2πℤ, got μ = {mu}"));
    }
    let lambda = Complex64::cis(mu);
    let p = apostol_euler_poly(k, -lambda)?;
    Ok(i_pow(k + 1) * lambda * p.eval_real(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::euler_poly;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn symbolic_family_matches_numeric() {
        let fam = apostol_euler_symbolic(7);
        for &mu in &[0.0, 0.9, -2.5] {
            let lambda = c(f64::cos(mu), f64::sin(mu));
            for (k, member) in fam.iter().enumerate() {
                let p = apostol_euler_poly(k, lambda).unwrap();
                for &x in &[0.0, 0.3, 1.0] {
                    assert!(close(member.eval(x, lambda), p.eval(c(x, 0.0)), 1e-12));
                }
            }
        }
    }

    #[test]
    fn symbolic_boundary_jumps_vanish() {
        let lam = Poly::monomial(1);
        for member in apostol_euler_symbolic(6).iter().skip(1) {
            let jump = &(&lam * &member.at_x(&Rational::one())) + &member.at_x(&Rational::zero());
            assert!(jump.is_zero());
        }
    }

    #[test]
    fn degree_zero_is_two_over_one_plus_lambda() {
        for lam in [c(0.3, 0.4), c(1.0, 0.0), c(-0.5, 2.0)] {
            let p = apostol_euler_poly(0, lam).unwrap();
            assert_eq!(p.degree(), Some(0));
            assert!(close(p.coeffs()[0], c(2.0, 0.0) / (lam + 1.0), 1e-15));
        }
    }

    #[test]
    fn lambda_one_gives_euler_polys() {
        for k in 0..12 {
            let a = apostol_euler_poly(k, c(1.0, 0.0)).unwrap();
            let e = CPoly::from_poly(&euler_poly(k));
            for (x, y) in a.coeffs().iter().zip(e.coeffs()) {
                assert!(close(*x, *y, 1e-14), "k={k}");
            }
        }
    }

    #[test]
    fn degree_one_at_minus_lambda() {
        // 𝓔_1(x; −λ) = 2λ/(1−λ)² + 2x/(1−λ)
        for lam in [c(0.2, 0.9), c(-0.7, 0.1), Complex64::cis(2.0)] {
            let p = apostol_euler_poly(1, -lam).unwrap();
            let one_minus = c(1.0, 0.0) - lam;
            assert!(close(
                p.coeffs()[0],
                lam * 2.0 / (one_minus * one_minus),
                1e-14
            ));
            assert!(close(p.coeffs()[1], c(2.0, 0.0) / one_minus, 1e-14));
        }
    }

    #[test]
    fn excluded_parameters() {
        assert!(apostol_euler_poly(3, c(-1.0, 0.0)).is_err());
        assert!(apostol_euler_poly(3, c(0.0, 0.0)).is_err());
        assert!(apostol_euler_poly(3, c(f64::NAN, 0.0)).is_err());
        assert!(apostol_bernoulli_poly(2, c(0.0, 0.0)).is_err());
        assert!(complex(f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn bernoulli_at_lambda_one_and_minus_one() {
        let b = apostol_bernoulli_poly(2, c(1.0, 0.0)).unwrap();
        assert_eq!(b, CPoly::from_poly(&bernoulli_poly(2)));
        let b1 = apostol_bernoulli_poly(1, c(-1.0, 0.0)).unwrap();
        assert_eq!(b1.coeffs(), &[c(-0.5, 0.0)]);
        let b4 = apostol_bernoulli_poly(4, Complex64::cis(0.9)).unwrap();
        assert_eq!(b4.degree(), Some(3));
    }

    #[test]
    fn bernoulli_minus_one_matches_series() {
        // z/(−e^z − 1) = −z/2 + z²/4 + … , so 𝓑_1 = −1/2 directly.
        let z: f64 = 1e-4;
        let gf = z / (-(z.exp()) - 1.0);
        assert!((gf / z + 0.5).abs() < 1e-4);
    }

    #[test]
    fn ek_mu_examples() {
        for mu in [-2.5, -0.3, 0.0, 1.1, 3.0] {
            let v = ek_mu(0, mu).unwrap();
            assert!((v - 1.0 / (mu / 2.0).cos()).abs() < 1e-12 * v.abs());
        }
        assert!(ek_mu(1, 0.0).unwrap().abs() < 1e-15);
        assert!((ek_mu(2, 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!(ek_mu(2, PI).is_err());
    }

    #[test]
    fn ek_tilde_rejects_zero_index() {
        assert!(ek_tilde_mu(0, 1.0).is_err());
        let z = ek_tilde_mu_complex(0, 1.0).unwrap();
        // −1/tan(μ/2) − i
        assert!((z - c(-1.0 / 0.5f64.tan(), -1.0)).norm() < 1e-14);
    }

    #[test]
    fn imaginary_residue_is_reported() {
        assert!(matches!(
            ek_mu_with_tol(12, 2.9, 0.0),
            Err(Error::Consistency { .. })
        ));
    }
}

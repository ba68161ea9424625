//! Truncated Taylor series about a real center, and the secant/cotangent
//! derivative tables built from them.

use std::f64::consts::{PI, TAU};

use crate::error::{domain, Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 40;

/// Distance from a singularity below which arguments are rejected.
pub const SINGULAR_GUARD: f64 = 1e-9;

/// `Σ_{j=0}^{order} c_j t^j` representing a function near `center + t`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries {
    center: f64,
    coeffs: Vec<f64>,
}

impl TruncSeries {
    pub fn new(center: f64, coeffs: Vec<f64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { center, coeffs }
    }

    /// `cos(scale·(center + t))` to the given order.
    pub fn cos_scaled(center: f64, scale: f64, order: usize) -> Self {
        Self::trig(center, scale, order, 0)
    }

    /// `sin(scale·(center + t))` to the given order.
    pub fn sin_scaled(center: f64, scale: f64, order: usize) -> Self {
        Self::trig(center, scale, order, 1)
    }

    fn trig(center: f64, scale: f64, order: usize, phase: usize) -> Self {
        let (s, c) = (scale * center).sin_cos();
        // d^j/dθ^j cos θ cycles cos, −sin, −cos, sin; sin is cos shifted by one.
        let cycle = [c, -s, -c, s];
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut factor = 1.0;
        for j in 0..=order {
            if j > 0 {
                factor *= scale / j as f64;
            }
            coeffs.push(cycle[(j + 3 * phase) % 4] * factor);
        }
        Self { center, coeffs }
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    fn check_compatible(&self, other: &Self) -> usize {
        debug_assert_eq!(self.center, other.center, "series about different centers");
        self.order().min(other.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.check_compatible(other);
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
            .collect();
        Self::new(self.center, coeffs)
    }

    /// `1/f` by the long-division recurrence; fails when `f(center) = 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let one = Self::new(self.center, vec![1.0]).padded(self.order());
        one.div(self)
    }

    /// `self / den`, exact through the common order.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let n = self.check_compatible(den);
        let b0 = den.coeffs[0];
        if b0 == 0.0 {
            return Err(Error::Domain(
                "series division by a series vanishing at its center".into(),
            ));
        }
        let mut q: Vec<f64> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let s: f64 = (1..=k).map(|j| den.coeffs[j] * q[k - j]).sum();
            q.push((self.coeffs[k] - s) / b0);
        }
        Ok(Self::new(self.center, q))
    }

    fn padded(mut self, order: usize) -> Self {
        self.coeffs.resize(order + 1, 0.0);
        self
    }

    /// Derivatives at the center: `j!·c_j`.
    pub fn derivatives(&self) -> Vec<f64> {
        let mut fact = 1.0;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j > 0 {
                    fact *= j as f64;
                }
                c * fact
            })
            .collect()
    }
}

/// Distance from `mu` to the nearest odd multiple of π.
pub fn dist_to_odd_pi(mu: f64) -> f64 {
    let r = (mu - PI).rem_euclid(TAU);
    r.min(TAU - r)
}

/// Distance from `mu` to the nearest multiple of 2π.
pub fn dist_to_even_pi(mu: f64) -> f64 {
    let r = mu.rem_euclid(TAU);
    r.min(TAU - r)
}

/// Derivatives `d^j/dμ^j sec(μ/2)` for `j = 0..=order`, from the reciprocal
/// of the recentered cosine series. Requires |μ| < π.
pub fn sec_taylor_coeffs(mu: f64, order: usize) -> Result<Vec<f64>> {
    if !mu.is_finite() || mu.abs() >= PI || PI - mu.abs() <= SINGULAR_GUARD {
        return domain(format!(
            "sec table needs |μ| < π (outside a 1e-9 band), got μ = {mu}"
        ));
    }
    let cos = TruncSeries::cos_scaled(mu, 0.5, order);
    Ok(cos.reciprocal()?.derivatives())
}

/// Derivatives `−d^j/dμ^j cot(μ/2)` for `j = 0..=order` (entry 0 is
/// `−1/tan(μ/2)`), from the quotient of the recentered cosine and sine series.
pub fn cot_taylor_coeffs(mu: f64, order: usize) -> Result<Vec<f64>> {
    if !mu.is_finite() || dist_to_even_pi(mu) <= SINGULAR_GUARD {
        return domain(format!("cot table needs μ away from 2πℤ, got μ = {mu}"));
    }
    let cos = TruncSeries::cos_scaled(mu, 0.5, order);
    let sin = TruncSeries::sin_scaled(mu, 0.5, order);
    let q = cos.div(&sin)?;
    Ok(q.derivatives().into_iter().map(|d| -d).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn sec_at_zero() {
        // sec(w/2) = 1 + w²/8 + 5w⁴/384 + …; times j! gives 1, 0, 1/4, 0, 5/16.
        let c = sec_taylor_coeffs(0.0, 4).unwrap();
        let want = [1.0, 0.0, 0.25, 0.0, 5.0 / 16.0];
        for (a, b) in c.iter().zip(want) {
            assert!(close(*a, b, 1e-15), "{c:?}");
        }
    }

    #[test]
    fn sec_order_zero() {
        let mu = 1.234;
        assert_eq!(
            sec_taylor_coeffs(mu, 0).unwrap(),
            vec![1.0 / (mu / 2.0).cos()]
        );
    }

    #[test]
    fn cot_at_pi() {
        let c = cot_taylor_coeffs(PI, 1).unwrap();
        assert!(c[0].abs() < 1e-16);
        assert!(close(c[1], 0.5, 1e-15));
    }

    #[test]
    fn cot_order_zero() {
        let mu = 0.8;
        let c = cot_taylor_coeffs(mu, 0).unwrap();
        assert!(close(c[0], -1.0 / (mu / 2.0).tan(), 1e-15));
    }

    #[test]
    fn domain_guards() {
        assert!(sec_taylor_coeffs(PI, 3).is_err());
        assert!(sec_taylor_coeffs(-4.0, 3).is_err());
        assert!(cot_taylor_coeffs(0.0, 3).is_err());
        assert!(cot_taylor_coeffs(TAU + 1e-12, 3).is_err());
        assert!(cot_taylor_coeffs(-3.0, 3).is_ok());
    }

    #[test]
    fn reciprocal_of_geometric() {
        // 1/(1 − t) = Σ t^j
        let s = TruncSeries::new(0.0, vec![1.0, -1.0, 0.0, 0.0, 0.0]);
        assert_eq!(s.reciprocal().unwrap().coeffs(), &[1.0; 5]);
        assert!(TruncSeries::new(0.0, vec![0.0, 1.0]).reciprocal().is_err());
    }

    #[test]
    fn product_with_reciprocal_is_one() {
        let s = TruncSeries::cos_scaled(0.7, 0.5, 12);
        let p = s.mul(&s.reciprocal().unwrap());
        assert!(close(p.coeffs()[0], 1.0, 1e-15));
        for c in &p.coeffs()[1..] {
            assert!(c.abs() < 1e-14);
        }
    }

    #[test]
    fn distances() {
        assert!(dist_to_odd_pi(PI).abs() < 1e-15);
        assert!((dist_to_odd_pi(0.0) - PI).abs() < 1e-15);
        assert!(dist_to_even_pi(-TAU).abs() < 1e-15);
    }
}

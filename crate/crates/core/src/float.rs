//! Small floating-point helpers: error-free transformations, a double-double
//! value for π powers, and `sin(πx)`/`cos(πx)` with exact zeros at half
//! integers.

use std::f64::consts::PI;

/// Low part of π, so that `PI + PI_LO` carries about 107 bits.
pub const PI_LO: f64 = 1.2246467991473532e-16;

#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` with |lo| ≤ ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    pub const PI: Self = Self { hi: PI, lo: PI_LO };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    pub fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        Self::new(p, e)
    }

    pub fn recip(self) -> Self {
        let q1 = 1.0 / self.hi;
        // r = 1 - q1 * self
        let (p, e) = two_prod(q1, self.hi);
        let r = ((1.0 - p) - e) - q1 * self.lo;
        let q2 = r / self.hi;
        Self::new(q1, q2)
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// `a·π − b` with the product formed error-free, so the result is accurate
/// to a few ulps even when the difference cancels.
#[inline]
pub fn mul_pi_minus(a: f64, b: f64) -> f64 {
    let (p, e) = two_prod(a, PI);
    let (s, e2) = two_sum(p, -b);
    s + (e2 + e + a * PI_LO)
}

/// `a·π + b`, see [`mul_pi_minus`].
#[inline]
pub fn mul_pi_plus(a: f64, b: f64) -> f64 {
    mul_pi_minus(a, -b)
}

/// Reduce `x` to `r ∈ [-1, 1]` with `x ≡ r (mod 2)`. Exact for |x| < 2^52.
fn reduce_mod2(x: f64) -> f64 {
    let r = x - 2.0 * (x * 0.5).round();
    if r > 1.0 {
        r - 2.0
    } else if r < -1.0 {
        r + 2.0
    } else {
        r
    }
}

/// `sin(πx)`, returning exact zeros at integers and exact ±1 at half integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = reduce_mod2(x);
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r.abs() == 0.5 {
        return r.signum();
    }
    (PI * r).sin()
}

/// `cos(πx)`, returning exact zeros at half integers and exact ±1 at integers.
pub fn cos_pi(x: f64) -> f64 {
    let r = reduce_mod2(x);
    if r == 0.0 {
        return 1.0;
    }
    if r.abs() == 1.0 {
        return -1.0;
    }
    if r.abs() == 0.5 {
        return 0.0;
    }
    (PI * r).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_powers_are_accurate() {
        let p2 = DoubleDouble::PI.powi(2).to_f64();
        assert_eq!(p2, 9.869604401089358);
        let inv = DoubleDouble::PI.powi(-1).to_f64();
        assert_eq!(inv, std::f64::consts::FRAC_1_PI);
    }

    #[test]
    fn half_integer_trig_is_exact() {
        assert_eq!(sin_pi(1.0), 0.0);
        assert_eq!(sin_pi(-7.0), 0.0);
        assert_eq!(sin_pi(2.5), 1.0);
        assert_eq!(cos_pi(0.5), 0.0);
        assert_eq!(cos_pi(101.5), 0.0);
        assert_eq!(cos_pi(3.0), -1.0);
        assert!((sin_pi(0.25) - 0.5f64.sqrt()).abs() < 4e-16);
    }

    #[test]
    fn pi_difference_keeps_digits() {
        // π − 3 to full relative precision.
        let d = mul_pi_minus(1.0, 3.0);
        assert!((d - 0.141_592_653_589_793_24).abs() < 1e-17);
    }
}

//! Brute-force summation of the series behind every closed form, with
//! certified truncation bounds.
//!
//! Monotone tails are closed with the first-order Euler–Maclaurin correction
//! `∫_N^∞ f + f(N)/2`; for completely monotone `f` the remainder has the sign
//! of `−f'(N)/12` and is no larger. Alternating tails with convex magnitudes
//! are closed with half of the first omitted term; the remainder is then at
//! most half of the first omitted difference. Every bound also carries a
//! floating-point allowance proportional to the summed magnitudes.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::float::{cos_pi, mul_pi_minus, mul_pi_plus, sin_pi};
use crate::par::{self, CompensatedSum};
use crate::series::{dist_to_even_pi, SINGULAR_GUARD};

/// Largest truncation index the tolerance-driven oracles will use.
pub const MAX_TERMS: u64 = 100_000_000;

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumResult {
    pub value: f64,
    pub error_bound: f64,
    pub terms_used: u64,
}

impl SumResult {
    /// Whether `x` lies within the certified interval.
    pub fn contains(&self, x: f64) -> bool {
        (self.value - x).abs() <= self.error_bound
    }
}

/// Order in which paired terms are accumulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SumOrder {
    #[default]
    Forward,
    Reverse,
}

fn accumulate<F>(range: std::ops::Range<u64>, order: SumOrder, f: F) -> CompensatedSum
where
    F: Fn(u64) -> (f64, f64) + Sync + Send,
{
    match order {
        SumOrder::Forward => par::sum_range_mag(range, f),
        SumOrder::Reverse => {
            let mut acc = CompensatedSum::new();
            for i in range.rev() {
                let (x, mag) = f(i);
                acc.add_with_mag(x, mag);
            }
            acc
        }
    }
}

/// Floating-point allowance: per-term relative error `ulps·ε`, plus the
/// compensated-sum error.
fn rounding(acc: &CompensatedSum, n: u64, ulps: f64) -> f64 {
    let mag = acc.abs_sum();
    ulps * EPS * mag + 2.0 * EPS * acc.value().abs() + n as f64 * EPS * EPS * mag
}

/// Smallest `n ∈ [lo, MAX_TERMS]` with `bound(n) ≤ tol`, assuming `bound`
/// decreases in `n`.
fn smallest_n(what: &str, lo: u64, tol: f64, bound: impl Fn(u64) -> f64) -> Result<u64> {
    if !(tol > 0.0) {
        return domain(format!("{what}: tolerance must be positive, got {tol}"));
    }
    let mut hi = lo.max(1);
    while bound(hi) > tol {
        if hi >= MAX_TERMS {
            return Err(Error::Convergence {
                what: format!("{what} at the cap N = {MAX_TERMS}"),
                achieved: bound(MAX_TERMS),
                target: tol,
            });
        }
        hi = (hi * 2).min(MAX_TERMS);
    }
    let mut low = lo.max(1);
    while low < hi {
        let mid = low + (hi - low) / 2;
        if bound(mid) <= tol {
            hi = mid;
        } else {
            low = mid + 1;
        }
    }
    Ok(hi)
}

fn pow_neg(x: f64, s: u32) -> f64 {
    x.powi(-(s as i32))
}

// ---------------------------------------------------------------------------
// ζ(s) and β(s)

fn zeta_truncation(s: u32, n: u64) -> f64 {
    s as f64 * pow_neg(n as f64, s + 1) / 12.0
}

/// `ζ(s) = Σ_{m≥1} m^{−s}` using `N` as the tail start: direct terms
/// `m < N`, then `N^{1−s}/(s−1) + N^{−s}/2`.
pub fn sum_zeta_terms(s: u32, n: u64) -> Result<SumResult> {
    if s < 2 {
        return domain(format!("sum_zeta needs s ≥ 2, got {s}"));
    }
    if n < 1 {
        return domain("sum_zeta needs at least one term");
    }
    let acc = par::sum_range(1..n, |m| pow_neg(m as f64, s));
    let nf = n as f64;
    let tail = nf.powi(1 - s as i32) / (s - 1) as f64 + pow_neg(nf, s) / 2.0;
    let value = acc.value() + tail;
    let bound = zeta_truncation(s, n) + rounding(&acc, n, s as f64 + 4.0) + 4.0 * EPS * tail;
    Ok(SumResult {
        value,
        error_bound: bound,
        terms_used: n,
    })
}

/// `ζ(s)` to within `target_tol`.
pub fn sum_zeta(s: u32, target_tol: f64) -> Result<SumResult> {
    if s < 2 {
        return domain(format!("sum_zeta needs s ≥ 2, got {s}"));
    }
    // Rounding is far below any reachable tolerance; leave it headroom.
    let n = smallest_n("sum_zeta", 1, target_tol * 0.5, |n| zeta_truncation(s, n))?;
    check_target("sum_zeta", sum_zeta_terms(s, n)?, target_tol)
}

fn check_target(what: &str, r: SumResult, tol: f64) -> Result<SumResult> {
    if r.error_bound > tol {
        return Err(Error::Convergence {
            what: what.to_string(),
            achieved: r.error_bound,
            target: tol,
        });
    }
    Ok(r)
}

fn odd_recip_pow(j: u64, s: u32) -> f64 {
    pow_neg((2 * j + 1) as f64, s)
}

fn beta_truncation(s: u32, groups: u64) -> f64 {
    (odd_recip_pow(2 * groups, s) - odd_recip_pow(2 * groups + 1, s)) / 2.0
}

/// `β(s) = Σ_{j≥0} (−1)^j (2j+1)^{−s}` from `groups` pairs `(2i, 2i+1)`
/// plus half of the first omitted term.
pub fn sum_beta_terms(s: u32, groups: u64) -> Result<SumResult> {
    if s < 1 {
        return domain(format!("sum_beta needs s ≥ 1, got {s}"));
    }
    let acc = par::sum_range_mag(0..groups, |i| {
        let a = odd_recip_pow(2 * i, s);
        let b = odd_recip_pow(2 * i + 1, s);
        (a - b, a + b)
    });
    let half = odd_recip_pow(2 * groups, s) / 2.0;
    let value = acc.value() + half;
    let bound = beta_truncation(s, groups) + rounding(&acc, groups, s as f64 + 4.0) + EPS * half;
    Ok(SumResult {
        value,
        error_bound: bound,
        terms_used: 2 * groups,
    })
}

/// `β(s)` to within `target_tol`.
pub fn sum_beta(s: u32, target_tol: f64) -> Result<SumResult> {
    if s < 1 {
        return domain(format!("sum_beta needs s ≥ 1, got {s}"));
    }
    let groups = smallest_n("sum_beta", 1, target_tol * 0.5, |g| beta_truncation(s, g))?;
    check_target("sum_beta", sum_beta_terms(s, groups)?, target_tol)
}

// ---------------------------------------------------------------------------
// Bilateral sums

/// Pair `m ≥ 0` of `Z(k;μ)`: indices `m` and `−m−1` combined,
/// `(−1)^m [u^{−(k+1)} + (−1)^k v^{−(k+1)}]` with `u, v = (2m+1)π ∓ μ`.
/// Returns the unsigned pair magnitude `b_m` and the sum of absolute values.
fn z_pair(k: u32, mu: f64, m: u64) -> (f64, f64) {
    let s = k + 1;
    let w = (2 * m + 1) as f64;
    let a = pow_neg(mul_pi_minus(w, mu), s);
    let b = pow_neg(mul_pi_plus(w, mu), s);
    let b = if k % 2 == 0 { b } else { -b };
    (a + b, a.abs() + b.abs())
}

fn alt(m: u64) -> f64 {
    if m % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `Z(k;μ) = Σ_{m∈ℤ} (−1)^m / ((2m+1)π − μ)^{k+1}`, |μ| < π, summing
/// `m = −N−1..N` as pairs `(m, −m−1)`.
pub fn sum_z(k: u32, mu: f64, n: u64) -> Result<SumResult> {
    sum_z_ordered(k, mu, n, SumOrder::Forward)
}

pub fn sum_z_ordered(k: u32, mu: f64, n: u64, order: SumOrder) -> Result<SumResult> {
    if !mu.is_finite() || mu.abs() >= PI {
        return domain(format!("sum_Z needs |μ| < π, got μ = {mu}"));
    }
    let acc = accumulate(0..n + 1, order, |m| {
        let (b, mag) = z_pair(k, mu, m);
        (alt(m) * b, mag)
    });
    let (b1, _) = z_pair(k, mu, n + 1);
    let (b2, _) = z_pair(k, mu, n + 2);
    let value = acc.value() + alt(n + 1) * b1 / 2.0;
    let bound = (b1 - b2).abs() / 2.0 + rounding(&acc, n, k as f64 + 6.0) + EPS * b1.abs();
    Ok(SumResult {
        value,
        error_bound: bound,
        terms_used: 2 * (n + 1),
    })
}

/// Pair `m ≥ 1` of `Z̃(k;μ)`: `u^{−s} + (−1)^s v^{−s}`, `u, v = 2mπ ∓ μ`.
fn z_tilde_pair(s: u32, mu: f64, m: f64) -> (f64, f64) {
    let w = 2.0 * m;
    let a = pow_neg(mul_pi_minus(w, mu), s);
    let b = pow_neg(mul_pi_plus(w, mu), s);
    let b = if s % 2 == 0 { b } else { -b };
    (a + b, a.abs() + b.abs())
}

fn z_tilde_pair_slope(s: u32, mu: f64, m: f64) -> f64 {
    let w = 2.0 * m;
    let sf = s as f64;
    let a = -sf * pow_neg(mul_pi_minus(w, mu), s + 1);
    let b = -sf * pow_neg(mul_pi_plus(w, mu), s + 1);
    let b = if s % 2 == 0 { b } else { -b };
    2.0 * PI * (a + b)
}

fn z_tilde_tail_integral(s: u32, mu: f64, n: f64) -> f64 {
    let u = mul_pi_minus(2.0 * n, mu);
    let v = mul_pi_plus(2.0 * n, mu);
    if s == 1 {
        (v / u).ln() / (2.0 * PI)
    } else {
        let e = 1 - s as i32;
        let b = v.powi(e);
        let b = if s % 2 == 0 { b } else { -b };
        (u.powi(e) + b) / (2.0 * PI * (s - 1) as f64)
    }
}

/// `Z̃(k;μ) = Σ_{m∈ℤ} 1/(2mπ − μ)^{k+1}` in the symmetric-limit sense:
/// `m = 0`, then pairs `(m, −m)` for `1 ≤ m < N`, then the tail from `N`.
/// Needs `N > |μ|/(2π) + 1` so the tail lies beyond every pole.
pub fn sum_z_tilde(k: u32, mu: f64, n: u64) -> Result<SumResult> {
    sum_z_tilde_ordered(k, mu, n, SumOrder::Forward)
}

pub fn sum_z_tilde_ordered(k: u32, mu: f64, n: u64, order: SumOrder) -> Result<SumResult> {
    if !mu.is_finite() || dist_to_even_pi(mu) <= SINGULAR_GUARD {
        return domain(format!("sum_Ztilde needs μ away from 2πℤ, got μ = {mu}"));
    }
    if (n as f64) <= mu.abs() / (2.0 * PI) + 1.0 {
        return domain(format!(
            "sum_Ztilde needs N > |μ|/(2π) + 1, got N = {n} for μ = {mu}"
        ));
    }
    let s = k + 1;
    let first = pow_neg(-mu, s);
    let acc = accumulate(1..n, order, |m| z_tilde_pair(s, mu, m as f64));
    let nf = n as f64;
    let (gn, _) = z_tilde_pair(s, mu, nf);
    let tail = z_tilde_tail_integral(s, mu, nf) + gn / 2.0;
    let value = first + acc.value() + tail;
    let bound = z_tilde_pair_slope(s, mu, nf).abs() / 12.0
        + rounding(&acc, n, k as f64 + 6.0)
        + (k as f64 + 4.0) * EPS * (first.abs() + tail.abs());
    Ok(SumResult {
        value,
        error_bound: bound,
        terms_used: 2 * n - 1,
    })
}

// ---------------------------------------------------------------------------
// θ-series

fn check_theta(what: &str, theta: f64, n: u64) -> Result<()> {
    if !theta.is_finite() || (theta - theta.round()).abs() <= SINGULAR_GUARD {
        return domain(format!(
            "{what} needs θ away from the integers, got θ = {theta}"
        ));
    }
    if (n as f64) <= theta.abs() + 1.0 {
        return domain(format!(
            "{what} needs N > |θ| + 1, got N = {n} for θ = {theta}"
        ));
    }
    Ok(())
}

/// `Σ_{n∈ℤ} (n+θ)^{−2}` from `θ^{−2}`, pairs `(n, −n)` for `1 ≤ n < N`, and
/// the Euler–Maclaurin tail from `N`.
pub fn sum_inverse_square(theta: f64, n: u64) -> Result<SumResult> {
    check_theta("sum_inverse_square", theta, n)?;
    let first = theta.powi(-2);
    let acc = par::sum_range(1..n, |j| {
        let j = j as f64;
        (j + theta).powi(-2) + (j - theta).powi(-2)
    });
    let nf = n as f64;
    let (p, q) = (nf + theta, nf - theta);
    let tail = 1.0 / p + 1.0 / q + (p.powi(-2) + q.powi(-2)) / 2.0;
    let slope = 2.0 * (p.powi(-3) + q.powi(-3));
    let value = first + acc.value() + tail;
    let bound = slope / 12.0 + rounding(&acc, n, 6.0) + 6.0 * EPS * (first + tail);
    Ok(SumResult {
        value,
        error_bound: bound,
        terms_used: 2 * n - 1,
    })
}

/// Symmetric-limit `Σ_{n∈ℤ} 1/(n+θ)` (the cotangent expansion), pairing
/// `n` with `−n`.
pub fn sum_cotangent(theta: f64, n: u64) -> Result<SumResult> {
    check_theta("sum_cotangent", theta, n)?;
    let first = 1.0 / theta;
    let acc = par::sum_range_mag(1..n, |j| {
        let j = j as f64;
        let (a, b) = (1.0 / (j + theta), 1.0 / (theta - j));
        (a + b, a.abs() + b.abs())
    });
    let nf = n as f64;
    let (p, q) = (nf + theta, nf - theta);
    let tail = -(p / q).ln() + (1.0 / p - 1.0 / q) / 2.0;
    let slope = (q.powi(-2) - p.powi(-2)).abs();
    let value = first + acc.value() + tail;
    let bound = slope / 12.0 + rounding(&acc, n, 4.0) + 4.0 * EPS * (first.abs() + tail.abs());
    Ok(SumResult {
        value,
        error_bound: bound,
        terms_used: 2 * n - 1,
    })
}

/// `π²/sin²(πθ)`.
pub fn inverse_square_closed(theta: f64) -> f64 {
    let s = sin_pi(theta);
    PI * PI / (s * s)
}

/// `π/tan(πθ)`.
pub fn cotangent_closed(theta: f64) -> f64 {
    PI * cos_pi(theta) / sin_pi(theta)
}

/// Defects of the duplication equation `h(θ/2) + h((θ+1)/2) = 4h(θ)` for
/// `f = π²/sin²(πθ)` and for `g_N`, the truncated inverse-square sum.
pub fn herglotz_residual(theta: f64, n: u64) -> Result<(f64, f64)> {
    check_theta("herglotz_residual", theta, n)?;
    let (a, b) = (theta / 2.0, (theta + 1.0) / 2.0);
    let f = inverse_square_closed;
    let f_res = (f(a) + f(b) - 4.0 * f(theta)).abs();
    let g = |t: f64| sum_inverse_square(t, n).map(|r| r.value);
    let g_res = (g(a)? + g(b)? - 4.0 * g(theta)?).abs();
    Ok((f_res, g_res))
}

/// `g_N(θ) − 1/θ²`, which tends to `π²/3` as θ → 0.
pub fn herglotz_limit(theta: f64, n: u64) -> Result<f64> {
    Ok(sum_inverse_square(theta, n)?.value - theta.powi(-2))
}

// ---------------------------------------------------------------------------
// Hurwitz expansions

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HurwitzKind {
    /// `B_{2k}(x)` as a cosine series, `k ≥ 1`.
    BEven,
    /// `B_{2k+1}(x)` as a sine series, `k ≥ 1` (or `k = 0` for `0 < x < 1`).
    BOdd,
    /// `E_{2k}(x)` as an odd-harmonic sine series, `k ≥ 1`.
    EEven,
    /// `E_{2k−1}(x)` as an odd-harmonic cosine series, `k ≥ 1`.
    EOdd,
}

impl HurwitzKind {
    pub const ALL: [HurwitzKind; 4] = [Self::BEven, Self::BOdd, Self::EEven, Self::EOdd];

    /// Index of the polynomial the expansion represents.
    pub fn degree(self, k: u32) -> usize {
        let k = k as usize;
        match self {
            Self::BEven | Self::EEven => 2 * k,
            Self::BOdd => 2 * k + 1,
            Self::EOdd => 2 * k - 1,
        }
    }

    pub fn is_bernoulli(self) -> bool {
        matches!(self, Self::BEven | Self::BOdd)
    }
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn sign_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Truncated Hurwitz Fourier expansion with `M` harmonics.
pub fn hurwitz_partial(kind: HurwitzKind, k: u32, x: f64, m_terms: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return domain(format!("hurwitz_partial needs x in [0, 1], got {x}"));
    }
    let interior = x > 0.0 && x < 1.0;
    if k == 0 && !(kind == HurwitzKind::BOdd && interior) {
        return domain(format!(
            "{kind:?} expansion needs k ≥ 1 (k = 0 only for B_odd with 0 < x < 1)"
        ));
    }
    let ki = k as i64;
    let deg = kind.degree(k);
    let pow = deg as u32 + 1;
    let value = match kind {
        HurwitzKind::BEven | HurwitzKind::BOdd => {
            let c = 2.0 * sign_pow(ki - 1) * factorial_f64(deg) / (2.0 * PI).powi(deg as i32);
            let even = kind == HurwitzKind::BEven;
            let s = par::sum_range(1..m_terms + 1, |m| {
                let arg = 2.0 * m as f64 * x;
                let t = if even { cos_pi(arg) } else { sin_pi(arg) };
                t * pow_neg(m as f64, pow - 1)
            });
            c * s.value()
        }
        HurwitzKind::EEven | HurwitzKind::EOdd => {
            let c = 4.0 * sign_pow(ki) * factorial_f64(deg) / PI.powi(pow as i32);
            let even = kind == HurwitzKind::EEven;
            let s = par::sum_range(0..m_terms, |m| {
                let w = (2 * m + 1) as f64;
                let t = if even { sin_pi(w * x) } else { cos_pi(w * x) };
                t * pow_neg(w, pow)
            });
            c * s.value()
        }
    };
    Ok(value)
}

// ---------------------------------------------------------------------------
// Telescoping identities, as pointwise defects

/// `cos(mt) = [sin((2m+1)t/2) − sin((2m−1)t/2)] / (2 sin(t/2))`.
pub fn cos_telescoping_defect(m: i64, t: f64) -> f64 {
    let mf = m as f64;
    let rhs = (((2.0 * mf + 1.0) * t / 2.0).sin() - ((2.0 * mf - 1.0) * t / 2.0).sin())
        / (2.0 * (t / 2.0).sin());
    ((mf * t).cos() - rhs).abs()
}

/// `sin(mt) = −[cos((2m+1)t/2) − cos((2m−1)t/2)] / (2 sin(t/2))`.
pub fn sin_half_telescoping_defect(m: i64, t: f64) -> f64 {
    let mf = m as f64;
    let rhs = -(((2.0 * mf + 1.0) * t / 2.0).cos() - ((2.0 * mf - 1.0) * t / 2.0).cos())
        / (2.0 * (t / 2.0).sin());
    ((mf * t).sin() - rhs).abs()
}

/// `sin((2m+1)t) = [sin((2m+2)t) + sin(2mt)] / (2 cos t)`.
pub fn sin_telescoping_defect(m: i64, t: f64) -> f64 {
    let mf = m as f64;
    let rhs = (((2.0 * mf + 2.0) * t).sin() + (2.0 * mf * t).sin()) / (2.0 * t.cos());
    (((2.0 * mf + 1.0) * t).sin() - rhs).abs()
}

fn expi_pi(a: f64) -> Complex64 {
    Complex64::new(cos_pi(a), sin_pi(a))
}

/// `e^{−(2m+1)πix} = [e^{−(2m+2)πix} + e^{−2mπix}] / (2 cos πx)`.
pub fn exp_cos_telescoping_defect(m: i64, x: f64) -> f64 {
    let mf = m as f64;
    let lhs = expi_pi(-(2.0 * mf + 1.0) * x);
    let rhs = (expi_pi(-(2.0 * mf + 2.0) * x) + expi_pi(-2.0 * mf * x)) / (2.0 * cos_pi(x));
    (lhs - rhs).norm()
}

/// `e^{−(2m+1)πix} = i[e^{−(2m+2)πix} − e^{−2mπix}] / (2 sin πx)`.
pub fn exp_sin_telescoping_defect(m: i64, x: f64) -> f64 {
    let mf = m as f64;
    let lhs = expi_pi(-(2.0 * mf + 1.0) * x);
    let diff = expi_pi(-(2.0 * mf + 2.0) * x) - expi_pi(-2.0 * mf * x);
    let rhs = Complex64::i() * diff / (2.0 * sin_pi(x));
    (lhs - rhs).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_examples() {
        let r = sum_zeta(2, 1e-10).unwrap();
        assert!(r.error_bound <= 1e-10);
        assert!(r.contains(PI * PI / 6.0), "{r:?}");
        let r = sum_zeta(4, 1e-10).unwrap();
        assert!(r.contains(PI.powi(4) / 90.0));
        let r = sum_zeta(20, 1e-12).unwrap();
        assert!((r.value - 1.0000009540).abs() < 1e-10);
        assert!(sum_zeta(1, 1e-3).is_err());
    }

    #[test]
    fn zeta_unreachable_tolerance() {
        match sum_zeta(2, 1e-30) {
            Err(Error::Convergence { achieved, .. }) => assert!(achieved > 1e-30),
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn beta_examples() {
        let r = sum_beta(1, 1e-8).unwrap();
        assert!(r.contains(PI / 4.0), "{r:?}");
        let r = sum_beta(3, 1e-10).unwrap();
        assert!(r.contains(PI.powi(3) / 32.0));
        let r = sum_beta(2, 1e-8).unwrap();
        assert!((r.value - 0.915_965_594_177_219).abs() <= 1e-8);
    }

    #[test]
    fn z_examples() {
        let r = sum_z(0, 0.0, 10_000).unwrap();
        assert!(r.contains(0.5), "{r:?}");
        let r = sum_z(2, 0.0, 1000).unwrap();
        assert!(r.contains(0.0625), "{r:?}");
        let r = sum_z(1, PI / 2.0, 10_000).unwrap();
        assert!(r.contains(2f64.sqrt() / 4.0), "{r:?}");
        assert!(sum_z(0, PI, 10).is_err());
    }

    #[test]
    fn z_tilde_examples() {
        let r = sum_z_tilde(1, PI, 10_000).unwrap();
        assert!(r.contains(0.25), "{r:?}");
        let r = sum_z_tilde(0, PI / 2.0, 10_000).unwrap();
        assert!(r.contains(-0.5), "{r:?}");
        let r = sum_z_tilde(2, PI, 1000).unwrap();
        assert!(r.value.abs() <= r.error_bound.max(1e-15), "{r:?}");
        assert!(sum_z_tilde(1, 0.0, 100).is_err());
        assert!(sum_z_tilde(1, 40.0, 3).is_err());
    }

    #[test]
    fn reversal_stays_within_bound() {
        let f = sum_z_ordered(3, 1.1, 5000, SumOrder::Forward).unwrap();
        let r = sum_z_ordered(3, 1.1, 5000, SumOrder::Reverse).unwrap();
        assert!((f.value - r.value).abs() <= f.error_bound);
        let f = sum_z_tilde_ordered(0, 2.0, 5000, SumOrder::Forward).unwrap();
        let r = sum_z_tilde_ordered(0, 2.0, 5000, SumOrder::Reverse).unwrap();
        assert!((f.value - r.value).abs() <= f.error_bound);
    }

    #[test]
    fn theta_examples() {
        let r = sum_inverse_square(0.5, 100_000).unwrap();
        assert!(r.contains(PI * PI), "{r:?}");
        let r = sum_inverse_square(0.25, 100_000).unwrap();
        assert!(r.contains(2.0 * PI * PI), "{r:?}");
        let a = sum_inverse_square(0.3, 1000).unwrap();
        let b = sum_inverse_square(0.7, 1000).unwrap();
        assert!((a.value - b.value).abs() <= a.error_bound + b.error_bound);

        let r = sum_cotangent(0.25, 100_000).unwrap();
        assert!(r.contains(PI), "{r:?}");
        let r = sum_cotangent(0.5, 100_000).unwrap();
        assert!(r.value.abs() <= r.error_bound, "{r:?}");
        let r = sum_cotangent(0.75, 100_000).unwrap();
        assert!(r.contains(-PI), "{r:?}");
        assert!(sum_cotangent(1.0, 100).is_err());
    }

    #[test]
    fn herglotz() {
        let (f, g) = herglotz_residual(0.3, 10_000).unwrap();
        assert!(f < 1e-12, "{f}");
        assert!(g < 1e-6, "{g}");
        let l = herglotz_limit(1e-3, 1_000_000).unwrap();
        assert!((l - PI * PI / 3.0).abs() < 1e-4, "{l}");
    }

    #[test]
    fn hurwitz_examples() {
        let v = hurwitz_partial(HurwitzKind::BEven, 1, 0.0, 100_000).unwrap();
        assert!((v - 1.0 / 6.0).abs() < 1e-5);
        let v = hurwitz_partial(HurwitzKind::EEven, 1, 0.5, 10_000).unwrap();
        assert!((v + 0.25).abs() < 1e-8);
        assert_eq!(
            hurwitz_partial(HurwitzKind::BOdd, 1, 0.0, 1000).unwrap(),
            0.0
        );
        assert_eq!(
            hurwitz_partial(HurwitzKind::EOdd, 1, 0.5, 1000).unwrap(),
            0.0
        );
        assert!(hurwitz_partial(HurwitzKind::BOdd, 0, 0.0, 10).is_err());
        assert!(hurwitz_partial(HurwitzKind::BOdd, 0, 0.25, 10).is_ok());
        assert!(hurwitz_partial(HurwitzKind::EEven, 1, 1.5, 10).is_err());
    }

    #[test]
    fn telescoping_defects_vanish() {
        for m in 0..10 {
            for t in [0.6, 1.3, 2.9, 4.4] {
                assert!(cos_telescoping_defect(m, t) < 1e-13);
                assert!(sin_half_telescoping_defect(m, t) < 1e-13);
            }
            for t in [-1.1, 0.2, 0.9] {
                assert!(sin_telescoping_defect(m, t) < 1e-13);
            }
            for x in [0.1, 0.3, 0.7, 0.95] {
                assert!(exp_cos_telescoping_defect(m, x) < 1e-13);
                assert!(exp_sin_telescoping_defect(m, x) < 1e-13);
            }
        }
    }
}

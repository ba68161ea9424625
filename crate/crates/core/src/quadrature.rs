//! Integrals over `[0, 1]`.
//!
//! Polynomial × oscillation integrals are evaluated exactly by the
//! integration-by-parts ladder `∫ p·K = Σ_j (−1)^j p^{(j)}·K^{(−j−1)}`, which
//! terminates after `deg p + 1` steps. The non-elementary integrals for
//! ζ(2k+1) and β(2k+2) use adaptive Gauss–Legendre quadrature.

use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::LazyLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::apostol::{apostol_euler_symbolic, CPoly, SymbolicApostolEuler};
use crate::classical::{bernoulli_poly, euler_poly};
use crate::error::{domain, Error, Result};
use crate::exact::{PiScalar, PiSum, Poly, Rational};
use crate::float::{cos_pi, mul_pi_minus, sin_pi};
use crate::par;

/// Gauss–Legendre points per panel.
pub const GL_POINTS: usize = 15;
/// Maximum bisection depth.
pub const MAX_DEPTH: u32 = 40;
/// Maximum number of panel bisections per integral.
pub const MAX_PANELS: usize = 1 << 20;
/// Depth below which sibling panels are evaluated concurrently.
const PARALLEL_DEPTH: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OscKernel {
    /// `cos(mπx)`
    Cos { m: i64 },
    /// `sin(mπx)`
    Sin { m: i64 },
    /// `e^{a·x}`
    Exp { a: Complex64 },
}

fn pm_one(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// Exact `∫₀¹ p(x)·K(x) dx` for `K = cos(mπx)` or `sin(mπx)`, `m ≥ 1`.
///
/// At the endpoints only one of sine/cosine survives in each antiderivative
/// of the kernel, so step `j` contributes
/// `±(p^{(j)}(1)(−1)^m − p^{(j)}(0)) / (mπ)^{j+1}` for odd `j` (cosine) or
/// even `j` (sine).
pub fn exact_poly_trig_integral(p: &Poly, kernel: OscKernel) -> Result<PiSum> {
    let (m, cosine) = match kernel {
        OscKernel::Cos { m } => (m, true),
        OscKernel::Sin { m } => (m, false),
        OscKernel::Exp { .. } => {
            return domain("exact_poly_trig_integral takes a cosine or sine kernel")
        }
    };
    if m <= 0 {
        return domain(format!("trigonometric kernel needs m ≥ 1, got m = {m}"));
    }
    let end_sign = Rational::from(pm_one(m % 2 == 1));
    let mut out = PiSum::zero();
    let mut d = p.clone();
    let mut j: u32 = 0;
    let one = Rational::one();
    while !d.is_zero() {
        let surviving = if cosine { j % 2 == 1 } else { j % 2 == 0 };
        if surviving {
            let sign = match (cosine, j % 4) {
                (true, 1) | (false, 2) => 1,
                _ => -1,
            };
            let jump = d.eval(&one) * end_sign.clone() - d.coeff(0);
            let scale = Rational::from(sign) / Rational::from(m).pow(j as i32 + 1)?;
            out.add_term(&(jump * scale), -(j as i32 + 1));
        }
        d = d.derivative();
        j += 1;
    }
    Ok(out)
}

/// `∫₀¹ P(x) e^{ax} dx` from the antiderivative `e^{ax} Σ_j (−1)^j P^{(j)}/a^{j+1}`.
/// `exp_a` is `e^a`, passed in so callers can supply it exactly.
pub fn exact_poly_exp_integral(p: &CPoly, a: Complex64, exp_a: Complex64) -> Result<Complex64> {
    if a == Complex64::new(0.0, 0.0) {
        return domain("exponential kernel needs a ≠ 0");
    }
    let mut at1 = Complex64::new(0.0, 0.0);
    let mut at0 = Complex64::new(0.0, 0.0);
    let mut d = p.clone();
    let mut inv = a.inv();
    let mut sign = 1.0;
    while d.degree().is_some() {
        at1 += d.eval_real(1.0) * inv * sign;
        at0 += d.eval_real(0.0) * inv * sign;
        d = d.derivative();
        inv /= a;
        sign = -sign;
    }
    Ok(exp_a * at1 - at0)
}

/// Exact ladder jumps `−λ P^{(j)}(1) − P^{(j)}(0)`, `j = 0..=k`, for
/// `P = 𝓔_k(·;λ)`, as numerators over `(1+λ)^{k+1}` in `ℚ[λ]`.
fn ladder_jumps(member: &SymbolicApostolEuler) -> Vec<Poly> {
    let lam = Poly::monomial(1);
    let mut d = member.clone();
    let mut out = Vec::with_capacity(member.num.len());
    for _ in 0..member.num.len() {
        let at1 = (&lam * &d.at_x(&Rational::one())).scale(&Rational::from(-1));
        out.push(&at1 - &d.at_x(&Rational::zero()));
        d = d.derivative_x();
    }
    out
}

const CACHED_JUMPS: usize = 12;

static JUMPS: LazyLock<Vec<Vec<Poly>>> = LazyLock::new(|| {
    apostol_euler_symbolic(CACHED_JUMPS)
        .iter()
        .map(ladder_jumps)
        .collect()
});

/// `∫₀¹ λ^x 𝓔_k(x;λ) e^{−(2m+1)πix} dx` with `λ = e^{iμ}`, |μ| < π.
///
/// The integrand is `𝓔_k(x;λ) e^{ax}` with `a = iμ − (2m+1)πi` and
/// `e^a = −λ`, so step `j` of the ladder contributes
/// `(−1)^j (−λ P^{(j)}(1) − P^{(j)}(0)) / a^{j+1}`. The jumps are formed
/// exactly in `ℚ[λ]` and only then evaluated at λ; jumps that vanish
/// identically contribute nothing instead of rounding noise.
pub fn exact_apostol_integral(k: usize, m: i64, mu: f64) -> Result<Complex64> {
    if !mu.is_finite() || mu.abs() >= PI {
        return domain(format!("apostol integral needs |μ| < π, got μ = {mu}"));
    }
    let lambda = Complex64::new(mu.cos(), mu.sin());
    let a = Complex64::new(0.0, -mul_pi_minus((2 * m + 1) as f64, mu));
    if a == Complex64::new(0.0, 0.0) {
        return domain("exponential kernel needs a ≠ 0");
    }
    let computed;
    let jumps = if k <= CACHED_JUMPS {
        &JUMPS[k]
    } else {
        computed = ladder_jumps(&apostol_euler_symbolic(k)[k]);
        &computed
    };
    let denom = (lambda + 1.0).powu(k as u32 + 1);
    let mut inv = a.inv();
    let mut total = Complex64::new(0.0, 0.0);
    for (j, jump) in jumps.iter().enumerate() {
        if !jump.is_zero() {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            total += sign * eval_complex(jump, lambda) / denom * inv;
        }
        inv /= a;
    }
    Ok(total)
}

fn eval_complex(p: &Poly, z: Complex64) -> Complex64 {
    p.to_f64_coeffs()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// `2·k! / ((2m+1)πi − iμ)^{k+1}`, the closed value of [`exact_apostol_integral`].
pub fn apostol_integral_closed(k: usize, m: i64, mu: f64) -> Complex64 {
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    let w = Complex64::new(0.0, mul_pi_minus((2 * m + 1) as f64, mu));
    2.0 * fact / w.powu(k as u32 + 1)
}

fn single(sum: PiSum) -> Result<PiScalar> {
    sum.single()
        .ok_or_else(|| Error::Inexact(format!("integral has several π-powers: {sum}")))
}

/// `∫₀¹ B_{2k}(x) cos(mπx) dx`, `m ≥ 1`, by the ladder.
pub fn bernoulli_cos_integral(k: usize, m: i64) -> Result<PiScalar> {
    single(exact_poly_trig_integral(
        &bernoulli_poly(2 * k),
        OscKernel::Cos { m },
    )?)
}

/// Tabulated value: `0` for odd `m`, `(−1)^{k−1}(2k)!/(mπ)^{2k}` for even `m`
/// (`k ≥ 1`); zero for every `m` when `k = 0`.
pub fn bernoulli_cos_table(k: usize, m: i64) -> Result<PiScalar> {
    check_m(m, 1)?;
    if k == 0 || m % 2 == 1 {
        return Ok(PiScalar::zero());
    }
    let c = Rational::from(pm_one(k % 2 == 0)) * factorial(2 * k)
        / Rational::from(m).pow(2 * k as i32)?;
    Ok(PiScalar::new(c, -(2 * k as i32)))
}

/// `∫₀¹ E_{2k}(x) sin(mπx) dx`, `m ≥ 1`, by the ladder.
pub fn euler_sin_integral(k: usize, m: i64) -> Result<PiScalar> {
    single(exact_poly_trig_integral(
        &euler_poly(2 * k),
        OscKernel::Sin { m },
    )?)
}

/// Tabulated value: `2(−1)^k(2k)!/(mπ)^{2k+1}` for odd `m`, `0` for even `m`.
pub fn euler_sin_table(k: usize, m: i64) -> Result<PiScalar> {
    check_m(m, 1)?;
    if m % 2 == 0 {
        return Ok(PiScalar::zero());
    }
    let c = Rational::from(2 * pm_one(k % 2 == 1)) * factorial(2 * k)
        / Rational::from(m).pow(2 * k as i32 + 1)?;
    Ok(PiScalar::new(c, -(2 * k as i32 + 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JFamily {
    /// `∫₀¹ B_{2k+1}(x) sin(mπx) dx`, `m ≥ 1`
    BernoulliOdd,
    /// `∫₀¹ E_{2k+1}(x) cos(mπx) dx`, `m ≥ 0`
    EulerOdd,
}

/// Odd-index companion integrals, by the ladder (or directly at `m = 0`).
pub fn j_integral(k: usize, m: i64, family: JFamily) -> Result<PiScalar> {
    match family {
        JFamily::BernoulliOdd => {
            check_m(m, 1)?;
            single(exact_poly_trig_integral(
                &bernoulli_poly(2 * k + 1),
                OscKernel::Sin { m },
            )?)
        }
        JFamily::EulerOdd => {
            check_m(m, 0)?;
            let p = euler_poly(2 * k + 1);
            if m == 0 {
                return Ok(PiScalar::rational(p.integral_01()));
            }
            single(exact_poly_trig_integral(&p, OscKernel::Cos { m })?)
        }
    }
}

/// Tabulated odd-index values.
pub fn j_table(k: usize, m: i64, family: JFamily) -> Result<PiScalar> {
    let sign = Rational::from(pm_one(k % 2 == 0));
    let power = 2 * k as i32 + 1;
    match family {
        JFamily::BernoulliOdd => {
            check_m(m, 1)?;
            if m % 2 == 1 {
                return Ok(PiScalar::zero());
            }
            let c = sign * factorial(2 * k + 1) / Rational::from(m).pow(power)?;
            Ok(PiScalar::new(c, -power))
        }
        JFamily::EulerOdd => {
            check_m(m, 0)?;
            if m % 2 == 0 {
                return Ok(PiScalar::zero());
            }
            let c = Rational::from(2) * sign * factorial(2 * k + 1)
                / Rational::from(m).pow(power + 1)?;
            Ok(PiScalar::new(c, -(power + 1)))
        }
    }
}

fn check_m(m: i64, min: i64) -> Result<()> {
    if m < min {
        return domain(format!("integral index needs m ≥ {min}, got m = {m}"));
    }
    Ok(())
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer(
        (1..=n as u64)
            .map(num_bigint::BigInt::from)
            .product::<num_bigint::BigInt>(),
    )
}

// ---------------------------------------------------------------------------
// Adaptive quadrature

/// A point where the integrand is a 0/0 form, with its limit value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemovablePoint {
    pub x: f64,
    pub limit: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
}

struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Legendre `P_n(x)` and `P_n'(x)`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gauss_rule(n: usize) -> GaussRule {
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    GaussRule { nodes, weights }
}

static GL: LazyLock<GaussRule> = LazyLock::new(|| gauss_rule(GL_POINTS));

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
    let rule = &*GL;
    h * rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(x, w)| w * f(c + h * x))
        .sum::<f64>()
}

struct Budget(AtomicUsize);

fn adapt<F>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    budget: &Budget,
) -> Result<QuadResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    if budget.0.fetch_add(1, Ordering::Relaxed) >= MAX_PANELS {
        return Err(Error::Convergence {
            what: format!("adaptive quadrature exceeded {MAX_PANELS} bisections"),
            achieved: f64::INFINITY,
            target: tol,
        });
    }
    let mid = (a + b) / 2.0;
    let (l, r) = (panel(f, a, mid), panel(f, mid, b));
    let diff = (l + r - whole).abs();
    if !diff.is_finite() {
        return domain(format!("integrand is not finite on [{a}, {b}]"));
    }
    if diff <= tol || diff <= 8.0 * f64::EPSILON * (l.abs() + r.abs()) {
        return Ok(QuadResult {
            value: l + r,
            error_estimate: diff,
            panels: 2,
        });
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Convergence {
            what: format!("adaptive quadrature on [{a}, {b}]"),
            achieved: diff,
            target: tol,
        });
    }
    let left = || adapt(f, a, mid, l, tol / 2.0, depth + 1, budget);
    let right = || adapt(f, mid, b, r, tol / 2.0, depth + 1, budget);
    let (x, y) = if depth < PARALLEL_DEPTH {
        par::join(left, right)
    } else {
        (left(), right())
    };
    let (x, y) = (x?, y?);
    Ok(QuadResult {
        value: x.value + y.value,
        error_estimate: x.error_estimate + y.error_estimate,
        panels: x.panels + y.panels,
    })
}

/// `∫₀¹ f` to absolute accuracy `tol`. Removable points become panel
/// boundaries, and `f` is replaced by the supplied limit at those points.
pub fn adaptive_integrate<F>(f: F, points: &[RemovablePoint], tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(tol > 0.0) {
        return domain(format!("quadrature tolerance must be positive, got {tol}"));
    }
    let g = |x: f64| match points.iter().find(|p| p.x == x) {
        Some(p) => p.limit,
        None => f(x),
    };
    let mut cuts: Vec<f64> = points
        .iter()
        .map(|p| p.x)
        .filter(|&x| x > 0.0 && x < 1.0)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = vec![0.0];
    edges.extend(cuts);
    edges.push(1.0);

    let mut total = QuadResult {
        value: 0.0,
        error_estimate: 0.0,
        panels: 0,
    };
    let budget = Budget(AtomicUsize::new(0));
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        let whole = panel(&g, a, b);
        let r = adapt(&g, a, b, whole, tol * (b - a), 0, &budget)?;
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.panels += r.panels;
    }
    Ok(total)
}

fn scaled(r: QuadResult, c: f64) -> QuadResult {
    QuadResult {
        value: c * r.value,
        error_estimate: c.abs() * r.error_estimate,
        panels: r.panels,
    }
}

/// `ζ(2k+1) = (−1)^{k−1} 2^{2k} π^{2k+1}/(2k+1)! · ∫₀¹ B_{2k+1}(x) cot(πx/2) dx`.
///
/// With `B_{2k+1}(x) = x·Q(x)` the integrand is `Q(x)·cos(πx/2)·x/sin(πx/2)`,
/// whose value at `x = 0` is `(2/π)·Q(0) = (2/π)(2k+1)B_{2k}`.
pub fn zeta_odd_integral(k: usize, tol: f64) -> Result<QuadResult> {
    if k == 0 {
        return domain("zeta_odd_integral needs k ≥ 1");
    }
    let (q, rem) = bernoulli_poly(2 * k + 1).div_linear(&Rational::zero());
    debug_assert!(rem.is_zero());
    let qf = q.to_f64_coeffs();
    let limit = 2.0 / PI * q.coeff(0).to_f64();
    let f = |x: f64| {
        let h = x / 2.0;
        horner(&qf, x) * cos_pi(h) * (x / sin_pi(h))
    };
    let c = pm_one(k % 2 == 0) as f64 * 4f64.powi(k as i32) * PI.powi(2 * k as i32 + 1)
        / fact_f64(2 * k + 1);
    let r = adaptive_integrate(f, &[RemovablePoint { x: 0.0, limit }], tol / c.abs())?;
    Ok(scaled(r, c))
}

/// `β(2k+2) = (−1)^{k−1} π^{2k+2}/(4(2k+1)!) · ∫₀¹ E_{2k+1}(x)/cos(πx) dx`.
///
/// With `E_{2k+1}(x) = (x − ½)·Q(x)` and `t = ½ − x` the integrand is
/// `−Q(x)·t/sin(πt)`, whose value at `x = ½` is `−Q(½)/π`.
pub fn beta_even_integral(k: usize, tol: f64) -> Result<QuadResult> {
    let half = Rational::new(1, 2)?;
    let (q, rem) = euler_poly(2 * k + 1).div_linear(&half);
    debug_assert!(rem.is_zero());
    let qf = q.to_f64_coeffs();
    let limit = -q.eval(&half).to_f64() / PI;
    let f = |x: f64| {
        let t = 0.5 - x;
        -horner(&qf, x) * (t / sin_pi(t))
    };
    let c = pm_one(k % 2 == 0) as f64 * PI.powi(2 * k as i32 + 2) / (4.0 * fact_f64(2 * k + 1));
    let r = adaptive_integrate(f, &[RemovablePoint { x: 0.5, limit }], tol / c.abs())?;
    Ok(scaled(r, c))
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

fn fact_f64(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

//! Closed forms: ζ(2k), β(2k+1), η(2k), λ(2k) as exact π-multiples, and the
//! bilateral sums
//!
//! ```text
//! Z(k;μ) = Σ_{m∈ℤ} (−1)^m / ((2m+1)π − μ)^{k+1} = 𝐄_k(μ) / (2·k!)
//! Z̃(k;μ) = Σ_{m∈ℤ} 1 / (2mπ − μ)^{k+1}        = 𝐄̃_k(μ) / (2·k!)
//! ```
//!
//! Every bilateral evaluation computes both the Apostol-Euler route and the
//! Taylor-series route and refuses to answer when they disagree.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::apostol::{ek_mu, ek_tilde_mu};
use crate::classical::{bernoulli_number, euler_number};
use crate::error::{domain, Error, Result};
use crate::exact::{PiScalar, Rational};
use crate::series::{cot_taylor_coeffs, dist_to_even_pi, sec_taylor_coeffs, SINGULAR_GUARD};
use crate::tables::{z_table, z_tilde_table};

/// Relative agreement required between the two bilateral routes.
pub const ROUTE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    ComplexRoute,
    TaylorRoute,
    Table,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::ComplexRoute => "complex_route",
            Method::TaylorRoute => "taylor_route",
            Method::Table => "table",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "complex" | "complex_route" => Ok(Method::ComplexRoute),
            "taylor" | "taylor_route" => Ok(Method::TaylorRoute),
            "table" => Ok(Method::Table),
            _ => domain(format!("unknown method {s:?}")),
        }
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn pow2(n: u32) -> BigInt {
    BigInt::from(2).pow(n)
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// `ζ(2k) = (−1)^{k−1} 2^{2k−1} π^{2k} B_{2k} / (2k)!`, `k ≥ 1`.
pub fn zeta_even(k: u32) -> Result<PiScalar> {
    if k == 0 {
        return domain("zeta_even needs k ≥ 1");
    }
    let c = Rational::from(sign(k % 2 == 0)) * Rational::from(pow2(2 * k - 1))
        / Rational::from(factorial(2 * k))
        * bernoulli_number(2 * k as usize);
    Ok(PiScalar::new(c, 2 * k as i32))
}

/// `β(2k+1) = (−1)^k π^{2k+1} E_{2k} / (2^{2k+2} (2k)!)`, `k ≥ 0`.
pub fn beta_odd(k: u32) -> Result<PiScalar> {
    let e = euler_number(2 * k as usize)?;
    let c = Rational::from(sign(k % 2 == 1)) * e
        / (Rational::from(pow2(2 * k + 2)) * Rational::from(factorial(2 * k)));
    Ok(PiScalar::new(c, 2 * k as i32 + 1))
}

/// Dirichlet eta `η(2k) = (1 − 2^{1−2k}) ζ(2k)`.
pub fn eta_even(k: u32) -> Result<PiScalar> {
    let z = zeta_even(k)?;
    let f = Rational::one() - Rational::new(2, pow2(2 * k))?;
    Ok(z.scale(&f))
}

/// Dirichlet lambda `λ(2k) = (1 − 2^{−2k}) ζ(2k)`.
pub fn lambda_even(k: u32) -> Result<PiScalar> {
    let z = zeta_even(k)?;
    let f = Rational::one() - Rational::new(1, pow2(2 * k))?;
    Ok(z.scale(&f))
}

fn fact_f64(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn agree(a: f64, b: f64, what: impl FnOnce() -> String) -> Result<()> {
    let tol = ROUTE_TOL * a.abs().max(b.abs()).max(1.0);
    if (a - b).abs() > tol || !a.is_finite() || !b.is_finite() {
        return Err(Error::Consistency {
            what: what(),
            defect: (a - b).abs(),
            tolerance: tol,
        });
    }
    Ok(())
}

/// Both routes for `Z(k;μ)`: (Apostol-Euler, Taylor).
pub fn z_routes(k: usize, mu: f64) -> Result<(f64, f64)> {
    let denom = 2.0 * fact_f64(k);
    let complex = ek_mu(k, mu)? / denom;
    let taylor = sec_taylor_coeffs(mu, k)?[k] / denom;
    Ok((complex, taylor))
}

/// `Z(k;μ)` for |μ| < π. Route methods cross-check each other; `Table`
/// evaluates the explicit expression (k ≤ 6, any μ off the odd multiples of π).
pub fn z_sum(k: usize, mu: f64, method: Method) -> Result<f64> {
    match method {
        Method::Table => z_table(k, mu),
        Method::Exact => {
            domain("Z(k;μ) has no exact form; use complex_route, taylor_route or table")
        }
        Method::ComplexRoute | Method::TaylorRoute => {
            let (c, t) = z_routes(k, mu)?;
            agree(c, t, || format!("Z({k}; {mu}) complex vs taylor route"))?;
            Ok(if method == Method::ComplexRoute { c } else { t })
        }
    }
}

/// Both routes for `Z̃(k;μ)`, `k ≥ 1`: (Apostol-Euler, Taylor).
pub fn z_tilde_routes(k: usize, mu: f64) -> Result<(f64, f64)> {
    if k == 0 {
        return domain("Z̃(0;μ) is not given by the Apostol formula; use z_tilde0");
    }
    let denom = 2.0 * fact_f64(k);
    let complex = ek_tilde_mu(k, mu)? / denom;
    let taylor = cot_taylor_coeffs(mu, k)?[k] / denom;
    Ok((complex, taylor))
}

/// `Z̃(k;μ)` for `k ≥ 1` and μ ∉ 2πℤ.
pub fn z_tilde_sum(k: usize, mu: f64, method: Method) -> Result<f64> {
    if k == 0 {
        return domain("Z̃(0;μ) is not given by the Apostol formula; use z_tilde0");
    }
    match method {
        Method::Table => z_tilde_table(k, mu),
        Method::Exact => {
            domain("Z̃(k;μ) has no exact form; use complex_route, taylor_route or table")
        }
        Method::ComplexRoute | Method::TaylorRoute => {
            let (c, t) = z_tilde_routes(k, mu)?;
            agree(c, t, || format!("Z̃({k}; {mu}) complex vs taylor route"))?;
            Ok(if method == Method::ComplexRoute { c } else { t })
        }
    }
}

/// Symmetric-limit value `Σ 1/(2mπ − μ) = −1/(2 tan(μ/2))`.
pub fn z_tilde0(mu: f64) -> Result<f64> {
    if !mu.is_finite() || dist_to_even_pi(mu) <= SINGULAR_GUARD {
        return domain(format!("Z̃(0;μ) needs μ away from 2πℤ, got μ = {mu}"));
    }
    let half = mu / 2.0;
    // cos/sin form keeps μ = π at an exact zero of cos(π/2) ≈ 6e-17.
    Ok(-half.cos() / (2.0 * half.sin()))
}

//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 verification or numerical failure, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use telesum::apostol::{apostol_bernoulli_poly, apostol_euler_poly, complex};
use telesum::classical::{bernoulli_poly, euler_poly};
use telesum::closed_forms::{
    beta_odd, eta_even, lambda_even, z_sum, z_tilde0, z_tilde_sum, zeta_even, Method,
};
use telesum::oracles::{
    sum_beta, sum_beta_terms, sum_cotangent, sum_inverse_square, sum_z, sum_z_tilde, sum_zeta,
    sum_zeta_terms, SumResult, MAX_TERMS,
};
use telesum::quadrature::{
    bernoulli_cos_integral, beta_even_integral, euler_sin_integral, exact_apostol_integral,
    zeta_odd_integral,
};
use telesum::render::{
    decimal, render_poly_table, render_value_table, Format, OutputRecord, PolyRow, SeriesRecord,
    ValueRow, DEFAULT_DIGITS,
};
use telesum::series::{cot_taylor_coeffs, sec_taylor_coeffs};
use telesum::verify::{self, Suite};
use telesum::{Error, PiScalar};

const DEFAULT_MAX_K: u32 = 30;

#[derive(Parser)]
#[command(
    name = "telesum",
    version,
    about = "Closed forms and certified checks for zeta, beta and bilateral trigonometric sums"
)]
struct Cli {
    /// Significant digits in decimal output.
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS)]
    digits: usize,
    /// Seed for sampled grids.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients of B_k or E_k, low to high.
    Poly {
        family: PolyFamily,
        k: usize,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Complex coefficients of an Apostol polynomial, low to high.
    Apostol {
        family: ApostolFamily,
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda_re: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda_im: f64,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Derivative tables of sec(μ/2) or −cot(μ/2) at μ.
    Coeffs {
        family: CoeffFamily,
        #[arg(long, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Evaluate a closed form.
    Eval {
        kind: EvalKind,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long)]
        method: Option<Method>,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Direct summation with a certified error bound.
    Series(SeriesArgs),
    /// Exact trigonometric integrals and quadrature representations.
    Integrals {
        kind: IntegralKind,
        /// B_{2k} / E_{2k} for lemma1 / lemma3, 𝓔_k for apostol, ζ(2k+1) / β(2k+2) otherwise.
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Table of closed forms or polynomials for k up to --max-k.
    Table {
        family: TableFamily,
        #[arg(long)]
        max_k: u32,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Replaces the default tolerance of every numeric check.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFamily {
    Bernoulli,
    Euler,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApostolFamily {
    Euler,
    Bernoulli,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffFamily {
    Sec,
    Cot,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalKind {
    Zeta,
    Beta,
    Eta,
    Lambda,
    #[value(name = "Z")]
    Z,
    #[value(name = "Ztilde")]
    Ztilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Zeta,
    Beta,
    #[value(name = "Z")]
    Z,
    #[value(name = "Ztilde")]
    Ztilde,
    Theta2,
    Cot,
}

#[derive(Clone, Copy, ValueEnum)]
enum IntegralKind {
    /// ∫₀¹ B_{2k}(x) cos(mπx) dx, exact.
    Lemma1,
    /// ∫₀¹ E_{2k}(x) sin(mπx) dx, exact.
    Lemma3,
    /// ∫₀¹ λ^x 𝓔_k(x;λ) e^{−(2m+1)πix} dx with λ = e^{iμ}.
    Apostol,
    /// ζ(2k+1) by quadrature.
    ZetaOdd,
    /// β(2k+2) by quadrature.
    BetaEven,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Zeta,
    Beta,
    Eta,
    Lambda,
    Bernoulli,
    Euler,
}

#[derive(Args)]
struct SeriesArgs {
    kind: SeriesKind,
    /// Exponent for zeta and beta.
    #[arg(long)]
    s: Option<u32>,
    /// Index for Z and Ztilde.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Target error bound.
    #[arg(long, conflicts_with = "terms")]
    tol: Option<f64>,
    /// Fixed truncation index.
    #[arg(long)]
    terms: Option<u64>,
    #[arg(long, default_value = "json")]
    format: Format,
}

enum Failure {
    Usage(String),
    Numeric(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn finite(name: &str, x: f64) -> Result<f64, Failure> {
    if x.is_finite() {
        Ok(x)
    } else {
        usage(format!("--{name} must be finite"))
    }
}

fn required<T>(name: &str, v: Option<T>) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required here")))
}

fn positive_tol(tol: f64) -> Result<f64, Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        usage("--tol must be positive and finite")
    }
}

fn max_k_cap() -> Result<u32, Failure> {
    match std::env::var("TELESUM_MAX_K") {
        Ok(s) => s
            .parse()
            .map_err(|_| Failure::Usage(format!("TELESUM_MAX_K must be an integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_MAX_K),
    }
}

fn complex_rows(coeffs: &[Complex64], format: Format, digits: usize) -> String {
    let pairs: Vec<(String, String)> = coeffs
        .iter()
        .map(|c| (decimal(c.re, digits), decimal(c.im, digits)))
        .collect();
    match format {
        Format::Json => serde_json::to_string(&pairs).expect("pairs serialize"),
        Format::Csv => {
            let mut out = String::from("j,re,im");
            for (j, (re, im)) in pairs.iter().enumerate() {
                out.push_str(&format!("\n{j},{re},{im}"));
            }
            out
        }
        Format::Plain | Format::Latex => pairs
            .iter()
            .enumerate()
            .map(|(j, (re, im))| format!("{j}\t{re}\t{im}"))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn real_rows(values: &[f64], format: Format, digits: usize) -> String {
    let vals: Vec<String> = values.iter().map(|v| decimal(*v, digits)).collect();
    match format {
        Format::Json => serde_json::to_string(&vals).expect("values serialize"),
        Format::Csv => {
            let mut out = String::from("j,value");
            for (j, v) in vals.iter().enumerate() {
                out.push_str(&format!("\n{j},{v}"));
            }
            out
        }
        Format::Plain | Format::Latex => vals
            .iter()
            .enumerate()
            .map(|(j, v)| format!("{j}\t{v}"))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn cmd_poly(family: PolyFamily, k: usize, format: Format) -> Outcome {
    let cap = max_k_cap()?;
    if k > cap as usize {
        return usage(format!("K = {k} exceeds the cap {cap} (set TELESUM_MAX_K)"));
    }
    let p = match family {
        PolyFamily::Bernoulli => bernoulli_poly(k),
        PolyFamily::Euler => euler_poly(k),
    };
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    Ok(match format {
        Format::Json => serde_json::to_string(&PolyRow { k, coeffs: p }).expect("row serializes"),
        Format::Csv => coeffs.join(","),
        Format::Latex => render_poly_table(&[PolyRow { k, coeffs: p }], Format::Latex),
        Format::Plain => format!("[{}]", coeffs.join(", ")),
    })
}

fn cmd_eval(
    kind: EvalKind,
    k: u32,
    mu: Option<f64>,
    method: Option<Method>,
    format: Format,
    digits: usize,
) -> Outcome {
    let exact = |name: &str, v: PiScalar| OutputRecord::exact(name, &v, digits).param("k", k);
    let rec = match kind {
        EvalKind::Zeta => exact("zeta", zeta_even(k)?),
        EvalKind::Beta => exact("beta", beta_odd(k)?),
        EvalKind::Eta => exact("eta", eta_even(k)?),
        EvalKind::Lambda => exact("lambda", lambda_even(k)?),
        EvalKind::Z | EvalKind::Ztilde => {
            let mu = finite("mu", required("mu", mu)?)?;
            let method = method.unwrap_or(Method::TaylorRoute);
            let (name, value, method_name) = match kind {
                EvalKind::Z => ("Z", z_sum(k as usize, mu, method)?, method.to_string()),
                _ if k == 0 => ("Ztilde", z_tilde0(mu)?, "closed".to_string()),
                _ => (
                    "Ztilde",
                    z_tilde_sum(k as usize, mu, method)?,
                    method.to_string(),
                ),
            };
            OutputRecord::new(name, method_name, value, digits)
                .param("k", k)
                .param("mu", mu)
        }
    };
    Ok(rec.render(format))
}

/// Doubles the truncation index from 1000 until the bound reaches `tol`.
fn until_tol<F>(tol: f64, f: F) -> Result<SumResult, Failure>
where
    F: Fn(u64) -> telesum::Result<SumResult>,
{
    let mut n = 1000;
    loop {
        let r = f(n)?;
        if r.error_bound <= tol {
            return Ok(r);
        }
        if n >= MAX_TERMS {
            return Err(Failure::Numeric(format!(
                "no convergence: bound {:e} at N = {n} exceeds tolerance {tol:e}",
                r.error_bound
            )));
        }
        n = (n * 2).min(MAX_TERMS);
    }
}

fn cmd_series(a: SeriesArgs, digits: usize) -> Outcome {
    if a.tol.is_none() && a.terms.is_none() {
        return usage("series needs --tol or --terms");
    }
    if let Some(t) = a.tol {
        positive_tol(t)?;
    }
    if a.terms == Some(0) {
        return usage("--terms must be at least 1");
    }
    let mut params = std::collections::BTreeMap::new();
    let run = |f: &dyn Fn(u64) -> telesum::Result<SumResult>| -> Result<SumResult, Failure> {
        match (a.terms, a.tol) {
            (Some(n), _) => Ok(f(n)?),
            (None, Some(t)) => until_tol(t, f),
            (None, None) => unreachable!("checked above"),
        }
    };
    let (kind, r) = match a.kind {
        SeriesKind::Zeta | SeriesKind::Beta => {
            let s = required("s", a.s)?;
            params.insert("s".to_string(), s.to_string());
            let zeta = matches!(a.kind, SeriesKind::Zeta);
            let r = match (a.terms, a.tol) {
                (Some(n), _) if zeta => sum_zeta_terms(s, n)?,
                (Some(n), _) => sum_beta_terms(s, n)?,
                (None, Some(t)) if zeta => sum_zeta(s, t)?,
                (None, Some(t)) => sum_beta(s, t)?,
                (None, None) => unreachable!("checked above"),
            };
            (if zeta { "zeta" } else { "beta" }, r)
        }
        SeriesKind::Z | SeriesKind::Ztilde => {
            let k = required("k", a.k)?;
            let mu = finite("mu", required("mu", a.mu)?)?;
            params.insert("k".to_string(), k.to_string());
            params.insert("mu".to_string(), mu.to_string());
            if matches!(a.kind, SeriesKind::Z) {
                ("Z", run(&|n| sum_z(k, mu, n))?)
            } else {
                ("Ztilde", run(&|n| sum_z_tilde(k, mu, n))?)
            }
        }
        SeriesKind::Theta2 | SeriesKind::Cot => {
            let theta = finite("theta", required("theta", a.theta)?)?;
            params.insert("theta".to_string(), theta.to_string());
            if matches!(a.kind, SeriesKind::Theta2) {
                ("theta2", run(&|n| sum_inverse_square(theta, n))?)
            } else {
                ("cot", run(&|n| sum_cotangent(theta, n))?)
            }
        }
    };
    let round = |x: f64| decimal(x, digits).parse::<f64>().unwrap_or(x);
    let rec = SeriesRecord {
        kind: kind.to_string(),
        params,
        value: round(r.value),
        error_bound: r.error_bound,
        terms_used: r.terms_used,
    };
    Ok(match a.format {
        Format::Json => rec.to_json(),
        Format::Csv => format!(
            "kind,value,error_bound,terms_used\n{},{},{:e},{}",
            rec.kind,
            decimal(r.value, digits),
            rec.error_bound,
            rec.terms_used
        ),
        Format::Plain | Format::Latex => format!(
            "{} ± {:e}  (terms_used = {})",
            decimal(r.value, digits),
            rec.error_bound,
            rec.terms_used
        ),
    })
}

fn cmd_integrals(
    kind: IntegralKind,
    k: usize,
    m: Option<i64>,
    mu: Option<f64>,
    tol: f64,
    format: Format,
    digits: usize,
) -> Outcome {
    let rec = match kind {
        IntegralKind::Lemma1 | IntegralKind::Lemma3 => {
            let m = required("m", m)?;
            let (name, v) = if matches!(kind, IntegralKind::Lemma1) {
                ("bernoulli_cos", bernoulli_cos_integral(k, m)?)
            } else {
                ("euler_sin", euler_sin_integral(k, m)?)
            };
            OutputRecord::exact(name, &v, digits)
                .param("k", k)
                .param("m", m)
        }
        IntegralKind::Apostol => {
            let m = required("m", m)?;
            let mu = finite("mu", required("mu", mu)?)?;
            let v = exact_apostol_integral(k, m, mu)?;
            let params = json!({"k": k, "m": m, "mu": mu});
            let re = decimal(v.re, digits);
            let im = decimal(v.im, digits);
            return Ok(match format {
                Format::Json => {
                    json!({"kind": "apostol", "params": params, "re": re, "im": im, "method": "ladder"})
                        .to_string()
                }
                Format::Csv => format!("kind,re,im\napostol,{re},{im}"),
                Format::Plain | Format::Latex => format!("{re} + {im}i"),
            });
        }
        IntegralKind::ZetaOdd | IntegralKind::BetaEven => {
            let tol = positive_tol(tol)?;
            let (name, q) = if matches!(kind, IntegralKind::ZetaOdd) {
                ("zeta_odd", zeta_odd_integral(k, tol)?)
            } else {
                ("beta_even", beta_even_integral(k, tol)?)
            };
            OutputRecord::new(name, "quadrature", q.value, digits)
                .param("k", k)
                .param("tol", tol)
                .with_bound(q.error_estimate, 3)
        }
    };
    Ok(rec.render(format))
}

fn cmd_table(family: TableFamily, max_k: u32, format: Format, digits: usize) -> Outcome {
    let cap = max_k_cap()?;
    if max_k > cap {
        return usage(format!(
            "--max-k {max_k} exceeds the cap {cap} (set TELESUM_MAX_K)"
        ));
    }
    let value_rows = |name: &str, first: u32, f: fn(u32) -> telesum::Result<PiScalar>| -> Outcome {
        let rows = (first..=max_k)
            .map(|k| {
                let exact = f(k)?;
                Ok(ValueRow {
                    k,
                    approx: exact.to_f64(),
                    exact,
                })
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        Ok(render_value_table(name, &rows, format, digits))
    };
    match family {
        TableFamily::Zeta => value_rows("zeta", 1, zeta_even),
        TableFamily::Beta => value_rows("beta", 0, beta_odd),
        TableFamily::Eta => value_rows("eta", 1, eta_even),
        TableFamily::Lambda => value_rows("lambda", 1, lambda_even),
        TableFamily::Bernoulli | TableFamily::Euler => {
            let rows: Vec<PolyRow> = (0..=max_k as usize)
                .map(|k| PolyRow {
                    k,
                    coeffs: if matches!(family, TableFamily::Bernoulli) {
                        bernoulli_poly(k)
                    } else {
                        euler_poly(k)
                    },
                })
                .collect();
            Ok(render_poly_table(&rows, format))
        }
    }
}

fn cmd_verify(suite: Suite, tol: Option<f64>, seed: u64, format: Format) -> Outcome {
    if let Some(t) = tol {
        positive_tol(t)?;
    }
    let report = verify::run(suite, verify::Options { tol, seed });
    let text = match format {
        Format::Json => {
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "passed": c.passed,
                        "defect": c.defect,
                        "tolerance": c.tolerance,
                        "detail": c.detail,
                    })
                })
                .collect();
            json!({"passed": report.passed(), "checks": checks}).to_string()
        }
        _ => report.to_string(),
    };
    if report.passed() {
        Ok(text)
    } else {
        println!("{text}");
        for c in report.failures() {
            eprintln!("failed: {c}");
        }
        Err(Failure::Verify)
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let digits = cli.digits;
    if digits == 0 || digits > 17 {
        return usage("--digits must be between 1 and 17");
    }
    match cli.command {
        Command::Poly { family, k, format } => cmd_poly(family, k, format),
        Command::Apostol {
            family,
            k,
            lambda_re,
            lambda_im,
            format,
        } => {
            let lambda = complex(
                finite("lambda-re", lambda_re)?,
                finite("lambda-im", lambda_im)?,
            )?;
            let p = match family {
                ApostolFamily::Euler => apostol_euler_poly(k, lambda)?,
                ApostolFamily::Bernoulli => apostol_bernoulli_poly(k, lambda)?,
            };
            Ok(complex_rows(p.coeffs(), format, digits))
        }
        Command::Coeffs {
            family,
            mu,
            order,
            format,
        } => {
            let mu = finite("mu", mu)?;
            let v = match family {
                CoeffFamily::Sec => sec_taylor_coeffs(mu, order)?,
                CoeffFamily::Cot => cot_taylor_coeffs(mu, order)?,
            };
            Ok(real_rows(&v, format, digits))
        }
        Command::Eval {
            kind,
            k,
            mu,
            method,
            format,
        } => cmd_eval(kind, k, mu, method, format, digits),
        Command::Series(a) => cmd_series(a, digits),
        Command::Integrals {
            kind,
            k,
            m,
            mu,
            tol,
            format,
        } => cmd_integrals(kind, k, m, mu, tol, format, digits),
        Command::Table {
            family,
            max_k,
            format,
        } => cmd_table(family, max_k, format, digits),
        Command::Verify { suite, tol, format } => cmd_verify(suite, tol, cli.seed, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;

use telesum::classical::{bernoulli_poly, euler_poly};
use telesum::closed_forms::{beta_odd, z_routes, z_tilde0, z_tilde_routes, zeta_even};
use telesum::oracles::{
    cotangent_closed, herglotz_limit, herglotz_residual, hurwitz_partial, inverse_square_closed,
    sum_beta, sum_cotangent, sum_inverse_square, sum_z, sum_z_tilde, sum_zeta, HurwitzKind,
};
use telesum::quadrature::{
    apostol_integral_closed, bernoulli_cos_integral, bernoulli_cos_table, beta_even_integral,
    euler_sin_integral, euler_sin_table, exact_apostol_integral, j_integral, j_table,
    zeta_odd_integral, JFamily,
};
use telesum::tables::{z_table, z_tilde_table};
use telesum::verify::{self, Suite};
use telesum::{PiScalar, Poly, Rational};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn err<T>(e: impl std::fmt::Display) -> Result<T, String> {
    Err(e.to_string())
}

fn spread(vals: &[f64]) -> f64 {
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    hi - lo
}

fn exact_closed_forms() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 1..=10u32 {
        let exact = zeta_even(k).map_err(|e| e.to_string())?.to_f64();
        let r = sum_zeta(2 * k, 1e-10).map_err(|e| e.to_string())?;
        if r.error_bound > 1e-10 || !r.contains(exact) {
            return err(format!(
                "zeta({}) = {exact} outside {} ± {:e}",
                2 * k,
                r.value,
                r.error_bound
            ));
        }
        worst = worst.max((r.value - exact).abs());
    }
    for k in 0..=8u32 {
        let exact = beta_odd(k).map_err(|e| e.to_string())?.to_f64();
        let r = sum_beta(2 * k + 1, 1e-10).map_err(|e| e.to_string())?;
        if r.error_bound > 1e-10 || !r.contains(exact) {
            return err(format!(
                "beta({}) = {exact} outside {} ± {:e}",
                2 * k + 1,
                r.value,
                r.error_bound
            ));
        }
        worst = worst.max((r.value - exact).abs());
    }
    let zeta2 = PiScalar::new(Rational::new(1, 6).unwrap(), 2);
    let beta1 = PiScalar::new(Rational::new(1, 4).unwrap(), 1);
    if zeta_even(1).unwrap() != zeta2 || beta_odd(0).unwrap() != beta1 {
        return err("zeta(2) or beta(1) not the exact pi^2/6, pi/4");
    }
    Ok(format!(
        "max |closed - series| = {worst:.3e}, all within bounds <= 1e-10"
    ))
}

fn trig_ladders_match_tables() -> Outcome {
    let mut zeros = 0;
    let mut checked = 0;
    for k in 0..=8usize {
        for m in 0..=12i64 {
            let mut pairs = Vec::new();
            if m >= 1 {
                pairs.push((
                    "B cos",
                    bernoulli_cos_integral(k, m),
                    bernoulli_cos_table(k, m),
                ));
                pairs.push(("E sin", euler_sin_integral(k, m), euler_sin_table(k, m)));
                pairs.push((
                    "B_odd sin",
                    j_integral(k, m, JFamily::BernoulliOdd),
                    j_table(k, m, JFamily::BernoulliOdd),
                ));
            }
            pairs.push((
                "E_odd cos",
                j_integral(k, m, JFamily::EulerOdd),
                j_table(k, m, JFamily::EulerOdd),
            ));
            for (what, lhs, rhs) in pairs {
                let (lhs, rhs) = (
                    lhs.map_err(|e| e.to_string())?,
                    rhs.map_err(|e| e.to_string())?,
                );
                if lhs != rhs {
                    return err(format!("{what} k={k} m={m}: ladder {lhs} vs table {rhs}"));
                }
                checked += 1;
                zeros += usize::from(lhs.is_zero());
            }
        }
    }
    Ok(format!("{checked} exact equalities ({zeros} zero cases)"))
}

const Z_MU: [f64; 7] = [-2.8, -1.5, -0.3, 0.0, 0.7, 1.9, 3.0];

fn z_agreement() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..=8usize {
        for &mu in &Z_MU {
            let (c, t) = z_routes(k, mu).map_err(|e| e.to_string())?;
            let o = sum_z(k as u32, mu, 10_000)
                .map_err(|e| e.to_string())?
                .value;
            let mut vals = vec![c, t, o];
            if k <= 6 {
                vals.push(z_table(k, mu).map_err(|e| e.to_string())?);
            }
            let s = spread(&vals);
            if s > 1e-7 {
                return err(format!("Z({k}; {mu}) routes spread {s:.3e}: {vals:?}"));
            }
            worst = worst.max(s);
        }
    }
    Ok(format!("max spread {worst:.3e} <= 1e-7"))
}

fn z_tilde_agreement() -> Outcome {
    let grid = [0.4, 1.0, PI / 2.0, 2.0, PI, 4.0];
    let mut worst: f64 = 0.0;
    for k in 1..=8usize {
        for &mu in &grid {
            let (c, t) = z_tilde_routes(k, mu).map_err(|e| e.to_string())?;
            let o = sum_z_tilde(k as u32, mu, 10_000)
                .map_err(|e| e.to_string())?
                .value;
            let mut vals = vec![c, t, o];
            if k <= 7 {
                vals.push(z_tilde_table(k, mu).map_err(|e| e.to_string())?);
            }
            let s = spread(&vals);
            if s > 1e-7 {
                return err(format!("Ztilde({k}; {mu}) routes spread {s:.3e}: {vals:?}"));
            }
            worst = worst.max(s);
        }
    }
    let mut worst0: f64 = 0.0;
    for &mu in &grid {
        let closed = z_tilde0(mu).map_err(|e| e.to_string())?;
        let paired = sum_z_tilde(0, mu, 10_000).map_err(|e| e.to_string())?.value;
        let d = (closed - paired).abs();
        if d > 1e-6 {
            return err(format!(
                "Ztilde(0; {mu}): closed {closed} vs paired {paired}"
            ));
        }
        worst0 = worst0.max(d);
    }
    Ok(format!(
        "max spread {worst:.3e} <= 1e-7; k = 0 defect {worst0:.3e} <= 1e-6"
    ))
}

fn apostol_integral() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..=8usize {
        for m in -8..=8i64 {
            for &mu in &[0.0, 0.7, -0.7, 2.0, -2.0] {
                let ladder: Complex64 =
                    exact_apostol_integral(k, m, mu).map_err(|e| e.to_string())?;
                let closed = apostol_integral_closed(k, m, mu);
                let rel = (ladder - closed).norm() / closed.norm();
                if !(rel <= 1e-10) {
                    return err(format!("k={k} m={m} mu={mu}: relative defect {rel:.3e}"));
                }
                worst = worst.max(rel);
            }
        }
    }
    Ok(format!("max relative defect {worst:.3e} <= 1e-10"))
}

fn theta_sums() -> Outcome {
    let n = 100_000;
    let thetas = [0.1, 0.25, 0.5, 0.9];
    for &t in &thetas {
        let sq = sum_inverse_square(t, n).map_err(|e| e.to_string())?;
        if !sq.contains(inverse_square_closed(t)) {
            return err(format!(
                "inverse squares at {t}: {} ± {:e}",
                sq.value, sq.error_bound
            ));
        }
        let cot = sum_cotangent(t, n).map_err(|e| e.to_string())?;
        if !cot.contains(cotangent_closed(t)) {
            return err(format!(
                "cotangent at {t}: {} ± {:e}",
                cot.value, cot.error_bound
            ));
        }
        let big = sum_inverse_square(t, 10 * n).map_err(|e| e.to_string())?;
        if (big.value - sq.value).abs() > sq.error_bound {
            return err(format!("10N rerun at {t} moved by more than the bound"));
        }
    }
    let mut f_worst: f64 = 0.0;
    let mut g_worst: f64 = 0.0;
    for &t in &[0.1, 0.25, 0.3, 0.5, 0.9] {
        let (f, g) = herglotz_residual(t, 10_000).map_err(|e| e.to_string())?;
        let (_, g10) = herglotz_residual(t, 100_000).map_err(|e| e.to_string())?;
        if f > 1e-12 {
            return err(format!("f duplication defect {f:.3e} at {t}"));
        }
        if g > 1e-6 || g10 > g.max(1e-11) {
            return err(format!("g duplication defect {g:.3e} -> {g10:.3e} at {t}"));
        }
        f_worst = f_worst.max(f);
        g_worst = g_worst.max(g);
    }
    let lim = herglotz_limit(1e-3, 100_000).map_err(|e| e.to_string())?;
    let d = (lim - PI * PI / 3.0).abs();
    if d > 1e-4 {
        return err(format!("theta -> 0 limit {lim} is {d:.3e} from pi^2/3"));
    }
    Ok(format!(
        "sums within bounds; f defect {f_worst:.3e}, g defect {g_worst:.3e}; limit off by {d:.3e}"
    ))
}

fn timed_integral(label: &str, q: impl FnOnce() -> telesum::Result<f64>, series: f64) -> Outcome {
    let start = Instant::now();
    let v = q().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let d = (v - series).abs();
    if d > 1e-7 {
        return err(format!("{label}: quadrature {v} vs series {series}"));
    }
    if elapsed > Duration::from_secs(5) {
        return err(format!("{label}: took {elapsed:?} (> 5 s)"));
    }
    Ok(format!("{label} {d:.1e} in {:.2}s", elapsed.as_secs_f64()))
}

fn non_elementary_integrals() -> Outcome {
    let mut parts = Vec::new();
    for k in 1..=3usize {
        let s = sum_zeta(2 * k as u32 + 1, 1e-10)
            .map_err(|e| e.to_string())?
            .value;
        parts.push(timed_integral(
            &format!("zeta({})", 2 * k + 1),
            || zeta_odd_integral(k, 1e-9).map(|q| q.value),
            s,
        )?);
    }
    for k in 0..=2usize {
        let s = sum_beta(2 * k as u32 + 2, 1e-10)
            .map_err(|e| e.to_string())?
            .value;
        parts.push(timed_integral(
            &format!("beta({})", 2 * k + 2),
            || beta_even_integral(k, 1e-9).map(|q| q.value),
            s,
        )?);
    }
    Ok(parts.join(", "))
}

fn hurwitz_expansions() -> Outcome {
    let m_terms = 100_000;
    let xs = ["0", "1/4", "1/2", "3/4", "1"];
    let mut worst: f64 = 0.0;
    let mut exact_zeros = 0;
    for kind in HurwitzKind::ALL {
        for k in 1..=4u32 {
            let deg = kind.degree(k);
            let p: Poly = if kind.is_bernoulli() {
                bernoulli_poly(deg)
            } else {
                euler_poly(deg)
            };
            for x in xs {
                let xr: Rational = x.parse().unwrap();
                let exact = p.eval(&xr);
                let partial =
                    hurwitz_partial(kind, k, xr.to_f64(), m_terms).map_err(|e| e.to_string())?;
                if exact.is_zero() {
                    if partial != 0.0 {
                        return err(format!(
                            "{kind:?} k={k} x={x}: expected exact 0, got {partial:e}"
                        ));
                    }
                    exact_zeros += 1;
                    continue;
                }
                let d = (partial - exact.to_f64()).abs();
                if d > 1e-4 {
                    return err(format!("{kind:?} k={k} x={x}: defect {d:.3e}"));
                }
                worst = worst.max(d);
            }
        }
    }
    for x in ["1/4", "1/2", "3/4"] {
        let xr: Rational = x.parse().unwrap();
        let partial = hurwitz_partial(HurwitzKind::BOdd, 0, xr.to_f64(), m_terms)
            .map_err(|e| e.to_string())?;
        let d = (partial - bernoulli_poly(1).eval(&xr).to_f64()).abs();
        if d > 1e-4 {
            return err(format!("B_1 sine series at {x}: defect {d:.3e}"));
        }
        worst = worst.max(d);
    }
    Ok(format!(
        "max defect {worst:.3e} <= 1e-4; {exact_zeros} exact zero cases"
    ))
}

fn identity_suite() -> Outcome {
    let opts = verify::Options {
        tol: None,
        seed: 42,
    };
    let report = verify::run(Suite::Identities, opts);
    if !report.passed() {
        let names: Vec<String> = report.failures().map(|c| c.to_string()).collect();
        return err(names.join("; "));
    }
    let all = Command::new(env!("CARGO_BIN_EXE_telesum"))
        .args(["verify", "all", "--seed", "42"])
        .output()
        .map_err(|e| e.to_string())?;
    if all.status.code() != Some(0) {
        return err(format!(
            "`verify all` exited with {:?}:\n{}",
            all.status.code(),
            String::from_utf8_lossy(&all.stdout)
        ));
    }
    Ok(format!(
        "{} identity checks pass; `verify all` exits 0",
        report.checks.len()
    ))
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        title: "exact zeta(2k), beta(2k+1) inside certified series bounds",
        budget: Some(Duration::from_secs(10)),
        run: exact_closed_forms,
    },
    Criterion {
        id: 2,
        title: "trig integral ladders equal the tables exactly",
        budget: Some(Duration::from_secs(10)),
        run: trig_ladders_match_tables,
    },
    Criterion {
        id: 3,
        title: "Z(k;mu) routes, series and table agree",
        budget: Some(Duration::from_secs(30)),
        run: z_agreement,
    },
    Criterion {
        id: 4,
        title: "Ztilde(k;mu) routes, series and table agree",
        budget: None,
        run: z_tilde_agreement,
    },
    Criterion {
        id: 5,
        title: "Apostol-Euler exponential integral matches its closed form",
        budget: None,
        run: apostol_integral,
    },
    Criterion {
        id: 6,
        title: "theta sums, duplication residuals and theta -> 0 limit",
        budget: None,
        run: theta_sums,
    },
    Criterion {
        id: 7,
        title: "zeta(2k+1), beta(2k+2) quadrature matches series",
        budget: None,
        run: non_elementary_integrals,
    },
    Criterion {
        id: 8,
        title: "Hurwitz expansions with 10^5 harmonics",
        budget: None,
        run: hurwitz_expansions,
    },
    Criterion {
        id: 9,
        title: "identity suite and full verification",
        budget: None,
        run: identity_suite,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(b)) = (&outcome, c.budget) {
            if elapsed > b {
                outcome = Err(format!("took {elapsed:?}, budget {b:?}"));
            }
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {}: {tag}  {}  [{:.2}s]  {detail}",
            c.id,
            c.title,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

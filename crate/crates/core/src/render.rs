//! Output records and table rendering for the command-line front end.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exact::{PiScalar, Poly, Rational};

pub const DEFAULT_DIGITS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Self::Plain),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "latex" => Ok(Self::Latex),
            _ => domain(format!("unknown format {s:?}")),
        }
    }
}

/// Exact value `num/den · π^pi_power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub num: String,
    pub den: String,
    pub pi_power: i32,
}

impl From<&PiScalar> for ExactValue {
    fn from(p: &PiScalar) -> Self {
        Self {
            num: p.coeff().numer().to_string(),
            den: p.coeff().denom().to_string(),
            pi_power: p.pi_power(),
        }
    }
}

impl From<&Rational> for ExactValue {
    fn from(r: &Rational) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            pi_power: 0,
        }
    }
}

impl TryFrom<&ExactValue> for PiScalar {
    type Error = Error;
    fn try_from(e: &ExactValue) -> Result<Self> {
        let c: Rational = format!("{}/{}", e.num, e.den).parse()?;
        Ok(PiScalar::new(c, e.pi_power))
    }
}

/// One result of a command. Field order and the sorted parameter map make
/// the JSON form canonical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValue>,
    pub approx: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<String>,
    pub method: String,
}

impl OutputRecord {
    pub fn new(
        kind: impl Into<String>,
        method: impl Into<String>,
        approx: f64,
        digits: usize,
    ) -> Self {
        Self {
            kind: kind.into(),
            params: BTreeMap::new(),
            exact: None,
            approx: decimal(approx, digits),
            error_bound: None,
            method: method.into(),
        }
    }

    pub fn exact(kind: impl Into<String>, value: &PiScalar, digits: usize) -> Self {
        let mut r = Self::new(kind, "exact", value.to_f64(), digits);
        r.exact = Some(value.into());
        r
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_bound(mut self, bound: f64, digits: usize) -> Self {
        self.error_bound = Some(decimal(bound, digits));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Domain(format!("bad record: {e}")))
    }

    fn exact_text(&self) -> Option<PiScalar> {
        self.exact.as_ref().and_then(|e| PiScalar::try_from(e).ok())
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        match self.exact_text() {
            Some(p) => write!(out, "{p} ≈ {}", self.approx),
            None => write!(out, "{}", self.approx),
        }
        .expect("string write");
        if let Some(b) = &self.error_bound {
            write!(out, " ± {b}").expect("string write");
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let value = match self.exact_text() {
            Some(p) => format!("{} \\approx {}", p.to_latex(), self.approx),
            None => self.approx.clone(),
        };
        match &self.error_bound {
            Some(b) => format!("{value} \\pm {b}"),
            None => value,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.to_plain(),
            Format::Json => self.to_json(),
            Format::Latex => self.to_latex(),
            Format::Csv => {
                let exact = self.exact_text().map(|p| p.to_string()).unwrap_or_default();
                let bound = self.error_bound.clone().unwrap_or_default();
                format!("{},{},{},{}", self.kind, exact, self.approx, bound)
            }
        }
    }
}

/// Result of a direct summation, as printed by `series`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub value: f64,
    pub error_bound: f64,
    pub terms_used: u64,
}

impl SeriesRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Domain(format!("bad record: {e}")))
    }
}

/// `x` rounded to `digits` significant digits, then printed as the shortest
/// decimal that reads back to the rounded value.
pub fn decimal(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let d = digits.clamp(1, 17);
    let rounded: f64 = format!("{:.*e}", d - 1, x).parse().unwrap_or(x);
    format!("{rounded:?}")
}

/// Row of a closed-form table.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueRow {
    pub k: u32,
    pub exact: PiScalar,
    pub approx: f64,
}

/// Row of a polynomial table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyRow {
    pub k: usize,
    pub coeffs: Poly,
}

pub fn render_value_table(name: &str, rows: &[ValueRow], format: Format, digits: usize) -> String {
    match format {
        Format::Plain => rows
            .iter()
            .map(|r| format!("{}\t{}\t{}", r.k, r.exact, decimal(r.approx, digits)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut out = String::from("k,exact,approx");
            for r in rows {
                write!(out, "\n{},{},{}", r.k, r.exact, decimal(r.approx, digits)).expect("write");
            }
            out
        }
        Format::Json => {
            let recs: Vec<OutputRecord> = rows
                .iter()
                .map(|r| OutputRecord::exact(name, &r.exact, digits).param("k", r.k))
                .collect();
            serde_json::to_string(&recs).expect("records serialize")
        }
        Format::Latex => {
            let mut out =
                String::from("\\begin{tabular}{rll}\n$k$ & exact & decimal \\\\\n\\hline\n");
            for r in rows {
                writeln!(
                    out,
                    "{} & ${}$ & {} \\\\",
                    r.k,
                    r.exact.to_latex(),
                    decimal(r.approx, digits)
                )
                .expect("write");
            }
            out.push_str("\\end{tabular}");
            out
        }
    }
}

fn poly_latex(p: &Poly) -> String {
    let mut parts = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let coeff = PiScalar::rational(c.clone()).to_latex();
        let term = match i {
            0 => coeff,
            _ => {
                let x = if i == 1 {
                    "x".to_string()
                } else {
                    format!("x^{{{i}}}")
                };
                match coeff.as_str() {
                    "1" => x,
                    "-1" => format!("-{x}"),
                    _ => format!("{coeff}{x}"),
                }
            }
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".into();
    }
    parts.join(" + ").replace("+ -", "- ")
}

pub fn render_poly_table(rows: &[PolyRow], format: Format) -> String {
    match format {
        Format::Plain => rows
            .iter()
            .map(|r| format!("{}\t{}", r.k, r.coeffs))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut out = String::from("k,coefficients");
            for r in rows {
                let cs: Vec<String> = r.coeffs.coeffs().iter().map(|c| c.to_string()).collect();
                write!(out, "\n{},{}", r.k, cs.join(";")).expect("write");
            }
            out
        }
        Format::Json => serde_json::to_string(rows).expect("rows serialize"),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{rl}\n$k$ & polynomial \\\\\n\\hline\n");
            for r in rows {
                writeln!(out, "{} & ${}$ \\\\", r.k, poly_latex(&r.coeffs)).expect("write");
            }
            out.push_str("\\end{tabular}");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_is_shortest_after_rounding() {
        assert_eq!(decimal(0.1 + 0.2, 15), "0.3");
        assert_eq!(decimal(std::f64::consts::PI, 15), "3.14159265358979");
        assert_eq!(decimal(1.0, 15), "1.0");
        assert_eq!(decimal(1e-20, 3), "1e-20");
    }

    #[test]
    fn record_round_trip() {
        let p = PiScalar::new("1/6".parse().unwrap(), 2);
        let r = OutputRecord::exact("zeta", &p, 15).param("k", 1);
        let s = r.to_json();
        assert_eq!(OutputRecord::from_json(&s).unwrap().to_json(), s);
        assert!(s.starts_with("{\"kind\":\"zeta\",\"params\":{\"k\":\"1\"},\"exact\":"));
        let r = OutputRecord::new("Z", "taylor_route", 0.25, 15).with_bound(1e-12, 3);
        let s = r.to_json();
        assert!(!s.contains("exact"));
        assert_eq!(OutputRecord::from_json(&s).unwrap().to_json(), s);
    }

    #[test]
    fn plain_table_rows() {
        let rows = vec![ValueRow {
            k: 0,
            exact: PiScalar::new("1/4".parse().unwrap(), 1),
            approx: std::f64::consts::FRAC_PI_4,
        }];
        let t = render_value_table("beta", &rows, Format::Plain, 15);
        assert!(t.contains("1/4 * pi^1"));
    }

    #[test]
    fn poly_latex_form() {
        let p: Poly = Poly::new(vec![
            "1/6".parse().unwrap(),
            "-1".parse().unwrap(),
            "1".parse().unwrap(),
        ]);
        assert_eq!(poly_latex(&p), "x^{2} - x + \\frac{1}{6}");
    }
}

//! Explicit trigonometric expressions for the first bilateral sums, kept as
//! data so their structure (denominator constants, powers) can be inspected.
//!
//! `Z(k;μ)` rows read `Σ cⱼ·trig(hⱼ·μ/2) / (D·cos^{k+1}(μ/2))`, and
//! `Z̃(k;μ)` rows read `Σ cⱼ·cos(hⱼ·μ/2) / (D·sin^{k+1}(μ/2))`.

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Sin,
    Cos,
}

/// `coeff · trig(half_multiple · μ/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrigTerm {
    pub coeff: i64,
    pub trig: Trig,
    pub half_multiple: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub k: usize,
    pub numerator: &'static [TrigTerm],
    pub denominator: u64,
    /// Power of `cos(μ/2)` (for Z) or `sin(μ/2)` (for Z̃) in the denominator.
    pub power: i32,
}

const fn t(coeff: i64, trig: Trig, half_multiple: u32) -> TrigTerm {
    TrigTerm {
        coeff,
        trig,
        half_multiple,
    }
}

use Trig::{Cos, Sin};

pub const Z_ROWS: [TableRow; 7] = [
    TableRow {
        k: 0,
        numerator: &[t(1, Cos, 0)],
        denominator: 2,
        power: 1,
    },
    TableRow {
        k: 1,
        numerator: &[t(1, Sin, 1)],
        denominator: 4,
        power: 2,
    },
    TableRow {
        k: 2,
        numerator: &[t(3, Cos, 0), t(-1, Cos, 2)],
        denominator: 32,
        power: 3,
    },
    TableRow {
        k: 3,
        numerator: &[t(23, Sin, 1), t(-1, Sin, 3)],
        denominator: 384,
        power: 4,
    },
    TableRow {
        k: 4,
        numerator: &[t(115, Cos, 0), t(-76, Cos, 2), t(1, Cos, 4)],
        denominator: 6144,
        power: 5,
    },
    TableRow {
        k: 5,
        numerator: &[t(1682, Sin, 1), t(-237, Sin, 3), t(1, Sin, 5)],
        denominator: 122880,
        power: 6,
    },
    TableRow {
        k: 6,
        numerator: &[
            t(11774, Cos, 0),
            t(-10543, Cos, 2),
            t(722, Cos, 4),
            t(-1, Cos, 6),
        ],
        denominator: 2949120,
        power: 7,
    },
];

pub const Z_TILDE_ROWS: [TableRow; 7] = [
    TableRow {
        k: 1,
        numerator: &[t(1, Cos, 0)],
        denominator: 4,
        power: 2,
    },
    TableRow {
        k: 2,
        numerator: &[t(-1, Cos, 1)],
        denominator: 8,
        power: 3,
    },
    TableRow {
        k: 3,
        numerator: &[t(2, Cos, 0), t(1, Cos, 2)],
        denominator: 48,
        power: 4,
    },
    TableRow {
        k: 4,
        numerator: &[t(-11, Cos, 1), t(-1, Cos, 3)],
        denominator: 384,
        power: 5,
    },
    TableRow {
        k: 5,
        numerator: &[t(33, Cos, 0), t(26, Cos, 2), t(1, Cos, 4)],
        denominator: 3840,
        power: 6,
    },
    TableRow {
        k: 6,
        numerator: &[t(-302, Cos, 1), t(-57, Cos, 3), t(-1, Cos, 5)],
        denominator: 46080,
        power: 7,
    },
    TableRow {
        k: 7,
        numerator: &[
            t(1208, Cos, 0),
            t(1191, Cos, 2),
            t(120, Cos, 4),
            t(1, Cos, 6),
        ],
        denominator: 645120,
        power: 8,
    },
];

impl TableRow {
    fn numerator_at(&self, mu: f64) -> f64 {
        self.numerator
            .iter()
            .map(|term| {
                let arg = term.half_multiple as f64 * mu / 2.0;
                let v = match term.trig {
                    Sin => arg.sin(),
                    Cos => arg.cos(),
                };
                term.coeff as f64 * v
            })
            .sum()
    }
}

/// `Z(k;μ)` from its explicit expression, `k ≤ 6`. Valid for every μ that is
/// not an odd multiple of π.
pub fn z_table(k: usize, mu: f64) -> Result<f64> {
    let Some(row) = Z_ROWS.get(k) else {
        return domain(format!("Z table covers k = 0..=6, got k = {k}"));
    };
    let c = (mu / 2.0).cos();
    if c == 0.0 {
        return domain(format!("Z(k;μ) is singular at μ = {mu}"));
    }
    Ok(row.numerator_at(mu) / (row.denominator as f64 * c.powi(row.power)))
}

/// `Z̃(k;μ)` from its explicit expression, `1 ≤ k ≤ 7`, μ ∉ 2πℤ.
pub fn z_tilde_table(k: usize, mu: f64) -> Result<f64> {
    let Some(row) = k.checked_sub(1).and_then(|i| Z_TILDE_ROWS.get(i)) else {
        return domain(format!("Z̃ table covers k = 1..=7, got k = {k}"));
    };
    let s = (mu / 2.0).sin();
    if s == 0.0 {
        return domain(format!("Z̃(k;μ) is singular at μ = {mu}"));
    }
    Ok(row.numerator_at(mu) / (row.denominator as f64 * s.powi(row.power)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn fact(k: u64) -> u64 {
        (1..=k).product()
    }

    #[test]
    fn denominators_follow_the_pattern() {
        for row in Z_ROWS.iter().skip(1) {
            assert_eq!(row.denominator, 4u64.pow(row.k as u32) * fact(row.k as u64));
        }
        for row in Z_TILDE_ROWS.iter().skip(1) {
            assert_eq!(row.denominator, 2u64.pow(row.k as u32) * fact(row.k as u64));
        }
        // The first rows are the stated exceptions.
        assert_eq!(Z_ROWS[0].denominator, 2);
        assert_eq!(Z_TILDE_ROWS[0].denominator, 4);
    }

    #[test]
    fn powers_are_k_plus_one() {
        for row in Z_ROWS.iter().chain(Z_TILDE_ROWS.iter()) {
            assert_eq!(row.power as usize, row.k + 1);
        }
    }

    #[test]
    fn examples() {
        assert!((z_table(2, 0.0).unwrap() - 1.0 / 16.0).abs() < 1e-17);
        assert!((z_tilde_table(1, PI).unwrap() - 0.25).abs() < 1e-16);
        assert!((z_tilde_table(3, PI).unwrap() - 1.0 / 48.0).abs() < 1e-16);
        assert!((z_table(1, PI / 2.0).unwrap() - 2f64.sqrt() / 4.0).abs() < 4e-16);
    }

    #[test]
    fn out_of_range() {
        assert!(z_table(7, 0.0).is_err());
        assert!(z_tilde_table(0, 1.0).is_err());
        assert!(z_tilde_table(8, 1.0).is_err());
        assert!(z_tilde_table(2, 0.0).is_err());
    }
}

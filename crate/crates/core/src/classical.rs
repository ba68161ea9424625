//! Bernoulli and Euler polynomials and numbers, computed exactly from the
//! coefficient recurrences of their generating functions.
//!
//! * Bernoulli: `x^n = 1/(n+1) Σ_{j=0}^{n} C(n+1, j) B_j(x)`, solved for `B_n`.
//! * Euler: multiplying `2e^{xz}/(e^z+1)` by `(e^z+1)/2` gives
//!   `E_n(x) = x^n − ½ Σ_{j<n} C(n, j) E_j(x)`.
//!
//! Both families are memoized in process-wide caches.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;

use crate::error::{domain, Result};
use crate::exact::{binomial, Poly, Rational};

/// Default number of polynomials retained per family.
pub const DEFAULT_CACHE_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bernoulli,
    Euler,
}

impl Family {
    /// Next polynomial given the full prefix `0..n`.
    fn next(self, prefix: &[Poly]) -> Poly {
        let n = prefix.len();
        let mut acc = Poly::zero();
        match self {
            Family::Bernoulli => {
                for (j, p) in prefix.iter().enumerate() {
                    acc = &acc + &p.scale(&Rational::from(binomial(n as u64 + 1, j as u64)));
                }
                let scale = Rational::new(-1, n as i64 + 1).expect("nonzero");
                &Poly::monomial(n) + &acc.scale(&scale)
            }
            Family::Euler => {
                for (j, p) in prefix.iter().enumerate() {
                    acc = &acc + &p.scale(&Rational::from(binomial(n as u64, j as u64)));
                }
                let half = Rational::new(-1, 2).expect("nonzero");
                &Poly::monomial(n) + &acc.scale(&half)
            }
        }
    }
}

/// Memoized polynomial family.
///
/// Readers always see a fully built prefix: the cache only grows under the
/// write lock, one complete polynomial at a time. Indices at or beyond
/// `depth` are computed on demand without being retained.
#[derive(Debug)]
pub struct PolyCache {
    family: Family,
    depth: usize,
    polys: RwLock<Vec<Poly>>,
}

impl PolyCache {
    pub fn new(family: Family) -> Self {
        Self::with_depth(family, DEFAULT_CACHE_DEPTH)
    }

    pub fn with_depth(family: Family, depth: usize) -> Self {
        Self {
            family,
            depth,
            polys: RwLock::new(Vec::new()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Number of polynomials currently cached.
    pub fn cached(&self) -> usize {
        self.polys.read().map(|v| v.len()).unwrap_or(0)
    }

    pub fn get(&self, k: usize) -> Poly {
        if let Some(p) = self.polys.read().ok().and_then(|v| v.get(k).cloned()) {
            return p;
        }
        let keep = (k + 1).min(self.depth);
        {
            let mut v = self.polys.write().unwrap_or_else(|e| e.into_inner());
            while v.len() < keep {
                let next = self.family.next(&v);
                v.push(next);
            }
            if k < v.len() {
                return v[k].clone();
            }
        }
        // Past the retention depth: extend a private copy.
        let mut local = self.polys.read().map(|v| v.clone()).unwrap_or_default();
        while local.len() <= k {
            let next = self.family.next(&local);
            local.push(next);
        }
        local.swap_remove(k)
    }

    /// Polynomials `0..=k`.
    pub fn prefix(&self, k: usize) -> Vec<Poly> {
        let _ = self.get(k);
        let v = self.polys.read().map(|v| v.clone()).unwrap_or_default();
        if v.len() > k {
            return v[..=k].to_vec();
        }
        (0..=k).map(|i| self.get(i)).collect()
    }
}

static BERNOULLI: LazyLock<PolyCache> = LazyLock::new(|| PolyCache::new(Family::Bernoulli));
static EULER: LazyLock<PolyCache> = LazyLock::new(|| PolyCache::new(Family::Euler));

/// `B_k(x)`, monic of degree `k`.
pub fn bernoulli_poly(k: usize) -> Poly {
    BERNOULLI.get(k)
}

/// `E_k(x)`, monic of degree `k`.
pub fn euler_poly(k: usize) -> Poly {
    EULER.get(k)
}

/// Bernoulli number `B_k = B_k(0)`.
pub fn bernoulli_number(k: usize) -> Rational {
    bernoulli_poly(k).coeff(0)
}

/// Euler number `E_n = 2^n E_n(1/2)` for even `n`; always an integer.
pub fn euler_number(n: usize) -> Result<Rational> {
    if n % 2 == 1 {
        return domain(format!(
            "euler_number takes an even index (E_n = 2^n E_n(1/2)), got {n}"
        ));
    }
    let half = Rational::new(1, 2).expect("nonzero");
    let scale = Rational::from_integer(BigInt::from(2).pow(n as u32));
    Ok(euler_poly(n).eval(&half) * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(cs: &[&str]) -> Poly {
        Poly::new(cs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn first_bernoulli_polys() {
        assert_eq!(bernoulli_poly(0), p(&["1"]));
        assert_eq!(bernoulli_poly(1), p(&["-1/2", "1"]));
        assert_eq!(bernoulli_poly(2), p(&["1/6", "-1", "1"]));
    }

    #[test]
    fn first_euler_polys() {
        assert_eq!(euler_poly(0), p(&["1"]));
        assert_eq!(euler_poly(1), p(&["-1/2", "1"]));
        assert_eq!(euler_poly(2), p(&["0", "-1", "1"]));
        // E_3 = x³ − 3x²/2 + 1/4
        assert_eq!(euler_poly(3), p(&["1/4", "0", "-3/2", "1"]));
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_number(1), q("-1/2"));
        assert_eq!(bernoulli_number(3), q("0"));
        assert_eq!(bernoulli_number(4), q("-1/30"));
        assert_eq!(bernoulli_number(6), q("1/42"));
        assert_eq!(bernoulli_number(12), q("-691/2730"));
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0).unwrap(), q("1"));
        assert_eq!(euler_number(2).unwrap(), q("-1"));
        assert_eq!(euler_number(4).unwrap(), q("5"));
        assert_eq!(euler_number(6).unwrap(), q("-61"));
        assert_eq!(euler_number(10).unwrap(), q("-50521"));
        assert!(euler_number(3).is_err());
    }

    #[test]
    fn euler_numbers_are_integers() {
        for n in (0..=20).step_by(2) {
            assert!(euler_number(n).unwrap().is_integer(), "E_{n}");
        }
    }

    #[test]
    fn cache_beyond_depth_matches() {
        let small = PolyCache::with_depth(Family::Bernoulli, 3);
        assert_eq!(small.get(8), bernoulli_poly(8));
        assert_eq!(small.cached(), 3);
        let pre = small.prefix(5);
        assert_eq!(pre.len(), 6);
        assert_eq!(pre[5], bernoulli_poly(5));
    }

    #[test]
    fn cache_is_consistent_under_concurrency() {
        let cache = PolyCache::new(Family::Euler);
        std::thread::scope(|s| {
            for t in 0..8 {
                let cache = &cache;
                s.spawn(move || {
                    for k in (0..24).rev() {
                        let got = cache.get((k + t) % 24);
                        assert_eq!(got.degree(), Some((k + t) % 24));
                        assert!(got.is_monic());
                    }
                });
            }
        });
        assert_eq!(cache.get(23), euler_poly(23));
    }
}

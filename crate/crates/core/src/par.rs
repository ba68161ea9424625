//! Deterministic data-parallel primitives.
//!
//! With the `parallel` feature the loops run on rayon; without it they run
//! sequentially. Both paths split work into the same fixed chunks and
//! combine partial results in index order, so outputs are bit-identical
//! regardless of the feature or the thread count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Terms per chunk of a parallel sum.
pub const CHUNK: u64 = 4096;

/// Neumaier-compensated accumulator that also tracks Σ|term|.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }

    /// Adds `x` but records `mag` as its magnitude, for terms that are
    /// themselves differences of larger quantities.
    #[inline]
    pub fn add_with_mag(&mut self, x: f64, mag: f64) {
        self.add(x);
        self.abs += mag - x.abs();
    }

    pub fn merge(&mut self, other: &Self) {
        let abs = self.abs + other.abs;
        self.add(other.sum);
        self.add(other.comp);
        self.abs = abs;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Σ|term| over everything added.
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

fn chunk_sum<F: Fn(u64) -> (f64, f64)>(r: Range<u64>, f: &F) -> CompensatedSum {
    let mut acc = CompensatedSum::new();
    for i in r {
        let (x, mag) = f(i);
        acc.add_with_mag(x, mag);
    }
    acc
}

/// Σ_{i ∈ range} f(i), compensated and deterministic.
pub fn sum_range<F>(range: Range<u64>, f: F) -> CompensatedSum
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    sum_range_mag(range, |i| {
        let x = f(i);
        (x, x.abs())
    })
}

/// Like [`sum_range`], with `f` returning `(term, magnitude)`.
pub fn sum_range_mag<F>(range: Range<u64>, f: F) -> CompensatedSum
where
    F: Fn(u64) -> (f64, f64) + Sync + Send,
{
    let Range { start, end } = range;
    if end <= start {
        return CompensatedSum::new();
    }
    let n_chunks = (end - start).div_ceil(CHUNK);
    let bounds = move |c: u64| start + c * CHUNK..(start + (c + 1) * CHUNK).min(end);

    #[cfg(feature = "parallel")]
    let partials: Vec<CompensatedSum> = (0..n_chunks)
        .into_par_iter()
        .map(|c| chunk_sum(bounds(c), &f))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<CompensatedSum> = (0..n_chunks).map(|c| chunk_sum(bounds(c), &f)).collect();

    let mut total = CompensatedSum::new();
    for p in &partials {
        total.merge(p);
    }
    total
}

/// Order-preserving map over a slice.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Run two closures, potentially in parallel, returning both results.
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    #[cfg(feature = "parallel")]
    {
        rayon::join(a, b)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (a(), b())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_lost_bits() {
        let mut s = CompensatedSum::new();
        s.add(1.0);
        for _ in 0..1000 {
            s.add(1e-16);
        }
        assert!((s.value() - (1.0 + 1e-13)).abs() < 1e-28 + f64::EPSILON);
    }

    #[test]
    fn sum_range_is_chunk_independent_of_threads() {
        let f = |i: u64| 1.0 / ((i + 1) as f64).powi(2);
        let a = sum_range(0..100_000, f);
        let b = sum_range(0..100_000, f);
        assert_eq!(a.value().to_bits(), b.value().to_bits());
        let seq = chunk_sum(0..100_000, &|i| (f(i), f(i).abs())).value();
        assert!((a.value() - seq).abs() < 1e-15);
    }

    #[test]
    fn empty_range_is_zero() {
        assert_eq!(sum_range(5..5, |_| 1.0).value(), 0.0);
    }
}

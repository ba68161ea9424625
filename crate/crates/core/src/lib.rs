//! Exact and numerical evaluation of trigonometric series whose values are
//! π-multiples of Bernoulli, Euler and Apostol-Euler data, together with
//! independent direct-summation and quadrature checks.

pub mod apostol;
pub mod classical;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod float;
pub mod oracles;
pub mod par;
pub mod quadrature;
pub mod render;
pub mod series;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{PiScalar, PiSum, Poly, Rational};

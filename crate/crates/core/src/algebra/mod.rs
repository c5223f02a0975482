//! Exact scalars, polynomials, truncated power series and Chow classes of
//! projective space. Every other module is built on these.

mod binom;
mod chow;
mod interpolate;
mod poly;
mod rational;
mod series;

pub use binom::{binom, binom_i, catalan, factorial};
pub use chow::ChowClass;
pub use interpolate::lagrange_interpolate;
pub use poly::{involution, Poly};
pub use rational::{int, parse_rational, rat, rational_to_string, to_integer, Integer, Rational};
pub use series::{Series, Series2};

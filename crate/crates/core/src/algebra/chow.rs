//! Classes in the Chow group of projective space, written as truncated
//! polynomials in the hyperplane class `h`.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::poly::Poly;
use super::rational::{rational_to_string, Rational};
use crate::error::{Error, Result};

/// `sum a_j h^j` in `A_* P^n`; the coefficient of `[P^i]` is `a_{n-i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<Rational>,
}

impl ChowClass {
    /// Coefficients beyond `h^n` are dropped, missing ones are zero.
    pub fn new(n: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(n + 1, Rational::zero());
        ChowClass { n, coeffs }
    }

    pub fn from_ints(n: usize, coeffs: &[i64]) -> Self {
        Self::new(n, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_poly(n: usize, p: &Poly) -> Self {
        Self::new(n, p.coeffs().iter().take(n + 1).cloned().collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(n, vec![])
    }

    pub fn one(n: usize) -> Self {
        Self::new(n, vec![Rational::one()])
    }

    /// `h^k`, zero when `k > n`.
    pub fn h_pow(n: usize, k: usize) -> Self {
        let mut c = Self::zero(n);
        if k <= n {
            c.coeffs[k] = Rational::one();
        }
        c
    }

    /// `(1 + h)^e` truncated.
    pub fn one_plus_h_pow(n: usize, e: usize) -> Self {
        Self::from_poly(n, &Poly::from_ints([1, 1]).pow(e))
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `h^j`.
    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    /// Coefficient of `[P^i]`.
    pub fn dim_coeff(&self, i: usize) -> &Rational {
        &self.coeffs[self.n - i]
    }

    /// Coefficients indexed by dimension, `[P^0]` first.
    pub fn dim_coeffs(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// The degree, i.e. the coefficient of the point class.
    pub fn degree(&self) -> &Rational {
        &self.coeffs[self.n]
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    fn check(&self, other: &ChowClass) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        Ok(Self::new(self.n, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        Ok(Self::new(self.n, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Rational) -> ChowClass {
        Self::new(self.n, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> ChowClass {
        Self::new(self.n, self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check(other)?;
        let mut out = vec![Rational::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(self.n, out))
    }

    /// Multiplication by `h / (1 + h)`: the class of a general hyperplane
    /// section, kept in the same ambient space.
    pub fn section(&self) -> ChowClass {
        let mut out = vec![Rational::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for j in (i + 1)..=self.n {
                let term = if (j - i - 1) % 2 == 0 { a.clone() } else { -a };
                out[j] += term;
            }
        }
        Self::new(self.n, out)
    }

    /// Image under the pushforward along a hyperplane `P^n -> P^{n+1}`.
    pub fn pushforward(&self) -> ChowClass {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.n + 1, coeffs)
    }

    /// `integral of self / (1 + h)`: the alternating sum of coefficients
    /// ending at the degree.
    pub fn alternating_degree(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| if (self.n - j) % 2 == 0 { a.clone() } else { -a })
            .sum()
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().display_in("h");
        f.write_str(&s)
    }
}

impl Serialize for ChowClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&rational_to_string(c))?;
        }
        seq.end()
    }
}

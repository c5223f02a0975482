use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::rational::{rational_to_string, Integer, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, `coeffs[i]` multiplying `t^i`.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers<I: IntoIterator<Item = Integer>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^deg`
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `t + a`
    pub fn linear(a: Rational) -> Self {
        Self::new(vec![a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(x.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `p(a t + b)`
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Poly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &inner) + &Poly::constant(c.clone()))
    }

    /// Coefficient list with the order reversed inside a window of `len` slots,
    /// i.e. `t^(len-1) p(1/t)`.
    pub fn reversed(&self, len: usize) -> Self {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i < len, "reversal window too small");
            out[len - 1 - i] = c.clone();
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves {r}")))
        }
    }

    /// Divide by `t^k`, failing if a low coefficient is nonzero.
    pub fn exact_shift_down(&self, k: usize) -> Result<Poly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) is not divisible by t^{k}")));
        }
        Ok(Poly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<Integer>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Human-readable form in the variable `var`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&rational_to_string(&mag));
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&rational_to_string(c))?;
        }
        seq.end()
    }
}

impl<'a> Add for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// The involution `p(t) -> (t p(-t-1) + p(0)) / (t + 1)` relating the
/// Chern-class polynomial of a locally closed set to the generating
/// polynomial of Euler characteristics of its general linear sections.
///
/// The numerator always vanishes at `t = -1`; a nonzero remainder is a bug
/// and panics.
pub fn involution(p: &Poly) -> Poly {
    let minus_one = -Rational::one();
    let reflected = p.compose_affine(&minus_one, &minus_one);
    let numerator = &(&Poly::monomial(Rational::one(), 1) * &reflected) + &Poly::constant(p.coeff(0));
    let (q, r) = numerator.div_rem(&Poly::linear(Rational::one()));
    assert!(r.is_zero(), "involution: (t+1) does not divide {numerator}");
    q
}

//! Truncated formal power series in one and two variables.
//!
//! A series carries its truncation order explicitly: every coefficient up to
//! and including that order is exact, nothing beyond it is known. Binary
//! operations keep the minimum of the operands' orders.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{rational_to_string, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
    order: usize,
}

impl Series {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs, order }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        Series { coeffs: (0..=order).map(f).collect(), order }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::from_fn(self.order, |i| &self.coeffs[i] * c)
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out, order }
    }

    pub fn inverse(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnit(rational_to_string(a0)));
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(Series { coeffs: out, order: self.order })
    }

    /// Square root with constant term 1 of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstant(rational_to_string(&self.coeffs[0])));
        }
        let half = Rational::new(1.into(), 2.into());
        let mut out: Vec<Rational> = vec![Rational::one()];
        for n in 1..=self.order {
            let cross: Rational = (1..n).map(|k| &out[k] * &out[n - k]).sum();
            out.push((&self.coeffs[n] - cross) * &half);
        }
        Ok(Series { coeffs: out, order: self.order })
    }

    /// `self(inner)` for a one-variable `inner` without constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroSubstitution);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = Series::new(vec![], order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner).add(&Series::new(vec![c.clone()], order));
        }
        Ok(acc)
    }

    /// Exact division by `x^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Series> {
        if k > self.order || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("series not divisible by x^{k}")));
        }
        Ok(Series::new(self.coeffs[k..].to_vec(), self.order - k))
    }

    /// `self(inner)` for a two-variable `inner` without constant term.
    ///
    /// The result is exact on the rectangle of `inner` only when this series
    /// is known to at least the total degree of that rectangle.
    pub fn substitute(&self, inner: &Series2) -> Result<Series2> {
        if !inner.coeff(0, 0).is_zero() {
            return Err(Error::NonzeroSubstitution);
        }
        let (ox, oy) = inner.orders();
        if self.order < ox + oy {
            return Err(Error::OutOfRange(format!(
                "outer series order {} below total degree {}",
                self.order,
                ox + oy
            )));
        }
        let mut acc = Series2::zero(ox, oy);
        for c in self.coeffs[..=ox + oy].iter().rev() {
            acc = acc.mul(inner).add(&Series2::constant(c.clone(), ox, oy));
        }
        Ok(acc)
    }
}

/// Dense two-variable truncated series; `coeff(i, j)` multiplies `x^i y^j`
/// and is known for `i <= order_x`, `j <= order_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    coeffs: Vec<Vec<Rational>>,
    ox: usize,
    oy: usize,
}

impl Series2 {
    pub fn from_fn(ox: usize, oy: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let coeffs = (0..=ox).map(|i| (0..=oy).map(|j| f(i, j)).collect()).collect();
        Series2 { coeffs, ox, oy }
    }

    pub fn zero(ox: usize, oy: usize) -> Self {
        Self::from_fn(ox, oy, |_, _| Rational::zero())
    }

    pub fn constant(c: Rational, ox: usize, oy: usize) -> Self {
        let mut s = Self::zero(ox, oy);
        s.coeffs[0][0] = c;
        s
    }

    pub fn one(ox: usize, oy: usize) -> Self {
        Self::constant(Rational::one(), ox, oy)
    }

    /// `c x^i y^j`, truncated.
    pub fn monomial(c: Rational, i: usize, j: usize, ox: usize, oy: usize) -> Self {
        let mut s = Self::zero(ox, oy);
        if i <= ox && j <= oy {
            s.coeffs[i][j] = c;
        }
        s
    }

    /// A polynomial in `x` alone.
    pub fn from_poly_x(p: &Poly, ox: usize, oy: usize) -> Self {
        Self::from_fn(ox, oy, |i, j| if j == 0 { p.coeff(i) } else { Rational::zero() })
    }

    /// A polynomial in `y` alone.
    pub fn from_poly_y(p: &Poly, ox: usize, oy: usize) -> Self {
        Self::from_fn(ox, oy, |i, j| if i == 0 { p.coeff(j) } else { Rational::zero() })
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.ox, self.oy)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i][j]
    }

    pub fn truncate(&self, ox: usize, oy: usize) -> Self {
        assert!(ox <= self.ox && oy <= self.oy, "cannot extend a truncated series");
        Self::from_fn(ox, oy, |i, j| self.coeffs[i][j].clone())
    }

    pub fn add(&self, rhs: &Series2) -> Series2 {
        let (ox, oy) = (self.ox.min(rhs.ox), self.oy.min(rhs.oy));
        Self::from_fn(ox, oy, |i, j| &self.coeffs[i][j] + &rhs.coeffs[i][j])
    }

    pub fn sub(&self, rhs: &Series2) -> Series2 {
        let (ox, oy) = (self.ox.min(rhs.ox), self.oy.min(rhs.oy));
        Self::from_fn(ox, oy, |i, j| &self.coeffs[i][j] - &rhs.coeffs[i][j])
    }

    pub fn scale(&self, c: &Rational) -> Series2 {
        Self::from_fn(self.ox, self.oy, |i, j| &self.coeffs[i][j] * c)
    }

    pub fn mul(&self, rhs: &Series2) -> Series2 {
        let (ox, oy) = (self.ox.min(rhs.ox), self.oy.min(rhs.oy));
        let mut out = Self::zero(ox, oy);
        for i in 0..=ox {
            for j in 0..=oy {
                let a = &self.coeffs[i][j];
                if a.is_zero() {
                    continue;
                }
                for p in 0..=ox - i {
                    for q in 0..=oy - j {
                        let b = &rhs.coeffs[p][q];
                        if !b.is_zero() {
                            out.coeffs[i + p][j + q] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Series2> {
        let a0 = &self.coeffs[0][0];
        if a0.is_zero() {
            return Err(Error::NonUnit(rational_to_string(a0)));
        }
        let inv0 = a0.recip();
        let mut out = Self::zero(self.ox, self.oy);
        for i in 0..=self.ox {
            for j in 0..=self.oy {
                if i == 0 && j == 0 {
                    out.coeffs[0][0] = inv0.clone();
                    continue;
                }
                let mut s = Rational::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if (p, q) == (0, 0) {
                            continue;
                        }
                        s += &self.coeffs[p][q] * &out.coeffs[i - p][j - q];
                    }
                }
                out.coeffs[i][j] = -s * &inv0;
            }
        }
        Ok(out)
    }

    pub fn sqrt(&self) -> Result<Series2> {
        if !self.coeffs[0][0].is_one() {
            return Err(Error::SqrtConstant(rational_to_string(&self.coeffs[0][0])));
        }
        let half = Rational::new(1.into(), 2.into());
        let mut out = Self::zero(self.ox, self.oy);
        out.coeffs[0][0] = Rational::one();
        for i in 0..=self.ox {
            for j in 0..=self.oy {
                if i == 0 && j == 0 {
                    continue;
                }
                let mut cross = Rational::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if (p, q) == (0, 0) || (p, q) == (i, j) {
                            continue;
                        }
                        cross += &out.coeffs[p][q] * &out.coeffs[i - p][j - q];
                    }
                }
                out.coeffs[i][j] = (&self.coeffs[i][j] - cross) * &half;
            }
        }
        Ok(out)
    }

    /// Exact division by `x^a y^b`; orders drop accordingly.
    pub fn shift_down(&self, a: usize, b: usize) -> Result<Series2> {
        if a > self.ox || b > self.oy {
            return Err(Error::InexactDivision(format!("shift by x^{a} y^{b} exceeds orders")));
        }
        for i in 0..=self.ox {
            for j in 0..=self.oy {
                if (i < a || j < b) && !self.coeffs[i][j].is_zero() {
                    return Err(Error::InexactDivision(format!(
                        "coefficient of x^{i} y^{j} blocks division by x^{a} y^{b}"
                    )));
                }
            }
        }
        Ok(Self::from_fn(self.ox - a, self.oy - b, |i, j| {
            self.coeffs[i + a][j + b].clone()
        }))
    }
}

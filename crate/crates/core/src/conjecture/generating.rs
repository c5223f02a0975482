//! Generating functions of `c_i(r)`, `d_i(r)` and related sequences, each
//! expanded in two independent ways. In every two-variable series the first
//! variable `x` counts `r` and the second counts `i`.

use num_traits::{One, Zero};

use crate::algebra::{binom, catalan, Poly, Rational, Series, Series2};
use crate::error::{Error, Result};

use super::closed_form::alt_form_c;

fn q(v: crate::algebra::Integer) -> Rational {
    Rational::from_integer(v)
}

fn x(ox: usize, oy: usize) -> Series2 {
    Series2::monomial(Rational::one(), 1, 0, ox, oy)
}

fn one_minus_x_inv(ox: usize, oy: usize) -> Series2 {
    Series2::from_fn(ox, oy, |_, j| if j == 0 { Rational::one() } else { Rational::zero() })
}

/// `sum_k C_k x^k y^k (1 + y)^k / (1 - x)^{k+1}`.
pub fn g_by_catalan(ox: usize, oy: usize) -> Series2 {
    let geo = one_minus_x_inv(ox, oy);
    let z = Series2::from_poly_y(&Poly::from_ints([0, 1, 1]), ox, oy).mul(&x(ox, oy)).mul(&geo);
    let mut acc = Series2::zero(ox, oy);
    let mut power = geo;
    for k in 0..=ox.min(oy) {
        acc = acc.add(&power.scale(&q(catalan(k))));
        power = power.mul(&z);
    }
    acc
}

/// `(1 - sqrt(1 - 4xy(1+y)/(1-x))) / (2xy(1+y))`.
pub fn g_by_sqrt(ox: usize, oy: usize) -> Result<Series2> {
    let (ax, ay) = (ox + 1, oy + 1);
    let z = Series2::from_poly_y(&Poly::from_ints([0, 1, 1]), ax, ay)
        .mul(&x(ax, ay))
        .mul(&one_minus_x_inv(ax, ay));
    let root = Series2::one(ax, ay).sub(&z.scale(&Rational::from_integer(4.into()))).sqrt()?;
    let top = Series2::one(ax, ay).sub(&root).shift_down(1, 1)?;
    let one_plus_y = Series2::from_poly_y(&Poly::from_ints([1, 1]), ox, oy);
    Ok(top.mul(&one_plus_y.inverse()?).scale(&Rational::new(1.into(), 2.into())))
}

pub fn generating_g(ox: usize, oy: usize) -> Result<Series2> {
    let a = g_by_catalan(ox, oy);
    let b = g_by_sqrt(ox, oy)?;
    if a != b {
        return Err(Error::CrossCheck("two expansions of g disagree".into()));
    }
    Ok(a)
}

/// Coefficient grid read from the alternating formula for `c_i(r)`.
pub fn f_by_coefficients(ox: usize, oy: usize) -> Series2 {
    Series2::from_fn(ox, oy, |r, i| q(alt_form_c(i, r)))
}

/// `(1 - sqrt(1 + 4xy/(1 - x(1+y)^2))) / (-2xy)`.
pub fn f_by_sqrt(ox: usize, oy: usize) -> Result<Series2> {
    let (ax, ay) = (ox + 1, oy + 1);
    let sq = Series2::from_poly_y(&Poly::from_ints([1, 1]).pow(2), ax, ay).mul(&x(ax, ay));
    let denom = Series2::one(ax, ay).sub(&sq).inverse()?;
    let xy = Series2::monomial(Rational::one(), 1, 1, ax, ay);
    let root = Series2::one(ax, ay).add(&xy.mul(&denom).scale(&Rational::from_integer(4.into()))).sqrt()?;
    let top = Series2::one(ax, ay).sub(&root).shift_down(1, 1)?;
    Ok(top.truncate(ox, oy).scale(&Rational::new((-1).into(), 2.into())))
}

pub fn generating_f(ox: usize, oy: usize) -> Result<Series2> {
    let a = f_by_coefficients(ox, oy);
    let b = f_by_sqrt(ox, oy)?;
    if a != b {
        return Err(Error::CrossCheck("two expansions of f disagree".into()));
    }
    Ok(a)
}

/// `(1 - x(1+y)^2 - sqrt((1 - x(1+y)^2)(1 - x(1-y)^2))) / (-2xy(1 - x(1+y)^2))`,
/// the generating function of `binom(r, floor(i/2)) binom(r, floor((i+1)/2))`.
pub fn h_closed(ox: usize, oy: usize) -> Result<Series2> {
    let (ax, ay) = (ox + 1, oy + 1);
    let plus = Series2::one(ax, ay).sub(&Series2::from_poly_y(&Poly::from_ints([1, 1]).pow(2), ax, ay).mul(&x(ax, ay)));
    let minus = Series2::one(ax, ay).sub(&Series2::from_poly_y(&Poly::from_ints([1, -1]).pow(2), ax, ay).mul(&x(ax, ay)));
    let root = plus.mul(&minus).sqrt()?;
    let top = plus.sub(&root).shift_down(1, 1)?;
    let inv = plus.truncate(ox, oy).inverse()?;
    Ok(top.mul(&inv).scale(&Rational::new((-1).into(), 2.into())))
}

/// Generating function of the Narayana numbers `N_{r,a}`, `r, a >= 1`:
/// `(1 - x(1+z) - sqrt((1 - x(1+z))^2 - 4x^2 z)) / (2x)`.
pub fn narayana_series(ox: usize, oz: usize) -> Result<Series2> {
    let ax = ox + 1;
    let lin = Series2::one(ax, oz).sub(&Series2::from_poly_y(&Poly::from_ints([1, 1]), ax, oz).mul(&x(ax, oz)));
    let x2z = Series2::monomial(Rational::from_integer(4.into()), 2, 1, ax, oz);
    let root = lin.mul(&lin).sub(&x2z).sqrt()?;
    Ok(lin.sub(&root).shift_down(1, 0)?.scale(&Rational::new(1.into(), 2.into())))
}

/// `1 / sqrt(x^2 z^2 - 2(x^2 + x) z + x^2 - 2x + 1)`, generating `binom(r, a)^2`.
pub fn central_square_series(ox: usize, oz: usize) -> Result<Series2> {
    let c = |v: i64, i: usize, j: usize| Series2::monomial(Rational::from_integer(v.into()), i, j, ox, oz);
    let inside = c(1, 2, 2)
        .add(&c(-2, 2, 1))
        .add(&c(-2, 1, 1))
        .add(&c(1, 2, 0))
        .add(&c(-2, 1, 0))
        .add(&Series2::one(ox, oz));
    inside.sqrt()?.inverse()
}

/// `(1 - sqrt(1 - 4u(1 - u + ut))) / (2u(1 - u + ut))`; the first variable is
/// `u`, the second `t`, and `[u^n t^k]` is the Dyck number `T(n, k)`.
pub fn generating_w(ou: usize, ot: usize) -> Result<Series2> {
    let au = ou + 1;
    let inner = Series2::one(au, ot)
        .sub(&Series2::monomial(Rational::one(), 1, 0, au, ot))
        .add(&Series2::monomial(Rational::one(), 1, 1, au, ot));
    let v = Series2::monomial(Rational::one(), 1, 0, au, ot).mul(&inner);
    let root = Series2::one(au, ot).sub(&v.scale(&Rational::from_integer(4.into()))).sqrt()?;
    let top = Series2::one(au, ot).sub(&root).shift_down(1, 0)?;
    Ok(top.mul(&inner.truncate(ou, ot).inverse()?).scale(&Rational::new(1.into(), 2.into())))
}

/// `p_i(x) = sum_r d_i(r) x^r` through `x^order`.
pub fn p_series(i: usize, order: usize) -> Series {
    Series::from_fn(order, |r| q(super::closed_form::closed_form_d(i, r)))
}

/// `q_i(x) = (1 - x)^{i+1} p_i(x) / x^{floor((i+1)/2)}`, a polynomial of
/// degree at most `floor(i/2)`.
pub fn q_poly(i: usize) -> Result<Poly> {
    let order = 2 * i + 2;
    let prod = Series::from_poly(&Poly::from_ints([1, -1]).pow(i + 1), order).mul(&p_series(i, order));
    if prod.coeffs()[i + 1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision(format!("(1-x)^{} p_{i} is not a polynomial of degree <= {i}", i + 1)));
    }
    let q = prod.to_poly().exact_shift_down((i + 1) / 2)?;
    if q.degree().unwrap_or(0) > i / 2 {
        return Err(Error::CrossCheck(format!("q_{i} has degree above {}", i / 2)));
    }
    Ok(q)
}

/// `N_{r,a} = binom(r, a-1) binom(r, a) / r`, zero off `1 <= a <= r`.
pub fn narayana(r: usize, a: usize) -> Rational {
    if r == 0 || a == 0 || a > r {
        return Rational::zero();
    }
    q(binom(r, a - 1) * binom(r, a)) / q(r.into())
}

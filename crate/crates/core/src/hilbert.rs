//! Hilbert series of determinantal varieties cut out by maximal minors and of
//! secant varieties of rational normal curves.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::{binom, binom_i, factorial, rat, to_integer, Integer, Poly, Rational};
use crate::error::{Error, Result};
use crate::json;

/// `numerator / (1 - t)^denominator_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Poly,
    pub denominator_power: usize,
}

impl HilbertSeries {
    pub fn new(numerator: Poly, denominator_power: usize) -> Self {
        HilbertSeries { numerator, denominator_power }
    }

    /// Cancels common factors of `1 - t`.
    pub fn reduced(&self) -> HilbertSeries {
        let one_minus_t = Poly::from_ints([1, -1]);
        let mut num = self.numerator.clone();
        let mut e = self.denominator_power;
        while e > 0 && !num.is_zero() && num.eval_int(1).is_zero() {
            num = num.exact_div(&one_minus_t).expect("t = 1 is a root");
            e -= 1;
        }
        HilbertSeries::new(num, e)
    }

    pub fn is_reduced(&self) -> bool {
        !self.numerator.eval_int(1).is_zero()
    }

    /// `numerator(1)`, the degree when the series is reduced.
    pub fn degree(&self) -> Rational {
        self.numerator.eval_int(1)
    }

    /// Coefficient of `t^m` in the expansion.
    pub fn coefficient(&self, m: usize) -> Rational {
        let e = self.denominator_power as i64;
        self.numerator
            .coeffs()
            .iter()
            .enumerate()
            .take(m + 1)
            .map(|(j, c)| {
                let b = if e == 0 {
                    if m == j { Integer::one() } else { Integer::zero() }
                } else {
                    binom_i((m - j) as i64 + e - 1, e - 1)
                };
                c * Rational::from_integer(b)
            })
            .sum()
    }

    /// Multiplication by `1 - t`, the effect of a general hyperplane section.
    pub fn hyperplane_section(&self) -> Result<HilbertSeries> {
        if self.denominator_power == 0 {
            return Err(Error::OutOfRange("zero-dimensional ring has no hyperplane section".into()));
        }
        Ok(HilbertSeries::new(self.numerator.clone(), self.denominator_power - 1))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "numerator": json::poly(&self.numerator),
            "denominator_power": self.denominator_power,
            "degree": json::rational(&self.degree()),
        })
    }
}

/// Hilbert polynomial in the basis `P_i(t) = binom(t + i, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    /// `coeffs[i]` multiplies `P_i`.
    pub coeffs: Vec<Rational>,
}

impl HilbertPolynomial {
    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a * Rational::from_integer(binom_i(t + i as i64, i as i64)))
            .sum()
    }
}

pub fn hilbert_polynomial(hs: &HilbertSeries) -> Result<HilbertPolynomial> {
    if !hs.is_reduced() || hs.denominator_power == 0 {
        return Err(Error::OutOfRange("Hilbert polynomial needs a reduced series of positive dimension".into()));
    }
    let d = hs.denominator_power - 1;
    let mut derivs = vec![hs.numerator.clone()];
    for _ in 0..d {
        let next = derivs.last().unwrap().derivative();
        derivs.push(next);
    }
    let coeffs = (0..=d)
        .map(|i| {
            let order = d - i;
            let v = derivs[order].eval_int(1) / Rational::from_integer(factorial(order));
            if order % 2 == 0 { v } else { -v }
        })
        .collect();
    Ok(HilbertPolynomial { coeffs })
}

/// Numerator of the Hilbert series of the maximal minors of a generic
/// `(k+1+c) x (k+1)` matrix: `sum_{j<=k} binom(c+j, j) t^j`.
pub fn maximal_minor_numerator(k: usize, c: usize) -> Poly {
    Poly::from_integers((0..=k).map(|j| binom(c + j, j)))
}

/// Denominator exponent matching [`maximal_minor_numerator`].
pub fn maximal_minor_series(k: usize, c: usize) -> HilbertSeries {
    HilbertSeries::new(maximal_minor_numerator(k, c), k * (k + 2 + c))
}

pub fn abhyankar_matrix(m: usize, n_cols: usize, k: usize) -> Vec<Vec<Poly>> {
    let top = m.max(n_cols);
    (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    Poly::from_integers((0..=top).map(|l| {
                        binom_i((m - i) as i64, l as i64)
                            * binom_i(n_cols as i64 - j as i64, l as i64 + i as i64 - j as i64)
                    }))
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination over `Q[t]`.
pub fn poly_determinant(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&a[p][p] * &a[i][j]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate { -&det } else { det }
}

/// Numerator of the Hilbert series of the `(k+1)`-minors of a generic
/// `m x n_cols` matrix, over `(1 - t)^{k(m + n_cols - k)}`.
pub fn abhyankar_numerator(m: usize, n_cols: usize, k: usize) -> Result<Poly> {
    if k == 0 || k > m.min(n_cols) {
        return Err(Error::OutOfRange(format!("need 1 <= k <= min(m, n), got k={k}, m={m}, n={n_cols}")));
    }
    Ok(poly_determinant(abhyankar_matrix(m, n_cols, k)))
}

pub fn eagon_northcott_numerator(s: usize, c: usize) -> Result<Poly> {
    if s == 0 {
        return Err(Error::OutOfRange("s must be at least 1".into()));
    }
    let lead = Rational::from_integer(Integer::from(s) * binom(s + c, c));
    let mut sum = Poly::zero();
    for q in 0..=c {
        let sgn = if q % 2 == 0 { 1 } else { -1 };
        let coeff = Rational::from_integer(binom(c, q)) * rat(sgn, (q + s) as i64);
        sum = &sum + &Poly::monomial(coeff, q + s);
    }
    Ok(&Poly::one() - &sum.scale(&lead))
}

pub fn secant_hilbert_series(n: usize, k: usize) -> Result<HilbertSeries> {
    if k == 0 || 2 * k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n/2, got n={n}, k={k}")));
    }
    let num = Poly::from_integers((0..=k).map(|j| binom(n - 2 * k + j, j)));
    Ok(HilbertSeries::new(num, 2 * k))
}

/// Arithmetic genus of a general `P^4`-section of `Sec_{r-1}` of the rational
/// normal curve in `P^{2r}`, from the Hilbert series.
pub fn section_curve_genus(r: usize) -> Result<Integer> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("genus needs r >= 2, got {r}")));
    }
    let q = secant_hilbert_series(2 * r, r - 1)?.numerator;
    let g = q.derivative().eval_int(1) - q.eval_int(1) + Rational::one();
    Ok(to_integer(&g).expect("integer coefficients"))
}

pub fn section_curve_genus_closed_form(r: usize) -> Integer {
    let r = Integer::from(r);
    let v: Integer = (&r - 1) * (&r - 2) * (3 * &r * &r + 11 * &r + 12);
    let (g, rem) = num_integer::Integer::div_rem(&v, &Integer::from(24));
    assert!(rem.is_zero());
    g
}

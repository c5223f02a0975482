//! Invariants of the secant varieties `Sec_k C` of the rational normal curve
//! `C` in `P^n`.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::{binom, binom_i, catalan, rational_to_string, to_integer, ChowClass, Integer, Poly, Rational};
use crate::charclass::{csm_complement, DegreeVector};
use crate::error::{Error, Result};
use crate::json;

fn check_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || 2 * k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n/2, got n={n}, k={k}")));
    }
    Ok(())
}

/// `(dim, degree)` of `Sec_k C` in `P^n`.
pub fn secant_basics(n: usize, k: usize) -> Result<(usize, Integer)> {
    check_range(n, k)?;
    Ok((2 * k - 1, binom(n - k + 1, k)))
}

/// Hankel matrix with entry `x_{i+j}` at `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HankelShape {
    pub rows: usize,
    pub cols: usize,
}

impl HankelShape {
    pub fn new(rows: usize, cols: usize) -> Self {
        HankelShape { rows, cols }
    }

    /// The shape whose maximal minors cut out `Sec_k C` in `P^n`.
    pub fn for_secant(n: usize, k: usize) -> Self {
        HankelShape::new(k + 1, n - k + 1)
    }

    /// Highest variable index that occurs.
    pub fn last_index(&self) -> usize {
        self.rows + self.cols - 2
    }

    /// The matrix evaluated at the coordinate point `e_i`.
    pub fn at_coordinate_point(&self, i: usize) -> Vec<Vec<Integer>> {
        (0..self.rows)
            .map(|a| (0..self.cols).map(|b| if a + b == i { Integer::one() } else { Integer::zero() }).collect())
            .collect()
    }
}

/// Rank by fraction-free Gaussian elimination.
pub fn integer_rank(mut a: Vec<Vec<Integer>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = Integer::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = Integer::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn hankel_rank_at_coordinate_point(shape: HankelShape, i: usize) -> Result<usize> {
    if i > shape.last_index() {
        return Err(Error::OutOfRange(format!("coordinate {i} beyond x_{}", shape.last_index())));
    }
    Ok(integer_rank(shape.at_coordinate_point(i)))
}

/// Euler characteristic of `Sec_k C` with the torus-fixed coordinate points
/// that realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCertificate {
    pub euler_char: usize,
    pub fixed_points: Vec<usize>,
}

pub fn euler_char_secant(n: usize, k: usize) -> Result<EulerCertificate> {
    check_range(n, k)?;
    let shape = HankelShape::for_secant(n, k);
    let mut fixed_points = Vec::new();
    for i in 0..=n {
        if hankel_rank_at_coordinate_point(shape, i)? <= k {
            fixed_points.push(i);
        }
    }
    let expected: Vec<usize> = (0..k).chain(n - k + 1..=n).collect();
    if fixed_points != expected || fixed_points.len() != 2 * k {
        return Err(Error::CertificateMismatch { n, k });
    }
    Ok(EulerCertificate { euler_char: fixed_points.len(), fixed_points })
}

fn qi(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn mather_expansion(r: usize) -> ChowClass {
    let odd = Poly::from_integers((0..=r + 1).map(|e| if e % 2 == 1 { binom(r + 1, e) } else { Integer::zero() }));
    let p = &Poly::from_ints([1, 1]).pow(r) * &odd;
    ChowClass::from_poly(2 * r, &p)
}

/// Coefficient of `[P^j]` in the Mather class, summed directly.
pub fn mather_coefficient(r: usize, j: usize) -> Integer {
    let (r, j) = (r as i64, j as i64);
    let mut total = Integer::zero();
    if j % 2 == 0 {
        let top = r - (j + 2) / 2;
        for i in 0..=top {
            total += binom_i(r, 2 * i + 1) * binom_i(r + 1, 2 * (r - i) - j - 1);
        }
    } else {
        let top = r - (j + 1) / 2;
        for i in 0..=top {
            total += binom_i(r, 2 * i) * binom_i(r + 1, 2 * (r - i) - j);
        }
    }
    total
}

/// Mather class of the hypersurface `Sec_r C` in `P^{2r}`.
pub fn mather_class_secant(r: usize) -> Result<ChowClass> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be at least 1".into()));
    }
    let c = mather_expansion(r);
    for j in 0..=2 * r {
        let direct = qi(mather_coefficient(r, j));
        if c.dim_coeff(j) != &direct {
            return Err(Error::CrossCheck(format!(
                "Mather coefficient of [P^{j}] for r={r}: {} vs {}",
                rational_to_string(c.dim_coeff(j)),
                rational_to_string(&direct)
            )));
        }
    }
    Ok(c)
}

/// Chern class of the quadratic Veronese image of `P^r`, in `P^{2r}`.
pub fn veronese_dual_mather(r: usize) -> ChowClass {
    let n = 2 * r;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for j in 0..=r {
        coeffs[n - j] = qi(binom(r + 1, r - j) << j);
    }
    ChowClass::new(n, coeffs)
}

/// Mather class of `Sec_r C` recovered from its dual by the involution
/// formula for Mather classes.
pub fn mather_from_dual(r: usize) -> ChowClass {
    let n = 2 * r;
    let q = veronese_dual_mather(r).to_poly();
    let shifted = q.compose_affine(&-Rational::one(), &-Rational::one());
    let q_at = q.eval_int(-1);
    let mut correction = Poly::from_ints([1, 1]).pow(n + 1);
    correction = &correction - &Poly::monomial(Rational::one(), n + 1);
    let mut p = &shifted - &correction.scale(&q_at);
    if r % 2 == 0 {
        p = -&p;
    }
    ChowClass::from_poly(n, &p)
}

pub fn polar_degrees_secant(r: usize) -> Result<Vec<Integer>> {
    let c = mather_class_secant(r)?;
    let cma: Vec<Integer> = c.dim_coeffs().iter().map(|x| to_integer(x).expect("integral")).collect();
    let deltas: Vec<Integer> = (0..2 * r)
        .map(|i| {
            (i..2 * r)
                .map(|j| {
                    let t = binom(j + 1, i + 1) * &cma[j];
                    if j % 2 == 1 { t } else { -t }
                })
                .sum()
        })
        .collect();
    if let Some(d) = deltas.iter().find(|d| d.is_negative()) {
        return Err(Error::CrossCheck(format!("negative polar degree {d} for r={r}")));
    }
    Ok(deltas)
}

pub fn g_ed_degree_closed_form(r: usize) -> Integer {
    (num_traits::pow(Integer::from(3), r + 1) - 1) / 2
}

/// Generic Euclidean distance degree from the Chern class of the dual.
pub fn g_ed_degree_from_dual(r: usize) -> Integer {
    let dual = veronese_dual_mather(r);
    (0..=r)
        .map(|j| {
            let t: Integer = to_integer(dual.dim_coeff(j)).expect("integral") * ((Integer::one() << (j + 1)) - 1);
            if (r + j) % 2 == 0 { t } else { -t }
        })
        .sum()
}

pub fn g_ed_degree_secant(r: usize) -> Result<Integer> {
    let closed = g_ed_degree_closed_form(r);
    let polar: Integer = polar_degrees_secant(r)?.iter().sum();
    let dual = g_ed_degree_from_dual(r);
    if polar != closed || dual != closed {
        return Err(Error::CrossCheck(format!(
            "ED degree for r={r}: closed {closed}, polar sum {polar}, dual sum {dual}"
        )));
    }
    Ok(closed)
}

/// Topological degree of the gradient map of `Sec_r C`.
pub fn grad_degree_secant(r: usize) -> Integer {
    catalan(r)
}

/// Euler characteristic of a general hyperplane section of `Sec_r C`.
pub fn chi_section_secant(r: usize) -> Integer {
    catalan(r) - 1 + 2 * r
}

/// `d_0..d_4` of the gradient map of `Sec_r C`.
pub fn low_projective_degrees(r: usize) -> [Integer; 5] {
    let r = Integer::from(r);
    let exact = |num: Integer, den: u32| {
        let (q, rem) = num_integer::Integer::div_rem(&num, &Integer::from(den));
        assert!(rem.is_zero(), "non-integral projective degree");
        q
    };
    [
        Integer::one(),
        r.clone(),
        &r * &r,
        exact(&r * (&r - 1) * (5 * &r + 2), 6),
        exact(&r * (&r - 1) * (7 * &r * &r - 5 * &r - 6), 12),
    ]
}

pub fn csm_secant(r: usize, d_row: &DegreeVector) -> Result<ChowClass> {
    if d_row.entries().len() != 2 * r + 1 {
        return Err(Error::LengthMismatch { expected: 2 * r + 1, found: d_row.entries().len() });
    }
    let n = 2 * r;
    ChowClass::one_plus_h_pow(n, n + 1).sub(&csm_complement(d_row))
}

/// Extra invariants available when `Sec_r C` is a hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceInvariants {
    pub mather: ChowClass,
    pub polar: Vec<Integer>,
    pub g_ed_degree: Integer,
    pub grad_degree: Integer,
    pub chi_section: Integer,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecantInvariants {
    pub n: usize,
    pub k: usize,
    pub dim: usize,
    pub degree: Integer,
    pub euler: EulerCertificate,
    pub hypersurface: Option<HypersurfaceInvariants>,
}

pub fn secant_invariants(n: usize, k: usize) -> Result<SecantInvariants> {
    let (dim, degree) = secant_basics(n, k)?;
    let euler = euler_char_secant(n, k)?;
    let hypersurface = if n == 2 * k {
        let r = k;
        Some(HypersurfaceInvariants {
            mather: mather_class_secant(r)?,
            polar: polar_degrees_secant(r)?,
            g_ed_degree: g_ed_degree_secant(r)?,
            grad_degree: grad_degree_secant(r),
            chi_section: chi_section_secant(r),
        })
    } else {
        None
    };
    Ok(SecantInvariants { n, k, dim, degree, euler, hypersurface })
}

impl SecantInvariants {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("n".into(), json!(self.n));
        m.insert("k".into(), json!(self.k));
        m.insert("dim".into(), json!(self.dim));
        m.insert("degree".into(), json::integer(&self.degree));
        m.insert("euler_char".into(), json!(self.euler.euler_char));
        m.insert("fixed_points".into(), json!(self.euler.fixed_points));
        if let Some(h) = &self.hypersurface {
            m.insert("mather".into(), json::chow(&h.mather));
            m.insert("polar_degrees".into(), json::integers(&h.polar));
            m.insert("g_ed_degree".into(), json::integer(&h.g_ed_degree));
            m.insert("grad_degree".into(), json::integer(&h.grad_degree));
            m.insert("chi_section".into(), json::integer(&h.chi_section));
        }
        Value::Object(m)
    }
}

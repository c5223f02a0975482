//! Segre, Chern-Schwartz-MacPherson, Fulton and Milnor classes of projective
//! hypersurfaces computed from the projective degrees of their gradient maps.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::{binom, binom_i, involution, rational_to_string, to_integer, ChowClass, Integer, Poly, Rational};
use crate::error::{Error, Result};
use crate::json;

/// Projective degrees `d_0..d_n` of a rational map on `P^n` given by forms of
/// degree `r_gen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVector {
    entries: Vec<Integer>,
    r_gen: Integer,
}

impl DegreeVector {
    pub fn new(r_gen: Integer, entries: Vec<Integer>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::OutOfRange("degree vector needs at least d_0".into()));
        }
        if !r_gen.is_positive() {
            return Err(Error::OutOfRange(format!("generator degree {r_gen} must be positive")));
        }
        if let Some(d) = entries.iter().find(|d| d.is_negative()) {
            return Err(Error::OutOfRange(format!("negative projective degree {d}")));
        }
        Ok(DegreeVector { entries, r_gen })
    }

    pub fn from_ints(r_gen: i64, entries: &[i64]) -> Result<Self> {
        Self::new(r_gen.into(), entries.iter().map(|&d| d.into()).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[Integer] {
        &self.entries
    }

    pub fn r_gen(&self) -> &Integer {
        &self.r_gen
    }

    /// The first `m + 1` degrees, which are those of the restriction to a
    /// general `P^m`.
    pub fn truncate(&self, m: usize) -> Result<DegreeVector> {
        if m > self.n() {
            return Err(Error::OutOfRange(format!("cannot restrict P^{} to P^{m}", self.n())));
        }
        Ok(DegreeVector { entries: self.entries[..=m].to_vec(), r_gen: self.r_gen.clone() })
    }
}

fn q(v: &Integer) -> Rational {
    Rational::from_integer(v.clone())
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn segre_from_degrees(dv: &DegreeVector) -> ChowClass {
    let n = dv.n();
    let r = q(dv.r_gen());
    let coeffs = (0..=n)
        .map(|l| {
            if l == 0 {
                return Rational::zero();
            }
            let s: Rational = (0..=l)
                .map(|i| sign(l - i) * q(&binom(l, i)) * q(&dv.entries[i]) * num_traits::pow(r.clone(), l - i))
                .sum();
            -s
        })
        .collect();
    ChowClass::new(n, coeffs)
}

pub fn degrees_from_segre(n: usize, r_gen: &Integer, s: &ChowClass) -> Result<DegreeVector> {
    if s.ambient_dim() != n {
        return Err(Error::AmbientMismatch(n, s.ambient_dim()));
    }
    if !s.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm(rational_to_string(s.coeff(0))));
    }
    let r = q(r_gen);
    let mut entries = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut d = num_traits::pow(r.clone(), k);
        for j in 1..=k {
            d -= q(&binom(k, j)) * s.coeff(j) * num_traits::pow(r.clone(), k - j);
        }
        let d = to_integer(&d)
            .ok_or_else(|| Error::OutOfRange(format!("non-integral degree {}", rational_to_string(&d))))?;
        entries.push(d);
    }
    DegreeVector::new(r_gen.clone(), entries)
}

/// Class of the complement of the hypersurface.
pub fn csm_complement(dv: &DegreeVector) -> ChowClass {
    let n = dv.n();
    let mut acc = ChowClass::zero(n);
    for (j, d) in dv.entries.iter().enumerate() {
        let mut coeffs = vec![Rational::zero(); j];
        coeffs.extend(Poly::from_ints([1, 1]).pow(n - j).coeffs().iter().cloned());
        let term = ChowClass::new(n, coeffs).scale(&(sign(j) * q(d)));
        acc = acc.add(&term).expect("same ambient");
    }
    acc
}

pub fn csm_hypersurface(dv: &DegreeVector) -> ChowClass {
    let n = dv.n();
    ChowClass::one_plus_h_pow(n, n + 1).sub(&csm_complement(dv)).expect("same ambient")
}

/// Fulton class of any degree `k` hypersurface of `P^n`.
pub fn fulton_hypersurface(n: usize, k: usize) -> ChowClass {
    let k = Rational::from_integer(k.into());
    let normal = (0..=n)
        .map(|j| if j == 0 { Rational::zero() } else { sign(j - 1) * num_traits::pow(k.clone(), j) })
        .collect();
    ChowClass::one_plus_h_pow(n, n + 1).mul(&ChowClass::new(n, normal)).expect("same ambient")
}

pub fn milnor_class(fulton: &ChowClass, csm: &ChowClass, dim_x: usize) -> Result<ChowClass> {
    Ok(fulton.sub(csm)?.scale(&sign(dim_x)))
}

/// The Parusinski number: degree of the Milnor class.
pub fn milnor_number(milnor: &ChowClass) -> Rational {
    milnor.degree().clone()
}

/// `mu(X) + mu(X cap H)` read off as the degree of `M(X) / (1 + h)`.
pub fn mu_plus_section(milnor: &ChowClass) -> Rational {
    milnor.alternating_degree()
}

pub fn grad_degree_isolated(n: usize, k: usize, total_milnor_number: &Integer) -> Integer {
    num_traits::pow(binom_i(k as i64 - 1, 1), n) - total_milnor_number
}

pub fn grad_degree_milnor(n: usize, k: usize, mu: &Integer, mu_section: &Integer) -> Integer {
    num_traits::pow(binom_i(k as i64 - 1, 1), n) - mu - mu_section
}

pub fn grad_degree_chi(n: usize, chi_x: &Integer, chi_section: &Integer) -> Integer {
    let v = Integer::one() - (chi_x - chi_section);
    if n % 2 == 0 {
        v
    } else {
        -v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiGamma {
    /// `gamma_r` is the coefficient of `[P^r]`.
    pub gamma: Poly,
    pub chi: Poly,
    /// `b_1..b_{n-1}`: coefficients of `h^2..h^n` in the hyperplane section class.
    pub section: Vec<Rational>,
}

pub fn chi_gamma_relations(csm: &ChowClass) -> Result<ChiGamma> {
    if !csm.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm(rational_to_string(csm.coeff(0))));
    }
    let n = csm.ambient_dim();
    let gamma = Poly::new(csm.dim_coeffs());
    let chi = involution(&gamma);
    let section = (1..n)
        .map(|k| (1..=k).map(|i| sign(k - i) * csm.coeff(i)).sum())
        .collect();
    Ok(ChiGamma { gamma, chi, section })
}

fn integral(q: &Rational, what: &str) -> Result<Integer> {
    to_integer(q).ok_or_else(|| Error::CrossCheck(format!("{what} = {} is not an integer", rational_to_string(q))))
}

/// Characteristic classes of a degree `k` hypersurface `X` of `P^n` and of a
/// general hyperplane section, all kept in `A_* P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceReport {
    pub n: usize,
    pub k: usize,
    pub csm: ChowClass,
    pub fulton: ChowClass,
    pub milnor: ChowClass,
    pub section_milnor: ChowClass,
    pub mu: Integer,
    pub mu_section: Integer,
    pub grad_degree: Integer,
}

impl HypersurfaceReport {
    /// `dv` are the projective degrees of the gradient map, so the generator
    /// degree must be `k - 1`.
    pub fn from_degrees(dv: &DegreeVector, k: usize) -> Result<Self> {
        let n = dv.n();
        if n < 2 || k < 2 {
            return Err(Error::OutOfRange(format!("need n >= 2 and k >= 2, got n={n}, k={k}")));
        }
        if *dv.r_gen() != Integer::from(k - 1) {
            return Err(Error::OutOfRange(format!(
                "generator degree {} does not match k - 1 = {}",
                dv.r_gen(),
                k - 1
            )));
        }
        let csm = csm_hypersurface(dv);
        let fulton = fulton_hypersurface(n, k);
        let milnor = milnor_class(&fulton, &csm, n - 1)?;

        let section_csm = csm.section();
        let restricted = csm_hypersurface(&dv.truncate(n - 1)?).pushforward();
        if restricted != section_csm {
            return Err(Error::CrossCheck(format!("section class {section_csm} vs restricted degrees {restricted}")));
        }
        let section_milnor = milnor_class(&fulton_hypersurface(n - 1, k).pushforward(), &section_csm, n - 2)?;

        let mu = integral(&milnor_number(&milnor), "mu")?;
        let mu_section = integral(section_milnor.degree(), "section mu")?;
        let total = integral(&mu_plus_section(&milnor), "mu + section mu")?;
        if &mu + &mu_section != total {
            return Err(Error::CrossCheck(format!("mu {mu} + section mu {mu_section} != {total}")));
        }
        let grad_degree = grad_degree_milnor(n, k, &mu, &mu_section);
        Ok(HypersurfaceReport { n, k, csm, fulton, milnor, section_milnor, mu, mu_section, grad_degree })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "csm": json::chow(&self.csm),
            "fulton": json::chow(&self.fulton),
            "milnor": json::chow(&self.milnor),
            "mu": json::integer(&self.mu),
            "mu_section": json::integer(&self.mu_section),
            "grad_degree": json::integer(&self.grad_degree),
        })
    }
}

/// `1 - (-1)^n d_n`: the drop in Euler characteristic from the hypersurface
/// to a general hyperplane section of it.
pub fn euler_defect(dv: &DegreeVector) -> Integer {
    let dn = &dv.entries[dv.n()];
    if dv.n().is_even() {
        Integer::one() - dn
    } else {
        Integer::one() + dn
    }
}

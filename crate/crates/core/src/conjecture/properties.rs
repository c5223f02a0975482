//! Structural checks on a table produced by the algorithm.

use rayon::prelude::*;

use num_traits::{Signed, Zero};

use crate::algebra::{binom, catalan, Integer};

use super::algorithm::InvariantTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub family: &'static str,
    pub r: usize,
    pub i: Option<usize>,
    pub detail: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.i {
            Some(i) => write!(f, "{} at r={}, i={}: {}", self.family, self.r, i, self.detail),
            None => write!(f, "{} at r={}: {}", self.family, self.r, self.detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub rows_checked: usize,
    pub failures: Vec<Failure>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn alternating(v: &[Integer]) -> Integer {
    v.iter().enumerate().map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x }).sum()
}

fn check_row(r: usize, c: &[Integer], d: &[Integer]) -> Vec<Failure> {
    let mut out = Vec::new();
    let mut fail = |family, i, detail: String| out.push(Failure { family, r, i, detail });
    let n = 2 * r;
    if c.len() != n + 1 || d.len() != n + 1 {
        fail("shape", None, format!("rows of length {} and {}", c.len(), d.len()));
        return out;
    }

    for i in 0..=n {
        if c[i] != c[n - i] {
            fail("symmetry", Some(i), format!("{} != {}", c[i], c[n - i]));
        }
        if !c[i].is_positive() {
            fail("positivity", Some(i), format!("c = {}", c[i]));
        }
        if r >= 1 {
            // coefficient of [P^i] in the class of the hypersurface itself;
            // its top-dimensional part must vanish
            let gap = binom(n + 1, n - i) - &c[i];
            if (i < n && !gap.is_positive()) || (i == n && !gap.is_zero()) {
                fail("binomial bound", Some(i), format!("binom({}, {}) - c = {gap}", n + 1, n - i));
            }
            let ceil = binom(r, i / 2) * binom(r, (i + 2) / 2);
            if binom(n + 1, n - i) <= ceil {
                fail("binomial bound", Some(i), format!("binom({}, {}) <= {ceil}", n + 1, n - i));
            }
        }
    }

    for i in 1..n {
        if &d[i - 1] * &d[i + 1] > &d[i] * &d[i] {
            fail("log-concavity", Some(i), format!("{} * {} > {}^2", d[i - 1], d[i + 1], d[i]));
        }
    }
    let support: Vec<usize> = (0..=n).filter(|&i| !d[i].is_zero()).collect();
    if let (Some(&lo), Some(&hi)) = (support.first(), support.last()) {
        if hi - lo + 1 != support.len() {
            fail("internal zeros", None, format!("support {support:?}"));
        }
    }

    let cat = catalan(r);
    if alternating(c) != cat {
        fail("alternating c", None, format!("{} != C_{r} = {cat}", alternating(c)));
    }
    if alternating(d) != c[0] || c[0] != Integer::from(1) {
        fail("alternating d", None, format!("{} vs c_0 = {}", alternating(d), c[0]));
    }

    let mut nsum = Integer::zero();
    for a in 0..=r {
        if c[2 * a] != binom(r, a) * binom(r, a) {
            fail("narayana split", Some(2 * a), format!("{} != binom({r}, {a})^2", c[2 * a]));
        }
        if a >= 1 {
            let prod = binom(r, a - 1) * binom(r, a);
            let (nra, rem) = num_integer::Integer::div_rem(&prod, &Integer::from(r));
            if !rem.is_zero() {
                fail("narayana split", Some(2 * a - 1), format!("N({r}, {a}) not integral"));
            }
            if c[2 * a - 1] != Integer::from(r) * &nra {
                fail("narayana split", Some(2 * a - 1), format!("{} != r N({r}, {a})", c[2 * a - 1]));
            }
            nsum += nra;
        }
    }
    if r >= 1 && nsum != cat {
        fail("narayana sum", None, format!("{nsum} != C_{r}"));
    }
    out
}

pub fn property_suite(table: &InvariantTable) -> PropertyReport {
    let failures: Vec<Failure> = (0..table.c.len())
        .into_par_iter()
        .flat_map_iter(|r| check_row(r, &table.c[r], &table.d[r]))
        .collect();
    PropertyReport { rows_checked: table.c.len(), failures }
}

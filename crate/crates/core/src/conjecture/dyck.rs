//! Dyck paths of semilength `n` counted by long ascents.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::algebra::{binom, binom_i, to_integer, Integer};
use crate::error::{Error, Result};

use super::generating::q_poly;

pub fn dyck_t(n: usize, k: usize) -> Result<Integer> {
    if k > n / 2 {
        return Err(Error::OutOfRange(format!("T({n}, {k}) needs k <= {}", n / 2)));
    }
    if k == 0 {
        return Ok(Integer::one());
    }
    let (n_, k_) = (n as i64, k as i64);
    let sum: Integer = (2 * k..=n)
        .map(|j| binom_i(j as i64 - k_ - 1, k_ - 1) * binom_i(n_ + 1 - k_, n_ - j as i64))
        .sum();
    let total = binom(n + 1, k) * sum;
    let (v, rem) = total.div_rem(&Integer::from(n + 1));
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!("T({n}, {k}) is not integral")));
    }
    Ok(v)
}

/// Rows `T(n, 0..=n/2)` for `n <= nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckTable {
    pub rows: Vec<Vec<Integer>>,
}

pub fn dyck_table(nmax: usize) -> Result<DyckTable> {
    let rows = (0..=nmax)
        .map(|n| (0..=n / 2).map(|k| dyck_t(n, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(DyckTable { rows })
}

/// Whether `q_n`, read from its top coefficient down, is the row `T(n, .)`.
pub fn kl_reversal_check(n: usize) -> Result<bool> {
    let q = q_poly(n)?;
    let top = n / 2;
    for k in 0..=top {
        let c = to_integer(&q.coeff(top - k));
        if c != Some(dyck_t(n, k)?) {
            return Ok(false);
        }
    }
    Ok(q.degree().unwrap_or(0) <= top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn values() {
        assert_eq!(dyck_t(4, 2).unwrap(), int(2));
        assert_eq!(dyck_t(6, 1).unwrap(), int(57));
        for n in 0..10 {
            assert_eq!(dyck_t(n, 0).unwrap(), int(1));
        }
        assert!(dyck_t(5, 3).is_err());
    }

    #[test]
    fn reversal() {
        assert!(kl_reversal_check(0).unwrap());
        assert!(kl_reversal_check(4).unwrap());
        let t = dyck_table(4).unwrap();
        assert_eq!(t.rows[4], vec![int(1), int(11), int(2)]);
    }
}

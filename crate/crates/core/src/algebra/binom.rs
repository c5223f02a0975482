use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::rational::Integer;

/// Binomial polynomial `a(a-1)...(a-d+1)/d!` evaluated at an integer `a`.
///
/// Zero for `d < 0` and for `0 <= a < d`; defined (and usually nonzero) for
/// negative `a`.
pub fn binom_i(a: i64, d: i64) -> Integer {
    if d < 0 {
        return BigInt::zero();
    }
    if a >= 0 && a < d {
        return BigInt::zero();
    }
    // symmetric shortcut keeps the product short for large nonnegative a
    let d = if a >= 0 && d > a - d { a - d } else { d };
    let mut acc = BigInt::one();
    for j in 0..d {
        // acc = binom(a, j) here; the next division is exact
        acc *= a - j;
        let (q, r) = acc.div_rem(&BigInt::from(j + 1));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

/// Binomial coefficient on `usize` arguments.
pub fn binom(a: usize, d: usize) -> Integer {
    binom_i(a as i64, d as i64)
}

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `binom(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> Integer {
    let (q, r) = binom(2 * k, k).div_rem(&BigInt::from(k + 1));
    assert!(r.is_zero(), "Catalan number {k} is not integral");
    q
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer used for every table entry.
pub type Integer = BigInt;

/// Exact rational; always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` in lowest terms, or just `p` when the denominator is one.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Golden(format!("cannot parse rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The integer value of `q`, or `None` if it has a nontrivial denominator.
pub fn to_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn string_form_is_lowest_terms() {
        assert_eq!(rational_to_string(&rat(6, -4)), "-3/2");
        assert_eq!(rational_to_string(&rat(8, 4)), "2");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("10/4").unwrap(), rat(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn add_sub_and_mul_div_cancel(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x.clone());
            }
            prop_assert_eq!(parse_rational(&rational_to_string(&x)).unwrap(), x);
        }
    }
}

use num_traits::Zero;

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Unique polynomial of degree `< points.len()` through every point.
///
/// Builds the node polynomial `prod (t - x_j)` once and peels each Lagrange
/// basis polynomial off it by synthetic division, so the whole fit costs
/// quadratically many rational operations.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    if points.is_empty() {
        return Err(Error::EmptyInterpolation);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DegenerateNodes);
        }
    }

    let node = points
        .iter()
        .fold(Poly::one(), |acc, (x, _)| &acc * &Poly::linear(-x));

    let n = points.len();
    let mut acc = vec![Rational::zero(); n];
    for (xi, yi) in points {
        if yi.is_zero() {
            continue;
        }
        let basis = deflate(&node, xi);
        let weight = yi / basis.eval(xi);
        for (a, b) in acc.iter_mut().zip(basis.coeffs()) {
            *a += &weight * b;
        }
    }
    Ok(Poly::new(acc))
}

/// `p / (t - root)` for a root of `p`.
fn deflate(p: &Poly, root: &Rational) -> Poly {
    let c = p.coeffs();
    let deg = c.len() - 1;
    let mut q = vec![Rational::zero(); deg];
    let mut carry = Rational::zero();
    for k in (1..=deg).rev() {
        carry = &carry * root + &c[k];
        q[k - 1] = carry.clone();
    }
    debug_assert!((&carry * root + &c[0]).is_zero());
    Poly::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (rat(x, 1), rat(y, 1))).collect()
    }

    #[test]
    fn constant_data() {
        assert_eq!(lagrange_interpolate(&pts(&[(0, 1), (1, 1)])).unwrap(), Poly::one());
    }

    #[test]
    fn third_columns_of_the_invariant_tables() {
        let c3 = lagrange_interpolate(&pts(&[(0, 0), (1, 0), (2, 2), (3, 9)])).unwrap();
        assert_eq!(c3, Poly::new(vec![rat(0, 1), rat(0, 1), rat(-1, 2), rat(1, 2)]));
        let d3 = lagrange_interpolate(&pts(&[(0, 0), (1, 0), (2, 4), (3, 17)])).unwrap();
        assert_eq!(d3, Poly::new(vec![rat(0, 1), rat(-1, 3), rat(-1, 2), rat(5, 6)]));
    }

    #[test]
    fn rejects_bad_nodes() {
        assert_eq!(lagrange_interpolate(&pts(&[(1, 2), (1, 3)])), Err(Error::DegenerateNodes));
        assert_eq!(lagrange_interpolate(&[]), Err(Error::EmptyInterpolation));
    }

    proptest! {
        #[test]
        fn hits_every_point(ys in prop::collection::vec(-20i64..20, 1..9), shift in -5i64..5) {
            let points: Vec<_> = ys.iter().enumerate()
                .map(|(i, &y)| (rat(3 * i as i64 + shift, 2), rat(y, 1)))
                .collect();
            let p = lagrange_interpolate(&points).unwrap();
            prop_assert!(p.degree().map_or(true, |d| d < points.len()));
            for (x, y) in &points {
                prop_assert_eq!(&p.eval(x), y);
            }
        }
    }
}

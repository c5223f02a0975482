//! The column-by-column construction of the sequences `c_i(r)`, `d_i(r)`.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::{binom, catalan, lagrange_interpolate, rational_to_string, to_integer, Integer, Poly, Rational};
use crate::error::{Error, Result};
use crate::json;

/// Output of [`run_algorithm`]. Row `r` of `c` and `d` has `2r + 1` entries;
/// `polc[i]`, `pold[i]` interpolate column `i` as polynomials in `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub rmax: usize,
    pub c: Vec<Vec<Integer>>,
    pub d: Vec<Vec<Integer>>,
    pub polc: Vec<Poly>,
    pub pold: Vec<Poly>,
}

impl InvariantTable {
    pub fn to_json(&self, emit_polys: bool) -> Value {
        let mut v = json!({
            "rmax": self.rmax,
            "c": json::matrix(&self.c),
            "d": json::matrix(&self.d),
        });
        if emit_polys {
            let polys = |ps: &[Poly]| Value::Array(ps.iter().map(|p| Value::String(p.display_in("t"))).collect());
            v["polc"] = polys(&self.polc);
            v["pold"] = polys(&self.pold);
        }
        v
    }
}

fn check_len(r: usize, row: &[Integer]) -> Result<()> {
    if row.len() != 2 * r + 1 {
        return Err(Error::LengthMismatch { expected: 2 * r + 1, found: row.len() });
    }
    Ok(())
}

fn signed(j: usize, v: Integer) -> Integer {
    if j % 2 == 0 {
        v
    } else {
        -v
    }
}

/// `c_i = sum_{j <= 2r - i} (-1)^j binom(2r - j, i) d_j`.
pub fn aluffi_c_from_d(r: usize, d_row: &[Integer]) -> Result<Vec<Integer>> {
    check_len(r, d_row)?;
    Ok((0..=2 * r)
        .map(|i| (0..=2 * r - i).map(|j| signed(j, binom(2 * r - j, i) * &d_row[j])).sum())
        .collect())
}

/// `d_i = sum_{j >= 2r - i} (-1)^j binom(j, 2r - i) c_j`.
pub fn aluffi_d_from_c(r: usize, c_row: &[Integer]) -> Result<Vec<Integer>> {
    check_len(r, c_row)?;
    Ok((0..=2 * r)
        .map(|i| (2 * r - i..=2 * r).map(|j| signed(j, binom(j, 2 * r - i) * &c_row[j])).sum())
        .collect())
}

fn pascal(rows: usize) -> Vec<Vec<Integer>> {
    let mut t: Vec<Vec<Integer>> = Vec::with_capacity(rows + 1);
    for a in 0..=rows {
        let mut row = vec![Integer::one(); a + 1];
        for b in 1..a {
            row[b] = &t[a - 1][b - 1] + &t[a - 1][b];
        }
        t.push(row);
    }
    t
}

fn integral(v: &Rational, r: usize, i: usize) -> Result<Integer> {
    to_integer(v).ok_or_else(|| Error::UniquenessViolation { r, i, value: rational_to_string(v) })
}

/// Runs steps `0..=rmax`. Step `r` evaluates the known column polynomials at
/// `r`, completes row `r` of `c` from the known `d` entries and the Catalan
/// condition `d_{2r}(r) = C_r`, converts it to row `r` of `d`, and finally
/// interpolates column `r` through its values at `0..=r`.
pub fn run_algorithm(rmax: usize) -> Result<InvariantTable> {
    let pas = pascal(2 * rmax + 1);
    let b = |a: usize, k: usize| -> &Integer { &pas[a][k] };

    let mut c: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    let mut d: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
    let mut polc = vec![Poly::one()];
    let mut pold = vec![Poly::one()];

    for r in 1..=rmax {
        let n = 2 * r;
        let mut crow = vec![Integer::zero(); n + 1];
        let mut drow = vec![Integer::zero(); n + 1];
        let rq = Rational::from_integer(r.into());
        for i in 0..r {
            drow[i] = integral(&pold[i].eval(&rq), r, i)?;
            crow[i] = integral(&polc[i].eval(&rq), r, i)?;
        }
        for i in 0..r {
            crow[n - i] = (0..=i).map(|j| signed(j, b(n - j, n - i) * &drow[j])).sum();
        }
        let s: Integer = (0..=n).filter(|&j| j != r).map(|j| signed(j, crow[j].clone())).sum();
        crow[r] = signed(r, catalan(r) - s);
        for i in r..=n {
            drow[i] = (n - i..=n).map(|j| signed(j, b(j, n - i) * &crow[j])).sum();
        }
        c.push(crow);
        d.push(drow);

        let column = |m: &Vec<Vec<Integer>>| -> Vec<(Rational, Rational)> {
            (0..=r)
                .map(|row| {
                    let v = m[row].get(r).cloned().unwrap_or_default();
                    (Rational::from_integer(row.into()), Rational::from_integer(v))
                })
                .collect()
        };
        polc.push(lagrange_interpolate(&column(&c))?);
        pold.push(lagrange_interpolate(&column(&d))?);
    }
    Ok(InvariantTable { rmax, c, d, polc, pold })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn aluffi_relations_on_small_rows() {
        assert_eq!(aluffi_c_from_d(2, &ints(&[1, 2, 4, 4, 2])).unwrap(), ints(&[1, 2, 4, 2, 1]));
        assert_eq!(
            aluffi_c_from_d(3, &ints(&[1, 3, 9, 17, 21, 15, 5])).unwrap(),
            ints(&[1, 3, 9, 9, 9, 3, 1])
        );
        assert!(aluffi_c_from_d(3, &ints(&[1, 2])).is_err());
    }

    #[test]
    fn third_step() {
        let t = run_algorithm(3).unwrap();
        assert_eq!(t.c[3][3], int(9));
        assert_eq!(t.d[3][3..6].to_vec(), ints(&[17, 21, 15]));
        assert_eq!(t.polc[3], Poly::new(vec![rat(0, 1), rat(0, 1), rat(-1, 2), rat(1, 2)]));
        assert_eq!(t.pold[3], Poly::new(vec![rat(0, 1), rat(-1, 3), rat(-1, 2), rat(5, 6)]));
    }

    #[test]
    fn seed_only() {
        let t = run_algorithm(0).unwrap();
        assert_eq!(t.c, vec![ints(&[1])]);
        assert_eq!(t.polc, vec![Poly::one()]);
    }

    #[test]
    fn columns_match_their_polynomials() {
        let t = run_algorithm(9).unwrap();
        for (r, row) in t.c.iter().enumerate() {
            for i in 0..=r.min(9) {
                let rq = Rational::from_integer(r.into());
                assert_eq!(t.polc[i].eval(&rq), Rational::from_integer(row[i].clone()));
                assert_eq!(t.pold[i].eval(&rq), Rational::from_integer(t.d[r][i].clone()));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn aluffi_roundtrip((r, row) in (0usize..=8).prop_flat_map(|r| (Just(r), prop::collection::vec(-50i64..50, 2 * r + 1)))) {
            let d = ints(&row);
            let c = aluffi_c_from_d(r, &d).unwrap();
            prop_assert_eq!(aluffi_d_from_c(r, &c).unwrap(), d);
        }
    }
}

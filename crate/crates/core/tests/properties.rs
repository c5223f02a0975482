use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use ccsec_core::algebra::{
    binom, factorial, involution, lagrange_interpolate, rat, ChowClass, Integer, Poly, Rational, Series,
};
use ccsec_core::charclass::{
    csm_complement, csm_hypersurface, degrees_from_segre, fulton_hypersurface, grad_degree_chi, grad_degree_milnor,
    milnor_class, segre_from_degrees, DegreeVector, HypersurfaceReport,
};
use ccsec_core::conjecture::{closed_form_c, dyck_t, kl_reversal_check, q_poly};
use ccsec_core::hilbert::{abhyankar_numerator, hilbert_polynomial, maximal_minor_numerator, secant_hilbert_series};
use ccsec_core::secant::{low_projective_degrees, mather_class_secant, polar_degrees_secant};
use ccsec_core::conjecture::closed_form_d;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..20).prop_map(|(p, q)| rat(p, q))
}

fn chow(n: usize) -> impl Strategy<Value = ChowClass> {
    prop::collection::vec(-9i64..10, n + 1).prop_map(move |v| ChowClass::from_ints(n, &v))
}

fn degree_vector() -> impl Strategy<Value = DegreeVector> {
    (0usize..=8, 1i64..=6).prop_flat_map(|(n, r_gen)| {
        prop::collection::vec(0i64..=50, n).prop_map(move |tail| {
            let mut v = vec![1];
            v.extend(tail);
            DegreeVector::from_ints(r_gen, &v).unwrap()
        })
    })
}

fn zq(v: Integer) -> Rational {
    Rational::from_integer(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rational_add_and_mul_cancel(a in small_rational(), b in small_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn interpolation_hits_every_node(ys in prop::collection::vec(small_rational(), 1..10), shift in -5i64..5) {
        let pts: Vec<(Rational, Rational)> =
            ys.iter().enumerate().map(|(i, y)| (rat(i as i64 * 2 + shift, 1), y.clone())).collect();
        let p = lagrange_interpolate(&pts).unwrap();
        prop_assert!(p.degree().unwrap_or(0) < pts.len());
        for (x, y) in &pts {
            prop_assert_eq!(&p.eval(x), y);
        }
    }

    #[test]
    fn series_sqrt_squares_back(tail in prop::collection::vec(-20i64..20, 0..12), c in 2i64..6) {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(tail.iter().map(|&x| rat(x, 1)));
        let order = coeffs.len();
        let s = Series::new(coeffs.clone(), order);
        let root = s.sqrt().unwrap();
        prop_assert_eq!(root.mul(&root), s);
        coeffs[0] = rat(c, 1);
        prop_assert!(Series::new(coeffs, order).sqrt().is_err());
    }

    #[test]
    fn involution_is_an_involution(v in prop::collection::vec(-9i64..10, 0..=21)) {
        let p = Poly::from_ints(v);
        prop_assert_eq!(involution(&involution(&p)), p);
    }

    #[test]
    fn chow_ring_laws(a in chow(5), b in chow(5), c in chow(5)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let high = ChowClass::h_pow(5, 3).mul(&ChowClass::h_pow(5, 3)).unwrap();
        prop_assert!(high.mul(&a).unwrap().coeffs().iter().all(Zero::is_zero));
    }

    #[test]
    fn segre_roundtrip(dv in degree_vector()) {
        let s = segre_from_degrees(&dv);
        prop_assert_eq!(degrees_from_segre(dv.n(), dv.r_gen(), &s).unwrap(), dv);
    }

    #[test]
    fn inclusion_exclusion(dv in degree_vector()) {
        let n = dv.n();
        let total = csm_hypersurface(&dv).add(&csm_complement(&dv)).unwrap();
        prop_assert_eq!(total, ChowClass::one_plus_h_pow(n, n + 1));
    }

    #[test]
    fn section_drops_euler_characteristic(dv in degree_vector()) {
        let csm = csm_hypersurface(&dv);
        let n = dv.n();
        let d_n = zq(dv.entries()[n].clone());
        let want = if n % 2 == 0 { Rational::one() - d_n } else { Rational::one() + d_n };
        prop_assert_eq!(csm.degree() - csm.section().degree(), want);
    }

    #[test]
    fn gradient_degree_routes_agree(k in 2usize..=6, n in 2usize..=8, seed in prop::collection::vec(0i64..=50, 8)) {
        let mut v = vec![1];
        v.extend(seed.iter().take(n).copied());
        let dv = DegreeVector::from_ints(k as i64 - 1, &v).unwrap();
        let rep = HypersurfaceReport::from_degrees(&dv, k).unwrap();
        let chi = rep.csm.degree().to_integer();
        let chi_section = rep.csm.section().degree().to_integer();
        prop_assert_eq!(grad_degree_milnor(n, k, &rep.mu, &rep.mu_section), grad_degree_chi(n, &chi, &chi_section));
    }

    #[test]
    fn transposed_shapes_share_numerator(k in 1usize..=4, c in 0usize..=3) {
        let a = abhyankar_numerator(k + 1 + c, k + 1, k).unwrap();
        let b = abhyankar_numerator(k + 1, k + 1 + c, k).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, maximal_minor_numerator(k, c));
    }
}

#[test]
fn binomials_match_factorials() {
    for a in 0..=30 {
        for d in 0..=a {
            assert_eq!(binom(a, d), factorial(a) / (factorial(d) * factorial(a - d)));
        }
        for d in a + 1..=31 {
            assert!(binom(a, d).is_zero());
        }
    }
}

#[test]
fn fulton_section_identity() {
    for n in 1..=8usize {
        for k in 1..=6usize {
            let drop = fulton_hypersurface(n, k).degree() - fulton_hypersurface(n - 1, k).pushforward().degree();
            let p = num_traits::pow(BigInt::from(k as i64 - 1), n);
            let want = if n % 2 == 0 { BigInt::one() - p } else { BigInt::one() + p };
            assert_eq!(drop, zq(want), "n={n} k={k}");
        }
    }
}

#[test]
fn smooth_hypersurfaces_have_no_milnor_class() {
    for n in 1..=8 {
        for k in 1..=6 {
            let f = fulton_hypersurface(n, k);
            assert!(milnor_class(&f, &f, n - 1).unwrap().coeffs().iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn h_vector_of_maximal_minors() {
    for k in 1..=6 {
        for c in 0..=5 {
            let want: Vec<Integer> = (0..=k).map(|j| binom(c + j, j)).collect();
            assert_eq!(maximal_minor_numerator(k, c), Poly::from_integers(want));
        }
    }
}

#[test]
fn hilbert_polynomial_matches_series() {
    for n in 2..=14 {
        for k in 1..=n / 2 {
            let hs = secant_hilbert_series(n, k).unwrap();
            let p = hilbert_polynomial(&hs).unwrap();
            let top = hs.numerator.degree().unwrap_or(0);
            for t in top..=3 * top.max(1) {
                assert_eq!(p.eval(t as i64), hs.coefficient(t), "n={n} k={k} t={t}");
            }
        }
    }
}

#[test]
fn mather_positive_and_polar_sum() {
    for r in 1..=30usize {
        let m = mather_class_secant(r).unwrap();
        assert!((1..=2 * r).all(|j| m.coeff(j).is_positive()), "r={r}");
        let polar = polar_degrees_secant(r).unwrap();
        assert!(polar.iter().all(|d| !d.is_negative()));
        let want = (num_traits::pow(BigInt::from(3), r + 1) - 1) / 2;
        assert_eq!(polar.iter().sum::<Integer>(), want);
        // the alternating binomial sum behind the ED degree
        let alt: Integer = (0..=r)
            .map(|j| {
                let t: Integer = binom(r + 1, r - j) * BigInt::from(2).pow(j as u32) * (BigInt::from(2).pow(j as u32 + 1) - 1);
                if (r + j) % 2 == 0 { t } else { -t }
            })
            .sum();
        assert_eq!(alt, want, "r={r}");
    }
}

#[test]
fn low_degrees_follow_closed_form() {
    for r in 1..=30 {
        let low = low_projective_degrees(r);
        for (i, v) in low.iter().enumerate() {
            assert_eq!(v, &closed_form_d(i, r), "d_{i}({r})");
        }
    }
}

#[test]
fn catalan_alternating_identity() {
    for r in 0..=40usize {
        let sum: Integer = (0..=2 * r)
            .map(|i| {
                let t = binom(r, i / 2) * binom(r, (i + 1) / 2);
                assert_eq!(t, closed_form_c(i, r));
                if i % 2 == 0 { t } else { -t }
            })
            .sum();
        assert_eq!(sum, binom(2 * r, r) / BigInt::from(r + 1), "r={r}");
    }
}

#[test]
fn q_polynomials_reverse_to_dyck_rows() {
    for n in 0..=20 {
        assert!(kl_reversal_check(n).unwrap(), "n={n}");
        let q = q_poly(n).unwrap();
        let top = n / 2;
        for k in 0..=top {
            assert_eq!(q.coeff(top - k), zq(dyck_t(n, k).unwrap()));
        }
    }
}

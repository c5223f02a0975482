use num_bigint::BigInt;

use ccsec_core::algebra::{
    binom_i, catalan, involution, lagrange_interpolate, rat, ChowClass, Integer, Poly, Rational, Series,
};
use ccsec_core::charclass::{
    chi_gamma_relations, csm_complement, csm_hypersurface, degrees_from_segre, fulton_hypersurface,
    grad_degree_chi, grad_degree_isolated, grad_degree_milnor, milnor_class, milnor_number, segre_from_degrees,
    DegreeVector,
};
use ccsec_core::conjecture::{aluffi_c_from_d, alt_form_c, closed_form_c, closed_form_d, dyck_t, q_poly};
use ccsec_core::hilbert::{
    abhyankar_numerator, eagon_northcott_numerator, maximal_minor_numerator, secant_hilbert_series,
    section_curve_genus,
};
use ccsec_core::secant::{
    chi_section_secant, euler_char_secant, g_ed_degree_secant, grad_degree_secant, hankel_rank_at_coordinate_point,
    low_projective_degrees, mather_class_secant, polar_degrees_secant, secant_basics, veronese_dual_mather,
    HankelShape,
};

fn int(v: i64) -> Integer {
    BigInt::from(v)
}

fn ints(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| int(x)).collect()
}

fn class(n: usize, v: &[i64]) -> ChowClass {
    ChowClass::from_ints(n, v)
}

fn sec2() -> DegreeVector {
    DegreeVector::from_ints(2, &[1, 2, 4, 4, 2]).unwrap()
}

fn discriminant() -> DegreeVector {
    DegreeVector::from_ints(2, &[1, 2, 4, 4, 2, 1]).unwrap()
}

#[test]
fn binomials_and_catalan() {
    assert_eq!(binom_i(5, 2), int(10));
    assert_eq!(binom_i(3, 5), int(0));
    assert_eq!(binom_i(-1, 2), int(1));
    assert_eq!([catalan(0), catalan(3), catalan(5)], [int(1), int(5), int(42)]);
}

#[test]
fn interpolation_of_column_values() {
    let pts = |ys: &[i64]| -> Vec<(Rational, Rational)> {
        ys.iter().enumerate().map(|(i, &y)| (rat(i as i64, 1), rat(y, 1))).collect()
    };
    assert_eq!(lagrange_interpolate(&pts(&[1, 1])).unwrap(), Poly::from_ints([1]));
    assert_eq!(
        lagrange_interpolate(&pts(&[0, 0, 2, 9])).unwrap(),
        Poly::new(vec![rat(0, 1), rat(0, 1), rat(-1, 2), rat(1, 2)])
    );
    assert_eq!(
        lagrange_interpolate(&pts(&[0, 0, 4, 17])).unwrap(),
        Poly::new(vec![rat(0, 1), rat(-1, 3), rat(-1, 2), rat(5, 6)])
    );
}

#[test]
fn one_variable_series() {
    let geometric = Series::new(vec![rat(1, 1), rat(-1, 1)], 3).inverse().unwrap();
    assert_eq!(geometric, Series::from_poly(&Poly::from_ints([1, 1, 1, 1]), 3));
    let root = Series::new(vec![rat(1, 1), rat(-4, 1)], 4).sqrt().unwrap();
    assert_eq!(root.truncate(3), Series::from_poly(&Poly::from_ints([1, -2, -2, -4]), 3));
    let cat = Series::one(4).sub(&root).shift_down(1).unwrap().scale(&rat(1, 2));
    assert_eq!(cat, Series::from_poly(&Poly::from_ints([1, 1, 2, 5]), 3));
}

#[test]
fn section_operator_and_involution() {
    assert_eq!(class(4, &[0, 3, 6, 8, 4]).section(), class(4, &[0, 0, 3, 3, 5]));
    assert_eq!(class(3, &[0, 3, 3, 9]).section(), class(3, &[0, 0, 3, 0]));
    assert_eq!(involution(&Poly::from_ints([1])), Poly::from_ints([1]));
    let g = Poly::from_ints([3, 6, 8, 4]);
    assert_eq!(involution(&involution(&g)), g);
    let rel = chi_gamma_relations(&class(4, &[0, 3, 6, 8, 4])).unwrap();
    assert_eq!(rel.chi.eval_int(0), rat(4, 1));
    assert_eq!(rel.section, vec![rat(3, 1), rat(3, 1), rat(5, 1)]);
}

#[test]
fn segre_classes() {
    assert_eq!(segre_from_degrees(&sec2()), class(4, &[0, 0, 0, 4, -18]));
    let free = DegreeVector::from_ints(3, &[1, 3, 9, 27]).unwrap();
    assert_eq!(segre_from_degrees(&free), ChowClass::zero(3));
    let dv = DegreeVector::from_ints(3, &[1, 3, 9, 17, 21]).unwrap();
    assert_eq!(degrees_from_segre(4, dv.r_gen(), &segre_from_degrees(&dv)).unwrap(), dv);
    assert_eq!(degrees_from_segre(4, &int(2), &class(4, &[0, 0, 0, 4, -18])).unwrap(), sec2());
    assert_eq!(
        degrees_from_segre(3, &int(5), &ChowClass::zero(3)).unwrap(),
        DegreeVector::from_ints(5, &[1, 5, 25, 125]).unwrap()
    );
}

#[test]
fn csm_classes() {
    assert_eq!(csm_hypersurface(&sec2()), class(4, &[0, 3, 6, 8, 4]));
    assert_eq!(csm_hypersurface(&discriminant()), class(5, &[0, 3, 9, 14, 12, 6]));
    assert_eq!(csm_complement(&sec2()).dim_coeffs(), ints(&[1, 2, 4, 2, 1]).into_iter().map(Rational::from_integer).collect::<Vec<_>>());
    let conic = DegreeVector::from_ints(1, &[1, 1, 1]).unwrap();
    assert_eq!(csm_complement(&conic).dim_coeffs(), vec![rat(1, 1); 3]);
}

#[test]
fn fulton_and_milnor_classes() {
    assert_eq!(fulton_hypersurface(4, 3), class(4, &[0, 3, 6, 12, -6]));
    assert_eq!(fulton_hypersurface(5, 3), class(5, &[0, 3, 9, 18, 6, 27]));
    assert_eq!(fulton_hypersurface(2, 3), class(2, &[0, 3, 0]));
    let m = milnor_class(&fulton_hypersurface(4, 3), &csm_hypersurface(&sec2()), 3).unwrap();
    assert_eq!(m, class(4, &[0, 0, 0, -4, 10]));
    assert_eq!(milnor_number(&m), rat(10, 1));
    let m = milnor_class(&fulton_hypersurface(5, 3), &csm_hypersurface(&discriminant()), 4).unwrap();
    assert_eq!(m, class(5, &[0, 0, 0, 4, -6, 21]));
    assert_eq!(milnor_number(&m), rat(21, 1));
}

#[test]
fn gradient_degrees() {
    assert_eq!(grad_degree_isolated(3, 3, &int(4)), int(4));
    assert_eq!(grad_degree_isolated(2, 3, &int(0)), int(4));
    assert_eq!(grad_degree_milnor(4, 3, &int(10), &int(4)), int(2));
    assert_eq!(grad_degree_milnor(5, 3, &int(21), &int(10)), int(1));
    assert_eq!(grad_degree_milnor(6, 4, &int(0), &int(0)), int(729));
    assert_eq!(grad_degree_chi(4, &int(4), &int(5)), int(2));
    assert_eq!(grad_degree_chi(6, &int(6), &int(10)), int(5));
    assert_eq!(grad_degree_chi(2, &int(2), &int(2)), int(1));
}

#[test]
fn hilbert_numerators() {
    assert_eq!(maximal_minor_numerator(3, 2), Poly::from_ints([1, 3, 6, 10]));
    assert_eq!(maximal_minor_numerator(4, 0), Poly::from_ints([1, 1, 1, 1, 1]));
    assert_eq!(maximal_minor_numerator(1, 4), Poly::from_ints([1, 5]));
    assert_eq!(abhyankar_numerator(6, 4, 3).unwrap(), Poly::from_ints([1, 3, 6, 10]));
    assert_eq!(abhyankar_numerator(3, 3, 2).unwrap(), Poly::from_ints([1, 1, 1]));
    assert_eq!(abhyankar_numerator(4, 5, 1).unwrap(), Poly::from_ints([1, 12, 18, 4]));
    assert_eq!(eagon_northcott_numerator(1, 0).unwrap(), Poly::from_ints([1, -1]));
    // s = 3 is the size of the minors, so the cofactor is q_{2,2}
    assert_eq!(
        eagon_northcott_numerator(3, 2).unwrap(),
        &Poly::from_ints([1, -1]).pow(3) * &Poly::from_ints([1, 3, 6])
    );
    assert_eq!(
        eagon_northcott_numerator(4, 2).unwrap(),
        &Poly::from_ints([1, -1]).pow(3) * &Poly::from_ints([1, 3, 6, 10])
    );
    let s = secant_hilbert_series(4, 2).unwrap();
    assert_eq!((s.numerator.clone(), s.denominator_power), (Poly::from_ints([1, 1, 1]), 4));
    assert_eq!(s.degree(), rat(3, 1));
    assert_eq!(
        [section_curve_genus(2).unwrap(), section_curve_genus(3).unwrap(), section_curve_genus(4).unwrap()],
        [int(0), int(6), int(26)]
    );
}

#[test]
fn secant_geometry() {
    assert_eq!(secant_basics(4, 2).unwrap(), (3, int(3)));
    assert_eq!(secant_basics(9, 1).unwrap(), (1, int(9)));
    assert_eq!(hankel_rank_at_coordinate_point(HankelShape::new(3, 3), 2).unwrap(), 3);
    assert_eq!(hankel_rank_at_coordinate_point(HankelShape::new(3, 3), 0).unwrap(), 1);
    assert_eq!(hankel_rank_at_coordinate_point(HankelShape::for_secant(9, 3), 0).unwrap(), 1);
    assert_eq!(euler_char_secant(4, 2).unwrap().fixed_points, vec![0, 1, 3, 4]);
    assert_eq!(euler_char_secant(7, 1).unwrap().euler_char, 2);
    assert_eq!(euler_char_secant(10, 3).unwrap().fixed_points, vec![0, 1, 2, 8, 9, 10]);
}

#[test]
fn mather_polar_and_ed() {
    assert_eq!(mather_class_secant(2).unwrap(), class(4, &[0, 3, 6, 4, 2]));
    assert_eq!(mather_class_secant(3).unwrap(), class(6, &[0, 4, 12, 16, 16, 12, 4]));
    assert_eq!(mather_class_secant(4).unwrap(), class(8, &[0, 5, 20, 40, 60, 66, 44, 16, 4]));
    assert_eq!(veronese_dual_mather(2).dim_coeffs()[..3], [rat(3, 1), rat(6, 1), rat(4, 1)]);
    assert_eq!(veronese_dual_mather(1).dim_coeffs()[..2], [rat(2, 1), rat(2, 1)]);
    assert_eq!(polar_degrees_secant(2).unwrap(), ints(&[0, 4, 6, 3]));
    assert_eq!(polar_degrees_secant(3).unwrap(), ints(&[0, 0, 8, 16, 12, 4]));
    assert_eq!(polar_degrees_secant(4).unwrap(), ints(&[0, 0, 0, 16, 40, 40, 20, 5]));
    assert_eq!([1, 2, 3].map(|r| g_ed_degree_secant(r).unwrap()), [int(4), int(13), int(40)]);
    assert_eq!([1, 2, 5].map(grad_degree_secant), [int(1), int(2), int(42)]);
    assert_eq!([1, 2, 5].map(chi_section_secant), [int(2), int(5), int(51)]);
    assert_eq!(low_projective_degrees(1).to_vec(), ints(&[1, 1, 1, 0, 0]));
    assert_eq!(low_projective_degrees(3).to_vec(), ints(&[1, 3, 9, 17, 21]));
    assert_eq!(low_projective_degrees(4).to_vec(), ints(&[1, 4, 16, 44, 86]));
}

#[test]
fn tables_and_sequences() {
    assert_eq!(aluffi_c_from_d(2, &ints(&[1, 2, 4, 4, 2])).unwrap(), ints(&[1, 2, 4, 2, 1]));
    assert_eq!(aluffi_c_from_d(3, &ints(&[1, 3, 9, 17, 21, 15, 5])).unwrap(), ints(&[1, 3, 9, 9, 9, 3, 1]));
    assert_eq!(closed_form_c(4, 5), int(100));
    assert_eq!(closed_form_d(6, 6), int(2752));
    assert_eq!(alt_form_c(3, 3), int(9));
    assert!((0..12).all(|r| alt_form_c(0, r) == int(1)));
    assert_eq!(q_poly(4).unwrap(), Poly::from_ints([2, 11, 1]));
    assert_eq!(q_poly(0).unwrap(), Poly::from_ints([1]));
    assert_eq!([dyck_t(4, 2).unwrap(), dyck_t(6, 1).unwrap(), dyck_t(9, 0).unwrap()], [int(2), int(57), int(1)]);
}

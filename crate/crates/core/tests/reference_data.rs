use std::path::Path;

use ccsec_core::golden::{Golden, FILES};
use ccsec_core::verify::verify_all;

fn data_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

#[test]
fn files_on_disk_match_embedded_copy() {
    assert_eq!(&Golden::from_dir(data_dir()).unwrap(), Golden::embedded());
}

#[test]
fn missing_file_is_reported() {
    let err = Golden::from_dir(&data_dir().join("nowhere")).unwrap_err();
    assert!(err.to_string().contains(FILES[0]));
}

#[test]
fn malformed_rows_are_rejected() {
    let mut texts = FILES.map(|name| std::fs::read_to_string(data_dir().join(name)).unwrap());
    texts[1] = texts[1].replace("\n3,", "\n4,");
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    assert!(Golden::from_texts(refs.try_into().unwrap()).is_err());
}

#[test]
fn every_perturbation_is_caught() {
    let base = Golden::embedded();
    assert!(verify_all(7, 8, base).passed());
    let mut tweaks: Vec<Box<dyn Fn(&mut Golden)>> = vec![
        Box::new(|g| g.c_rows[4][3] += 1),
        Box::new(|g| g.d_rows[7][14] -= 1),
        Box::new(|g| g.dyck_rows[6][2] += 1),
        Box::new(|g| g.q_polys[5] = &g.q_polys[5] + &ccsec_core::algebra::Poly::from_ints([1])),
        Box::new(|g| g.polar.get_mut(&3).unwrap()[2] += 1),
        Box::new(|g| g.examples.get_mut("discriminant_cubic.mu").unwrap()[0] += ccsec_core::algebra::rat(1, 1)),
    ];
    tweaks.push(Box::new(|g| {
        let m = g.mather.get_mut(&2).unwrap();
        *m = m.add(&ccsec_core::algebra::ChowClass::h_pow(4, 2)).unwrap();
    }));
    for (i, tweak) in tweaks.iter().enumerate() {
        let mut g = base.clone();
        tweak(&mut g);
        assert!(!verify_all(7, 8, &g).passed(), "perturbation {i} went unnoticed");
    }
}

//! Reference values shipped with the crate as CSV files under `data/`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use crate::algebra::{parse_rational, to_integer, ChowClass, Integer, Poly, Rational};
use crate::error::{Error, Result};

/// File names under `data/`, in the order [`Golden::from_texts`] expects.
pub const FILES: [&str; 7] = [
    "csm_complement_rows.csv",
    "projective_degree_rows.csv",
    "column_polynomials.csv",
    "q_polynomials.csv",
    "dyck_long_ascents.csv",
    "mather_polar.csv",
    "hypersurface_examples.csv",
];

const EMBEDDED: [&str; 7] = [
    include_str!("../data/csm_complement_rows.csv"),
    include_str!("../data/projective_degree_rows.csv"),
    include_str!("../data/column_polynomials.csv"),
    include_str!("../data/q_polynomials.csv"),
    include_str!("../data/dyck_long_ascents.csv"),
    include_str!("../data/mather_polar.csv"),
    include_str!("../data/hypersurface_examples.csv"),
];

/// Rows up to this `r` were obtained by direct computation rather than from
/// the algorithm.
pub const CERTIFIED_RMAX: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub c_rows: Vec<Vec<Integer>>,
    pub d_rows: Vec<Vec<Integer>>,
    pub polc: Vec<Poly>,
    pub pold: Vec<Poly>,
    pub q_polys: Vec<Poly>,
    pub dyck_rows: Vec<Vec<Integer>>,
    pub mather: BTreeMap<usize, ChowClass>,
    pub polar: BTreeMap<usize, Vec<Integer>>,
    pub examples: BTreeMap<String, Vec<Rational>>,
}

fn records(text: &str) -> Result<Vec<Vec<String>>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    rdr.records()
        .map(|rec| {
            rec.map(|r| r.iter().map(str::to_string).collect())
                .map_err(|e| Error::Golden(e.to_string()))
        })
        .collect()
}

fn index(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Golden(format!("bad index {s:?}")))
}

fn integer(s: &str) -> Result<Integer> {
    to_integer(&parse_rational(s)?).ok_or_else(|| Error::Golden(format!("not an integer: {s:?}")))
}

fn integers(fields: &[String]) -> Result<Vec<Integer>> {
    fields.iter().map(|f| integer(f)).collect()
}

fn rationals(fields: &[String]) -> Result<Vec<Rational>> {
    fields.iter().map(|f| parse_rational(f)).collect()
}

/// Rows keyed by a leading index that must run `0, 1, 2, ...`.
fn indexed_rows(text: &str) -> Result<Vec<Vec<Integer>>> {
    let mut out = Vec::new();
    for (pos, rec) in records(text)?.iter().enumerate() {
        if index(&rec[0])? != pos {
            return Err(Error::Golden(format!("row {pos} labelled {}", rec[0])));
        }
        out.push(integers(&rec[1..])?);
    }
    Ok(out)
}

impl Golden {
    pub fn parse() -> Result<Golden> {
        Golden::from_texts(EMBEDDED)
    }

    /// Reads the files named in [`FILES`] from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Golden> {
        let mut texts = Vec::with_capacity(FILES.len());
        for name in FILES {
            let path = dir.join(name);
            let text = fs::read_to_string(&path).map_err(|e| Error::Golden(format!("{}: {e}", path.display())))?;
            texts.push(text);
        }
        let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
        Golden::from_texts(refs.try_into().expect("one text per file"))
    }

    pub fn from_texts(texts: [&str; 7]) -> Result<Golden> {
        let [csm_rows, degree_rows, column_polys, q_polys_text, dyck, mather_polar, examples_text] = texts;
        let c_rows = indexed_rows(csm_rows)?;
        let d_rows = indexed_rows(degree_rows)?;
        let dyck_rows = indexed_rows(dyck)?;
        let q_polys = indexed_rows(q_polys_text)?.into_iter().map(Poly::from_integers).collect();

        let (mut polc, mut pold) = (Vec::new(), Vec::new());
        for rec in records(column_polys)? {
            let target = match rec[0].as_str() {
                "c" => &mut polc,
                "d" => &mut pold,
                other => return Err(Error::Golden(format!("unknown polynomial kind {other:?}"))),
            };
            if index(&rec[1])? != target.len() {
                return Err(Error::Golden(format!("column polynomials out of order at {}", rec[1])));
            }
            target.push(Poly::new(rationals(&rec[2..])?));
        }

        let (mut mather, mut polar) = (BTreeMap::new(), BTreeMap::new());
        for rec in records(mather_polar)? {
            let r = index(&rec[1])?;
            match rec[0].as_str() {
                "mather" => {
                    mather.insert(r, ChowClass::new(2 * r, rationals(&rec[2..])?));
                }
                "polar" => {
                    polar.insert(r, integers(&rec[2..])?);
                }
                other => return Err(Error::Golden(format!("unknown kind {other:?}"))),
            }
        }

        let mut examples = BTreeMap::new();
        for rec in records(examples_text)? {
            examples.insert(rec[0].clone(), rationals(&rec[1..])?);
        }

        Ok(Golden { c_rows, d_rows, polc, pold, q_polys, dyck_rows, mather, polar, examples })
    }

    /// The embedded data, parsed once.
    pub fn embedded() -> &'static Golden {
        static CELL: OnceLock<Golden> = OnceLock::new();
        CELL.get_or_init(|| Golden::parse().expect("embedded reference data parses"))
    }

    pub fn example(&self, name: &str) -> Result<&[Rational]> {
        self.examples
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Golden(format!("no example named {name:?}")))
    }

    /// An example read as a class in `A_* P^n`, `n` one less than its length.
    pub fn example_class(&self, name: &str) -> Result<ChowClass> {
        let v = self.example(name)?;
        Ok(ChowClass::new(v.len() - 1, v.to_vec()))
    }

    pub fn example_integers(&self, name: &str) -> Result<Vec<Integer>> {
        self.example(name)?
            .iter()
            .map(|q| to_integer(q).ok_or_else(|| Error::Golden(format!("{name} is not integral"))))
            .collect()
    }

    pub fn example_integer(&self, name: &str) -> Result<Integer> {
        let v = self.example_integers(name)?;
        match v.as_slice() {
            [x] => Ok(x.clone()),
            _ => Err(Error::Golden(format!("{name} is not a single value"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn parses() {
        let g = Golden::embedded();
        assert_eq!(g.c_rows.len(), 8);
        assert_eq!(g.d_rows[7].last(), Some(&int(429)));
        assert_eq!(g.polc.len(), 8);
        assert_eq!(g.pold[3].display_in("t"), "5/6t^3 - 1/2t^2 - 1/3t");
        assert_eq!(g.q_polys[4], Poly::from_ints([2, 11, 1]));
        assert_eq!(g.dyck_rows[6], vec![int(1), int(57), int(69), int(5)]);
        assert_eq!(g.mather[&2], ChowClass::from_ints(4, &[0, 3, 6, 4, 2]));
        assert_eq!(g.example_integer("secant_cubic.mu").unwrap(), int(10));
        assert!(g.example("nothing").is_err());
    }

    #[test]
    fn rows_have_full_length() {
        let g = Golden::embedded();
        for (r, (c, d)) in g.c_rows.iter().zip(&g.d_rows).enumerate() {
            assert_eq!(c.len(), 2 * r + 1);
            assert_eq!(d.len(), 2 * r + 1);
        }
    }
}

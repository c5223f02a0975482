use serde_json::{json, Value};

use ccsec_core::algebra::Integer;
use ccsec_core::charclass::DegreeVector;
use ccsec_core::conjecture::{closed_form_d, dyck_table, q_poly, run_algorithm, InvariantTable, FIRST_CONJECTURAL_ROW};
use ccsec_core::golden::Golden;
use ccsec_core::hilbert::{hilbert_polynomial, secant_hilbert_series, section_curve_genus};
use ccsec_core::secant::{csm_secant, secant_basics, euler_char_secant, secant_invariants};
use ccsec_core::verify::verify_all;
use ccsec_core::{json, Error};

use crate::render::{json_text, object, Table};
use crate::{Failure, Format, TableKind};

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn conjectural(r: usize) -> bool {
    r >= FIRST_CONJECTURAL_ROW
}

fn strings(v: &[Integer]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn triangle(name: &str, rows: &[Vec<Integer>], format: Format) -> String {
    let width = rows.last().map_or(0, Vec::len);
    let mut header = vec!["r".to_string()];
    header.extend((0..width).map(|i| format!("{name}_{i}")));
    let mut t = Table::new(header);
    for (r, row) in rows.iter().enumerate() {
        let mut cells = vec![r.to_string()];
        cells.extend(strings(row));
        t.push(cells, conjectural(r));
    }
    t.render(format, || {
        let rows: Vec<Value> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| json!({"r": r, "conjectural": conjectural(r), "values": json::integers(row)}))
            .collect();
        json!({"kind": name, "rows": rows})
    })
}

pub fn table(kind: TableKind, rmax: usize, nmax: usize, format: Format) -> Out {
    match kind {
        TableKind::Csm => Ok(triangle("c", &run_algorithm(rmax)?.c, format)),
        TableKind::Degrees => Ok(triangle("d", &run_algorithm(rmax)?.d, format)),
        TableKind::Qpoly => {
            let polys = (0..=nmax).map(q_poly).collect::<ccsec_core::Result<Vec<_>>>()?;
            let mut t = Table::new(vec!["i".into(), "q_i(x)".into()]);
            for (i, p) in polys.iter().enumerate() {
                t.push(vec![i.to_string(), p.display_in("x")], false);
            }
            Ok(t.render(format, || {
                let rows: Vec<Value> = polys
                    .iter()
                    .enumerate()
                    .map(|(i, p)| json!({"i": i, "coefficients": json::poly(p), "display": p.display_in("x")}))
                    .collect();
                json!({"kind": "qpoly", "rows": rows})
            }))
        }
        TableKind::Dyck => {
            let rows = dyck_table(nmax)?.rows;
            let mut header = vec!["n".to_string()];
            header.extend((0..=nmax / 2).map(|k| format!("T(n,{k})")));
            let mut t = Table::new(header);
            for (n, row) in rows.iter().enumerate() {
                let mut cells = vec![n.to_string()];
                cells.extend(strings(row));
                t.push(cells, false);
            }
            Ok(t.render(format, || {
                let rows: Vec<Value> =
                    rows.iter().enumerate().map(|(n, row)| json!({"n": n, "values": json::integers(row)})).collect();
                json!({"kind": "dyck", "rows": rows})
            }))
        }
    }
}

pub fn secant_r(r: usize, format: Format) -> Out {
    let inv = secant_invariants(2 * r, r)?;
    let mut v = inv.to_json();
    let d: Vec<Integer> = (0..=2 * r).map(|i| closed_form_d(i, r)).collect();
    let csm = csm_secant(r, &DegreeVector::new(Integer::from(r), d.clone())?)?;
    v["r"] = json!(r);
    v["projective_degrees"] = json::integers(&d);
    v["csm"] = json::chow(&csm);
    v["conjectural"] = json!(conjectural(r));
    Ok(object(&v, format))
}

pub fn secant_nk(n: usize, k: usize, format: Format) -> Out {
    let (dim, degree) = secant_basics(n, k)?;
    let cert = euler_char_secant(n, k)?;
    let v = json!({
        "n": n,
        "k": k,
        "dim": dim,
        "degree": json::integer(&degree),
        "euler_char": cert.euler_char,
        "fixed_points": cert.fixed_points,
    });
    Ok(object(&v, format))
}

pub fn hilbert(n: usize, k: usize, format: Format) -> Out {
    let hs = secant_hilbert_series(n, k)?;
    let p = hilbert_polynomial(&hs)?;
    let mut v = hs.to_json();
    v["n"] = json!(n);
    v["k"] = json!(k);
    v["hilbert_polynomial"] = Value::Array(p.coeffs.iter().map(json::rational).collect());
    if n % 2 == 0 && n >= 4 && k + 1 == n / 2 {
        v["genus"] = json::integer(&section_curve_genus(n / 2)?);
    }
    Ok(object(&v, format))
}

fn algorithm_markdown(t: &InvariantTable, emit_polys: bool, format: Format) -> String {
    let mut out = triangle("c", &t.c, format);
    out.push('\n');
    out.push_str(&triangle("d", &t.d, format));
    if emit_polys {
        let mut p = Table::new(vec!["i".into(), "polc_i(t)".into(), "pold_i(t)".into()]);
        for (i, (c, d)) in t.polc.iter().zip(&t.pold).enumerate() {
            p.push(vec![i.to_string(), c.display_in("t"), d.display_in("t")], false);
        }
        out.push('\n');
        out.push_str(&p.render(format, || Value::Null));
    }
    out
}

pub fn algorithm(rmax: usize, emit_polys: bool, format: Format) -> Out {
    let t = run_algorithm(rmax)?;
    match format {
        Format::Json => {
            let mut v = t.to_json(emit_polys);
            v["first_conjectural_row"] = json!(FIRST_CONJECTURAL_ROW);
            Ok(json_text(&v))
        }
        _ => Ok(algorithm_markdown(&t, emit_polys, format)),
    }
}

pub fn verify(rmax: usize, nmax: usize, golden: &Golden, format: Format) -> Out {
    let report = verify_all(rmax, nmax, golden);
    let text = match format {
        Format::Json => json_text(&report.to_json()),
        _ => {
            let mut s = String::new();
            for suite in &report.suites {
                let status = if suite.passed() { "PASS" } else { "FAIL" };
                s.push_str(&format!("{status} {} ({} checks)\n", suite.name, suite.checks));
            }
            for f in report.failures() {
                s.push_str(&format!("  {f}\n"));
            }
            s
        }
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

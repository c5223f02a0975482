//! The full set of consistency checks, grouped in suites that run in
//! parallel. Used by the `verify` command and by the test suite.

use std::collections::HashMap;
use std::fmt::Debug;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{binom, catalan, factorial, involution, Integer, Poly, Rational};
use crate::charclass::{
    csm_complement, csm_hypersurface, degrees_from_segre, euler_defect, fulton_hypersurface, grad_degree_chi,
    grad_degree_milnor, segre_from_degrees, DegreeVector, HypersurfaceReport,
};
use crate::conjecture::{
    alt_form_c, closed_form_c, closed_form_d, dyck_t, f_by_coefficients, f_by_sqrt, g_by_catalan, g_by_sqrt,
    h_closed, kl_reversal_check, narayana, narayana_series, central_square_series, generating_w, property_suite,
    q_poly, recursion_d, run_algorithm, InvariantTable,
};
use crate::golden::{Golden, CERTIFIED_RMAX};
use crate::hilbert::{
    abhyankar_numerator, eagon_northcott_numerator, hilbert_polynomial, maximal_minor_numerator,
    maximal_minor_series, secant_hilbert_series, section_curve_genus, section_curve_genus_closed_form,
};
use crate::secant::{
    chi_section_secant, csm_secant, euler_char_secant, g_ed_degree_closed_form, g_ed_degree_secant,
    grad_degree_secant, low_projective_degrees, mather_class_secant, mather_from_dual, polar_degrees_secant,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn same<T: PartialEq + Debug>(&mut self, what: impl FnOnce() -> String, got: &T, want: &T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, expected {want:?}", what()));
        }
    }

    fn ok<T>(&mut self, what: impl FnOnce() -> String, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub rmax: usize,
    pub nmax: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.suites
            .iter()
            .flat_map(|s| s.failures.iter().map(move |f| format!("[{}] {f}", s.name)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let suites: Vec<Value> = self
            .suites
            .iter()
            .map(|s| json!({"name": s.name, "checks": s.checks, "passed": s.passed(), "failures": s.failures}))
            .collect();
        json!({"rmax": self.rmax, "nmax": self.nmax, "passed": self.passed(), "suites": suites})
    }
}

struct Ctx<'a> {
    rmax: usize,
    nmax: usize,
    golden: &'a Golden,
    table: &'a InvariantTable,
}

fn q(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn golden_tables(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("reference tables");
    let g = cx.golden;
    let t = cx.table;
    for r in 0..=cx.rmax.min(g.c_rows.len() - 1) {
        s.same(|| format!("c row {r}"), &t.c[r], &g.c_rows[r]);
    }
    for r in 0..=cx.rmax.min(g.d_rows.len() - 1) {
        s.same(|| format!("d row {r}"), &t.d[r], &g.d_rows[r]);
    }
    s.check(cx.rmax < CERTIFIED_RMAX || g.d_rows.len() > CERTIFIED_RMAX, || "certified rows missing".into());
    for i in 0..=cx.rmax.min(g.polc.len() - 1) {
        s.same(|| format!("polc {i}"), &t.polc[i], &g.polc[i]);
    }
    for i in 0..=cx.rmax.min(g.pold.len() - 1) {
        s.same(|| format!("pold {i}"), &t.pold[i], &g.pold[i]);
    }
    for i in 0..=cx.nmax.min(g.q_polys.len() - 1) {
        if let Some(p) = s.ok(|| format!("q_{i}"), q_poly(i)) {
            s.same(|| format!("q_{i}"), &p, &g.q_polys[i]);
        }
    }
    for n in 0..=cx.nmax.min(g.dyck_rows.len() - 1) {
        let row: crate::Result<Vec<Integer>> = (0..=n / 2).map(|k| dyck_t(n, k)).collect();
        if let Some(row) = s.ok(|| format!("T({n}, .)"), row) {
            s.same(|| format!("T({n}, .)"), &row, &g.dyck_rows[n]);
        }
    }
    s
}

fn algorithm_vs_closed_forms(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("algorithm and closed forms");
    let t = cx.table;
    for r in 0..=cx.rmax {
        s.same(|| format!("d_{}({r})", 2 * r), &t.d[r][2 * r], &catalan(r));
        for i in 0..=2 * r {
            s.same(|| format!("c_{i}({r})"), &t.c[r][i], &closed_form_c(i, r));
            s.same(|| format!("d_{i}({r})"), &t.d[r][i], &closed_form_d(i, r));
        }
        s.check(closed_form_d(2 * r + 1, r).is_zero(), || format!("d_{}({r}) nonzero", 2 * r + 1));
    }
    s
}

fn recursion(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("quadratic recursion");
    let mut memo = HashMap::new();
    for r in 0..=cx.rmax.min(15) {
        for i in 0..=2 * r {
            let v = recursion_d(i, r, &mut memo);
            s.same(|| format!("recursive d_{i}({r})"), &v, &closed_form_d(i, r));
        }
    }
    s
}

fn alternating_form(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("alternating form of c");
    for r in 0..=cx.rmax {
        for i in 0..=2 * r {
            s.same(|| format!("alternating c_{i}({r})"), &alt_form_c(i, r), &closed_form_c(i, r));
        }
    }
    for r in 0..=40 {
        let sum: Integer = (0..=2 * r)
            .map(|i| if i % 2 == 0 { closed_form_c(i, r) } else { -closed_form_c(i, r) })
            .sum();
        s.same(|| format!("alternating sum of c row {r}"), &sum, &catalan(r));
    }
    s
}

fn generating(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("generating functions");
    let m = cx.rmax.min(12);
    let g1 = g_by_catalan(m, m);
    if let Some(g2) = s.ok(|| "g by square root".into(), g_by_sqrt(m, m)) {
        s.check(g1 == g2, || "two expansions of g differ".into());
    }
    let f1 = f_by_coefficients(m, m);
    if let Some(f2) = s.ok(|| "f by square root".into(), f_by_sqrt(m, m)) {
        s.check(f1 == f2, || "two expansions of f differ".into());
    }
    let h = s.ok(|| "h".into(), h_closed(m, m));
    for r in 0..=m {
        for i in 0..=m {
            s.same(|| format!("[x^{r} y^{i}] g"), g1.coeff(r, i), &q(closed_form_d(i, r)));
            s.same(|| format!("[x^{r} y^{i}] f"), f1.coeff(r, i), &q(closed_form_c(i, r)));
            if let Some(h) = &h {
                s.same(|| format!("[x^{r} y^{i}] h"), h.coeff(r, i), &q(closed_form_c(i, r)));
            }
        }
    }
    if let (Some(nar), Some(sq)) = (
        s.ok(|| "Narayana series".into(), narayana_series(m, m)),
        s.ok(|| "central squares".into(), central_square_series(m, m)),
    ) {
        for r in 0..=m {
            for a in 0..=m {
                s.same(|| format!("N({r}, {a})"), nar.coeff(r, a), &narayana(r, a));
                s.same(|| format!("binom({r}, {a})^2"), sq.coeff(r, a), &q(binom(r, a) * binom(r, a)));
            }
        }
    }
    let nw = cx.nmax.min(12);
    if let Some(w) = s.ok(|| "Dyck generating function".into(), generating_w(nw, nw / 2)) {
        for n in 0..=nw {
            for k in 0..=n / 2 {
                if let Some(t) = s.ok(|| format!("T({n}, {k})"), dyck_t(n, k)) {
                    s.same(|| format!("[u^{n} t^{k}] w"), w.coeff(n, k), &q(t));
                }
            }
        }
    }
    s
}

fn dyck_reversal(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("q polynomials and Dyck numbers");
    for n in 0..=cx.nmax {
        if let Some(ok) = s.ok(|| format!("reversal n={n}"), kl_reversal_check(n)) {
            s.check(ok, || format!("q_{n} reversed is not T({n}, .)"));
        }
    }
    s
}

fn table_properties(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("table properties");
    let report = property_suite(cx.table);
    s.checks += report.rows_checked;
    s.failures.extend(report.failures.iter().map(ToString::to_string));
    s
}

/// Deterministic sample of degree vectors with `n <= 8`, entries `<= 50`.
fn sample_degree_vectors() -> Vec<DegreeVector> {
    let mut out = Vec::new();
    for n in 0..=8usize {
        for r_gen in 1..=4i64 {
            for seed in 0..4usize {
                let entries: Vec<i64> = (0..=n)
                    .map(|i| if i == 0 { 1 } else { ((seed * 17 + i * i * 7 + i * 3 + n) % 51) as i64 })
                    .collect();
                out.push(DegreeVector::from_ints(r_gen, &entries).expect("valid sample"));
            }
        }
    }
    out
}

fn characteristic_classes(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("characteristic classes");
    for dv in sample_degree_vectors() {
        let n = dv.n();
        let seg = segre_from_degrees(&dv);
        if let Some(back) = s.ok(|| format!("degrees from Segre {dv:?}"), degrees_from_segre(n, dv.r_gen(), &seg)) {
            s.same(|| "degree roundtrip".into(), &back, &dv);
        }
        let csm = csm_hypersurface(&dv);
        let total = csm.add(&csm_complement(&dv)).expect("same ambient");
        s.same(|| format!("inclusion-exclusion {dv:?}"), &total, &crate::algebra::ChowClass::one_plus_h_pow(n, n + 1));
        let drop = csm.degree() - csm.section().degree();
        s.same(|| format!("section Euler drop {dv:?}"), &drop, &q(euler_defect(&dv)));
    }
    for n in 1..=8usize {
        for k in 1..=6usize {
            let drop = fulton_hypersurface(n, k).degree() - fulton_hypersurface(n - 1, k).pushforward().degree();
            let pow = num_traits::pow(Integer::from(k as i64 - 1), n);
            let want = if n % 2 == 0 { Integer::one() - pow } else { Integer::one() + pow };
            s.same(|| format!("Fulton section drop n={n} k={k}"), &drop, &q(want));
        }
    }
    for (name, k) in [("secant_cubic", 3usize), ("discriminant_cubic", 3)] {
        let g = cx.golden;
        let Some(degs) = s.ok(|| format!("{name} degrees"), g.example_integers(&format!("{name}.degrees"))) else {
            continue;
        };
        let Some(dv) = s.ok(|| format!("{name} degree vector"), DegreeVector::new(Integer::from(k - 1), degs)) else {
            continue;
        };
        let Some(rep) = s.ok(|| format!("{name} report"), HypersurfaceReport::from_degrees(&dv, k)) else {
            continue;
        };
        for (field, class) in [("csm", &rep.csm), ("fulton", &rep.fulton), ("milnor", &rep.milnor), ("section_milnor", &rep.section_milnor)] {
            if let Some(want) = s.ok(|| format!("{name}.{field}"), g.example_class(&format!("{name}.{field}"))) {
                s.same(|| format!("{name} {field}"), class, &want);
            }
        }
        for (field, value) in [("mu", &rep.mu), ("mu_section", &rep.mu_section), ("grad_degree", &rep.grad_degree)] {
            if let Some(want) = s.ok(|| format!("{name}.{field}"), g.example_integer(&format!("{name}.{field}"))) {
                s.same(|| format!("{name} {field}"), value, &want);
            }
        }
        if let Ok(seg) = g.example_class(&format!("{name}.segre")) {
            s.same(|| format!("{name} Segre class"), &segre_from_degrees(&dv), &seg);
        }
        if let Ok(sec) = g.example_class(&format!("{name}.section_csm")) {
            s.same(|| format!("{name} section class"), &rep.csm.section(), &sec);
        }
    }
    for r in 1..=12usize {
        let chi = Integer::from(2 * r);
        s.same(|| format!("gradient degree from Euler characteristics r={r}"), &grad_degree_chi(2 * r, &chi, &chi_section_secant(r)), &catalan(r));
    }
    for r in 2..=8usize {
        let d: Vec<Integer> = (0..=2 * r).map(|i| closed_form_d(i, r)).collect();
        let Some(dv) = s.ok(|| format!("degrees r={r}"), DegreeVector::new(Integer::from(r), d)) else { continue };
        let k = r + 1;
        if let Some(rep) = s.ok(|| format!("report r={r}"), HypersurfaceReport::from_degrees(&dv, k)) {
            let via_mu = grad_degree_milnor(2 * r, k, &rep.mu, &rep.mu_section);
            s.same(|| format!("Milnor route r={r}"), &via_mu, &catalan(r));
        }
    }
    s
}

fn hilbert(_cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("Hilbert series");
    let one_minus_t = Poly::from_ints([1, -1]);
    for k in 1..=6usize {
        for c in 0..=5usize {
            let closed = maximal_minor_numerator(k, c);
            if let Some(det) = s.ok(|| format!("determinant k={k} c={c}"), abhyankar_numerator(k + 1 + c, k + 1, k)) {
                s.same(|| format!("determinant numerator k={k} c={c}"), &det, &closed);
            }
            if let Some(t) = s.ok(|| format!("transposed k={k} c={c}"), abhyankar_numerator(k + 1, k + 1 + c, k)) {
                s.same(|| format!("transposed numerator k={k} c={c}"), &t, &closed);
            }
            if let Some(en) = s.ok(|| format!("Eagon-Northcott s={} c={c}", k + 1), eagon_northcott_numerator(k + 1, c)) {
                s.same(|| format!("Eagon-Northcott k={k} c={c}"), &en, &(&one_minus_t.pow(c + 1) * &closed));
            }
            let h: Vec<Integer> = (0..=k).map(|j| binom(c + j, j)).collect();
            s.same(|| format!("h-vector k={k} c={c}"), &closed, &Poly::from_integers(h));
        }
    }
    for n in 2..=12usize {
        for k in 1..=n / 2 {
            let Some(hs) = s.ok(|| format!("secant series n={n} k={k}"), secant_hilbert_series(n, k)) else {
                continue;
            };
            s.same(|| format!("degree n={n} k={k}"), &hs.degree(), &q(binom(n - k + 1, k)));
            // cutting the generic determinantal ring by the linear forms that
            // identify anti-diagonals
            let generic = maximal_minor_series(k, n - 2 * k);
            let cuts = k * (n - k);
            s.same(|| format!("Hankel specialisation n={n} k={k}"), &(generic.numerator.clone(), generic.denominator_power - cuts), &(hs.numerator.clone(), hs.denominator_power));
            if let Some(p) = s.ok(|| format!("Hilbert polynomial n={n} k={k}"), hilbert_polynomial(&hs)) {
                s.same(|| format!("leading coefficient n={n} k={k}"), p.coeffs.last().unwrap(), &hs.degree());
                let deg = hs.numerator.degree().unwrap_or(0);
                for m in deg..=3 * deg.max(1) {
                    s.same(|| format!("Hilbert function n={n} k={k} t={m}"), &p.eval(m as i64), &hs.coefficient(m));
                }
            }
        }
    }
    for r in 2..=40usize {
        if let Some(g) = s.ok(|| format!("genus r={r}"), section_curve_genus(r)) {
            s.same(|| format!("genus r={r}"), &g, &section_curve_genus_closed_form(r));
        }
    }
    s
}

fn secant(cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("secant varieties");
    for n in 2..=16usize {
        for k in 1..=n / 2 {
            if let Some(c) = s.ok(|| format!("Euler characteristic n={n} k={k}"), euler_char_secant(n, k)) {
                s.same(|| format!("Euler characteristic n={n} k={k}"), &c.euler_char, &(2 * k));
            }
        }
    }
    for r in 1..=30usize {
        if let Some(m) = s.ok(|| format!("Mather class r={r}"), mather_class_secant(r)) {
            for j in 1..=2 * r {
                s.check(m.coeff(j).is_positive(), || format!("Mather coefficient h^{j} for r={r} not positive"));
            }
            if r <= 12 {
                s.same(|| format!("Mather class from the dual r={r}"), &mather_from_dual(r), &m);
            }
        }
        if let Some(ed) = s.ok(|| format!("ED degree r={r}"), g_ed_degree_secant(r)) {
            s.same(|| format!("ED degree r={r}"), &ed, &g_ed_degree_closed_form(r));
        }
        let low = low_projective_degrees(r);
        for (i, v) in low.iter().enumerate() {
            s.same(|| format!("d_{i}({r}) low formula"), v, &closed_form_d(i, r));
        }
        s.same(|| format!("gradient degree r={r}"), &grad_degree_secant(r), &closed_form_d(2 * r, r));
    }
    for (r, want) in &cx.golden.mather {
        if let Some(m) = s.ok(|| format!("Mather class r={r}"), mather_class_secant(*r)) {
            s.same(|| format!("reference Mather class r={r}"), &m, want);
        }
    }
    for (r, want) in &cx.golden.polar {
        if let Some(p) = s.ok(|| format!("polar degrees r={r}"), polar_degrees_secant(*r)) {
            s.same(|| format!("reference polar degrees r={r}"), &p, want);
        }
    }
    for r in 1..=10usize {
        let d: Vec<Integer> = (0..=2 * r).map(|i| closed_form_d(i, r)).collect();
        let Some(dv) = s.ok(|| format!("degrees r={r}"), DegreeVector::new(Integer::from(r), d)) else { continue };
        if let Some(c) = s.ok(|| format!("CSM class r={r}"), csm_secant(r, &dv)) {
            for i in 0..2 * r {
                s.check(c.dim_coeff(i).is_positive(), || format!("CSM coefficient [P^{i}] for r={r} not positive"));
            }
            s.check(c.dim_coeff(2 * r).is_zero(), || format!("CSM class for r={r} has a top-dimensional part"));
            s.same(|| format!("CSM degree r={r}"), c.degree(), &q(Integer::from(2 * r)));
        }
    }
    s
}

fn algebra(_cx: &Ctx) -> SuiteResult {
    let mut s = SuiteResult::new("algebra");
    for a in 0..=30usize {
        for d in 0..=a {
            s.same(|| format!("binom({a}, {d})"), &binom(a, d), &(factorial(a) / (factorial(d) * factorial(a - d))));
        }
        s.check(binom(a, a + 1).is_zero(), || format!("binom({a}, {}) nonzero", a + 1));
    }
    for seed in 0..40i64 {
        let p = Poly::from_ints((0..=(seed % 21)).map(|i| (seed * 7 + i * i * 3) % 11 - 5));
        s.same(|| format!("involution twice, sample {seed}"), &involution(&involution(&p)), &p);
    }
    s
}

type Suite = fn(&Ctx) -> SuiteResult;

/// Runs every suite, using `golden` as the reference data.
pub fn verify_all(rmax: usize, nmax: usize, golden: &Golden) -> VerifyReport {
    let table = match run_algorithm(rmax) {
        Ok(t) => t,
        Err(e) => {
            let mut s = SuiteResult::new("algorithm");
            s.checks = 1;
            s.failures.push(e.to_string());
            return VerifyReport { rmax, nmax, suites: vec![s] };
        }
    };
    let cx = Ctx { rmax, nmax, golden, table: &table };
    let suites: [Suite; 11] = [
        algebra,
        golden_tables,
        algorithm_vs_closed_forms,
        recursion,
        alternating_form,
        generating,
        dyck_reversal,
        table_properties,
        characteristic_classes,
        hilbert,
        secant,
    ];
    let results = suites.par_iter().map(|f| f(&cx)).collect();
    VerifyReport { rmax, nmax, suites: results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = verify_all(7, 8, Golden::embedded());
        assert!(report.passed(), "{:#?}", report.failures());
    }

    #[test]
    fn perturbed_reference_fails() {
        let mut g = Golden::embedded().clone();
        g.d_rows[5][4] += 1;
        let report = verify_all(6, 6, &g);
        assert!(!report.passed());
        assert!(report.failures().iter().any(|f| f.contains("d row 5")));
    }
}

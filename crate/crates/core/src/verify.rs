//! Exhaustive invariant checks for one box size, plus the built-in worked
//! examples. Backs the `verify` subcommand.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::bijection::{big_phi_direct, big_phi_inverse, big_phi_zeta, direct_trace, phi, psi, zeta};
use crate::error::Result;
use crate::ew::{
    cornersupport_mask_bruteforce, cornersupport_mask_fast, enumerate_ew, enumerate_mew, eta, marks_from_decoration,
    sort_to_staircase, validate_ew, validate_marked, EwTableau, MarkedEwTableau,
};
use crate::fixtures;
use crate::format::{to_text, Document};
use crate::grid::{Grid01, LabelVector, Labelling};
use crate::guard::SizeGuard;
use crate::poly::{
    bounce, decompose, enumerate_lpara, enumerate_lrib, enumerate_para, expand, validate_lpara, validate_lrib,
    LabelledPara, LabelledRibbon,
};

/// Outcome of one named check. `counterexample` holds the first failing
/// object in the text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl Check {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, detail: detail.into(), counterexample: None }
    }

    fn fail(name: &str, detail: impl Into<String>, counterexample: Option<String>) -> Self {
        Check { name: name.into(), passed: false, detail: detail.into(), counterexample }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub ew: usize,
    pub lrib: usize,
    pub mew: usize,
    pub lpara: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub m: usize,
    pub n: usize,
    pub counts: Counts,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// One line per check, then the family sizes.
    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = format!("verify {}x{}\n", self.m, self.n);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:width$}  {}", c.name, c.detail);
        }
        let c = self.counts;
        let _ = writeln!(out, "|EW|={} |LRib|={} |MEW|={} |LPara|={}", c.ew, c.lrib, c.mew, c.lpara);
        out
    }
}

fn ew_text(t: &EwTableau) -> String {
    to_text(&Document::new(t.grid().clone()))
}

fn mew_text(mt: &MarkedEwTableau) -> String {
    to_text(&Document::new(mt.tableau().grid().clone()).with_decoration(mt.decoration().clone()))
}

fn labelled_text(g: &Grid01, l: &Labelling) -> String {
    to_text(&Document::new(g.clone()).with_labels(l.clone()))
}

/// Runs `f` on each item and reports the first failure.
fn check_all<T>(name: &str, items: &[T], show: impl Fn(&T) -> String, f: impl Fn(&T) -> bool) -> Check {
    match items.iter().find(|x| !f(x)) {
        None => Check::pass(name, format!("{} objects", items.len())),
        Some(x) => Check::fail(name, "counterexample found", Some(show(x))),
    }
}

fn check_eq(name: &str, left: usize, right: usize) -> Check {
    if left == right {
        Check::pass(name, format!("{left} = {right}"))
    } else {
        Check::fail(name, format!("{left} != {right}"), None)
    }
}

/// Every invariant for `m x n`: family sizes, φ/ψ round trips, mask
/// agreement, markability, both Φ presentations, Φ/Φ⁻¹ round trips,
/// decompose/expand round trips and bounce invariants.
pub fn run_suite(m: usize, n: usize, guard: &SizeGuard) -> Result<Report> {
    guard.check_poly(m, n)?;
    let ew: Vec<EwTableau> = enumerate_ew(m, n, guard)?.collect();
    let lrib: Vec<LabelledRibbon> = enumerate_lrib(m, n, guard)?;
    let mew: Vec<MarkedEwTableau> = enumerate_mew(m, n, guard)?.collect();
    let lpara: Vec<LabelledPara> = enumerate_lpara(m, n, guard)?;
    let para = enumerate_para(m, n, guard)?;
    let counts = Counts { ew: ew.len(), lrib: lrib.len(), mew: mew.len(), lpara: lpara.len() };

    let lrib_text = |d: &LabelledRibbon| labelled_text(d.grid(), d.labels());
    let lpara_text = |d: &LabelledPara| labelled_text(d.grid(), d.labels());

    let mut checks = vec![
        check_eq("|EW| = |LRib|", ew.len(), lrib.len()),
        check_eq("|MEW| = |LPara|", mew.len(), lpara.len()),
        check_all("psi(phi(T)) = T", &ew, ew_text, |t| psi(&phi(t)) == *t),
        check_all("phi(psi(R)) = R", &lrib, lrib_text, |d| phi(&psi(d)) == *d),
        check_all("fast mask = brute-force mask", &ew, ew_text, |t| {
            cornersupport_mask_fast(t) == cornersupport_mask_bruteforce(t)
        }),
        check_all("every line has a markable entry", &ew, ew_text, |t| eta(t).as_slice().iter().all(|&e| e >= 1)),
        check_all("staircase rows and columns nest", &ew, ew_text, |t| {
            let s = sort_to_staircase(t).grid;
            (1..=m)
                .all(|i| (1..=n).all(|j| !s.get(i, j) || ((j == n || s.get(i, j + 1)) && (i == 1 || s.get(i - 1, j)))))
        }),
        check_all(
            "Phi direct = Phi via zeta",
            &mew,
            mew_text,
            |mt| matches!((big_phi_zeta(mt), big_phi_direct(mt)), (Ok(a), Ok(b)) if a == b),
        ),
        check_all("Phi^-1(Phi(M)) = M", &mew, mew_text, |mt| {
            big_phi_zeta(mt).and_then(|d| big_phi_inverse(&d)).ok().as_ref() == Some(mt)
        }),
        check_all("Phi(Phi^-1(D)) = D", &lpara, lpara_text, |d| {
            big_phi_inverse(d).and_then(|mt| big_phi_zeta(&mt)).ok().as_ref() == Some(d)
        }),
        check_all("expand(decompose(D)) = D", &lpara, lpara_text, |d| {
            let (r, z) = decompose(d);
            expand(&r, &z).ok().as_ref() == Some(d)
        }),
        check_all(
            "bounce is an idempotent ribbon",
            &para,
            |p| to_text(&Document::new(p.grid().clone())),
            |p| {
                let b = bounce(p);
                b.grid().count_ones() == m + n - 1 && bounce(&b) == b
            },
        ),
        check_all("zero surplus gives phi(T)", &ew, ew_text, |t| {
            let e = eta(t);
            let a = LabelVector::new(e.as_slice().iter().map(|&x| x - 1).collect());
            let mt = validate_marked(t.clone(), a).expect("top decoration is in range");
            matches!(big_phi_zeta(&mt), Ok(d) if d == phi(t).to_para())
        }),
    ];

    let images: BTreeSet<LabelledPara> = mew.iter().filter_map(|mt| big_phi_zeta(mt).ok()).collect();
    checks.push(check_eq("Phi is injective", images.len(), mew.len()));

    Ok(Report { m, n, counts, checks })
}

fn grid(s: &str) -> Grid01 {
    Grid01::parse_compact(s).expect("fixture grid")
}

fn labels<const M: usize, const N: usize>(l: fixtures::Labels<M, N>) -> Labelling {
    Labelling::new(l.0.to_vec(), l.1.to_vec()).expect("fixture labels")
}

fn ew_fixture(s: &str) -> EwTableau {
    validate_ew(grid(s)).expect("fixture tableau")
}

fn golden(name: &str, f: impl FnOnce() -> std::result::Result<(), String>) -> Check {
    match f() {
        Ok(()) => Check::pass(name, "matches"),
        Err(detail) => Check::fail(name, detail, None),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

/// The built-in worked examples.
pub fn golden_checks() -> Vec<Check> {
    vec![
        golden("EW_{3,2} listing", || {
            let got: BTreeSet<String> = enumerate_ew(3, 2, &SizeGuard::default())
                .map_err(|e| e.to_string())?
                .map(|t| t.grid().to_string())
                .collect();
            let want: BTreeSet<String> = fixtures::EW_3X2.iter().map(|s| s.to_string()).collect();
            expect_eq("EW_{3,2}", got, want)
        }),
        golden("phi small examples", || {
            for (t, r, l) in fixtures::PHI_SMALL {
                let d = phi(&ew_fixture(t));
                expect_eq(t, (d.grid().to_string(), d.labels().clone()), (r.to_string(), labels(l)))?;
            }
            Ok(())
        }),
        golden("phi 7x13", || {
            let t = ew_fixture(fixtures::T_7X13);
            let s = sort_to_staircase(&t);
            expect_eq("staircase", s.grid.to_string(), fixtures::STAIR_7X13.to_string())?;
            expect_eq("staircase labels", s.labels, labels(fixtures::STAIR_LABELS_7X13))?;
            let d = phi(&t);
            expect_eq("ribbon", d.grid().to_string(), fixtures::RIBBON_7X13.to_string())?;
            expect_eq("ribbon labels", d.labels().clone(), labels(fixtures::STAIR_LABELS_7X13))
        }),
        golden("psi examples", || {
            let d = validate_lrib(grid(fixtures::PSI_RIBBON_3X4), labels(fixtures::PSI_LABELS_3X4))
                .map_err(|e| e.to_string())?;
            expect_eq("3x4", psi(&d).grid().to_string(), fixtures::PSI_TABLEAU_3X4.to_string())?;
            let d = validate_lrib(grid(fixtures::PSI_RIBBON_4X5), labels(fixtures::PSI_LABELS_4X5))
                .map_err(|e| e.to_string())?;
            expect_eq("4x5", psi(&d).grid().to_string(), fixtures::PSI_TABLEAU_4X5.to_string())
        }),
        golden("eta examples", || {
            expect_eq("4x4", eta(&ew_fixture(fixtures::ETA_4X4)).into_vec(), fixtures::ETA_4X4_VALUES.to_vec())?;
            expect_eq("7x13", eta(&ew_fixture(fixtures::T_7X13)).into_vec(), fixtures::ETA_7X13.to_vec())
        }),
        golden("cornersupport mask 7x13", || {
            let t = ew_fixture(fixtures::T_7X13);
            expect_eq("fast", cornersupport_mask_fast(&t).to_string(), fixtures::MASK_7X13.to_string())?;
            expect_eq("brute force", cornersupport_mask_bruteforce(&t).to_string(), fixtures::MASK_7X13.to_string())
        }),
        golden("marks 7x13", || {
            let t = ew_fixture(fixtures::T_7X13);
            for (a, marks) in [
                (fixtures::DECORATION_A_7X13, fixtures::MARKS_A_7X13),
                (fixtures::DECORATION_B_7X13, fixtures::MARKS_B_7X13),
            ] {
                let mt = validate_marked(t.clone(), a.to_vec().into()).map_err(|e| e.to_string())?;
                expect_eq("marks", marks_from_decoration(&mt), marks.into_iter().collect())?;
            }
            Ok(())
        }),
        golden("surplus 6x4", || {
            let d = validate_lpara(grid(fixtures::PARA_6X4), labels(fixtures::SURPLUS_LABELS))
                .map_err(|e| e.to_string())?;
            let (r, z) = decompose(&d);
            expect_eq("ribbon", r.grid().to_string(), fixtures::BOUNCE_6X4.to_string())?;
            expect_eq("ribbon labels", r.labels().clone(), labels(fixtures::SURPLUS_RIBBON_LABELS))?;
            expect_eq("surplus", z.as_slice(), &fixtures::SURPLUS_6X4[..])?;
            expect_eq("expand", expand(&r, &z).map_err(|e| e.to_string())?, d)
        }),
        golden("Phi 7x13", || {
            let t = ew_fixture(fixtures::T_7X13);
            let mt = validate_marked(t, fixtures::DECORATION_B_7X13.to_vec().into()).map_err(|e| e.to_string())?;
            expect_eq("zeta", zeta(&mt).into_vec(), fixtures::ZETA_7X13.to_vec())?;
            let tr = direct_trace(&mt);
            expect_eq("h rows", &tr.h.as_slice()[..6], &fixtures::H_ROWS_7X13[..])?;
            expect_eq("h cols", &tr.h.as_slice()[6..], &fixtures::H_COLS_7X13[..])?;
            expect_eq("pi", tr.pi, fixtures::PI_7X13.to_vec())?;
            expect_eq("sigma", tr.sigma, fixtures::SIGMA_7X13.to_vec())?;
            let want = validate_lpara(grid(fixtures::PARA_7X13), labels(fixtures::PARA_LABELS_7X13))
                .map_err(|e| e.to_string())?;
            expect_eq("via zeta", big_phi_zeta(&mt).map_err(|e| e.to_string())?, want.clone())?;
            expect_eq("direct", big_phi_direct(&mt).map_err(|e| e.to_string())?, want.clone())?;
            expect_eq("inverse", big_phi_inverse(&want).map_err(|e| e.to_string())?, mt)
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn goldens_pass() {
        for c in golden_checks() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn small_suite() {
        let r = run_suite(3, 2, &SizeGuard::default()).unwrap();
        assert!(r.passed(), "{}", r.to_table());
        assert_eq!(r.counts, Counts { ew: 7, lrib: 7, mew: 12, lpara: 12 });
        assert!(r.to_table().contains("|EW|=7 |LRib|=7 |MEW|=12 |LPara|=12"));
    }

    #[test]
    fn failing_check_reports_object() {
        let t = ew_fixture("11/00");
        let c = check_all("never", &[t], ew_text, |_| false);
        assert!(!c.passed);
        assert_eq!(c.counterexample.as_deref(), Some("grid: 2 2\n11\n00\n"));
    }
}

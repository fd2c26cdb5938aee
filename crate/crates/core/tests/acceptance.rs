//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every criterion reports even when an earlier one fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use tabij_core::ew::{
    cornersupport_mask_bruteforce, cornersupport_mask_fast, enumerate_ew, enumerate_mew, eta, sort_to_staircase,
    CornerSupportMask,
};
use tabij_core::fixtures;
use tabij_core::poly::{decompose, enumerate_lrib, expand};
use tabij_core::{
    big_phi_direct, big_phi_inverse, big_phi_zeta, direct_trace, phi, psi, validate_ew, validate_lpara, validate_lrib,
    validate_marked, zeta, EwTableau, Grid01, LabelVector, Labelling, SizeGuard,
};

type Outcome = Result<String, String>;

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn grid(s: &str) -> Grid01 {
    Grid01::parse_compact(s).unwrap()
}

fn ew(s: &str) -> EwTableau {
    validate_ew(grid(s)).unwrap()
}

fn labels<const M: usize, const N: usize>(l: fixtures::Labels<M, N>) -> Labelling {
    Labelling::new(l.0.to_vec(), l.1.to_vec()).unwrap()
}

/// Every 0/1 filling of an `m x n` box, top row included.
fn all_grids(m: usize, n: usize) -> impl Iterator<Item = Grid01> {
    (0u64..1 << (m * n)).map(move |bits| Grid01::from_fn(m, n, |i, j| bits >> ((i - 1) * n + j - 1) & 1 == 1).unwrap())
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.is_empty() {
        return vec![vec![]];
    }
    let mut out = vec![];
    for k in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Eta straight from the brute-force mask.
fn eta_brute(t: &EwTableau) -> Vec<usize> {
    let mask = cornersupport_mask_bruteforce(t);
    let g = t.grid();
    let (m, n) = (t.m(), t.n());
    let mut out = vec![];
    for i in 2..=m {
        out.push((1..=n).filter(|&j| !g.get(i, j) && !mask.is_cornersupport(i, j)).count());
    }
    for j in 1..=n {
        out.push((1..=m).filter(|&i| g.get(i, j) && !mask.is_cornersupport(i, j)).count());
    }
    out
}

fn product(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out.into_iter().flat_map(|p: Vec<usize>| (0..b).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// A uniformly shaped random EW-tableau: a staircase with random zero
/// counts below the top row, rows and columns then shuffled.
fn random_ew(rng: &mut StdRng, m: usize, n: usize) -> EwTableau {
    let zeros: Vec<usize> = (1..m).map(|_| rng.gen_range(1..=n)).collect();
    let mut rows: Vec<usize> = (2..=m).collect();
    rows.shuffle(rng);
    let mut cols: Vec<usize> = (1..=n).collect();
    cols.shuffle(rng);
    let g = Grid01::from_fn(m, n, |i, j| i == 1 || cols[j - 1] > zeros[rows[i - 2] - 2]).unwrap();
    validate_ew(g).expect("shuffled staircase is an EW-tableau")
}

fn c1() -> Outcome {
    let got: Vec<String> = enumerate_ew(3, 2, &SizeGuard::default()).unwrap().map(|t| t.grid().to_string()).collect();
    let brute: BTreeSet<String> =
        all_grids(3, 2).filter(|g| validate_ew(g.clone()).is_ok()).map(|g| g.to_string()).collect();
    let listed: BTreeSet<String> = fixtures::EW_3X2.iter().map(|s| s.to_string()).collect();
    same("count", got.len(), 7)?;
    same("enumeration vs listing", got.iter().cloned().collect::<BTreeSet<_>>(), listed.clone())?;
    same("filter oracle vs listing", brute, listed)?;
    Ok("7 tableaux, set matches".into())
}

fn c2() -> Outcome {
    for (t, r, l) in fixtures::PHI_SMALL {
        let d = phi(&ew(t));
        same(t, (d.grid().to_string(), d.labels().clone()), (r.to_string(), labels(l)))?;
    }
    let t = ew(fixtures::T_7X13);
    let s = sort_to_staircase(&t);
    same("T'", s.grid.to_string(), fixtures::STAIR_7X13.to_string())?;
    same("labels", s.labels.clone(), labels(fixtures::STAIR_LABELS_7X13))?;
    let d = phi(&t);
    same("R", d.grid().to_string(), fixtures::RIBBON_7X13.to_string())?;
    same("R labels", d.labels().clone(), labels(fixtures::STAIR_LABELS_7X13))?;
    Ok("3 small examples and the 7x13 example".into())
}

fn c3() -> Outcome {
    let d =
        validate_lrib(grid(fixtures::PSI_RIBBON_3X4), labels(fixtures::PSI_LABELS_3X4)).map_err(|e| e.to_string())?;
    same("T", psi(&d).grid().to_string(), fixtures::PSI_TABLEAU_3X4.to_string())?;
    Ok(format!("psi = {}", fixtures::PSI_TABLEAU_3X4))
}

fn c4() -> Outcome {
    let g = SizeGuard::default();
    let mut sizes: Vec<(usize, usize)> = (1..=4).flat_map(|m| (1..=4).map(move |n| (m, n))).collect();
    sizes.extend([(5, 3), (3, 5)]);
    let mut total = 0;
    for (m, n) in sizes {
        let ews: Vec<EwTableau> = enumerate_ew(m, n, &g).unwrap().collect();
        let ribs = enumerate_lrib(m, n, &g).unwrap();
        same(&format!("|EW_{{{m},{n}}}| vs |LRib|"), ews.len(), ribs.len())?;
        if let Some(t) = ews.iter().find(|t| psi(&phi(t)) != **t) {
            return Err(format!("psi(phi(T)) != T for {}", t.grid()));
        }
        if let Some(d) = ribs.iter().find(|d| phi(&psi(d)) != **d) {
            return Err(format!("phi(psi(R)) != R for {}", d.grid()));
        }
        total += ews.len();
    }
    Ok(format!("{total} tableaux over 18 sizes"))
}

fn c5() -> Outcome {
    let t = ew(fixtures::ETA_4X4);
    same("4x4 eta", eta(&t).into_vec(), fixtures::ETA_4X4_VALUES.to_vec())?;
    same("4x4 eta (brute force)", eta_brute(&t), fixtures::ETA_4X4_VALUES.to_vec())?;
    let t13 = ew(fixtures::T_7X13);
    same("7x13 eta", eta(&t13).into_vec(), fixtures::ETA_7X13.to_vec())?;
    same("7x13 eta (brute force)", eta_brute(&t13), fixtures::ETA_7X13.to_vec())?;

    let valid: BTreeSet<Vec<usize>> = product(&[3; 7])
        .into_iter()
        .filter(|a| validate_marked(t.clone(), LabelVector::new(a.clone())).is_ok())
        .collect();
    let want: BTreeSet<Vec<usize>> = fixtures::ETA_4X4_DECORATIONS.iter().map(|a| a.to_vec()).collect();
    same("4x4 decorations", valid, want)?;
    Ok("both eta vectors, 4 decorations".into())
}

fn c6() -> Outcome {
    let g = SizeGuard::default();
    let mut checked = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            for t in enumerate_ew(m, n, &g).unwrap() {
                if cornersupport_mask_fast(&t) != cornersupport_mask_bruteforce(&t) {
                    return Err(format!("masks differ on {}", t.grid()));
                }
                checked += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let (m, n) = (rng.gen_range(1..=7), rng.gen_range(1..=13));
        let t = random_ew(&mut rng, m, n);
        if cornersupport_mask_fast(&t) != cornersupport_mask_bruteforce(&t) {
            return Err(format!("masks differ on {}", t.grid()));
        }
    }
    let t = ew(fixtures::T_7X13);
    let table: CornerSupportMask = cornersupport_mask_bruteforce(&t);
    same("7x13 table (brute force)", table.to_string(), fixtures::MASK_7X13.to_string())?;
    same("7x13 table (fast)", cornersupport_mask_fast(&t).to_string(), fixtures::MASK_7X13.to_string())?;
    Ok(format!("{checked} exhaustive + 1000 random, 7x13 table"))
}

fn c7() -> Outcome {
    let d = validate_lpara(grid(fixtures::PARA_6X4), labels(fixtures::SURPLUS_LABELS)).map_err(|e| e.to_string())?;
    let (r, z) = decompose(&d);
    same("surp", z.as_slice(), &fixtures::SURPLUS_6X4[..])?;
    same("ribbon", r.grid().to_string(), fixtures::BOUNCE_6X4.to_string())?;
    same("l'", r.labels().clone(), labels(fixtures::SURPLUS_RIBBON_LABELS))?;
    same("expand", expand(&r, &z).map_err(|e| e.to_string())?, d)?;
    Ok("surp = (0,1,0,1,1,0,0,0,1)".into())
}

fn c8() -> Outcome {
    let mt = validate_marked(ew(fixtures::T_7X13), fixtures::DECORATION_B_7X13.to_vec().into())
        .map_err(|e| e.to_string())?;
    same("zeta", zeta(&mt).into_vec(), fixtures::ZETA_7X13.to_vec())?;
    let tr = direct_trace(&mt);
    same("h rows", &tr.h.as_slice()[..6], &fixtures::H_ROWS_7X13[..])?;
    same("h cols", &tr.h.as_slice()[6..], &fixtures::H_COLS_7X13[..])?;
    same("pi", tr.pi.clone(), fixtures::PI_7X13.to_vec())?;
    same("sigma", tr.sigma.clone(), fixtures::SIGMA_7X13.to_vec())?;
    let want =
        validate_lpara(grid(fixtures::PARA_7X13), labels(fixtures::PARA_LABELS_7X13)).map_err(|e| e.to_string())?;
    let via_zeta = big_phi_zeta(&mt).map_err(|e| e.to_string())?;
    let direct = big_phi_direct(&mt).map_err(|e| e.to_string())?;
    same("via zeta", &via_zeta, &want)?;
    same("direct", &direct, &want)?;
    Ok("zeta, h, pi, sigma and the polyomino agree".into())
}

fn c9() -> Outcome {
    let g = SizeGuard::default();
    let mut sizes: Vec<(usize, usize)> = (1..=3).flat_map(|m| (1..=3).map(move |n| (m, n))).collect();
    sizes.push((4, 3));
    let mut total = 0;
    for (m, n) in sizes {
        let mew: Vec<_> = enumerate_mew(m, n, &g).unwrap().collect();
        let lpara = tabij_core::poly::enumerate_lpara(m, n, &g).unwrap();
        same(&format!("|MEW_{{{m},{n}}}| vs |LPara|"), mew.len(), lpara.len())?;
        for mt in &mew {
            let d = big_phi_zeta(mt).map_err(|e| e.to_string())?;
            if big_phi_inverse(&d).as_ref() != Ok(mt) {
                return Err(format!("Phi^-1(Phi(M)) != M for {} {}", mt.tableau().grid(), mt.decoration()));
            }
        }
        for d in &lpara {
            let mt = big_phi_inverse(d).map_err(|e| e.to_string())?;
            if big_phi_zeta(&mt).as_ref() != Ok(d) {
                return Err(format!("Phi(Phi^-1(D)) != D for {}", d.grid()));
            }
        }
        total += mew.len();
    }

    // both sides of the 3x2 count from filters over all candidates
    let mut mew32 = 0;
    for gr in all_grids(3, 2).filter(|g| validate_ew(g.clone()).is_ok()) {
        let t = validate_ew(gr).unwrap();
        let bounds: Vec<usize> = eta_brute(&t);
        mew32 += bounds.iter().product::<usize>();
    }
    let mut lpara32 = 0;
    for gr in all_grids(3, 2) {
        for rows in permutations(&[0, 1, 2]) {
            for cols in permutations(&[3, 4]) {
                let l = Labelling::new(rows.clone(), cols).unwrap();
                lpara32 += validate_lpara(gr.clone(), l).is_ok() as usize;
            }
        }
    }
    same("|MEW_{3,2}|", mew32, 12)?;
    same("|LPara_{3,2}|", lpara32, 12)?;
    Ok(format!("{total} marked tableaux over 10 sizes, 12 = 12"))
}

fn c10() -> Outcome {
    let g = SizeGuard::default();
    let mut checked = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            for t in enumerate_ew(m, n, &g).unwrap() {
                if eta_brute(&t).contains(&0) {
                    return Err(format!("a line of {} has nothing to mark", t.grid()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} tableaux"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("EW_{3,2} has the seven listed tableaux", Duration::from_secs(1), c1),
        ("phi worked examples", Duration::from_secs(1), c2),
        ("psi worked example", Duration::from_secs(1), c3),
        ("phi/psi round trips, |EW| = |LRib|", Duration::from_secs(60), c4),
        ("eta worked examples and 4x4 decorations", Duration::from_secs(1), c5),
        ("fast mask = brute-force mask", Duration::from_secs(60), c6),
        ("surplus worked example", Duration::from_secs(1), c7),
        ("Phi worked example, both presentations", Duration::from_secs(1), c8),
        ("Phi/Phi^-1 round trips, |MEW| = |LPara|", Duration::from_secs(120), c9),
        ("every line has a markable entry", Duration::from_secs(30), c10),
    ];

    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > *budget => Err(format!("{d}; took {took:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(d) => println!("PASS {:>2} {name}: {d} ({took:.2?})", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e} ({took:.2?})", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

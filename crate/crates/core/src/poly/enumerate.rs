use super::labelled::{col_keys, row_keys, runs};
use super::{validate_lpara, validate_lrib, validate_para, validate_ribbon, LabelledPara, LabelledRibbon};
use super::{ParaPolyomino, RibbonPolyomino};
use crate::error::Result;
use crate::grid::{Grid01, Labelling};
use crate::guard::SizeGuard;

/// Row extents `(left, right)` of every parallelogram polyomino in an
/// `m x n` box: both boundaries weakly increase, consecutive rows overlap,
/// row 1 starts in column 1 and row `m` ends in column `n`.
fn extents(m: usize, n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn go(m: usize, n: usize, left: &mut Vec<usize>, right: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Vec<usize>)>) {
        let i = left.len();
        if i == m {
            out.push((left.clone(), right.clone()));
            return;
        }
        let (lo_l, hi_l) = if i == 0 { (1, 1) } else { (left[i - 1], right[i - 1]) };
        for l in lo_l..=hi_l {
            let lo_r = if i == 0 { l } else { right[i - 1].max(l) };
            let lo_r = if i == m - 1 { n } else { lo_r };
            for r in lo_r..=n {
                left.push(l);
                right.push(r);
                go(m, n, left, right, out);
                left.pop();
                right.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, n, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// All of `Para_{m,n}`, sorted by grid.
pub fn enumerate_para(m: usize, n: usize, guard: &SizeGuard) -> Result<Vec<ParaPolyomino>> {
    guard.check_poly(m, n)?;
    let mut out: Vec<ParaPolyomino> = extents(m, n)
        .into_iter()
        .map(|(left, right)| {
            let g = Grid01::from_fn(m, n, |i, j| left[i - 1] <= j && j <= right[i - 1]).expect("nonempty");
            validate_para(g).expect("extents describe a polyomino")
        })
        .collect();
    out.sort_by(|a, b| a.grid().cmp(b.grid()));
    Ok(out)
}

/// All of `Rib_{m,n}`, sorted by grid.
pub fn enumerate_rib(m: usize, n: usize, guard: &SizeGuard) -> Result<Vec<RibbonPolyomino>> {
    Ok(enumerate_para(m, n, guard)?
        .into_iter()
        .filter(|p| p.is_ribbon())
        .map(|p| validate_ribbon(p.grid().clone()).expect("minimal area"))
        .collect())
}

/// Every arrangement of `labels` into consecutive blocks of the given sizes
/// with each block ascending, in lexicographic order.
fn block_arrangements(labels: &[usize], sizes: &[usize]) -> Vec<Vec<usize>> {
    fn go(rest: &[usize], sizes: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&size, later)) = sizes.split_first() else {
            out.push(prefix.clone());
            return;
        };
        // choose `size` elements of `rest` (kept ascending) for this block
        let k = rest.len();
        let mut pick = (0..size).collect::<Vec<usize>>();
        loop {
            let block: Vec<usize> = pick.iter().map(|&p| rest[p]).collect();
            let remaining: Vec<usize> =
                rest.iter().enumerate().filter(|(p, _)| !pick.contains(p)).map(|(_, &l)| l).collect();
            let len = prefix.len();
            prefix.extend(block);
            go(&remaining, later, prefix, out);
            prefix.truncate(len);

            // next combination in lexicographic order
            let Some(t) = (0..size).rev().find(|&t| pick[t] < k - size + t) else {
                break;
            };
            pick[t] += 1;
            for u in t + 1..size {
                pick[u] = pick[u - 1] + 1;
            }
        }
    }
    let mut out = Vec::new();
    go(labels, sizes, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn labellings(p: &ParaPolyomino) -> Vec<Labelling> {
    let (m, n) = (p.m(), p.n());
    // v0 sits on the top row, which opens the first row group
    let mut row_sizes: Vec<usize> = runs(&row_keys(p)).iter().map(|r| r.len()).collect();
    row_sizes[0] -= 1;
    let col_sizes: Vec<usize> = runs(&col_keys(p)).iter().map(|r| r.len()).collect();
    let row_labels: Vec<usize> = (1..m).collect();
    let col_labels: Vec<usize> = (m..m + n).collect();

    let rows = block_arrangements(&row_labels, &row_sizes);
    let cols = block_arrangements(&col_labels, &col_sizes);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        let mut full = vec![0];
        full.extend(r);
        for c in &cols {
            out.push(Labelling::new(full.clone(), c.clone()).expect("permutations"));
        }
    }
    out
}

/// All of `LPara_{m,n}`, ordered by grid, then row labels, then column labels.
pub fn enumerate_lpara(m: usize, n: usize, guard: &SizeGuard) -> Result<Vec<LabelledPara>> {
    let mut out = Vec::new();
    for p in enumerate_para(m, n, guard)? {
        for l in labellings(&p) {
            out.push(validate_lpara(p.grid().clone(), l).expect("labelling follows the conventions"));
        }
    }
    Ok(out)
}

/// All of `LRib_{m,n}`, in the same order as [`enumerate_lpara`].
pub fn enumerate_lrib(m: usize, n: usize, guard: &SizeGuard) -> Result<Vec<LabelledRibbon>> {
    let mut out = Vec::new();
    for r in enumerate_rib(m, n, guard)? {
        for l in labellings(&r) {
            out.push(validate_lrib(r.grid().clone(), l).expect("labelling follows the conventions"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::validate_para;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn all_grids(m: usize, n: usize) -> impl Iterator<Item = Grid01> {
        (0u64..1 << (m * n))
            .map(move |bits| Grid01::from_fn(m, n, |i, j| bits >> ((i - 1) * n + j - 1) & 1 == 1).unwrap())
    }

    fn all_perms(xs: &[usize]) -> Vec<Vec<usize>> {
        if xs.is_empty() {
            return vec![vec![]];
        }
        let mut out = vec![];
        for k in 0..xs.len() {
            let mut rest = xs.to_vec();
            let x = rest.remove(k);
            for mut p in all_perms(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn ribbons_are_monotone_paths() {
        let g = SizeGuard::default();
        for (m, n) in [(1, 1), (3, 2), (2, 5), (4, 4), (5, 3)] {
            assert_eq!(enumerate_rib(m, n, &g).unwrap().len(), binom(m + n - 2, m - 1), "{m}x{n}");
        }
    }

    #[test]
    fn para_matches_filtering_all_grids() {
        let g = SizeGuard::default();
        for (m, n) in [(2, 2), (3, 2), (2, 4), (3, 3), (4, 3)] {
            let mut brute: Vec<Grid01> = all_grids(m, n).filter(|g| validate_para(g.clone()).is_ok()).collect();
            brute.sort();
            let got: Vec<Grid01> = enumerate_para(m, n, &g).unwrap().into_iter().map(|p| p.grid().clone()).collect();
            assert_eq!(got, brute, "{m}x{n}");
        }
    }

    #[test]
    fn labelled_matches_filtering_all_labellings() {
        let g = SizeGuard::default();
        for (m, n) in [(3, 2), (2, 3), (3, 3)] {
            let mut brute = vec![];
            for p in enumerate_para(m, n, &g).unwrap() {
                for rows in all_perms(&(0..m).collect::<Vec<_>>()) {
                    for cols in all_perms(&(m..m + n).collect::<Vec<_>>()) {
                        let l = Labelling::new(rows.clone(), cols).unwrap();
                        if let Ok(d) = validate_lpara(p.grid().clone(), l) {
                            brute.push(d);
                        }
                    }
                }
            }
            assert_eq!(enumerate_lpara(m, n, &g).unwrap(), brute, "{m}x{n}");
        }
    }

    #[test]
    fn small_counts() {
        let g = SizeGuard::default();
        assert_eq!(enumerate_rib(3, 2, &g).unwrap().len(), 3);
        assert_eq!(enumerate_lrib(3, 2, &g).unwrap().len(), 7);
        assert_eq!(enumerate_lpara(3, 2, &g).unwrap().len(), 12);
        assert!(enumerate_para(7, 6, &g).is_err());
    }

    #[test]
    fn block_arrangements_small() {
        assert_eq!(block_arrangements(&[1, 2, 3], &[1, 2]), [vec![1, 2, 3], vec![2, 1, 3], vec![3, 1, 2]]);
        assert_eq!(block_arrangements(&[1, 2], &[0, 2]), [vec![1, 2]]);
    }
}

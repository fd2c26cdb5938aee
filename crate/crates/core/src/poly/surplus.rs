use std::cmp::Reverse;

use super::labelled::{col_keys, row_keys, runs};
use super::{bounce, validate_lpara, validate_lrib, LabelledPara, LabelledRibbon};
use crate::error::{Error, Result};
use crate::grid::{Grid01, LabelVector, Labelling};

/// Cells added to each labelled line of a ribbon: for a row label, cells to
/// the left of the row's leftmost 1; for a column label, cells above the
/// column's topmost 1. Indexed by `v_1..v_{m+n-1}`.
pub type Surplus = LabelVector;

/// Splits a labelled polyomino into its labelled bounce ribbon and the
/// surplus that re-grows it.
///
/// The ribbon keeps the label sets of `d` on each run of rows sharing a
/// leftmost column (and each run of columns sharing a topmost row), sorted
/// ascending. The surplus of a label is how far its line's boundary moved:
/// ribbon minus polyomino.
pub fn decompose(d: &LabelledPara) -> (LabelledRibbon, Surplus) {
    let (m, n) = (d.poly().m(), d.poly().n());
    let ribbon = bounce(d.poly());
    let rk = row_keys(&ribbon);
    let ck = col_keys(&ribbon);

    let mut rows = d.labels().rows().to_vec();
    for run in runs(&rk) {
        rows[run].sort_unstable();
    }
    let mut cols = d.labels().cols().to_vec();
    for run in runs(&ck) {
        cols[run].sort_unstable();
    }
    let labels = Labelling::new(rows, cols).expect("labels permuted within groups");

    let mut z = LabelVector::zeros(m + n - 1);
    for label in 1..m {
        let before = d.labels().row_position(label).expect("row label present");
        let after = labels.row_position(label).expect("row label present");
        z.set(label, rk[after - 1] - d.poly().leftmost(before));
    }
    for label in m..m + n {
        let before = d.labels().col_position(label).expect("column label present");
        let after = labels.col_position(label).expect("column label present");
        z.set(label, ck[after - 1] - d.poly().topmost(before));
    }

    let lrib = validate_lrib(ribbon.grid().clone(), labels)
        .expect("the bounce ribbon with group-sorted labels follows the conventions");
    (lrib, z)
}

/// Moves each labelled line's boundary out by its surplus, then reorders
/// lines within each group of the ribbon so that larger surpluses come first
/// (ties by ascending label), then fills between the boundaries.
///
/// Fails with [`Error::Support`] when a boundary leaves the grid, the result
/// is not a labelled parallelogram polyomino, or its bounce ribbon differs
/// from `d`.
pub fn expand(d: &LabelledRibbon, z: &Surplus) -> Result<LabelledPara> {
    let (m, n) = (d.ribbon().m(), d.ribbon().n());
    if z.len() != m + n - 1 {
        return Err(Error::Length { expected: m + n - 1, found: z.len() });
    }
    let surplus_of = |label: usize| if label == 0 { 0 } else { z.get(label) };

    let rk = row_keys(d.ribbon());
    let ck = col_keys(d.ribbon());

    let mut rows = d.labels().rows().to_vec();
    for (x, &label) in rows.iter().enumerate() {
        if surplus_of(label) >= rk[x] {
            return Err(Error::Support(format!(
                "row v{label} starts in column {} and cannot grow by {}",
                rk[x],
                surplus_of(label)
            )));
        }
    }
    let mut cols = d.labels().cols().to_vec();
    for (y, &label) in cols.iter().enumerate() {
        if surplus_of(label) >= ck[y] {
            return Err(Error::Support(format!(
                "column v{label} starts in row {} and cannot grow by {}",
                ck[y],
                surplus_of(label)
            )));
        }
    }

    for run in runs(&rk) {
        rows[run].sort_by_key(|&l| (Reverse(surplus_of(l)), l));
    }
    for run in runs(&ck) {
        cols[run].sort_by_key(|&l| (Reverse(surplus_of(l)), l));
    }
    let left: Vec<usize> = rows.iter().zip(&rk).map(|(&l, &k)| k - surplus_of(l)).collect();
    let top: Vec<usize> = cols.iter().zip(&ck).map(|(&l, &k)| k - surplus_of(l)).collect();

    let grid = fill(&left, &top);
    let labels = Labelling::new(rows, cols).expect("labels permuted within groups");
    let out = validate_lpara(grid, labels).map_err(|e| Error::Support(e.to_string()))?;
    if bounce(out.poly()).grid() != d.grid() {
        return Err(Error::Support("the bounce path changed".into()));
    }
    Ok(out)
}

/// Cell `(x, y)` is filled iff `top[y] <= x` and `left[x] <= y`.
pub(crate) fn fill(left: &[usize], top: &[usize]) -> Grid01 {
    Grid01::from_fn(left.len(), top.len(), |x, y| top[y - 1] <= x && left[x - 1] <= y).expect("nonempty boundaries")
}

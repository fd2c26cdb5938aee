use std::fmt;

use super::{sort_to_staircase, EwTableau};
use crate::error::Result;
use crate::grid::{Grid01, LabelVector};

/// Grid-shaped flags: `true` where the tableau entry is a cornersupport entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornerSupportMask {
    grid: Grid01,
}

impl CornerSupportMask {
    pub fn is_cornersupport(&self, i: usize, j: usize) -> bool {
        self.grid.get(i, j)
    }

    pub fn grid(&self) -> &Grid01 {
        &self.grid
    }

    /// The mask in the grid text format, `c` for cornersupport and `n` for
    /// non-cornersupport cells.
    pub fn to_text(&self) -> String {
        let mut out = format!("grid: {} {}\n", self.grid.m(), self.grid.n());
        for i in 1..=self.grid.m() {
            out.extend(self.grid.row(i).iter().map(|&c| if c { 'c' } else { 'n' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CornerSupportMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.grid.m())
            .map(|i| self.grid.row(i).iter().map(|&c| if c { 'c' } else { 'n' }).collect())
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// Whether the entry `x` at `(i, j)` has a non-attacking cell holding `1-x`
/// whose two companion corners both hold `x`. Straight from the definition,
/// O(mn) per query.
pub fn is_cornersupport(t: &EwTableau, i: usize, j: usize) -> Result<bool> {
    let g = t.grid();
    let x = g.try_get(i, j)?;
    for i2 in (1..=g.m()).filter(|&r| r != i) {
        if g.get(i2, j) != x {
            continue;
        }
        for j2 in (1..=g.n()).filter(|&c| c != j) {
            if g.get(i2, j2) != x && g.get(i, j2) == x {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

pub fn cornersupport_mask_bruteforce(t: &EwTableau) -> CornerSupportMask {
    let grid = Grid01::from_fn(t.m(), t.n(), |i, j| is_cornersupport(t, i, j).expect("in range"))
        .expect("same shape as the tableau");
    CornerSupportMask { grid }
}

/// Classifies every entry on the staircase form and carries the result back
/// through the row/column rearrangement.
///
/// On the staircase a row with `k` zeros holds 0s in columns `1..=k`. A 1 at
/// `(x, y)` is cornersupport iff some row has a zero count strictly between
/// `k_x` and `y`; a 0 at `(x, y)` is cornersupport iff some row has a zero
/// count in `[y, k_x)`. Non-cornersupport entries are exactly the cells of
/// the rectangles hugging the 0/1 boundary.
pub fn cornersupport_mask_fast(t: &EwTableau) -> CornerSupportMask {
    let (m, n) = (t.m(), t.n());
    let stair = sort_to_staircase(t);
    let s = &stair.grid;

    let zeros: Vec<usize> = (1..=m).map(|x| n - s.ones_in_row(x)).collect();
    // prefix[k] = number of distinct zero counts below k
    let mut present = vec![false; n + 1];
    for &k in &zeros {
        present[k] = true;
    }
    let mut prefix = vec![0usize; n + 2];
    for k in 0..=n {
        prefix[k + 1] = prefix[k] + present[k] as usize;
    }
    let any_in = |lo: usize, hi: usize| lo < hi && prefix[hi] > prefix[lo];

    let mut grid = Grid01::zeros(m, n).expect("nonempty");
    for x in 1..=m {
        let k = zeros[x - 1];
        for y in 1..=n {
            let cs = if s.get(x, y) { any_in(k + 1, y) } else { any_in(y, k) };
            let i = stair.labels.row_label(x) + 1;
            let j = stair.labels.col_label(y) - m + 1;
            grid.set(i, j, cs);
        }
    }
    CornerSupportMask { grid }
}

/// Counts of markable entries: for a row label the non-cornersupport 0s of
/// that row, for a column label the non-cornersupport 1s of that column.
pub fn eta(t: &EwTableau) -> LabelVector {
    eta_from_mask(t, &cornersupport_mask_fast(t))
}

pub(crate) fn eta_from_mask(t: &EwTableau, mask: &CornerSupportMask) -> LabelVector {
    let (m, n) = (t.m(), t.n());
    let g = t.grid();
    let mut out = Vec::with_capacity(m + n - 1);
    for label in 1..m {
        let i = t.row_of_label(label);
        out.push((1..=n).filter(|&j| !g.get(i, j) && !mask.is_cornersupport(i, j)).count());
    }
    for label in m..m + n {
        let j = t.col_of_label(label);
        out.push((1..=m).filter(|&i| g.get(i, j) && !mask.is_cornersupport(i, j)).count());
    }
    LabelVector::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ew::validate_ew;
    use crate::fixtures;

    fn ew(s: &str) -> EwTableau {
        validate_ew(Grid01::parse_compact(s).unwrap()).unwrap()
    }

    #[test]
    fn definition_examples() {
        let t = ew(fixtures::ETA_4X4);
        assert!(is_cornersupport(&t, 1, 3).unwrap());
        assert!(is_cornersupport(&t, 2, 2).unwrap());
        assert!(is_cornersupport(&t, 5, 1).is_err());
    }

    #[test]
    fn single_row_has_no_cornersupport() {
        let t = ew("11111");
        let mask = cornersupport_mask_bruteforce(&t);
        assert_eq!(mask.grid().count_ones(), 0);
        assert_eq!(cornersupport_mask_fast(&t), mask);
        assert_eq!(eta(&t).as_slice(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn two_zero_rows() {
        let t = ew("11/00/00");
        let mask = cornersupport_mask_bruteforce(&t);
        assert_eq!(mask.to_string(), "nn/nn/nn");
        assert_eq!(cornersupport_mask_fast(&t), mask);
        assert_eq!(mask.to_text(), "grid: 3 2\nnn\nnn\nnn\n");
    }

    #[test]
    fn eta_small_example() {
        let t = ew(fixtures::ETA_4X4);
        assert_eq!(eta(&t).as_slice(), &[1, 2, 1, 1, 1, 2, 1]);
    }
}

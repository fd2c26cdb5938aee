//! Rectangular EW-tableaux: validation, the staircase normal form,
//! cornersupport detection, decorations and enumeration.

mod cornersupport;
mod enumerate;
mod marked;

pub use cornersupport::{
    cornersupport_mask_bruteforce, cornersupport_mask_fast, eta, is_cornersupport, CornerSupportMask,
};
pub use enumerate::{enumerate_ew, enumerate_mew, EwIter};
pub use marked::{decoration_from_marks, marks_from_decoration, validate_marked, MarkedEwTableau};

use crate::error::{Error, Result};
use crate::grid::{Grid01, Labelling};

/// A validated rectangular EW-tableau. Rows carry the implicit labels
/// `v_0..v_{m-1}` top to bottom, columns `v_m..v_{m+n-1}` left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EwTableau {
    grid: Grid01,
}

impl EwTableau {
    pub fn new(grid: Grid01) -> Result<Self> {
        validate_ew(grid)
    }

    pub fn grid(&self) -> &Grid01 {
        &self.grid
    }

    pub fn into_grid(self) -> Grid01 {
        self.grid
    }

    pub fn m(&self) -> usize {
        self.grid.m()
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    /// Row position carrying the row label `v_label`.
    pub fn row_of_label(&self, label: usize) -> usize {
        label + 1
    }

    /// Column position carrying the column label `v_label`.
    pub fn col_of_label(&self, label: usize) -> usize {
        label - self.m() + 1
    }

    pub(crate) fn from_grid_unchecked(grid: Grid01) -> Self {
        debug_assert!(validate_ew(grid.clone()).is_ok(), "not an EW-tableau: {grid}");
        EwTableau { grid }
    }
}

/// Checks the three EW clauses in order: all-1s top row, a 0 in every lower
/// row, and no 2x2 submatrix with 0s on one diagonal and 1s on the other.
pub fn validate_ew(g: Grid01) -> Result<EwTableau> {
    let (m, n) = (g.m(), g.n());
    if let Some(j) = (1..=n).find(|&j| !g.get(1, j)) {
        return Err(Error::TopRow { col: j });
    }
    if let Some(i) = (2..=m).find(|&i| g.ones_in_row(i) == n) {
        return Err(Error::AllOnesRow { row: i });
    }
    for i in 1..=m {
        for i2 in i + 1..=m {
            for j in 1..=n {
                for j2 in j + 1..=n {
                    let (a, b, c, d) = (g.get(i, j), g.get(i, j2), g.get(i2, j), g.get(i2, j2));
                    if a == d && b == c && a != b {
                        return Err(Error::RectanglePattern { rows: (i, i2), cols: (j, j2) });
                    }
                }
            }
        }
    }
    Ok(EwTableau { grid: g })
}

/// The rows and columns of an EW-tableau rearranged so that its 1s form a
/// Ferrers shape in the top-right corner. `labels` records which original
/// row/column landed at each position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub grid: Grid01,
    pub labels: Labelling,
}

/// Columns by ascending number of 1s, rows by descending number of 1s, ties
/// by ascending label. The EW clauses make the 1-sets of any two lines
/// nested, so this count order is the inclusion order and equal counts mean
/// identical lines.
pub fn sort_to_staircase(t: &EwTableau) -> Staircase {
    let g = t.grid();
    let (m, n) = (g.m(), g.n());
    let mut cols: Vec<usize> = (1..=n).collect();
    cols.sort_by_key(|&j| (g.ones_in_column(j), j));
    let mut rows: Vec<usize> = (1..=m).collect();
    rows.sort_by_key(|&i| (std::cmp::Reverse(g.ones_in_row(i)), i));

    let grid = g.permuted(&rows, &cols);
    let labels = Labelling::new(rows.iter().map(|i| i - 1).collect(), cols.iter().map(|j| j - 1 + m).collect())
        .expect("a rearrangement of the canonical labels");
    Staircase { grid, labels }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(s: &str) -> Grid01 {
        Grid01::parse_compact(s).unwrap()
    }

    #[test]
    fn small_tableaux() {
        assert!(validate_ew(grid("11/01/01")).is_ok());
        assert_eq!(validate_ew(grid("11/11")), Err(Error::AllOnesRow { row: 2 }));
        assert_eq!(validate_ew(grid("10/00")), Err(Error::TopRow { col: 2 }));
    }

    #[test]
    fn rectangle_witness() {
        // brute-force scan of every row pair and column pair
        let g = grid("1111/0110/1001/0000");
        let mut witnesses = vec![];
        for i in 1..=4 {
            for i2 in i + 1..=4 {
                for j in 1..=4 {
                    for j2 in j + 1..=4 {
                        let q = [g.get(i, j), g.get(i, j2), g.get(i2, j), g.get(i2, j2)];
                        if q == [false, true, true, false] || q == [true, false, false, true] {
                            witnesses.push(((i, i2), (j, j2)));
                        }
                    }
                }
            }
        }
        assert_eq!(witnesses[0], ((2, 3), (1, 2)));
        assert_eq!(validate_ew(g), Err(Error::RectanglePattern { rows: (2, 3), cols: (1, 2) }));
    }

    #[test]
    fn staircase_small() {
        let t = validate_ew(grid("11/00/00")).unwrap();
        let s = sort_to_staircase(&t);
        assert_eq!(s.grid, grid("11/00/00"));
        assert!(s.labels.is_canonical());

        let t = validate_ew(grid("11/10/10")).unwrap();
        let s = sort_to_staircase(&t);
        assert_eq!(s.grid, grid("11/01/01"));
        assert_eq!(s.labels.cols(), &[4, 3]);
        assert_eq!(s.labels.rows(), &[0, 1, 2]);
    }

    #[test]
    fn single_column_tableaux() {
        assert!(validate_ew(grid("1/0/0")).is_ok());
        assert_eq!(validate_ew(grid("1/1")), Err(Error::AllOnesRow { row: 2 }));
    }
}

//! The bit-grid substrate shared by tableaux and polyominoes, plus row/column
//! labellings and label-indexed integer vectors.
//!
//! All positions are 1-based `(row, column)` with row 1 at the top and
//! column 1 at the left. Labels are plain integers: label `i` stands for the
//! vertex `v_i`.

use std::fmt;

use crate::error::{Error, Result};

/// An `m x n` matrix of bits.
///
/// The derived ordering compares dimensions first and then the cells in
/// row-major order, so grids of equal shape sort lexicographically by their
/// concatenated row bitstrings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid01 {
    m: usize,
    n: usize,
    cells: Vec<bool>,
}

impl Grid01 {
    pub fn zeros(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension(format!("grid must be at least 1x1, got {m}x{n}")));
        }
        Ok(Grid01 { m, n, cells: vec![false; m * n] })
    }

    /// Builds a grid from a predicate over 1-based positions.
    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Grid01::zeros(m, n)?;
        for i in 1..=m {
            for j in 1..=n {
                g.cells[(i - 1) * n + (j - 1)] = f(i, j);
            }
        }
        Ok(g)
    }

    /// Builds a grid from rows written as strings over `{0,1}`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut g = Grid01::zeros(m, n)?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::Dimension(format!("row {} has length {}, expected {n}", i + 1, row.len())));
            }
            for (j, ch) in row.chars().enumerate() {
                g.cells[i * n + j] = match ch {
                    '0' => false,
                    '1' => true,
                    other => {
                        return Err(Error::Parse {
                            line: i + 1,
                            msg: format!("unexpected character {other:?} in grid row"),
                        })
                    }
                };
            }
        }
        Ok(g)
    }

    /// Parses the compact `"11/01/01"` notation used throughout the tests.
    pub fn parse_compact(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split('/').collect();
        Grid01::from_rows(&rows)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j), "({i},{j}) out of range");
        (i - 1) * self.n + (j - 1)
    }

    /// Cell at 1-based `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[self.offset(i, j)]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i, j)?;
        Ok(self.get(i, j))
    }

    pub fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if (1..=self.m).contains(&i) && (1..=self.n).contains(&j) {
            Ok(())
        } else {
            Err(Error::Index { row: i, col: j, m: self.m, n: self.n })
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let k = self.offset(i, j);
        self.cells[k] = value;
    }

    /// Row `i` as a slice of bits.
    pub fn row(&self, i: usize) -> &[bool] {
        &self.cells[(i - 1) * self.n..i * self.n]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = bool> + '_ {
        (1..=self.m).map(move |i| self.get(i, j))
    }

    pub fn count_ones(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn ones_in_row(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&b| b).count()
    }

    pub fn ones_in_column(&self, j: usize) -> usize {
        self.column(j).filter(|&b| b).count()
    }

    pub fn leftmost_one(&self, i: usize) -> Option<usize> {
        self.row(i).iter().position(|&b| b).map(|k| k + 1)
    }

    pub fn rightmost_one(&self, i: usize) -> Option<usize> {
        self.row(i).iter().rposition(|&b| b).map(|k| k + 1)
    }

    pub fn topmost_one(&self, j: usize) -> Option<usize> {
        (1..=self.m).find(|&i| self.get(i, j))
    }

    pub fn lowest_one(&self, j: usize) -> Option<usize> {
        (1..=self.m).rev().find(|&i| self.get(i, j))
    }

    /// Rearranges rows and columns: new row `x` is old row `rows[x-1]`, new
    /// column `y` is old column `cols[y-1]` (both 1-based).
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Grid01 {
        assert_eq!(rows.len(), self.m);
        assert_eq!(cols.len(), self.n);
        Grid01::from_fn(self.m, self.n, |x, y| self.get(rows[x - 1], cols[y - 1]))
            .expect("dimensions already validated")
    }

    /// Rows as strings over `{0,1}`.
    pub fn row_strings(&self) -> Vec<String> {
        (1..=self.m).map(|i| self.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect()).collect()
    }
}

impl fmt::Display for Grid01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.row_strings().join("/"))
    }
}

impl fmt::Debug for Grid01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grid01({self})")
    }
}

/// Row and column labels. `rows[x-1]` is the label of row position `x`,
/// `cols[y-1]` the label of column position `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labelling {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Labelling {
    /// Checks that rows permute `0..m` and columns permute `m..m+n`.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let m = rows.len();
        let n = cols.len();
        if !is_permutation_of(&rows, 0..m) {
            return Err(Error::Label(format!(
                "row labels {rows:?} are not a permutation of 0..{}",
                m.saturating_sub(1)
            )));
        }
        if !is_permutation_of(&cols, m..m + n) {
            return Err(Error::Label(format!(
                "column labels {cols:?} are not a permutation of {m}..{}",
                (m + n).saturating_sub(1)
            )));
        }
        Ok(Labelling { rows, cols })
    }

    /// Rows `v_0..v_{m-1}` top to bottom, columns `v_m..v_{m+n-1}` left to right.
    pub fn canonical(m: usize, n: usize) -> Self {
        Labelling { rows: (0..m).collect(), cols: (m..m + n).collect() }
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn row_label(&self, x: usize) -> usize {
        self.rows[x - 1]
    }

    pub fn col_label(&self, y: usize) -> usize {
        self.cols[y - 1]
    }

    pub fn is_canonical(&self) -> bool {
        *self == Labelling::canonical(self.m(), self.n())
    }

    /// 1-based position of the row carrying `label`.
    pub fn row_position(&self, label: usize) -> Option<usize> {
        self.rows.iter().position(|&l| l == label).map(|k| k + 1)
    }

    /// 1-based position of the column carrying `label`.
    pub fn col_position(&self, label: usize) -> Option<usize> {
        self.cols.iter().position(|&l| l == label).map(|k| k + 1)
    }
}

fn is_permutation_of(xs: &[usize], range: std::ops::Range<usize>) -> bool {
    let mut seen = vec![false; range.len()];
    for &x in xs {
        if !range.contains(&x) || std::mem::replace(&mut seen[x - range.start], true) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

/// Integers indexed by the labels `v_1..v_{m+n-1}`; used for decorations,
/// the eta vector, surpluses and the h-statistics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelVector(Vec<usize>);

impl LabelVector {
    pub fn new(values: Vec<usize>) -> Self {
        LabelVector(values)
    }

    pub fn zeros(len: usize) -> Self {
        LabelVector(vec![0; len])
    }

    /// Value attached to label `v_i`, `1 <= i <= len`.
    pub fn get(&self, label: usize) -> usize {
        self.0[label - 1]
    }

    pub fn set(&mut self, label: usize, value: usize) {
        self.0[label - 1] = value;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for LabelVector {
    fn from(v: Vec<usize>) -> Self {
        LabelVector(v)
    }
}

impl fmt::Display for LabelVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Decoration `a_1..a_{m+n-1}` of an EW-tableau.
pub type Decoration = LabelVector;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_indexing() {
        let g = Grid01::parse_compact("11111/10011/00010/10011").unwrap();
        assert!(g.get(4, 5));
        assert!(g.get(4, 4));
        assert!(!g.get(4, 3));
        assert_eq!(g.try_get(5, 1), Err(Error::Index { row: 5, col: 1, m: 4, n: 5 }));
    }

    #[test]
    fn extents() {
        let g = Grid01::parse_compact("0110/0011").unwrap();
        assert_eq!(g.leftmost_one(1), Some(2));
        assert_eq!(g.rightmost_one(2), Some(4));
        assert_eq!(g.topmost_one(4), Some(2));
        assert_eq!(g.lowest_one(2), Some(1));
        assert_eq!(g.topmost_one(1), None);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(Grid01::parse_compact("11/0"), Err(Error::Dimension(_))));
        assert!(matches!(Grid01::parse_compact("12/00"), Err(Error::Parse { .. })));
        assert!(Grid01::zeros(0, 3).is_err());
    }

    #[test]
    fn permuted_moves_rows_and_columns() {
        let g = Grid01::parse_compact("10/00/01").unwrap();
        let p = g.permuted(&[3, 1, 2], &[2, 1]);
        assert_eq!(p.to_string(), "10/01/00");
    }

    #[test]
    fn labelling_checks_permutations() {
        assert!(Labelling::new(vec![0, 2, 1], vec![4, 3]).is_ok());
        assert!(Labelling::new(vec![0, 2, 2], vec![4, 3]).is_err());
        assert!(Labelling::new(vec![0, 1, 2], vec![3, 5]).is_err());
        let l = Labelling::canonical(3, 2);
        assert!(l.is_canonical());
        assert_eq!(l.col_position(4), Some(2));
    }

    #[test]
    fn grid_order_is_row_lexicographic() {
        let a = Grid01::parse_compact("11/00/01").unwrap();
        let b = Grid01::parse_compact("11/01/00").unwrap();
        assert!(a < b);
    }
}

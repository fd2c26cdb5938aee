//! Parallelogram and ribbon polyominoes as 0/1 tableaux, their labelled
//! versions, bounce paths and the ribbon-plus-surplus decomposition.

mod enumerate;
mod labelled;
mod surplus;

pub use enumerate::{enumerate_lpara, enumerate_lrib, enumerate_para, enumerate_rib};
pub use labelled::{validate_lpara, validate_lrib, LabelledPara, LabelledRibbon};
pub(crate) use surplus::fill as fill_boundaries;
pub use surplus::{decompose, expand, Surplus};

use crate::error::{Error, Result};
use crate::grid::Grid01;

/// A validated parallelogram polyomino with its row extents cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParaPolyomino {
    grid: Grid01,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl ParaPolyomino {
    pub fn grid(&self) -> &Grid01 {
        &self.grid
    }

    pub fn m(&self) -> usize {
        self.grid.m()
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    /// Column of the leftmost 1 in row `i`.
    pub fn leftmost(&self, i: usize) -> usize {
        self.left[i - 1]
    }

    /// Column of the rightmost 1 in row `i`.
    pub fn rightmost(&self, i: usize) -> usize {
        self.right[i - 1]
    }

    /// Row of the topmost 1 in column `j`.
    pub fn topmost(&self, j: usize) -> usize {
        1 + self.right.iter().take_while(|&&r| r < j).count()
    }

    /// Row of the lowest 1 in column `j`.
    pub fn lowest(&self, j: usize) -> usize {
        self.left.iter().take_while(|&&l| l <= j).count()
    }

    pub fn area(&self) -> usize {
        self.left.iter().zip(&self.right).map(|(l, r)| r - l + 1).sum()
    }

    pub fn is_ribbon(&self) -> bool {
        self.area() == self.m() + self.n() - 1
    }
}

/// A parallelogram polyomino of minimal area `m + n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonPolyomino(ParaPolyomino);

impl RibbonPolyomino {
    pub fn as_para(&self) -> &ParaPolyomino {
        &self.0
    }

    pub fn into_para(self) -> ParaPolyomino {
        self.0
    }

    pub fn grid(&self) -> &Grid01 {
        self.0.grid()
    }
}

impl std::ops::Deref for RibbonPolyomino {
    type Target = ParaPolyomino;

    fn deref(&self) -> &ParaPolyomino {
        &self.0
    }
}

/// Checks corners, contiguous nonempty rows, weakly right-moving left and
/// right boundaries, and that consecutive rows share a column.
pub fn validate_para(g: Grid01) -> Result<ParaPolyomino> {
    let (m, n) = (g.m(), g.n());
    if !g.get(1, 1) {
        return Err(Error::Corner { row: 1, col: 1 });
    }
    if !g.get(m, n) {
        return Err(Error::Corner { row: m, col: n });
    }
    let mut left = Vec::with_capacity(m);
    let mut right = Vec::with_capacity(m);
    for i in 1..=m {
        let (Some(l), Some(r)) = (g.leftmost_one(i), g.rightmost_one(i)) else {
            return Err(Error::RowGap { row: i });
        };
        if g.ones_in_row(i) != r - l + 1 {
            return Err(Error::RowGap { row: i });
        }
        left.push(l);
        right.push(r);
    }
    for i in 1..m {
        if left[i] < left[i - 1] {
            return Err(Error::Monotonicity { rows: (i, i + 1), side: "left" });
        }
        if right[i] < right[i - 1] {
            return Err(Error::Monotonicity { rows: (i, i + 1), side: "right" });
        }
        if left[i] > right[i - 1] {
            return Err(Error::Overlap { rows: (i, i + 1) });
        }
    }
    Ok(ParaPolyomino { grid: g, left, right })
}

pub fn validate_ribbon(g: Grid01) -> Result<RibbonPolyomino> {
    let p = validate_para(g)?;
    let expected = p.m() + p.n() - 1;
    if p.area() != expected {
        return Err(Error::Area { expected, found: p.area() });
    }
    Ok(RibbonPolyomino(p))
}

/// The ribbon traced from `(1,1)` by alternately running right to the last 1
/// of the current row and down to the last 1 of the current column, until
/// `(m,n)` is reached.
pub fn bounce(p: &ParaPolyomino) -> RibbonPolyomino {
    let (m, n) = (p.m(), p.n());
    let mut g = Grid01::zeros(m, n).expect("nonempty");
    let (mut row, mut col) = (1, 1);
    g.set(1, 1, true);
    loop {
        let r = p.rightmost(row);
        for c in col..=r {
            g.set(row, c, true);
        }
        col = r;
        if (row, col) == (m, n) {
            break;
        }
        let d = p.lowest(col);
        for x in row..=d {
            g.set(x, col, true);
        }
        row = d;
        if (row, col) == (m, n) {
            break;
        }
    }
    validate_ribbon(g).expect("bounce path of a parallelogram polyomino is a ribbon")
}

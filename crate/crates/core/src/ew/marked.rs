use std::collections::BTreeSet;

use super::cornersupport::{cornersupport_mask_fast, eta_from_mask, CornerSupportMask};
use super::EwTableau;
use crate::error::{Error, Result};
use crate::grid::{Decoration, LabelVector};

/// An EW-tableau together with a decoration `a` where `0 <= a_i < eta_i`.
///
/// The decoration is the stored form; the starred cells are derived with
/// [`marks_from_decoration`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedEwTableau {
    tableau: EwTableau,
    decoration: Decoration,
}

impl MarkedEwTableau {
    pub fn tableau(&self) -> &EwTableau {
        &self.tableau
    }

    pub fn decoration(&self) -> &Decoration {
        &self.decoration
    }

    pub(crate) fn from_parts_unchecked(tableau: EwTableau, decoration: Decoration) -> Self {
        MarkedEwTableau { tableau, decoration }
    }
}

pub fn validate_marked(t: EwTableau, a: Decoration) -> Result<MarkedEwTableau> {
    let expected = t.m() + t.n() - 1;
    if a.len() != expected {
        return Err(Error::Length { expected, found: a.len() });
    }
    let eta = eta_from_mask(&t, &cornersupport_mask_fast(&t));
    for i in 1..=expected {
        if a.get(i) >= eta.get(i) {
            return Err(Error::DecorationRange { index: i, value: a.get(i), max: eta.get(i).saturating_sub(1) });
        }
    }
    Ok(MarkedEwTableau { tableau: t, decoration: a })
}

/// Non-cornersupport cells of row `i` holding a 0, left to right.
pub(crate) fn markable_in_row(t: &EwTableau, mask: &CornerSupportMask, i: usize) -> Vec<usize> {
    (1..=t.n()).filter(|&j| !t.grid().get(i, j) && !mask.is_cornersupport(i, j)).collect()
}

/// Non-cornersupport cells of column `j` holding a 1, top to bottom.
pub(crate) fn markable_in_column(t: &EwTableau, mask: &CornerSupportMask, j: usize) -> Vec<usize> {
    (1..=t.m()).filter(|&i| t.grid().get(i, j) && !mask.is_cornersupport(i, j)).collect()
}

/// The starred cells: in row `v_i` (i >= 1) the `(a_i+1)`-th
/// non-cornersupport 0 from the left, in column `v_i` the `(a_i+1)`-th
/// non-cornersupport 1 from the top.
pub fn marks_from_decoration(mt: &MarkedEwTableau) -> BTreeSet<(usize, usize)> {
    let t = &mt.tableau;
    let mask = cornersupport_mask_fast(t);
    let m = t.m();
    let mut marks = BTreeSet::new();
    for label in 1..m {
        let i = t.row_of_label(label);
        marks.insert((i, markable_in_row(t, &mask, i)[mt.decoration.get(label)]));
    }
    for label in m..m + t.n() {
        let j = t.col_of_label(label);
        marks.insert((markable_in_column(t, &mask, j)[mt.decoration.get(label)], j));
    }
    marks
}

/// Reads a decoration back off a set of starred cells. A starred 0 belongs
/// to its row, a starred 1 to its column; every row below the top and every
/// column needs exactly one star on a non-cornersupport entry.
pub fn decoration_from_marks(t: &EwTableau, marks: &BTreeSet<(usize, usize)>) -> Result<Decoration> {
    let (m, n) = (t.m(), t.n());
    let mask = cornersupport_mask_fast(t);
    let mut row_marks: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    let mut col_marks: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(i, j) in marks {
        let value = t.grid().try_get(i, j)?;
        if mask.is_cornersupport(i, j) {
            return Err(Error::MarkPlacement(format!("cell ({i}, {j}) is a cornersupport entry")));
        }
        if value {
            col_marks[j].push(i);
        } else {
            row_marks[i].push(j);
        }
    }

    let mut a = LabelVector::zeros(m + n - 1);
    for label in 1..m {
        let i = t.row_of_label(label);
        let [j] = row_marks[i][..] else {
            return Err(Error::MarkPlacement(format!("row {i} carries {} starred 0s, expected 1", row_marks[i].len())));
        };
        let rank = markable_in_row(t, &mask, i).iter().position(|&c| c == j).expect("checked non-cornersupport");
        a.set(label, rank);
    }
    for label in m..m + n {
        let j = t.col_of_label(label);
        let [i] = col_marks[j][..] else {
            return Err(Error::MarkPlacement(format!(
                "column {j} carries {} starred 1s, expected 1",
                col_marks[j].len()
            )));
        };
        let rank = markable_in_column(t, &mask, j).iter().position(|&r| r == i).expect("checked non-cornersupport");
        a.set(label, rank);
    }
    Ok(a)
}

use std::ops::Range;

use super::{validate_para, validate_ribbon, ParaPolyomino, RibbonPolyomino};
use crate::error::{Error, Result};
use crate::grid::{Grid01, Labelling};

/// A parallelogram polyomino whose rows carry `v_0..v_{m-1}` (top row `v_0`)
/// and whose columns carry `v_m..v_{m+n-1}`, increasing within every run of
/// rows sharing a leftmost column and every run of columns sharing a topmost
/// row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledPara {
    poly: ParaPolyomino,
    labels: Labelling,
}

impl LabelledPara {
    pub fn poly(&self) -> &ParaPolyomino {
        &self.poly
    }

    pub fn labels(&self) -> &Labelling {
        &self.labels
    }

    pub fn grid(&self) -> &Grid01 {
        self.poly.grid()
    }
}

/// A labelled parallelogram polyomino of minimal area.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledRibbon {
    ribbon: RibbonPolyomino,
    labels: Labelling,
}

impl LabelledRibbon {
    pub fn ribbon(&self) -> &RibbonPolyomino {
        &self.ribbon
    }

    pub fn labels(&self) -> &Labelling {
        &self.labels
    }

    pub fn grid(&self) -> &Grid01 {
        self.ribbon.grid()
    }

    pub fn to_para(&self) -> LabelledPara {
        LabelledPara { poly: self.ribbon.as_para().clone(), labels: self.labels.clone() }
    }
}

/// Maximal runs of equal values, as 0-based index ranges.
pub(crate) fn runs(keys: &[usize]) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=keys.len() {
        if k == keys.len() || keys[k] != keys[start] {
            out.push(start..k);
            start = k;
        }
    }
    out
}

pub(crate) fn row_keys(p: &ParaPolyomino) -> Vec<usize> {
    (1..=p.m()).map(|i| p.leftmost(i)).collect()
}

pub(crate) fn col_keys(p: &ParaPolyomino) -> Vec<usize> {
    (1..=p.n()).map(|j| p.topmost(j)).collect()
}

fn check_conventions(p: &ParaPolyomino, l: &Labelling) -> Result<()> {
    if l.m() != p.m() || l.n() != p.n() {
        return Err(Error::Label(format!("labelling is {}x{} but the polyomino is {}x{}", l.m(), l.n(), p.m(), p.n())));
    }
    if l.row_label(1) != 0 {
        return Err(Error::LabelConvention(format!("top row is labelled v{}, expected v0", l.row_label(1))));
    }
    let keys = row_keys(p);
    for (k, (key, lab)) in keys.windows(2).zip(l.rows().windows(2)).enumerate() {
        if key[0] == key[1] && lab[0] > lab[1] {
            return Err(Error::LabelConvention(format!(
                "rows {} and {} share leftmost column {} but are labelled v{}, v{}",
                k + 1,
                k + 2,
                key[0],
                lab[0],
                lab[1]
            )));
        }
    }
    let keys = col_keys(p);
    for (k, (key, lab)) in keys.windows(2).zip(l.cols().windows(2)).enumerate() {
        if key[0] == key[1] && lab[0] > lab[1] {
            return Err(Error::LabelConvention(format!(
                "columns {} and {} share topmost row {} but are labelled v{}, v{}",
                k + 1,
                k + 2,
                key[0],
                lab[0],
                lab[1]
            )));
        }
    }
    Ok(())
}

pub fn validate_lpara(g: Grid01, l: Labelling) -> Result<LabelledPara> {
    let poly = validate_para(g)?;
    check_conventions(&poly, &l)?;
    Ok(LabelledPara { poly, labels: l })
}

pub fn validate_lrib(g: Grid01, l: Labelling) -> Result<LabelledRibbon> {
    let ribbon = validate_ribbon(g)?;
    check_conventions(&ribbon, &l)?;
    Ok(LabelledRibbon { ribbon, labels: l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn grid(s: &str) -> Grid01 {
        Grid01::parse_compact(s).unwrap()
    }

    fn labels(rows: &[usize], cols: &[usize]) -> Labelling {
        Labelling::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    #[test]
    fn runs_split_on_change() {
        assert_eq!(runs(&[1, 1, 2, 2, 2, 4]), vec![0..2, 2..5, 5..6]);
        assert_eq!(runs(&[3]), vec![0..1]);
    }

    #[test]
    fn surplus_example_is_labelled() {
        let (rows, cols) = fixtures::SURPLUS_LABELS;
        assert!(validate_lpara(grid(fixtures::PARA_6X4), labels(&rows, &cols)).is_ok());
        let (rows, cols) = fixtures::SURPLUS_RIBBON_LABELS;
        assert!(validate_lrib(grid(fixtures::BOUNCE_6X4), labels(&rows, &cols)).is_ok());
    }

    #[test]
    fn label_groups_must_increase() {
        // rows 3 and 4 both start in column 2
        let err = validate_lpara(grid(fixtures::PARA_6X4), labels(&[0, 1, 5, 3, 2, 4], &[7, 9, 8, 6])).unwrap_err();
        assert!(matches!(err, Error::LabelConvention(ref s) if s.contains("rows 3 and 4")), "{err}");
        // columns 1 and 2 both start in row 1
        let err = validate_lpara(grid(fixtures::PARA_6X4), labels(&[0, 1, 3, 5, 2, 4], &[9, 7, 8, 6])).unwrap_err();
        assert!(matches!(err, Error::LabelConvention(ref s) if s.contains("columns 1 and 2")), "{err}");
        // same grid with the same label sets sorted inside each group
        assert!(validate_lpara(grid(fixtures::PARA_6X4), labels(&[0, 1, 3, 5, 2, 4], &[7, 9, 8, 6])).is_ok());
    }

    #[test]
    fn top_row_is_v0() {
        let err = validate_lpara(grid("11/01"), labels(&[1, 0], &[2, 3])).unwrap_err();
        assert!(matches!(err, Error::LabelConvention(_)));
    }

    #[test]
    fn ribbon_needs_minimal_area() {
        let err = validate_lrib(grid(fixtures::PARA_6X4), Labelling::canonical(6, 4)).unwrap_err();
        assert!(matches!(err, Error::Area { .. }));
    }
}

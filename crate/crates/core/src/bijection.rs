//! The maps between EW-tableaux and labelled ribbons (φ, ψ) and between
//! marked EW-tableaux and labelled parallelogram polyominoes (Φ, Φ⁻¹).

use crate::error::{Error, Result};
use crate::ew::{
    cornersupport_mask_fast, eta, marks_from_decoration, sort_to_staircase, validate_marked, EwTableau, MarkedEwTableau,
};
use crate::grid::{Grid01, LabelVector, Labelling};
use crate::poly::{decompose, expand, validate_lpara, validate_lrib, LabelledPara, LabelledRibbon};

/// Sorts `t` to staircase form and traces the 0/1 boundary: a 1 is kept
/// where the cell below is 0 (or absent), a 0 becomes 1 where the cell to
/// its right is 1 (or absent).
pub fn phi(t: &EwTableau) -> LabelledRibbon {
    let stair = sort_to_staircase(t);
    let s = &stair.grid;
    let (m, n) = (s.m(), s.n());
    let r =
        Grid01::from_fn(m, n, |i, j| if s.get(i, j) { i == m || !s.get(i + 1, j) } else { j == n || s.get(i, j + 1) })
            .expect("nonempty");
    validate_lrib(r, stair.labels).expect("the staircase boundary is a labelled ribbon")
}

/// Inverse of [`phi`]: a row of the staircase holds 1s strictly right of the
/// ribbon's leftmost cell in that row (the top row is all 1s), then rows and
/// columns return to ascending label order.
pub fn psi(d: &LabelledRibbon) -> EwTableau {
    let r = d.ribbon();
    let (m, n) = (r.m(), r.n());
    let stair = Grid01::from_fn(m, n, |i, j| i == 1 || j > r.leftmost(i)).expect("nonempty");

    let l = d.labels();
    let rows: Vec<usize> = (0..m).map(|label| l.row_position(label).expect("row label")).collect();
    let cols: Vec<usize> = (m..m + n).map(|label| l.col_position(label).expect("column label")).collect();
    let g = stair.permuted(&rows, &cols);
    EwTableau::new(g).expect("a staircase with one full row is an EW-tableau")
}

/// `ζ_i = η_i - a_i - 1`.
pub fn zeta(mt: &MarkedEwTableau) -> LabelVector {
    let e = eta(mt.tableau());
    let a = mt.decoration();
    LabelVector::new((1..=e.len()).map(|i| e.get(i) - a.get(i) - 1).collect())
}

/// Φ as φ(T) grown by `ζ = η - a - 1`.
pub fn big_phi_zeta(mt: &MarkedEwTableau) -> Result<LabelledPara> {
    expand(&phi(mt.tableau()), &zeta(mt))
        .map_err(|e| Error::Consistency(format!("φ(T) does not support ζ = η - a - 1: {e}")))
}

/// The statistics behind [`big_phi_direct`].
///
/// `h` is indexed by `v_1..v_{m+n-1}`. `pi` lists row label indices and
/// `sigma` column offsets (column label `v_{m-1+σ}`), both 1-based, in the
/// order they appear in the output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectTrace {
    pub h: LabelVector,
    pub pi: Vec<usize>,
    pub sigma: Vec<usize>,
}

/// For a row label: cornersupport 0s of the row plus non-cornersupport 0s
/// weakly left of its mark. For a column label: cornersupport 1s of the
/// column plus non-cornersupport 1s weakly above its mark. `π` and `σ` are
/// stable ascending sorts of the row and column parts of `h`.
pub fn direct_trace(mt: &MarkedEwTableau) -> DirectTrace {
    let t = mt.tableau();
    let g = t.grid();
    let (m, n) = (t.m(), t.n());
    let mask = cornersupport_mask_fast(t);
    let marks = marks_from_decoration(mt);

    let mut h = LabelVector::zeros(m + n - 1);
    for label in 1..m {
        let i = t.row_of_label(label);
        let &(_, mark) = marks.iter().find(|&&(r, c)| r == i && !g.get(r, c)).expect("every row has a starred 0");
        let count = (1..=n).filter(|&j| !g.get(i, j) && (mask.is_cornersupport(i, j) || j <= mark)).count();
        h.set(label, count);
    }
    for label in m..m + n {
        let j = t.col_of_label(label);
        let &(mark, _) = marks.iter().find(|&&(r, c)| c == j && g.get(r, c)).expect("every column has a starred 1");
        let count = (1..=m).filter(|&i| g.get(i, j) && (mask.is_cornersupport(i, j) || i <= mark)).count();
        h.set(label, count);
    }

    let mut pi: Vec<usize> = (1..m).collect();
    pi.sort_by_key(|&i| h.get(i));
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.sort_by_key(|&y| h.get(m - 1 + y));
    DirectTrace { h, pi, sigma }
}

/// Φ built straight from the h-statistics: row position `x+1` carries
/// `v_{π(x)}` starting in column `h_{π(x)}`, column position `y` carries
/// `v_{m-1+σ(y)}` starting in row `h_{m-1+σ(y)}`, and the top row `v_0`
/// starts in column 1.
pub fn big_phi_direct(mt: &MarkedEwTableau) -> Result<LabelledPara> {
    let m = mt.tableau().m();
    let tr = direct_trace(mt);

    let mut rows = vec![0];
    rows.extend(&tr.pi);
    let cols: Vec<usize> = tr.sigma.iter().map(|&s| m - 1 + s).collect();
    let left: Vec<usize> = rows.iter().map(|&l| if l == 0 { 1 } else { tr.h.get(l) }).collect();
    let top: Vec<usize> = cols.iter().map(|&l| tr.h.get(l)).collect();

    let grid = crate::poly::fill_boundaries(&left, &top);
    let labels = Labelling::new(rows, cols).expect("π and σ are permutations");
    debug_assert_eq!(grid.m(), m);
    validate_lpara(grid, labels).map_err(|e| Error::Consistency(format!("h-statistics give no polyomino: {e}")))
}

/// Inverse of Φ: split off the surplus, undo φ on the ribbon, and read the
/// decoration as `a_i = η_i - ζ_i - 1`.
pub fn big_phi_inverse(d: &LabelledPara) -> Result<MarkedEwTableau> {
    let (ribbon, z) = decompose(d);
    let t = psi(&ribbon);
    let e = eta(&t);
    let mut a = LabelVector::zeros(e.len());
    for i in 1..=e.len() {
        if z.get(i) >= e.get(i) {
            return Err(Error::Consistency(format!(
                "surplus {} of v{i} leaves no decoration below eta = {}",
                z.get(i),
                e.get(i)
            )));
        }
        a.set(i, e.get(i) - z.get(i) - 1);
    }
    validate_marked(t, a).map_err(|e| Error::Consistency(e.to_string()))
}

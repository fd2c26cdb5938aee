use super::cornersupport::eta;
use super::marked::MarkedEwTableau;
use super::EwTableau;
use crate::error::Result;
use crate::grid::{Grid01, LabelVector};
use crate::guard::SizeGuard;

/// Lazily walks `EW_{m,n}` in lexicographic order of the rows below the top.
///
/// Each lower row is a bitmask with column 1 in the most significant
/// position, so numeric order is bitstring order. Two rows may coexist iff
/// their 1-sets are nested; the all-0 row is compatible with everything, so
/// the search never dead-ends.
#[derive(Clone, Debug)]
pub struct EwIter {
    m: usize,
    n: usize,
    rows: Vec<u64>,
    state: IterState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

fn nested(a: u64, b: u64) -> bool {
    a & !b == 0 || b & !a == 0
}

impl EwIter {
    fn full(&self) -> u64 {
        if self.n >= 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn emit(&self) -> EwTableau {
        let n = self.n;
        let grid = Grid01::from_fn(self.m, n, |i, j| i == 1 || self.rows[i - 2] >> (n - j) & 1 == 1).expect("nonempty");
        EwTableau::from_grid_unchecked(grid)
    }

    fn advance(&mut self) -> bool {
        let full = self.full();
        for d in (0..self.rows.len()).rev() {
            let mut v = self.rows[d] + 1;
            while v < full {
                if self.rows[..d].iter().all(|&p| nested(p, v)) {
                    self.rows[d] = v;
                    self.rows[d + 1..].iter_mut().for_each(|r| *r = 0);
                    return true;
                }
                v += 1;
            }
        }
        false
    }
}

impl Iterator for EwIter {
    type Item = EwTableau;

    fn next(&mut self) -> Option<EwTableau> {
        match self.state {
            IterState::Done => None,
            IterState::Fresh => {
                self.state = IterState::Running;
                Some(self.emit())
            }
            IterState::Running => {
                if self.advance() {
                    Some(self.emit())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
        }
    }
}

/// All of `EW_{m,n}`, subject to the size guard.
pub fn enumerate_ew(m: usize, n: usize, guard: &SizeGuard) -> Result<EwIter> {
    guard.check_ew(m, n)?;
    Ok(EwIter { m, n, rows: vec![0; m - 1], state: IterState::Fresh })
}

/// All decorations of `t` in lexicographic order.
fn decorations(t: EwTableau) -> impl Iterator<Item = MarkedEwTableau> {
    let bounds = eta(&t).into_vec();
    let mut current = Some(vec![0usize; bounds.len()]);
    std::iter::from_fn(move || {
        let a = current.take()?;
        let mut next = a.clone();
        for k in (0..next.len()).rev() {
            next[k] += 1;
            if next[k] < bounds[k] {
                current = Some(next);
                break;
            }
            next[k] = 0;
        }
        Some(MarkedEwTableau::from_parts_unchecked(t.clone(), LabelVector::new(a)))
    })
}

/// All of `MEW_{m,n}`: tableaux in [`enumerate_ew`] order, each followed by
/// its decorations in lexicographic order.
pub fn enumerate_mew(m: usize, n: usize, guard: &SizeGuard) -> Result<impl Iterator<Item = MarkedEwTableau>> {
    Ok(enumerate_ew(m, n, guard)?.flat_map(decorations))
}

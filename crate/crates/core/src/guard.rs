use crate::error::{Error, Result};

/// Limits on exhaustive enumeration.
///
/// EW families enumerate `2^((m-1) n)` candidate fillings, so they are
/// bounded by the number of free cells `(m-1) n`. Polyomino families grow
/// with the semiperimeter `m + n`, bounded by half the same budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_cells: usize,
}

pub const DEFAULT_MAX_CELLS: usize = 24;

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard { max_cells: DEFAULT_MAX_CELLS }
    }
}

impl SizeGuard {
    pub fn new(max_cells: usize) -> Self {
        SizeGuard { max_cells }
    }

    /// Effectively no limit; for callers that have already decided.
    pub fn unlimited() -> Self {
        SizeGuard { max_cells: usize::MAX }
    }

    fn dims(m: usize, n: usize) -> Result<()> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension(format!("dimensions must be at least 1, got {m}x{n}")));
        }
        Ok(())
    }

    pub fn check_ew(&self, m: usize, n: usize) -> Result<()> {
        Self::dims(m, n)?;
        // rows below the top are packed into u64 bitmasks
        if (m - 1) * n > self.max_cells || (m > 1 && n > 63) {
            return Err(Error::SizeGuard { m, n, limit: format!("(m-1)*n <= {}", self.max_cells) });
        }
        Ok(())
    }

    pub fn check_poly(&self, m: usize, n: usize) -> Result<()> {
        Self::dims(m, n)?;
        if m + n > self.max_cells / 2 {
            return Err(Error::SizeGuard { m, n, limit: format!("m+n <= {}", self.max_cells / 2) });
        }
        Ok(())
    }
}

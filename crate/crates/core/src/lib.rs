//! Rectangular EW-tableaux, labelled parallelogram polyominoes and the
//! bijections between them.
//!
//! Grids are indexed from 1: `(i, j)` is row `i` from the top, column `j`
//! from the left. Row labels are `v_0..v_{m-1}` and column labels
//! `v_m..v_{m+n-1}`, stored as the bare integers.

pub mod bijection;
pub mod error;
pub mod ew;
pub mod fixtures;
pub mod format;
pub mod grid;
pub mod guard;
pub mod poly;
pub mod render;
pub mod verify;

pub use bijection::{big_phi_direct, big_phi_inverse, big_phi_zeta, direct_trace, phi, psi, zeta, DirectTrace};
pub use error::{Error, Result};
pub use ew::{validate_ew, validate_marked, EwTableau, MarkedEwTableau};
pub use format::Document;
pub use grid::{Decoration, Grid01, LabelVector, Labelling};
pub use guard::SizeGuard;
pub use poly::{validate_lpara, validate_lrib, validate_para, validate_ribbon, LabelledPara, LabelledRibbon};

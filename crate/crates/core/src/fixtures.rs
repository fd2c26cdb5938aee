//! Worked examples with known answers, shared by the unit tests, the
//! acceptance suite and `verify`.
//!
//! Grids use the compact `row/row/...` form; label lists give the label of
//! each row (column) position in order.

pub type Labels<const M: usize, const N: usize> = ([usize; M], [usize; N]);

/// The seven tableaux of `EW_{3,2}`.
pub const EW_3X2: [&str; 7] = ["11/01/01", "11/10/10", "11/01/00", "11/00/01", "11/10/00", "11/00/10", "11/00/00"];

/// Small φ examples: tableau, ribbon, ribbon labels.
pub const PHI_SMALL: [(&str, &str, Labels<3, 2>); 3] = [
    ("11/00/00", "11/01/01", ([0, 1, 2], [3, 4])),
    ("11/00/01", "10/11/01", ([0, 2, 1], [3, 4])),
    ("11/10/10", "10/10/11", ([0, 1, 2], [4, 3])),
];

/// A labelled 3x4 ribbon and its preimage under φ.
pub const PSI_RIBBON_3X4: &str = "1100/0111/0001";
pub const PSI_LABELS_3X4: Labels<3, 4> = ([0, 2, 1], [4, 6, 3, 5]);
pub const PSI_TABLEAU_3X4: &str = "1111/0000/1010";

/// A labelled 4x5 ribbon and its preimage under φ.
pub const PSI_RIBBON_4X5: &str = "11100/00100/00111/00001";
pub const PSI_LABELS_4X5: Labels<4, 5> = ([0, 2, 3, 1], [4, 6, 8, 5, 7]);
pub const PSI_TABLEAU_4X5: &str = "11111/00000/01010/01010";

/// Tableau with two cornersupport entries in the top rows.
pub const ETA_4X4: &str = "1111/0010/0011/0010";
pub const ETA_4X4_VALUES: [usize; 7] = [1, 2, 1, 1, 1, 2, 1];
pub const ETA_4X4_DECORATIONS: [[usize; 7]; 4] =
    [[0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 1, 0]];

/// Not an EW-tableau: rows 2 and 3 cross on columns 1 and 2.
pub const RECTANGLE_4X4: &str = "1111/0110/1001/0000";

pub const T_7X13: &str =
    "1111111111111/0011100000000/1011110111000/1011100000000/1011110111000/0011100000000/1011110111000";

/// Staircase form of [`T_7X13`] and its labels.
pub const STAIR_7X13: &str =
    "1111111111111/0000011111111/0000011111111/0000011111111/0000000001111/0000000000111/0000000000111";
pub const STAIR_LABELS_7X13: Labels<7, 13> = ([0, 2, 4, 6, 3, 1, 5], [8, 13, 17, 18, 19, 12, 14, 15, 16, 7, 9, 10, 11]);

/// φ([`T_7X13`]), labelled by [`STAIR_LABELS_7X13`].
pub const RIBBON_7X13: &str =
    "1111100000000/0000100000000/0000100000000/0000111110000/0000000011000/0000000001000/0000000001111";

/// Cornersupport mask of [`T_7X13`]: `c` cornersupport, `n` not.
pub const MASK_7X13: &str =
    "cnccccncccnnn/ncnnncccccccc/cncccnnnnnnnn/nccccncnnnccc/cncccnnnnnnnn/ncnnncccccccc/cncccnnnnnnnn";

pub const ETA_7X13: [usize; 19] = [1, 5, 4, 5, 1, 5, 1, 1, 2, 2, 2, 3, 1, 3, 3, 3, 1, 1, 1];

/// A decoration of [`T_7X13`] and its starred cells `(row, column)`.
pub const DECORATION_A_7X13: [usize; 19] = [0, 2, 1, 4, 0, 2, 0, 0, 1, 0, 1, 2, 0, 0, 2, 1, 0, 0, 0];
pub const MARKS_A_7X13: [(usize, usize); 19] = [
    (1, 2),
    (1, 7),
    (1, 11),
    (1, 12),
    (1, 13),
    (2, 1),
    (2, 4),
    (3, 8),
    (3, 11),
    (4, 1),
    (4, 8),
    (5, 10),
    (5, 13),
    (6, 1),
    (6, 3),
    (6, 5),
    (7, 6),
    (7, 9),
    (7, 11),
];

/// The decoration pushed through Φ below, and its starred cells.
pub const DECORATION_B_7X13: [usize; 19] = [0, 4, 1, 1, 0, 3, 0, 0, 1, 0, 1, 2, 0, 1, 0, 1, 0, 0, 0];
pub const MARKS_B_7X13: [(usize, usize); 19] = [
    (1, 2),
    (1, 7),
    (1, 11),
    (1, 12),
    (1, 13),
    (2, 1),
    (2, 4),
    (3, 9),
    (3, 13),
    (4, 1),
    (4, 8),
    (5, 7),
    (5, 8),
    (5, 10),
    (6, 1),
    (6, 3),
    (6, 5),
    (7, 6),
    (7, 12),
];

pub const ZETA_7X13: [usize; 19] = [0, 0, 2, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 1, 0, 0, 0];
pub const H_ROWS_7X13: [usize; 6] = [10, 5, 7, 2, 10, 4];
pub const H_COLS_7X13: [usize; 13] = [5, 1, 7, 6, 7, 4, 1, 3, 2, 3, 1, 1, 1];
pub const PI_7X13: [usize; 6] = [4, 6, 2, 3, 1, 5];
pub const SIGMA_7X13: [usize; 13] = [2, 7, 11, 12, 13, 9, 8, 10, 6, 1, 4, 3, 5];

/// Φ([`T_7X13`], [`DECORATION_B_7X13`]).
pub const PARA_7X13: &str =
    "1111100000000/0111110000000/0001111100000/0000111110000/0000001111000/0000000001100/0000000001111";
pub const PARA_LABELS_7X13: Labels<7, 13> = ([0, 4, 6, 2, 3, 1, 5], [8, 13, 17, 18, 19, 15, 14, 16, 12, 7, 10, 9, 11]);

/// A labelled parallelogram polyomino, its bounce ribbon with regrouped
/// labels, and the surplus between them.
pub const PARA_6X4: &str = "1100/1100/0110/0111/0011/0011";
pub const SURPLUS_LABELS: Labels<6, 4> = ([0, 4, 1, 3, 2, 5], [6, 8, 9, 7]);
pub const BOUNCE_6X4: &str = "1100/0100/0100/0111/0001/0001";
pub const SURPLUS_RIBBON_LABELS: Labels<6, 4> = ([0, 1, 3, 4, 2, 5], [6, 8, 7, 9]);
pub const SURPLUS_6X4: [usize; 9] = [0, 1, 0, 1, 1, 0, 0, 0, 1];

/// A ribbon in the same box.
pub const RIB_6X4: &str = "1100/0100/0100/0110/0010/0011";

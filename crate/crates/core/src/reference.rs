//! Reference matrices, kept verbatim.
//!
//! `LATIN_HADAMARD_*` list every Latin-Hadamard matrix of order 4 and 8, with the
//! integer `s` standing for `sqrt(p_s)`. `PRINTED_DESIGN_16` is the 16×16
//! nine-variable orthogonal design as printed, with `s` standing for `x_s`;
//! see [`DESIGN_16_ERRATA`] for the sign corrections it needs.

use crate::coloring::SignedLatinSquare;
use crate::error::{Error, Result};

pub const LATIN_HADAMARD_4X4: [[[i8; 4]; 4]; 2] = [
    [[1, 2, 3, 4], [2, -1, 4, -3], [3, -4, -1, 2], [4, 3, -2, -1]],
    [[1, 2, 3, 4], [2, -1, -4, 3], [3, 4, -1, -2], [4, -3, 2, -1]],
];

pub const LATIN_HADAMARD_8X8: [[[i8; 8]; 8]; 16] = [
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, -6, 5, -8, 7],
        [3, 4, -1, -2, 7, -8, -5, 6],
        [4, -3, 2, -1, -8, -7, 6, 5],
        [5, 6, -7, 8, -1, -2, 3, -4],
        [6, -5, 8, 7, 2, -1, -4, -3],
        [7, 8, 5, -6, -3, 4, -1, -2],
        [8, -7, -6, -5, 4, 3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, -6, 5, -8, 7],
        [3, 4, -1, -2, -7, 8, 5, -6],
        [4, -3, 2, -1, 8, 7, -6, -5],
        [5, 6, 7, -8, -1, -2, -3, 4],
        [6, -5, -8, -7, 2, -1, 4, 3],
        [7, 8, -5, 6, 3, -4, -1, -2],
        [8, -7, 6, 5, -4, -3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, -6, 5, 8, -7],
        [3, 4, -1, -2, -7, -8, 5, 6],
        [4, -3, 2, -1, -8, 7, -6, 5],
        [5, 6, 7, 8, -1, -2, -3, -4],
        [6, -5, 8, -7, 2, -1, 4, -3],
        [7, -8, -5, 6, 3, -4, -1, 2],
        [8, 7, -6, -5, 4, 3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, -6, 5, 8, -7],
        [3, 4, -1, -2, 7, 8, -5, -6],
        [4, -3, 2, -1, 8, -7, 6, -5],
        [5, 6, -7, -8, -1, -2, 3, 4],
        [6, -5, -8, 7, 2, -1, -4, 3],
        [7, -8, 5, -6, -3, 4, -1, 2],
        [8, 7, 6, 5, -4, -3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, 6, -5, 8, -7],
        [3, 4, -1, -2, -7, 8, 5, -6],
        [4, -3, 2, -1, -8, -7, 6, 5],
        [5, -6, 7, 8, -1, 2, -3, -4],
        [6, 5, -8, 7, -2, -1, -4, 3],
        [7, -8, -5, -6, 3, 4, -1, 2],
        [8, 7, 6, -5, 4, -3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, 6, -5, -8, 7],
        [3, 4, -1, -2, -7, -8, 5, 6],
        [4, -3, 2, -1, 8, -7, 6, -5],
        [5, -6, 7, -8, -1, 2, -3, 4],
        [6, 5, 8, 7, -2, -1, -4, -3],
        [7, 8, -5, -6, 3, 4, -1, -2],
        [8, -7, -6, 5, -4, 3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, 6, -5, -8, 7],
        [3, 4, -1, -2, 7, 8, -5, -6],
        [4, -3, 2, -1, -8, 7, -6, 5],
        [5, -6, -7, 8, -1, 2, 3, -4],
        [6, 5, -8, -7, -2, -1, 4, 3],
        [7, 8, 5, 6, -3, -4, -1, -2],
        [8, -7, 6, -5, 4, -3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, -4, 3, 6, -5, 8, -7],
        [3, 4, -1, -2, 7, -8, -5, 6],
        [4, -3, 2, -1, 8, 7, -6, -5],
        [5, -6, -7, -8, -1, 2, 3, 4],
        [6, 5, 8, -7, -2, -1, 4, -3],
        [7, -8, 5, 6, -3, -4, -1, 2],
        [8, 7, -6, 5, -4, 3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, -6, 5, -8, 7],
        [3, -4, -1, 2, -7, 8, 5, -6],
        [4, 3, -2, -1, -8, -7, 6, 5],
        [5, 6, 7, 8, -1, -2, -3, -4],
        [6, -5, -8, 7, 2, -1, -4, 3],
        [7, 8, -5, -6, 3, 4, -1, -2],
        [8, -7, 6, -5, 4, -3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, -6, 5, 8, -7],
        [3, -4, -1, 2, -7, -8, 5, 6],
        [4, 3, -2, -1, 8, -7, 6, -5],
        [5, 6, 7, -8, -1, -2, -3, 4],
        [6, -5, 8, 7, 2, -1, -4, -3],
        [7, -8, -5, -6, 3, 4, -1, 2],
        [8, 7, -6, 5, -4, 3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, -6, 5, 8, -7],
        [3, -4, -1, 2, 7, 8, -5, -6],
        [4, 3, -2, -1, -8, 7, -6, 5],
        [5, 6, -7, 8, -1, -2, 3, -4],
        [6, -5, -8, -7, 2, -1, 4, 3],
        [7, -8, 5, 6, -3, -4, -1, 2],
        [8, 7, 6, -5, 4, -3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, -6, 5, -8, 7],
        [3, -4, -1, 2, 7, -8, -5, 6],
        [4, 3, -2, -1, 8, 7, -6, -5],
        [5, 6, -7, -8, -1, -2, 3, 4],
        [6, -5, 8, -7, 2, -1, 4, -3],
        [7, 8, 5, 6, -3, -4, -1, -2],
        [8, -7, -6, 5, -4, 3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, 6, -5, -8, 7],
        [3, -4, -1, 2, -7, -8, 5, 6],
        [4, 3, -2, -1, -8, 7, -6, 5],
        [5, -6, 7, 8, -1, 2, -3, -4],
        [6, 5, 8, -7, -2, -1, 4, -3],
        [7, 8, -5, 6, 3, -4, -1, -2],
        [8, -7, -6, -5, 4, 3, 2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, 6, -5, 8, -7],
        [3, -4, -1, 2, -7, 8, 5, -6],
        [4, 3, -2, -1, 8, 7, -6, -5],
        [5, -6, 7, -8, -1, 2, -3, 4],
        [6, 5, -8, -7, -2, -1, 4, 3],
        [7, -8, -5, 6, 3, -4, -1, 2],
        [8, 7, 6, 5, -4, -3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, 6, -5, 8, -7],
        [3, -4, -1, 2, 7, -8, -5, 6],
        [4, 3, -2, -1, -8, -7, 6, 5],
        [5, -6, -7, 8, -1, 2, 3, -4],
        [6, 5, 8, 7, -2, -1, -4, -3],
        [7, -8, 5, -6, -3, 4, -1, 2],
        [8, 7, -6, -5, 4, 3, -2, -1],
    ],
    [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, 6, -5, -8, 7],
        [3, -4, -1, 2, 7, 8, -5, -6],
        [4, 3, -2, -1, 8, -7, 6, -5],
        [5, -6, -7, -8, -1, 2, 3, 4],
        [6, 5, -8, 7, -2, -1, -4, 3],
        [7, 8, 5, -6, -3, 4, -1, -2],
        [8, -7, 6, 5, -4, -3, 2, -1],
    ],
];

pub const PRINTED_DESIGN_16: [[i8; 16]; 16] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 2, 3, 4, 5, 6, 7, 8],
    [-2, 1, -4, 3, -6, 5, 8, -7, -2, 9, 4, -3, 6, -5, -8, 7],
    [-3, 4, 1, -2, -7, -8, 5, 6, -3, -4, 9, 2, 7, 8, -5, -6],
    [-4, -3, 2, 1, -8, 7, -6, 5, -4, 3, -2, 9, 8, -7, 6, -5],
    [-5, 6, 7, 8, 1, -2, -3, -4, -5, -6, -7, -8, 9, 2, 3, 4],
    [-6, -5, 8, -7, 2, 1, 4, -3, -6, 5, -8, 7, 2, -9, 4, -3],
    [-7, -8, -5, 6, 3, -4, 1, 2, -7, 8, 5, -6, -3, 4, 9, -2],
    [-8, 7, -6, -5, 4, 3, -2, 1, -8, -7, 6, 5, -4, -3, 2, 9],
    [-9, 2, 3, 4, 5, 6, 7, 8, 1, -2, -3, -4, -5, -6, -7, -8],
    [-2, -9, 4, -3, 6, -5, -8, 7, 2, 1, 4, -3, 6, -5, -8, 7],
    [-3, -4, -9, 2, 7, -8, -5, 6, 3, -4, 1, 2, 7, 8, -5, -6],
    [-4, 3, -2, -9, 8, -7, 6, -5, 4, 3, -2, 1, 8, -7, 6, -5],
    [-5, -6, -7, -8, -9, 2, 3, 4, 5, -6, -7, -8, 1, 2, 3, 4],
    [-6, 5, -8, 7, -2, -9, -4, 3, 6, 5, -8, 7, -2, 1, -4, 3],
    [-7, 8, 5, -6, -3, 4, -9, -2, 7, 8, 5, -6, -3, 4, 1, -2],
    [-8, -7, 6, 5, -4, -3, 2, -9, 8, -7, 6, 5, -4, -3, 2, 1],
];

/// Sign corrections `(row, column)`, 1-based, that turn [`PRINTED_DESIGN_16`]
/// into an orthogonal design. These are the unique minimal set of flips.
pub const DESIGN_16_ERRATA: [(usize, usize); 6] =
    [(6, 13), (6, 14), (6, 15), (6, 16), (11, 6), (11, 8)];

/// Index into [`LATIN_HADAMARD_8X8`] of the matrix used for the power study.
pub const POWER_STUDY_MATRIX: usize = 0;

fn to_rows<const N: usize>(m: &[[i8; N]; N]) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| r.iter().map(|&v| i64::from(v)).collect())
        .collect()
}

/// Reference 4×4 Latin-Hadamard matrix `index` (0 or 1).
pub fn latin_hadamard_4x4(index: usize) -> Result<SignedLatinSquare> {
    let m = LATIN_HADAMARD_4X4
        .get(index)
        .ok_or_else(|| Error::invalid(format!("4x4 matrix index {index} outside 0..2")))?;
    SignedLatinSquare::from_rows(&to_rows(m))
}

/// Reference 8×8 Latin-Hadamard matrix `index` (0..16), in reading order.
pub fn latin_hadamard_8x8(index: usize) -> Result<SignedLatinSquare> {
    let m = LATIN_HADAMARD_8X8
        .get(index)
        .ok_or_else(|| Error::invalid(format!("8x8 matrix index {index} outside 0..16")))?;
    SignedLatinSquare::from_rows(&to_rows(m))
}

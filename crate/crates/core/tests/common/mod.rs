//! Reference values used as fixed expectations.
#![allow(dead_code)]

#[rustfmt::skip]
pub const STRUCTURED_W4: [[u32; 16]; 16] = [
    [ 1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 11, 12, 13, 14, 15, 16],
    [ 2,  1,  4,  3,  6,  5,  8,  7, 10,  9, 12, 11, 14, 13, 16, 15],
    [ 3,  4,  1,  2,  7,  8,  5,  6, 11, 12,  9, 10, 15, 16, 13, 14],
    [ 4,  3,  2,  1,  8,  7,  6,  5, 12, 11, 10,  9, 16, 15, 14, 13],
    [ 5,  6,  7,  8,  1,  2,  3,  4, 13, 14, 15, 16,  9, 10, 11, 12],
    [ 6,  5,  8,  7,  2,  1,  4,  3, 14, 13, 16, 15, 10,  9, 12, 11],
    [ 7,  8,  5,  6,  3,  4,  1,  2, 15, 16, 13, 14, 11, 12,  9, 10],
    [ 8,  7,  6,  5,  4,  3,  2,  1, 16, 15, 14, 13, 12, 11, 10,  9],
    [ 9, 10, 11, 12, 13, 14, 15, 16,  1,  2,  3,  4,  5,  6,  7,  8],
    [10,  9, 12, 11, 14, 13, 16, 15,  2,  1,  4,  3,  6,  5,  8,  7],
    [11, 12,  9, 10, 15, 16, 13, 14,  3,  4,  1,  2,  7,  8,  5,  6],
    [12, 11, 10,  9, 16, 15, 14, 13,  4,  3,  2,  1,  8,  7,  6,  5],
    [13, 14, 15, 16,  9, 10, 11, 12,  5,  6,  7,  8,  1,  2,  3,  4],
    [14, 13, 16, 15, 10,  9, 12, 11,  6,  5,  8,  7,  2,  1,  4,  3],
    [15, 16, 13, 14, 11, 12,  9, 10,  7,  8,  5,  6,  3,  4,  1,  2],
    [16, 15, 14, 13, 12, 11, 10,  9,  8,  7,  6,  5,  4,  3,  2,  1],
];

// Choice vector (-, +, +, +): only the level-2 choice is `-`.
pub const COLORED_W3_INDEX: u64 = 1;

#[rustfmt::skip]
pub const COLORED_W3: [[i64; 8]; 8] = [
    [ 1,  2,  3,  4,  5,  6,  7,  8],
    [ 2, -1, -4,  3,  6, -5,  8, -7],
    [ 3,  4, -1, -2,  7, -8, -5,  6],
    [ 4, -3,  2, -1,  8,  7, -6, -5],
    [ 5, -6, -7, -8, -1,  2,  3,  4],
    [ 6,  5,  8, -7, -2, -1,  4, -3],
    [ 7, -8,  5,  6, -3, -4, -1,  2],
    [ 8,  7, -6,  5, -4,  3, -2, -1],
];

/// Quaternion multiplication table, `±k` for `±e_k`.
pub const QUATERNIONS: [[i64; 4]; 4] =
    [[1, 2, 3, 4], [2, -1, 4, -3], [3, -4, -1, 2], [4, 3, -2, -1]];

/// Selected power-table cells: (alternative, preset, statistic, rate).
pub const POWER_CELLS: [(&str, &str, &str, f64); 9] = [
    ("normal:0,1.3", "a", "X2", 0.859),
    ("normal:0,1.3", "a", "T6", 0.850),
    ("normal:0,1.3", "a", "T8", 0.056),
    ("normal:0.4,1", "a", "T8", 0.994),
    ("normal:0.4,1", "a", "T3", 0.118),
    ("t:1", "b", "T5", 1.000),
    ("gamma:5,1/5", "b", "T3", 0.561),
    ("gamma:5,1/5", "b", "T4", 0.548),
    ("normal:0,1.3", "c", "T8", 0.405),
];

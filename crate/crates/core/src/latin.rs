//! The structured Latin square `S_w` of order `2^w`.
//!
//! `S_0 = [1]` and `S_w = [[A, B], [B, A]]` with `A = S_{w-1}` and
//! `B = A + 2^(w-1)`. Every `S_w` is symmetric about both diagonals, has a
//! constant diagonal of 1, and has the AB-BA property: whenever row `i1`
//! holds `a` in column `j1` and `b` in column `j2`, some other row `i2`
//! holds `b` in column `j1` and `a` in column `j2`.
//!
//! Indices in the public API are 1-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatinSquare {
    w: u32,
    n: usize,
    entries: Vec<u32>,
}

/// Four AB-BA corners: `S[i1][j1] = S[i2][j2] = a` and `S[i1][j2] = S[i2][j1] = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CornerQuad {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    pub a: u32,
    pub b: u32,
}

impl CornerQuad {
    /// The four cells `(i1,j1), (i1,j2), (i2,j1), (i2,j2)`.
    pub fn cells(&self) -> [(usize, usize); 4] {
        [
            (self.i1, self.j1),
            (self.i1, self.j2),
            (self.i2, self.j1),
            (self.i2, self.j2),
        ]
    }
}

impl LatinSquare {
    /// Builds `S_w` by the block recursion. No size cap is applied here.
    pub fn new(w: u32) -> Self {
        let n = 1usize << w;
        let mut entries = vec![0u32; n * n];
        entries[0] = 1;
        let mut size = 1usize;
        while size < n {
            let shift = size as u32;
            for i in 0..size {
                for j in 0..size {
                    let a = entries[i * n + j];
                    entries[i * n + j + size] = a + shift;
                    entries[(i + size) * n + j] = a + shift;
                    entries[(i + size) * n + j + size] = a;
                }
            }
            size *= 2;
        }
        LatinSquare { w, n, entries }
    }

    /// `S_w` with a size guard on `w`.
    pub fn with_guard(w: u32, max_w: u32) -> Result<Self> {
        if w > max_w {
            return Err(Error::Size(format!(
                "w = {w} exceeds the limit of {max_w} (dimension 2^{max_w})"
            )));
        }
        Ok(Self::new(w))
    }

    /// Wraps an arbitrary square of values; checks shape and value range only.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::invalid(format!(
                "Latin square order must be a power of two, got {n}"
            )));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            for &v in row {
                if v == 0 || v as usize > n {
                    return Err(Error::invalid(format!("entry {v} outside 1..={n}")));
                }
            }
            entries.extend_from_slice(row);
        }
        Ok(LatinSquare {
            w: n.trailing_zeros(),
            n,
            entries,
        })
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// 1-based row index holding `value` in column `j`.
    pub fn row_of(&self, value: u32, j: usize) -> Option<usize> {
        (1..=self.n).find(|&i| self.get(i, j) == value)
    }

    pub fn is_latin(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n + 1];
        for i in 1..=n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 1..=n {
                let v = self.get(i, j) as usize;
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        for j in 1..=n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 1..=n {
                let v = self.get(i, j) as usize;
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_anti_symmetric_about_second_diagonal(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| self.get(i, j) == self.get(n + 1 - j, n + 1 - i)))
    }

    /// Upper-left `size × size` block as a square of its own.
    pub fn leading_block(&self, size: usize) -> Result<LatinSquare> {
        if size == 0 || size > self.n || !size.is_power_of_two() {
            return Err(Error::invalid(format!("block size {size} not valid")));
        }
        let rows: Vec<Vec<u32>> = (1..=size)
            .map(|i| (1..=size).map(|j| self.get(i, j)).collect())
            .collect();
        LatinSquare::from_rows(&rows)
    }

    /// Completes the AB-BA quad started at row `i1`, columns `j1`, `j2`.
    pub fn find_abba_partner(&self, i1: usize, j1: usize, j2: usize) -> Result<CornerQuad> {
        let n = self.n;
        for (name, idx) in [("i1", i1), ("j1", j1), ("j2", j2)] {
            if idx == 0 || idx > n {
                return Err(Error::invalid(format!("{name} = {idx} outside 1..={n}")));
            }
        }
        if j1 == j2 {
            return Err(Error::invalid("j1 and j2 must differ"));
        }
        let a = self.get(i1, j1);
        let b = self.get(i1, j2);
        // b occurs once in column j1, so the partner row is unique.
        let i2 = self
            .row_of(b, j1)
            .ok_or_else(|| Error::internal(format!("value {b} missing from column {j1}")))?;
        if i2 == i1 || self.get(i2, j2) != a {
            return Err(Error::internal(format!(
                "no AB-BA partner for row {i1}, columns {j1},{j2}"
            )));
        }
        Ok(CornerQuad {
            i1,
            j1,
            i2,
            j2,
            a,
            b,
        })
    }

    /// Every AB-BA quad exactly once, normalised to `i1 < i2` and `j1 < j2`.
    pub fn abba_quads(&self) -> Result<Vec<CornerQuad>> {
        let n = self.n;
        let mut quads = Vec::with_capacity(n * (n - 1) / 2 * n / 2);
        for j1 in 1..=n {
            for j2 in (j1 + 1)..=n {
                for i1 in 1..=n {
                    let q = self.find_abba_partner(i1, j1, j2)?;
                    if q.i1 < q.i2 {
                        quads.push(q);
                    }
                }
            }
        }
        Ok(quads)
    }
}

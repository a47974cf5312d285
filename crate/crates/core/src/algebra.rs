//! Cayley–Dickson multiplication tables, zero divisors, and Radon's function.
//!
//! Basis elements are `e_1..e_dim` with `e_1` the unit. A table entry
//! `(sign, k)` at `(i, j)` means `e_i·e_j = sign·e_k`. Products of general
//! elements are computed bilinearly over integer coefficient vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::SignedLatinSquare;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// Largest doubling exponent accepted by [`cayley_dickson_table`] (dim 32).
pub const MAX_DOUBLING: u32 = 5;

/// Largest dimension for which the `(e_i ± e_j)` zero-divisor scan is exhaustive.
pub const EXHAUSTIVE_SCAN_DIM: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedBasis {
    pub sign: Sign,
    /// 1-based basis index.
    pub index: usize,
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e{}", self.sign, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraTable {
    dim: usize,
    table: Vec<SignedBasis>,
}

impl AlgebraTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_i·e_j`, 1-based.
    pub fn product(&self, i: usize, j: usize) -> SignedBasis {
        self.table[(i - 1) * self.dim + (j - 1)]
    }

    /// Table as signed integers, `±k` for `±e_k`.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.table
            .chunks(self.dim)
            .map(|r| r.iter().map(|e| e.sign.value() * e.index as i64).collect())
            .collect()
    }

    /// Bilinear product of two coefficient vectors.
    pub fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim];
        for (i, &xi) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                let e = self.product(i + 1, j + 1);
                out[e.index - 1] += e.sign.value() * xi * yj;
            }
        }
        out
    }

    pub fn has_unit(&self) -> bool {
        (1..=self.dim).all(|k| {
            self.product(1, k)
                == SignedBasis {
                    sign: Sign::Plus,
                    index: k,
                }
                && self.product(k, 1)
                    == SignedBasis {
                        sign: Sign::Plus,
                        index: k,
                    }
        })
    }

    /// `e_i·e_i = -e_1` for every `i >= 2`.
    pub fn imaginary_units_square_to_minus_one(&self) -> bool {
        (2..=self.dim).all(|i| {
            self.product(i, i)
                == SignedBasis {
                    sign: Sign::Minus,
                    index: 1,
                }
        })
    }

    pub fn unsigned_is_latin(&self) -> bool {
        let d = self.dim;
        let mut seen = vec![false; d + 1];
        for i in 1..=d {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 1..=d {
                let k = self.product(i, j).index;
                if seen[k] {
                    return false;
                }
                seen[k] = true;
            }
        }
        for j in 1..=d {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 1..=d {
                let k = self.product(i, j).index;
                if seen[k] {
                    return false;
                }
                seen[k] = true;
            }
        }
        true
    }

    /// `(e_i e_j) e_k = e_i (e_j e_k)` for all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        for i in 1..=d {
            for j in 1..=d {
                let ij = self.product(i, j);
                for k in 1..=d {
                    let left = self.product(ij.index, k);
                    let jk = self.product(j, k);
                    let right = self.product(i, jk.index);
                    if left.index != right.index || ij.sign * left.sign != jk.sign * right.sign {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn conjugate(x: &[i64]) -> Vec<i64> {
    x.iter()
        .enumerate()
        .map(|(k, &v)| if k == 0 { v } else { -v })
        .collect()
}

fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// `(a,b)(c,d) = (ac - d̄b, da + bc̄)`.
fn doubling_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    if x.len() == 1 {
        return vec![x[0] * y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first = sub(&doubling_mul(a, c), &doubling_mul(&conjugate(d), b));
    let second = add(&doubling_mul(d, a), &doubling_mul(b, &conjugate(c)));
    let mut out = first;
    out.extend(second);
    out
}

/// Multiplication table of the `2^m`-dimensional Cayley–Dickson algebra.
pub fn cayley_dickson_table(m: u32) -> Result<AlgebraTable> {
    if m > MAX_DOUBLING {
        return Err(Error::Size(format!(
            "Cayley-Dickson tables are limited to m <= {MAX_DOUBLING}, got {m}"
        )));
    }
    let dim = 1usize << m;
    let unit = |k: usize| {
        let mut v = vec![0i64; dim];
        v[k] = 1;
        v
    };
    let mut table = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let prod = doubling_mul(&unit(i), &unit(j));
            let mut nonzero = prod.iter().enumerate().filter(|(_, v)| **v != 0);
            let (k, &v) = nonzero
                .next()
                .ok_or_else(|| Error::internal("basis product vanished"))?;
            if nonzero.next().is_some() || v.abs() != 1 {
                return Err(Error::internal(
                    "basis product is not a signed basis element",
                ));
            }
            table.push(SignedBasis {
                sign: Sign::of(v),
                index: k + 1,
            });
        }
    }
    Ok(AlgebraTable { dim, table })
}

/// Reads a signed Latin square as a multiplication table:
/// `e_i·e_j = sgn(H[i][j])·e_{|H[i][j]|}`.
pub fn table_from_signed_square(h: &SignedLatinSquare) -> Result<AlgebraTable> {
    let dim = h.n();
    if !h.signs().is_normalized() {
        return Err(Error::invalid(
            "first row and first column must be positive to act as a unit",
        ));
    }
    let mut table = Vec::with_capacity(dim * dim);
    for i in 1..=dim {
        for j in 1..=dim {
            table.push(SignedBasis {
                sign: h.signs().get(i, j),
                index: h.square().get(i, j) as usize,
            });
        }
    }
    Ok(AlgebraTable { dim, table })
}

/// `(e_i s1 e_j)·(e_k s2 e_l) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroDivisorPair {
    pub i: usize,
    pub j: usize,
    pub s1: Sign,
    pub k: usize,
    pub l: usize,
    pub s2: Sign,
}

impl fmt::Display for ZeroDivisorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(e_{} {} e_{})(e_{} {} e_{}) = 0",
            self.i, self.s1, self.j, self.k, self.s2, self.l
        )
    }
}

fn scan_pairs(t: &AlgebraTable, mut visit: impl FnMut(ZeroDivisorPair) -> bool) {
    let d = t.dim();
    let mut x = vec![0i64; d];
    let mut y = vec![0i64; d];
    for i in 2..=d {
        for j in (i + 1)..=d {
            for s1 in [Sign::Plus, Sign::Minus] {
                x.iter_mut().for_each(|v| *v = 0);
                x[i - 1] = 1;
                x[j - 1] = s1.value();
                for k in 2..=d {
                    for l in (k + 1)..=d {
                        for s2 in [Sign::Plus, Sign::Minus] {
                            y.iter_mut().for_each(|v| *v = 0);
                            y[k - 1] = 1;
                            y[l - 1] = s2.value();
                            if t.mul(&x, &y).iter().all(|&c| c == 0) {
                                let pair = ZeroDivisorPair { i, j, s1, k, l, s2 };
                                if !visit(pair) {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// All products `(e_i ± e_j)(e_k ± e_l) = 0` with `2 <= i < j`, `2 <= k < l`.
///
/// For `dim <= 16` zero divisors only occur in this form, so an empty
/// result certifies there are none. For `dim = 32` the scan is partial.
pub fn find_zero_divisors(t: &AlgebraTable) -> Vec<ZeroDivisorPair> {
    let mut found = Vec::new();
    scan_pairs(t, |p| {
        found.push(p);
        true
    });
    found
}

/// Stops at the first zero divisor.
pub fn has_zero_divisors(t: &AlgebraTable) -> bool {
    let mut any = false;
    scan_pairs(t, |_| {
        any = true;
        false
    });
    any
}

pub fn scan_is_exhaustive(dim: usize) -> bool {
    dim <= EXHAUSTIVE_SCAN_DIM
}

/// Radon's function: for `n = 2^(4c+d)·b` with `b` odd and `0 <= d < 4`,
/// `ρ(n) = 8c + 2^d`.
pub fn radon(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("Radon's function is defined for n >= 1"));
    }
    let a = u64::from(n.trailing_zeros());
    let (c, d) = (a / 4, a % 4);
    Ok(8 * c + (1 << d))
}

//! Signing (`coloring`) the structured Latin square and deciding which
//! colorings give mutually orthogonal columns.
//!
//! A coloring attaches a sign to every entry of `S_w`, giving the signed
//! matrix `H[i][j] = α[i][j]·S[i][j]`. The recursive procedure fixes the
//! first row and column to `+`, the rest of the diagonal to `-`, and then
//! for each level `w' = 2..=w` consumes `2^(w'-1) - 1` free choices. All
//! remaining signs are forced. Consequently there are `2^(2^w - (w+1))`
//! candidates and each of them has every column orthogonal to column 1 and
//! every row orthogonal to row 1.
//!
//! Orthogonality is decided symbolically: entries are treated as
//! indeterminates `x_1..x_n`, so a column pair is orthogonal iff every
//! monomial `x_a·x_b` in its dot product has coefficient zero.
//!
//! Choice vectors are consumed level by level (`w' = 2` upward), then by
//! increasing row index. Enumeration index `t` maps to a choice vector whose
//! `k`-th choice is `-` iff bit `k` of `t` is set, so index 0 is all `+`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::latin::LatinSquare;
use crate::sign::Sign;

/// Largest `w` accepted by the exhaustive enumeration.
pub const MAX_ENUMERATION_W: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignMatrix {
    n: usize,
    signs: Vec<Sign>,
}

impl SignMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Sign) -> Self {
        let mut signs = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                signs.push(f(i, j));
            }
        }
        SignMatrix { n, signs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sign at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Sign {
        self.signs[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.signs
            .chunks(self.n)
            .map(|r| r.iter().map(|s| s.value()).collect())
            .collect()
    }

    /// `M·Mᵀ = n·I`.
    pub fn is_hadamard(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for k in i..=n {
                let dot: i64 = (1..=n)
                    .map(|j| (self.get(i, j) * self.get(k, j)).value())
                    .sum();
                let expected = if i == k { n as i64 } else { 0 };
                if dot != expected {
                    return false;
                }
            }
        }
        true
    }

    /// First row and first column all `+`.
    pub fn is_normalized(&self) -> bool {
        (1..=self.n).all(|k| self.get(1, k) == Sign::Plus && self.get(k, 1) == Sign::Plus)
    }
}

/// A Latin square together with a sign for every entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedLatinSquare {
    square: LatinSquare,
    signs: SignMatrix,
    choices: Option<Vec<Sign>>,
}

impl SignedLatinSquare {
    pub fn new(square: LatinSquare, signs: SignMatrix) -> Result<Self> {
        if square.n() != signs.n() {
            return Err(Error::DimensionMismatch {
                expected: square.n(),
                actual: signs.n(),
            });
        }
        Ok(SignedLatinSquare {
            square,
            signs,
            choices: None,
        })
    }

    /// Parses a signed integer matrix; `|H|` must be a Latin square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let abs: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| u32::try_from(v.unsigned_abs()).unwrap_or(0))
                    .collect()
            })
            .collect();
        let square = LatinSquare::from_rows(&abs)?;
        if !square.is_latin() {
            return Err(Error::invalid("absolute values do not form a Latin square"));
        }
        let n = square.n();
        let signs = SignMatrix::from_fn(n, |i, j| Sign::of(rows[i - 1][j - 1]));
        Self::new(square, signs)
    }

    pub fn n(&self) -> usize {
        self.square.n()
    }

    pub fn square(&self) -> &LatinSquare {
        &self.square
    }

    pub fn signs(&self) -> &SignMatrix {
        &self.signs
    }

    /// Choice vector used to build this matrix, if it came from [`color`].
    pub fn choices(&self) -> Option<&[Sign]> {
        self.choices.as_deref()
    }

    /// Choice vector as a bitstring, `0` for `+` and `1` for `-`.
    pub fn choice_bits(&self) -> Option<String> {
        self.choices.as_ref().map(|c| {
            c.iter()
                .map(|s| if *s == Sign::Plus { '0' } else { '1' })
                .collect()
        })
    }

    /// Signed entry `H[i][j]`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.signs.get(i, j).value() * i64::from(self.square.get(i, j))
    }

    /// Canonical row-major serialization; defines matrix identity.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (1..=n)
            .map(|i| (1..=n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> SignedLatinSquare {
        let n = self.n();
        let rows: Vec<Vec<i64>> = (1..=n)
            .map(|i| (1..=n).map(|j| self.entry(j, i)).collect())
            .collect();
        // Transposing a Latin square keeps it Latin.
        SignedLatinSquare::from_rows(&rows).expect("transpose of a signed Latin square")
    }
}

/// Number of free choices for `S_w`: `2^w - (w + 1)` (zero for `w = 0`).
pub fn free_choice_count(w: u32) -> usize {
    if w == 0 {
        0
    } else {
        (1usize << w) - (w as usize + 1)
    }
}

/// Choice vector for enumeration index `index`.
pub fn choices_from_index(w: u32, index: u64) -> Vec<Sign> {
    (0..free_choice_count(w))
        .map(|k| {
            if (index >> k) & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .collect()
}

struct Canvas<'a> {
    s: &'a LatinSquare,
    n: usize,
    cells: Vec<Option<Sign>>,
}

impl<'a> Canvas<'a> {
    fn new(s: &'a LatinSquare) -> Self {
        let n = s.n();
        Canvas {
            s,
            n,
            cells: vec![None; n * n],
        }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }

    fn get(&self, i: usize, j: usize) -> Result<Sign> {
        self.cells[self.idx(i, j)]
            .ok_or_else(|| Error::internal(format!("entry ({i},{j}) read before it was colored")))
    }

    fn set(&mut self, i: usize, j: usize, sign: Sign) -> Result<()> {
        let k = self.idx(i, j);
        match self.cells[k] {
            Some(existing) if existing != sign => Err(Error::internal(format!(
                "coloring conflict at ({i},{j}): {existing} vs {sign}"
            ))),
            _ => {
                self.cells[k] = Some(sign);
                Ok(())
            }
        }
    }

    fn value(&self, i: usize, j: usize) -> u32 {
        self.s.get(i, j)
    }
}

/// Colors `S_w` with the given choice vector.
///
/// `square` must be the canonical `S_w` and `choices.len()` must equal
/// [`free_choice_count`].
pub fn color(square: &LatinSquare, choices: &[Sign]) -> Result<SignedLatinSquare> {
    let w = square.w();
    if *square != LatinSquare::new(w) {
        return Err(Error::invalid(
            "coloring requires the canonical structured square",
        ));
    }
    let expected = free_choice_count(w);
    if choices.len() != expected {
        return Err(Error::invalid(format!(
            "expected {expected} choices for w = {w}, got {}",
            choices.len()
        )));
    }

    let n = square.n();
    let mut canvas = Canvas::new(square);
    for k in 1..=n {
        canvas.set(1, k, Sign::Plus)?;
        canvas.set(k, 1, Sign::Plus)?;
    }
    for k in 2..=n {
        canvas.set(k, k, Sign::Minus)?;
    }

    let mut next = choices.iter().copied();
    for level in 2..=w {
        let h = 1usize << (level - 1);

        // Each free choice propagates around a six-entry alternating cycle,
        // which completes row h+1 and column h+1 of the new block.
        for i in 2..=h {
            let c = next
                .next()
                .ok_or_else(|| Error::internal("choice vector exhausted"))?;
            let cycle = [
                (i, h + 1),
                (i, h + i),
                (h + 1, h + i),
                (h + 1, i),
                (h + i, i),
                (h + i, h + 1),
            ];
            let mut sign = c;
            for (r, col) in cycle {
                canvas.set(r, col, sign)?;
                sign = -sign;
            }
        }

        // B2 (lower-left): AB-BA with the first column of B1.
        for i in 1..=h {
            for j in 2..=h {
                let target = canvas.value(h + i, j);
                let ip = (1..=h)
                    .find(|&r| canvas.value(r, h + 1) == target)
                    .ok_or_else(|| {
                        Error::internal(format!("value {target} not in column {}", h + 1))
                    })?;
                if canvas.value(ip, j) != canvas.value(h + i, h + 1) {
                    return Err(Error::internal(format!(
                        "({ip},{j}) and ({},{}) are not AB-BA corners",
                        h + i,
                        h + 1
                    )));
                }
                let forced =
                    -(canvas.get(ip, j)? * canvas.get(ip, h + 1)? * canvas.get(h + i, h + 1)?);
                canvas.set(h + i, j, forced)?;
            }
        }

        // B1 (upper-right) by antisymmetry with B2.
        for i in 2..=h {
            for j in 2..=h {
                let forced = -canvas.get(h + j, i)?;
                canvas.set(i, h + j, forced)?;
            }
        }

        // A2 (lower-right): each column orthogonal to column 1.
        for i in 1..=h {
            for j in 1..=h {
                let partner = canvas.value(h + i, h + j) as usize;
                let forced = -canvas.get(partner, h + j)?;
                canvas.set(h + i, h + j, forced)?;
            }
        }

        // The same block must also leave every row orthogonal to row 1.
        for i in 1..=h {
            for j in 1..=h {
                let partner_col = canvas.value(h + i, h + j) as usize;
                if canvas.get(h + i, h + j)? != -canvas.get(h + i, partner_col)? {
                    return Err(Error::internal(format!(
                        "row {} not orthogonal to row 1 at column {}",
                        h + i,
                        h + j
                    )));
                }
            }
        }
    }

    let mut signs = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            signs.push(canvas.get(i, j)?);
        }
    }
    Ok(SignedLatinSquare {
        square: square.clone(),
        signs: SignMatrix { n, signs },
        choices: Some(choices.to_vec()),
    })
}

/// Sequential stream of all `2^(2^w - (w+1))` colorings of `S_w`.
pub struct Colorings {
    square: LatinSquare,
    next: u64,
    total: u64,
}

impl Iterator for Colorings {
    type Item = Result<SignedLatinSquare>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let choices = choices_from_index(self.square.w(), self.next);
        self.next += 1;
        Some(color(&self.square, &choices))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

fn check_enumeration_size(square: &LatinSquare) -> Result<u64> {
    if square.w() > MAX_ENUMERATION_W {
        return Err(Error::Size(format!(
            "exhaustive enumeration supports w <= {MAX_ENUMERATION_W}, got {}",
            square.w()
        )));
    }
    Ok(1u64 << free_choice_count(square.w()))
}

pub fn enumerate_colorings(square: &LatinSquare) -> Result<Colorings> {
    let total = check_enumeration_size(square)?;
    Ok(Colorings {
        square: square.clone(),
        next: 0,
        total,
    })
}

/// All colorings built in parallel, returned in enumeration-index order.
pub fn enumerate_colorings_par(square: &LatinSquare) -> Result<Vec<SignedLatinSquare>> {
    let total = check_enumeration_size(square)?;
    (0..total)
        .into_par_iter()
        .map(|t| color(square, &choices_from_index(square.w(), t)))
        .collect()
}

/// Integer coefficients of the symbolic Gram matrix.
///
/// For a pair of lines `(j, j')` (columns or rows, `j <= j'`) the dot
/// product is `Σ_{a<=b} c_{ab}·x_a·x_b`. Only nonzero coefficients are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicGram {
    n: usize,
    coefficients: BTreeMap<(usize, usize), BTreeMap<(u32, u32), i64>>,
}

impl SymbolicGram {
    fn build(n: usize, line: impl Fn(usize, usize) -> i64) -> Self {
        let mut coefficients = BTreeMap::new();
        for j in 1..=n {
            for jp in j..=n {
                let mut terms: BTreeMap<(u32, u32), i64> = BTreeMap::new();
                for r in 1..=n {
                    let x = line(r, j);
                    let y = line(r, jp);
                    let (a, b) = (x.unsigned_abs() as u32, y.unsigned_abs() as u32);
                    let key = (a.min(b), a.max(b));
                    *terms.entry(key).or_insert(0) += x.signum() * y.signum();
                }
                terms.retain(|_, c| *c != 0);
                coefficients.insert((j, jp), terms);
            }
        }
        SymbolicGram { n, coefficients }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero monomial coefficients for the pair `(j, jp)`, 1-based.
    pub fn pair(&self, j: usize, jp: usize) -> &BTreeMap<(u32, u32), i64> {
        let key = (j.min(jp), j.max(jp));
        &self.coefficients[&key]
    }

    pub fn is_off_diagonal_zero(&self) -> bool {
        self.coefficients
            .iter()
            .all(|(&(j, jp), terms)| j == jp || terms.is_empty())
    }

    /// Unordered pairs `j < j'` whose symbolic dot product vanishes.
    pub fn vanishing_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.coefficients
            .iter()
            .filter(|(&(j, jp), terms)| j < jp && terms.is_empty())
            .map(|(&k, _)| k)
            .collect()
    }
}

/// Symbolic Gram matrix of the columns of `H`.
pub fn symbolic_gram(h: &SignedLatinSquare) -> SymbolicGram {
    SymbolicGram::build(h.n(), |r, c| h.entry(r, c))
}

/// Symbolic Gram matrix of the rows of `H`.
pub fn symbolic_row_gram(h: &SignedLatinSquare) -> SymbolicGram {
    SymbolicGram::build(h.n(), |r, c| h.entry(c, r))
}

/// Columns and rows mutually orthogonal over indeterminate entries.
pub fn is_latin_hadamard(h: &SignedLatinSquare) -> bool {
    symbolic_gram(h).is_off_diagonal_zero() && symbolic_row_gram(h).is_off_diagonal_zero()
}

pub fn partial_orthogonality_report(h: &SignedLatinSquare) -> BTreeSet<(usize, usize)> {
    symbolic_gram(h).vanishing_pairs()
}

pub fn sign_pattern_is_hadamard(h: &SignedLatinSquare) -> bool {
    h.signs().is_hadamard()
}

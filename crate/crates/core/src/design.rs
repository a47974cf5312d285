//! Orthogonal designs and the built-in order-16, nine-variable design.
//!
//! An orthogonal design of order `n` and type `(s_1..s_l)` is an `n × n`
//! matrix over `{0, ±x_1, .., ±x_l}` with `A·Aᵀ = (Σ s_i x_i²)·I`. Setting
//! `x_i = sqrt(q_i)` for probabilities `q` with `Σ s_i q_i = 1` and
//! transposing yields an orthonormal basis whose first column is the square
//! root of a 16-cell probability vector, i.e. an eigenbasis usable by
//! [`crate::chisq::decompose`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chisq::{EigenbasisMatrix, ProbabilityVector, PROBABILITY_SUM_TOLERANCE};
use crate::error::{Error, Result};
use crate::reference::{DESIGN_16_ERRATA, PRINTED_DESIGN_16};
use crate::sign::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedVar {
    pub sign: Sign,
    /// 1-based variable index.
    pub var: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalDesign {
    order: usize,
    num_vars: usize,
    entries: Vec<Option<SignedVar>>,
    type_vector: Vec<u32>,
}

impl OrthogonalDesign {
    /// Builds a design from signed variable indices (`0` = zero entry).
    /// The type vector is read off the first row.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::invalid("empty design"));
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    actual: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| {
                (v != 0).then(|| SignedVar {
                    sign: Sign::of(v),
                    var: v.unsigned_abs() as usize,
                })
            }));
        }
        let num_vars = entries.iter().flatten().map(|e| e.var).max().unwrap_or(0);
        let mut type_vector = vec![0u32; num_vars];
        for e in entries[..order].iter().flatten() {
            type_vector[e.var - 1] += 1;
        }
        if type_vector.contains(&0) {
            return Err(Error::invalid("every variable must occur in the first row"));
        }
        Ok(OrthogonalDesign {
            order,
            num_vars,
            entries,
            type_vector,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn type_vector(&self) -> &[u32] {
        &self.type_vector
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Option<SignedVar> {
        self.entries[(i - 1) * self.order + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.order)
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or(0, |e| e.sign.value() * e.var as i64))
                    .collect()
            })
            .collect()
    }

    pub fn has_zero_entries(&self) -> bool {
        self.entries.iter().any(Option::is_none)
    }

    /// Copy with the sign of entry `(i, j)` flipped.
    pub fn with_flipped_sign(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        let k = (i - 1) * self.order + (j - 1);
        if let Some(e) = out.entries[k].as_mut() {
            e.sign = -e.sign;
        }
        out
    }

    /// `sqrt`-substituted cell probabilities read off the first row:
    /// cell `j` gets `q_{var(1, j)}`.
    pub fn induced_probabilities(&self, p_vars: &[f64]) -> Result<ProbabilityVector> {
        self.check_p_vars(p_vars)?;
        let p: Vec<f64> = (1..=self.order)
            .map(|j| {
                self.entry(1, j)
                    .map(|e| p_vars[e.var - 1])
                    .ok_or_else(|| Error::invalid("first row contains a zero entry"))
            })
            .collect::<Result<_>>()?;
        ProbabilityVector::new(p)
    }

    fn check_p_vars(&self, p_vars: &[f64]) -> Result<()> {
        if p_vars.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                actual: p_vars.len(),
            });
        }
        if let Some(q) = p_vars.iter().find(|q| !q.is_finite() || **q <= 0.0) {
            return Err(Error::invalid(format!(
                "variable probabilities must be positive, got {q}"
            )));
        }
        let total: f64 = self
            .type_vector
            .iter()
            .zip(p_vars)
            .map(|(&s, &q)| f64::from(s) * q)
            .sum();
        if (total - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(Error::invalid(format!(
                "type-weighted sum of variable probabilities is {total}, expected 1"
            )));
        }
        Ok(())
    }
}

/// The built-in order-16 design on nine variables, with sign errata applied.
pub fn builtin_design_16() -> OrthogonalDesign {
    let mut rows: Vec<Vec<i64>> = PRINTED_DESIGN_16
        .iter()
        .map(|r| r.iter().map(|&v| i64::from(v)).collect())
        .collect();
    for &(i, j) in DESIGN_16_ERRATA.iter() {
        rows[i - 1][j - 1] = -rows[i - 1][j - 1];
    }
    OrthogonalDesign::from_rows(&rows).expect("builtin design is well formed")
}

/// The design exactly as printed, without errata.
pub fn printed_design_16() -> OrthogonalDesign {
    let rows: Vec<Vec<i64>> = PRINTED_DESIGN_16
        .iter()
        .map(|r| r.iter().map(|&v| i64::from(v)).collect())
        .collect();
    OrthogonalDesign::from_rows(&rows).expect("printed design is well formed")
}

/// Symbolic row Gram matrix: for each `(r, r')`, coefficients of `x_a·x_b`.
pub fn design_gram(
    d: &OrthogonalDesign,
) -> BTreeMap<(usize, usize), BTreeMap<(usize, usize), i64>> {
    let n = d.order();
    let mut out = BTreeMap::new();
    for r in 1..=n {
        for rp in r..=n {
            let mut terms: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for c in 1..=n {
                if let (Some(x), Some(y)) = (d.entry(r, c), d.entry(rp, c)) {
                    let key = (x.var.min(y.var), x.var.max(y.var));
                    *terms.entry(key).or_insert(0) += (x.sign * y.sign).value();
                }
            }
            terms.retain(|_, c| *c != 0);
            out.insert((r, rp), terms);
        }
    }
    out
}

/// `A·Aᵀ = (Σ s_i x_i²)·I` over integer monomial coefficients.
pub fn verify_design(d: &OrthogonalDesign) -> bool {
    let expected_diag: BTreeMap<(usize, usize), i64> = d
        .type_vector()
        .iter()
        .enumerate()
        .map(|(k, &s)| ((k + 1, k + 1), i64::from(s)))
        .collect();
    design_gram(d).into_iter().all(|((r, rp), terms)| {
        if r == rp {
            terms == expected_diag
        } else {
            terms.is_empty()
        }
    })
}

/// Substitutes `x_i = sqrt(p_vars[i])` and transposes.
///
/// `p_vars` must be positive with `Σ s_i·p_vars[i] = 1` (to 1e-12). The
/// returned basis has first column `sqrt(p)` for the induced 16-cell vector
/// `(q_1, q_2..q_8, q_9, q_2..q_8)`.
pub fn design_to_eigenbasis(d: &OrthogonalDesign, p_vars: &[f64]) -> Result<EigenbasisMatrix> {
    let p = d.induced_probabilities(p_vars)?;
    let n = d.order();
    let roots: Vec<f64> = p_vars.iter().map(|q| q.sqrt()).collect();
    let mut data = vec![0.0; n * n];
    for i in 1..=n {
        for j in 1..=n {
            // O[i][j] = A[j][i]
            data[(i - 1) * n + (j - 1)] = d
                .entry(j, i)
                .map_or(0.0, |e| e.sign.as_f64() * roots[e.var - 1]);
        }
    }
    EigenbasisMatrix::new(n, data, p)
}

//! Pearson's `X²` and its partition into single-degree-of-freedom components.
//!
//! With cell probabilities `p`, counts `m` and `n = Σ m_i`, the scaled
//! residuals `y_i = (m_i - n p_i) / sqrt(n p_i)` have asymptotic covariance
//! `Σ* = D^(-1/2) (D(p) - p pᵀ) D^(-1/2)`, which is idempotent with kernel
//! spanned by `sqrt(p)`. Any orthonormal `O` whose first column is `sqrt(p)`
//! therefore gives `X² = Σ_{l>=2} T_l²` with `T_l = v_lᵀ y`, `v_l` the
//! `l`-th column of `O`. The identity is exact for every finite sample.
//!
//! Components are reported signed; `T_l²` is the chi-square(1) piece.

use serde::Serialize;

use crate::coloring::{is_latin_hadamard, SignMatrix, SignedLatinSquare};
use crate::error::{Error, Result};
use crate::sign::Sign;

/// Allowed deviation of `Σ p_i` from 1.
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-12;

/// Numerical tolerances: `constructed` for identities of matrices built
/// directly from `p`, `derived` for quantities accumulated through sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub constructed: f64,
    pub derived: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            constructed: 1e-12,
            derived: 1e-10,
        }
    }
}

/// Fully specified multinomial cell probabilities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::invalid("probability vector is empty"));
        }
        if let Some(v) = p.iter().find(|v| !v.is_finite() || **v <= 0.0) {
            return Err(Error::invalid(format!(
                "cell probabilities must be positive, got {v}"
            )));
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(Error::invalid(format!(
                "cell probabilities sum to {total}, not 1"
            )));
        }
        Ok(ProbabilityVector(p))
    }

    /// Normalises positive weights.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !total.is_finite() || total <= 0.0 {
            return Err(Error::invalid("weights must have a positive finite sum"));
        }
        Self::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(k: usize) -> Self {
        ProbabilityVector(vec![1.0 / k as f64; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// `sqrt(p)`, the kernel direction of `Σ*`.
    pub fn sqrt(&self) -> Vec<f64> {
        self.0.iter().map(|v| v.sqrt()).collect()
    }

    pub fn is_uniform(&self, tol: f64) -> bool {
        let u = 1.0 / self.len() as f64;
        self.0.iter().all(|v| (v - u).abs() <= tol)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellCounts(Vec<u64>);

impl CellCounts {
    pub fn new(counts: Vec<u64>) -> Self {
        CellCounts(counts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Sample size `n`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

fn check_len(m: &CellCounts, p: &ProbabilityVector) -> Result<()> {
    if m.len() != p.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            actual: m.len(),
        });
    }
    Ok(())
}

/// Dense square matrix, row-major. Accessors are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        Matrix::from_fn(n, |i, j| {
            (1..=n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.get(i, j) * v[j - 1]).sum())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (1..=self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }
}

/// `Σ` or `Σ*`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CovarianceMatrix(Matrix);

impl CovarianceMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    /// `max |M² - M|`.
    pub fn idempotency_error(&self) -> f64 {
        self.0.matmul(&self.0).max_abs_diff(&self.0)
    }
}

/// `Σ = D(p) - p pᵀ`.
pub fn sigma(p: &ProbabilityVector) -> CovarianceMatrix {
    let p = p.as_slice();
    CovarianceMatrix(Matrix::from_fn(p.len(), |i, j| {
        let off = -p[i - 1] * p[j - 1];
        if i == j {
            p[i - 1] + off
        } else {
            off
        }
    }))
}

/// `Σ* = D^(-1/2) Σ D^(-1/2)`.
pub fn sigma_star(p: &ProbabilityVector) -> CovarianceMatrix {
    let s = sigma(p);
    let r = p.sqrt();
    CovarianceMatrix(Matrix::from_fn(p.len(), |i, j| {
        s.get(i, j) / (r[i - 1] * r[j - 1])
    }))
}

/// Orthonormal basis whose first column is `sqrt(p)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenbasisMatrix {
    matrix: Matrix,
    p: ProbabilityVector,
}

impl EigenbasisMatrix {
    /// Wraps row-major `data`; checks shape only.
    pub fn new(n: usize, data: Vec<f64>, p: ProbabilityVector) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                actual: data.len(),
            });
        }
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: p.len(),
            });
        }
        Ok(EigenbasisMatrix {
            matrix: Matrix { n, data },
            p,
        })
    }

    pub fn n(&self) -> usize {
        self.matrix.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn probabilities(&self) -> &ProbabilityVector {
        &self.p
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (1..=self.n()).map(|i| self.get(i, j)).collect()
    }

    /// `max |OᵀO - I|`.
    pub fn orthonormality_error(&self) -> f64 {
        let n = self.n();
        let mut worst: f64 = 0.0;
        for a in 1..=n {
            for b in a..=n {
                let dot: f64 = (1..=n).map(|i| self.get(i, a) * self.get(i, b)).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max |O[., 1] - sqrt(p)|`.
    pub fn first_column_error(&self) -> f64 {
        self.column(1)
            .iter()
            .zip(self.p.sqrt())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `O[i][j] = sgn(H[i][j]) · sqrt(p_{|H[i][j]|})`.
pub fn eigenbasis_from_latin_hadamard(
    h: &SignedLatinSquare,
    p: &ProbabilityVector,
) -> Result<EigenbasisMatrix> {
    let k = h.n();
    if p.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            actual: p.len(),
        });
    }
    if !h.signs().is_normalized() {
        return Err(Error::invalid("first row and column of H must be positive"));
    }
    // Column 1 must read 1..k so that it becomes sqrt(p) in cell order.
    if (1..=k).any(|i| h.square().get(i, 1) as usize != i) {
        return Err(Error::invalid("first column of |H| must be 1..k"));
    }
    if !is_latin_hadamard(h) {
        return Err(Error::invalid("H is not a Latin-Hadamard matrix"));
    }
    let roots = p.sqrt();
    let data = (1..=k)
        .flat_map(|i| (1..=k).map(move |j| (i, j)))
        .map(|(i, j)| h.signs().get(i, j).as_f64() * roots[h.square().get(i, j) as usize - 1])
        .collect();
    EigenbasisMatrix::new(k, data, p.clone())
}

/// `O = H / sqrt(k)` for a normalized Hadamard sign matrix; equiprobable `p` only.
pub fn eigenbasis_from_hadamard(
    signs: &SignMatrix,
    p: &ProbabilityVector,
) -> Result<EigenbasisMatrix> {
    let k = signs.n();
    if p.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            actual: p.len(),
        });
    }
    if !p.is_uniform(PROBABILITY_SUM_TOLERANCE) {
        return Err(Error::invalid(
            "Hadamard eigenbasis requires equal cell probabilities",
        ));
    }
    if !signs.is_normalized() || !signs.is_hadamard() {
        return Err(Error::invalid(
            "sign matrix is not a normalized Hadamard matrix",
        ));
    }
    let scale = 1.0 / (k as f64).sqrt();
    let data = (1..=k)
        .flat_map(|i| (1..=k).map(move |j| (i, j)))
        .map(|(i, j)| signs.get(i, j).as_f64() * scale)
        .collect();
    EigenbasisMatrix::new(k, data, p.clone())
}

/// Standard-form Hadamard matrix of order `2^w` by `[[H, H], [H, -H]]`.
pub fn sylvester_hadamard(w: u32) -> SignMatrix {
    let n = 1usize << w;
    // Entry (i, j) is -1 iff popcount((i-1) & (j-1)) is odd.
    SignMatrix::from_fn(n, |i, j| {
        if ((i - 1) & (j - 1)).count_ones() % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    })
}

/// `X² = Σ (m_i - n p_i)² / (n p_i)`.
pub fn pearson_x2(m: &CellCounts, p: &ProbabilityVector) -> Result<f64> {
    check_len(m, p)?;
    let n = m.total() as f64;
    if n == 0.0 {
        return Err(Error::invalid("sample size must be at least 1"));
    }
    Ok(m.as_slice()
        .iter()
        .zip(p.as_slice())
        .map(|(&mi, &pi)| {
            let e = n * pi;
            (mi as f64 - e).powi(2) / e
        })
        .sum())
}

/// `y_i = (m_i - n p_i) / sqrt(n p_i)`.
pub fn scaled_residuals(m: &CellCounts, p: &ProbabilityVector) -> Result<Vec<f64>> {
    check_len(m, p)?;
    let n = m.total() as f64;
    if n == 0.0 {
        return Err(Error::invalid("sample size must be at least 1"));
    }
    Ok(m.as_slice()
        .iter()
        .zip(p.as_slice())
        .map(|(&mi, &pi)| (mi as f64 - n * pi) / (n * pi).sqrt())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    /// Pearson statistic.
    pub x2: f64,
    /// `T_2..T_k`, signed.
    pub components: Vec<f64>,
    /// Scaled residuals `y`.
    pub residuals: Vec<f64>,
}

impl Decomposition {
    pub fn sum_of_squares(&self) -> f64 {
        self.components.iter().map(|t| t * t).sum()
    }

    /// `|X² - Σ T_l²|`.
    pub fn partition_error(&self) -> f64 {
        (self.x2 - self.sum_of_squares()).abs()
    }
}

/// Projects the scaled residuals on columns `2..k` of `o`.
pub fn decompose(
    m: &CellCounts,
    p: &ProbabilityVector,
    o: &EigenbasisMatrix,
) -> Result<Decomposition> {
    check_len(m, p)?;
    if o.n() != p.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            actual: o.n(),
        });
    }
    let tol = Tolerances::default().derived;
    let first_col_err = o
        .column(1)
        .iter()
        .zip(p.sqrt())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if first_col_err > tol {
        return Err(Error::invalid(
            "eigenbasis first column does not match sqrt(p)",
        ));
    }
    let y = scaled_residuals(m, p)?;
    let x2 = pearson_x2(m, p)?;
    let components = (2..=o.n())
        .map(|l| (1..=o.n()).map(|i| o.get(i, l) * y[i - 1]).sum())
        .collect();
    Ok(Decomposition {
        x2,
        components,
        residuals: y,
    })
}

/// Cell pairs `(a, b, sign)` of a weighted-difference component: the term is
/// `sign · sqrt(n) · (sqrt(p_b/p_a)·p̂_a - sqrt(p_a/p_b)·p̂_b)`.
type PairFormula = [(usize, usize, f64); 4];

/// Pairings of `T_2`, `T_6`, `T_8` for the first reference 8×8 matrix.
const T2_PAIRS: PairFormula = [(1, 2, 1.0), (3, 4, 1.0), (5, 6, 1.0), (7, 8, 1.0)];
const T6_PAIRS: PairFormula = [(1, 6, 1.0), (2, 5, 1.0), (3, 8, -1.0), (4, 7, -1.0)];
const T8_PAIRS: PairFormula = [(1, 8, 1.0), (2, 7, 1.0), (3, 6, 1.0), (4, 5, 1.0)];

fn pair_formula(pairs: &PairFormula, m: &CellCounts, p: &ProbabilityVector) -> f64 {
    let n = m.total() as f64;
    let p = p.as_slice();
    let hat: Vec<f64> = m.as_slice().iter().map(|&c| c as f64 / n).collect();
    let sum: f64 = pairs
        .iter()
        .map(|&(a, b, s)| {
            let (pa, pb) = (p[a - 1], p[b - 1]);
            s * ((pb / pa).sqrt() * hat[a - 1] - (pa / pb).sqrt() * hat[b - 1])
        })
        .sum();
    n.sqrt() * sum
}

/// `(T_2, T_6, T_8)` for eight cells from the weighted pair differences.
pub fn component_formulas_t2_t6_t8(m: &CellCounts, p: &ProbabilityVector) -> Result<[f64; 3]> {
    check_len(m, p)?;
    if p.len() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            actual: p.len(),
        });
    }
    if m.total() == 0 {
        return Err(Error::invalid("sample size must be at least 1"));
    }
    Ok([
        pair_formula(&T2_PAIRS, m, p),
        pair_formula(&T6_PAIRS, m, p),
        pair_formula(&T8_PAIRS, m, p),
    ])
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(a: &Matrix, off_tol: f64) -> Vec<f64> {
    let n = a.n();
    let mut m = a.rows();
    let off_norm = |m: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j {
                    s += v * v;
                }
            }
        }
        s.sqrt()
    };
    for _sweep in 0..100 {
        if off_norm(&m) <= off_tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    eig.sort_by(|a, b| a.total_cmp(b));
    eig
}

/// Checks `p_(1) <= λ_1 <= p_(2) <= ... <= λ_{k-1} <= p_(k)` for the nonzero
/// eigenvalues of `Σ`, to within 1e-9.
pub fn eigen_interlacing_check(p: &ProbabilityVector) -> bool {
    const SLACK: f64 = 1e-9;
    let eig = jacobi_eigenvalues(sigma(p).matrix(), 1e-12);
    let mut sorted = p.as_slice().to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    // The smallest eigenvalue is the zero attached to the constant vector.
    if eig[0].abs() > SLACK {
        return false;
    }
    eig[1..]
        .iter()
        .enumerate()
        .all(|(i, &lambda)| sorted[i] - SLACK <= lambda && lambda <= sorted[i + 1] + SLACK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(p: &[f64]) -> ProbabilityVector {
        ProbabilityVector::new(p.to_vec()).unwrap()
    }

    #[test]
    fn probability_validation() {
        assert!(ProbabilityVector::new(vec![0.5, 0.5]).is_ok());
        assert!(ProbabilityVector::new(vec![0.5, 0.6]).is_err());
        assert!(ProbabilityVector::new(vec![1.0, 0.0]).is_err());
        assert!(ProbabilityVector::new(vec![]).is_err());
        assert!(ProbabilityVector::new(vec![f64::NAN, 1.0]).is_err());
        let b = ProbabilityVector::from_weights(&[1., 2., 3., 4., 4., 3., 2., 1.]).unwrap();
        assert!((b.as_slice()[3] - 0.2).abs() < 1e-15);
    }

    #[test]
    fn x2_hand_values() {
        let p = pv(&[0.5, 0.5]);
        let x2 = pearson_x2(&CellCounts::new(vec![6, 4]), &p).unwrap();
        assert!((x2 - 0.4).abs() < 1e-15);
        assert_eq!(pearson_x2(&CellCounts::new(vec![5, 5]), &p).unwrap(), 0.0);
        assert!(matches!(
            pearson_x2(&CellCounts::new(vec![1, 2, 3]), &p),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(pearson_x2(&CellCounts::new(vec![0, 0]), &p).is_err());
    }

    #[test]
    fn residual_hand_values() {
        let y = scaled_residuals(&CellCounts::new(vec![6, 4]), &pv(&[0.5, 0.5])).unwrap();
        let r = 1.0 / 5f64.sqrt();
        assert!((y[0] - r).abs() < 1e-15);
        assert!((y[1] + r).abs() < 1e-15);
    }

    #[test]
    fn sigma_two_cells() {
        let s = sigma(&pv(&[0.5, 0.5]));
        assert_eq!(
            s.matrix().rows(),
            vec![vec![0.25, -0.25], vec![-0.25, 0.25]]
        );
    }

    #[test]
    fn sigma_equiprobable_form() {
        let k = 8;
        let s = sigma(&ProbabilityVector::uniform(k));
        let kf = k as f64;
        let expected = Matrix::from_fn(k, |i, j| {
            let id = if i == j { 1.0 } else { 0.0 };
            (id - 1.0 / kf) / kf
        });
        assert!(s.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn two_cell_eigenbasis() {
        let h = SignedLatinSquare::from_rows(&[vec![1, 2], vec![2, -1]]).unwrap();
        let p = pv(&[0.3, 0.7]);
        let o = eigenbasis_from_latin_hadamard(&h, &p).unwrap();
        let (a, b) = (0.3f64.sqrt(), 0.7f64.sqrt());
        assert_eq!(o.matrix().rows(), vec![vec![a, b], vec![b, -a]]);
    }

    #[test]
    fn eigenbasis_rejects_bad_h() {
        let h = SignedLatinSquare::from_rows(&[
            vec![1, 2, 3, 4],
            vec![2, 1, 4, 3],
            vec![3, 4, 1, 2],
            vec![4, 3, 2, 1],
        ])
        .unwrap();
        let p = ProbabilityVector::uniform(4);
        assert!(eigenbasis_from_latin_hadamard(&h, &p).is_err());
        assert!(eigenbasis_from_latin_hadamard(&h, &ProbabilityVector::uniform(2)).is_err());
    }

    #[test]
    fn sylvester_small() {
        assert_eq!(sylvester_hadamard(1).rows(), vec![vec![1, 1], vec![1, -1]]);
        for w in 0..=6 {
            let h = sylvester_hadamard(w);
            assert!(h.is_hadamard());
            assert!(h.is_normalized());
        }
    }

    #[test]
    fn hadamard_eigenbasis_needs_uniform_p() {
        let h = sylvester_hadamard(2);
        assert!(eigenbasis_from_hadamard(&h, &ProbabilityVector::uniform(4)).is_ok());
        assert!(eigenbasis_from_hadamard(&h, &pv(&[0.1, 0.2, 0.3, 0.4])).is_err());
    }

    #[test]
    fn interlacing_two_cells() {
        let p = pv(&[0.3, 0.7]);
        let eig = jacobi_eigenvalues(sigma(&p).matrix(), 1e-12);
        assert!(eig[0].abs() < 1e-12);
        assert!((eig[1] - 0.42).abs() < 1e-12);
        assert!(eigen_interlacing_check(&p));
    }

    #[test]
    fn interlacing_equiprobable() {
        let p = ProbabilityVector::uniform(8);
        let eig = jacobi_eigenvalues(sigma(&p).matrix(), 1e-12);
        for lambda in &eig[1..] {
            assert!((lambda - 0.125).abs() < 1e-12);
        }
        assert!(eigen_interlacing_check(&p));
    }

    #[test]
    fn formulas_need_eight_cells() {
        let p = ProbabilityVector::uniform(4);
        assert!(component_formulas_t2_t6_t8(&CellCounts::new(vec![1, 2, 3, 4]), &p).is_err());
    }

    #[test]
    fn perfect_fit_formulas_vanish() {
        let p = ProbabilityVector::uniform(8);
        let t = component_formulas_t2_t6_t8(&CellCounts::new(vec![25; 8]), &p).unwrap();
        assert!(t.iter().all(|v| v.abs() < 1e-14));
    }
}

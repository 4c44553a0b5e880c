//! Operators acting on coefficient vectors: differentiation, multiplication
//! by a variable coefficient, and a banded least-squares solver for
//! `u' + a(x) u = f`.
//!
//! On coefficients the derivative acts as
//! `(Dc)_k = b_{k-1} c_{k-1} - b_k c_{k+1}`, the transpose of the action on
//! basis functions. The matrix is skew-symmetric and tridiagonal.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use crate::basis::{diff_coeffs, BasisSpec, DiffOp, Expansion, RangeMode};
use crate::dct::{dct, TrigKind};
use crate::error::{Error, Result};
use crate::jacobi::ChebyshevKind;
use crate::special_fn::JacobiParams;

/// Rectangular matrix with `lower` sub- and `upper` super-diagonals.
/// Row `i` stores columns `i - lower ..= i + upper`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedMatrix {
    rows: usize,
    cols: usize,
    lower: usize,
    upper: usize,
    data: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(rows: usize, cols: usize, lower: usize, upper: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Size(format!("banded matrix must be at least 1x1 (got {rows}x{cols})")));
        }
        Ok(Self { rows, cols, lower, upper, data: vec![0.0; rows * (lower + upper + 1)] })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn lower_bw(&self) -> usize {
        self.lower
    }

    pub fn upper_bw(&self) -> usize {
        self.upper
    }

    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.rows || j >= self.cols || j + self.lower < i || j > i + self.upper {
            return None;
        }
        Some(i * (self.lower + self.upper + 1) + j + self.lower - i)
    }

    /// Entry `(i, j)`; zero outside the band.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.slot(i, j).map_or(0.0, |s| self.data[s])
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) -> Result<()> {
        match self.slot(i, j) {
            Some(s) => {
                self.data[s] = v;
                Ok(())
            }
            None => Err(Error::Index(format!(
                "entry ({i}, {j}) lies outside the band of a {}x{} matrix",
                self.rows, self.cols
            ))),
        }
    }

    /// Column range stored for row `i`, clipped to the matrix.
    pub fn row_span(&self, i: usize) -> std::ops::Range<usize> {
        i.saturating_sub(self.lower)..(i + self.upper + 1).min(self.cols)
    }

    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::Size(format!("matrix has {} columns, vector length {}", self.cols, v.len())));
        }
        Ok((0..self.rows).map(|i| self.row_span(i).map(|j| self.get(i, j) * v[j]).sum()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self {
            rows: self.cols,
            cols: self.rows,
            lower: self.upper,
            upper: self.lower,
            data: vec![0.0; self.cols * (self.lower + self.upper + 1)],
        };
        for i in 0..self.rows {
            for j in self.row_span(i) {
                let s = t.slot(j, i).expect("transposed band");
                t.data[s] = self.get(i, j);
            }
        }
        t
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }
}

fn need_b(d: &DiffOp, count: usize) -> Result<()> {
    if d.len() < count {
        return Err(Error::Size(format!("differentiation operator holds {} coefficients, {count} needed", d.len())));
    }
    Ok(())
}

/// `D c` on the window `0..N`, treating `c_N` as zero.
pub fn diff_apply(d: &DiffOp, c: &[f64]) -> Result<Vec<f64>> {
    let n = c.len();
    need_b(d, n.saturating_sub(1))?;
    let b = d.b();
    Ok((0..n)
        .map(|k| {
            let down = if k > 0 { b[k - 1] * c[k - 1] } else { 0.0 };
            let up = if k + 1 < n { b[k] * c[k + 1] } else { 0.0 };
            down - up
        })
        .collect())
}

/// `D² c` with two trailing zeros appended, so the window agrees with the
/// infinite matrix.
pub fn diff_squared_apply(d: &DiffOp, c: &[f64]) -> Result<Vec<f64>> {
    let mut padded = c.to_vec();
    padded.extend([0.0, 0.0]);
    let mut out = diff_apply(d, &diff_apply(d, &padded)?)?;
    out.truncate(c.len());
    Ok(out)
}

/// Square `N×N` truncation of `D`.
pub fn diff_matrix(d: &DiffOp, n: usize) -> Result<BandedMatrix> {
    need_b(d, n.saturating_sub(1))?;
    let mut m = BandedMatrix::zeros(n, n, 1, 1)?;
    for k in 0..n.saturating_sub(1) {
        let b = d.b()[k];
        m.set(k + 1, k, b)?;
        m.set(k, k + 1, -b)?;
    }
    Ok(m)
}

/// Exact derivative of an expansion, one coefficient longer.
pub fn differentiate(e: &Expansion) -> Result<Expansion> {
    let mut c = e.coeffs().to_vec();
    c.push(0.0);
    let d = diff_coeffs(e.params(), c.len());
    Expansion::new(*e.spec(), diff_apply(&d, &c)?)
}

/// Multiplication by `a(x) = Σ_{m≤M} a_m T̃_m(tanh x)` in the
/// `(-½, -½)` basis, where `T̃_0 = 1/√2` and `T̃_m = T_m` otherwise.
///
/// The entries are `A_ij = σ_i σ_j (τ_{|i-j|} + η_{i+j})` with `σ_0 = 1/√2`,
/// `σ_i = 1` otherwise, `τ_0 = η_0 = a_0/√2` and
/// `τ_k = η_k = (-1)^k a_k / 2` for `k ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultOp {
    a: Vec<f64>,
    size: usize,
    seq: Vec<f64>,
}

fn sigma(i: usize) -> f64 {
    if i == 0 {
        FRAC_1_SQRT_2
    } else {
        1.0
    }
}

impl MultOp {
    /// Coefficients `a_0..a_M`.
    pub fn a_coeffs(&self) -> &[f64] {
        &self.a
    }

    pub fn bandwidth(&self) -> usize {
        self.a.len() - 1
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&v| v == 0.0)
    }

    /// Toeplitz symbol `τ_k`.
    pub fn toeplitz(&self, k: usize) -> f64 {
        self.seq.get(k).copied().unwrap_or(0.0)
    }

    /// Hankel symbol `η_k`; equal to `τ_k`.
    pub fn hankel(&self, k: usize) -> f64 {
        self.toeplitz(k)
    }

    /// Entry of the infinite matrix; `i`, `j` are not limited to the size.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        sigma(i) * sigma(j) * (self.toeplitz(i.abs_diff(j)) + self.hankel(i + j))
    }

    /// `N×N` truncation.
    pub fn to_banded(&self) -> BandedMatrix {
        let m = self.bandwidth();
        let mut out = BandedMatrix::zeros(self.size, self.size, m, m).expect("size is at least 1");
        for i in 0..self.size {
            for j in out.row_span(i) {
                out.set(i, j, self.entry(i, j)).expect("inside band");
            }
        }
        out
    }

    /// `A c` restricted to the first `N` rows.
    pub fn apply(&self, c: &[f64]) -> Result<Vec<f64>> {
        let n = self.size;
        if c.len() != n {
            return Err(Error::Size(format!("operator of size {n} applied to a vector of length {}", c.len())));
        }
        let m = self.bandwidth();
        Ok((0..n).map(|i| (i.saturating_sub(m)..(i + m + 1).min(n)).map(|j| self.entry(i, j) * c[j]).sum()).collect())
    }
}

/// Builds the multiplication operator from `a_0..a_M`; entries of `a`
/// past `bandwidth` are dropped.
pub fn mult_op(a: &[f64], bandwidth: usize, n: usize) -> Result<MultOp> {
    if bandwidth >= n {
        return Err(Error::Size(format!("bandwidth {bandwidth} must be smaller than the size {n}")));
    }
    if let Some(k) = a.iter().position(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("multiplier coefficient {k} is not finite")));
    }
    let mut coeffs: Vec<f64> = a.iter().copied().take(bandwidth + 1).collect();
    coeffs.resize(bandwidth + 1, 0.0);
    let seq = coeffs
        .iter()
        .enumerate()
        .map(|(k, &v)| match k {
            0 => v * FRAC_1_SQRT_2,
            k if k % 2 == 0 => 0.5 * v,
            _ => -0.5 * v,
        })
        .collect();
    Ok(MultOp { a: coeffs, size: n, seq })
}

/// Coefficients of `a` in the unweighted `T̃_m(tanh x)` system from `n`
/// midpoint samples.
pub fn multiplier_coeffs<F: Fn(f64) -> f64>(a: F, n: usize) -> Result<Vec<f64>> {
    let grid = crate::transforms::SampleGrid::full(n)?;
    let mut samples = Vec::with_capacity(n);
    for &x in grid.x() {
        let v = a(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { x });
        }
        samples.push(v);
    }
    let raw = dct(TrigKind::DctII, &samples)?;
    let nf = n as f64;
    Ok(raw.iter().enumerate().map(|(m, &v)| if m == 0 { SQRT_2 * v / nf } else { 2.0 * v / nf }).collect())
}

/// `L = D + A` truncated to `N` columns and `N + max(1, M)` rows.
pub fn assemble_first_order(d: &DiffOp, mult: &MultOp, n: usize) -> Result<BandedMatrix> {
    if mult.size() != n {
        return Err(Error::Size(format!("multiplication operator has size {}, expected {n}", mult.size())));
    }
    need_b(d, n)?;
    let bw = mult.bandwidth().max(1);
    let mut l = BandedMatrix::zeros(n + bw, n, bw, bw)?;
    for i in 0..n + bw {
        for j in l.row_span(i) {
            let dij = if j + 1 == i {
                d.b()[j]
            } else if i + 1 == j {
                -d.b()[i]
            } else {
                0.0
            };
            l.set(i, j, dij + mult.entry(i, j))?;
        }
    }
    Ok(l)
}

/// Least-squares solution of the first-order system and `‖L u - f‖₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstOrderSolution {
    pub u: Expansion,
    pub residual: f64,
}

/// Solves `u' + a u = f` for `u` with `N` coefficients.
///
/// `rhs` must be a full-range `(-½, -½)` expansion; coefficients past row
/// `N + max(1, M)` are ignored. With `a ≡ 0` the operator has no bounded
/// inverse and the call fails.
pub fn solve_first_order(d: &DiffOp, mult: &MultOp, rhs: &Expansion, n: usize) -> Result<FirstOrderSolution> {
    let t = ChebyshevKind::T.params();
    if rhs.spec().mode() != RangeMode::Full || *rhs.params() != t || *d.params() != t {
        return Err(Error::Domain("first-order solve works in the full-range (-0.5, -0.5) basis".into()));
    }
    if mult.is_zero() {
        return Err(Error::RankDeficient("multiplier is identically zero; u' = f has no bounded inverse on L2".into()));
    }
    let l = assemble_first_order(d, mult, n)?;
    let mut f = rhs.coeffs().to_vec();
    f.resize(l.rows(), 0.0);
    let u = banded_least_squares(&l, &f)?;
    let lu = l.matvec(&u)?;
    let residual = lu.iter().zip(&f).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
    Ok(FirstOrderSolution { u: Expansion::new(BasisSpec::full(t), u)?, residual })
}

/// Householder QR of a tall banded matrix followed by back substitution.
/// `R` keeps upper bandwidth `lower + upper`.
pub fn banded_least_squares(a: &BandedMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let (m, n) = (a.rows(), a.cols());
    if m < n {
        return Err(Error::Size(format!("least squares needs rows >= cols (got {m}x{n})")));
    }
    if rhs.len() != m {
        return Err(Error::Size(format!("right-hand side has length {}, expected {m}", rhs.len())));
    }
    let p = a.lower_bw();
    let ru = p + a.upper_bw();
    let mut w = BandedMatrix::zeros(m, n, p, ru)?;
    for i in 0..m {
        for j in a.row_span(i) {
            w.set(i, j, a.get(i, j))?;
        }
    }
    let mut b = rhs.to_vec();
    let mut v = vec![0.0; p + 1];
    let mut diag = vec![0.0; n];

    for j in 0..n {
        let last = (j + p).min(m - 1);
        let len = last - j + 1;
        let norm = (j..=last).map(|i| w.get(i, j).powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            diag[j] = 0.0;
            continue;
        }
        let x0 = w.get(j, j);
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        for (k, i) in (j..=last).enumerate() {
            v[k] = w.get(i, j);
        }
        v[0] -= alpha;
        let vnorm2: f64 = v[..len].iter().map(|x| x * x).sum();
        let col_end = (j + ru + 1).min(n);
        if vnorm2 > 0.0 {
            for col in j..col_end {
                let dot: f64 = (j..=last).enumerate().map(|(k, i)| v[k] * w.get(i, col)).sum();
                let s = 2.0 * dot / vnorm2;
                for (k, i) in (j..=last).enumerate() {
                    let val = w.get(i, col) - s * v[k];
                    w.set(i, col, val)?;
                }
            }
            let dot: f64 = (j..=last).enumerate().map(|(k, i)| v[k] * b[i]).sum();
            let s = 2.0 * dot / vnorm2;
            for (k, i) in (j..=last).enumerate() {
                b[i] -= s * v[k];
            }
        }
        diag[j] = w.get(j, j);
    }

    let scale = diag.iter().fold(0.0f64, |acc, d| acc.max(d.abs()));
    if let Some(j) = diag.iter().position(|d| d.abs() < 1e-13 * scale) {
        return Err(Error::RankDeficient(format!(
            "triangular factor has diagonal entry {:e} at column {j} (max {scale:e})",
            diag[j].abs()
        )));
    }
    let mut x = vec![0.0; n];
    for j in (0..n).rev() {
        let col_end = (j + ru + 1).min(n);
        let s: f64 = (j + 1..col_end).map(|k| w.get(j, k) * x[k]).sum();
        x[j] = (b[j] - s) / w.get(j, j);
    }
    Ok(x)
}

/// Differentiation operator for the `(-½, -½)` basis with `count` entries.
pub fn chebyshev_t_diff(count: usize) -> DiffOp {
    diff_coeffs(&JacobiParams::symmetric(-0.5).expect("valid"), count)
}

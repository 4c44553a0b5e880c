//! Jacobi polynomials: three-term recurrence, orthonormal evaluation,
//! Chebyshev kinds in trigonometric form and Gauss–Jacobi rules.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special_fn::{jacobi_norm, JacobiParams};

/// Coefficients of `t P_m = A_m P_{m-1} + B_m P_m + C_m P_{m+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence {
    params: JacobiParams,
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
}

/// `(A_m, B_m, C_m)` for a single degree. `A_0` is 0 since `P_{-1} = 0`.
pub fn recurrence_coeffs(params: &JacobiParams, m: usize) -> (f64, f64, f64) {
    let (al, be) = (params.alpha(), params.beta());
    let s = al + be;
    if m == 0 {
        // the common factors (α+β) and (α+β+1) are cancelled by hand
        return (0.0, (be - al) / (s + 2.0), 2.0 / (s + 2.0));
    }
    let mf = m as f64;
    let a = 2.0 * (al + mf) * (be + mf) / ((s + 2.0 * mf) * (s + 2.0 * mf + 1.0));
    let b = (be * be - al * al) / ((s + 2.0 * mf) * (s + 2.0 * mf + 2.0));
    let c = 2.0 * (mf + 1.0) * (s + mf + 1.0) / ((s + 2.0 * mf + 1.0) * (s + 2.0 * mf + 2.0));
    (a, b, c)
}

impl Recurrence {
    /// Coefficients for degrees `0..len`.
    pub fn new(params: JacobiParams, len: usize) -> Self {
        let mut a = Vec::with_capacity(len);
        let mut b = Vec::with_capacity(len);
        let mut c = Vec::with_capacity(len);
        for m in 0..len {
            let (am, bm, cm) = recurrence_coeffs(&params, m);
            a.push(am);
            b.push(bm);
            c.push(cm);
        }
        Self { params, a, b, c }
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }
}

/// `P_m^{(α,β)}(t)` by forward recurrence from `P_0 = 1`, `P_1 = (t - B_0)/C_0`.
pub fn jacobi_eval(params: &JacobiParams, m: usize, t: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..m {
        let (a, b, c) = recurrence_coeffs(params, k);
        let next = ((t - b) * cur - a * prev) / c;
        prev = cur;
        cur = next;
    }
    cur
}

/// Values `P_m(t_j)` for `m = 0..=m_max`; row `m`, column `j`.
pub fn jacobi_eval_batch(params: &JacobiParams, m_max: usize, points: &[f64]) -> Vec<Vec<f64>> {
    let rec = Recurrence::new(*params, m_max + 1);
    let mut rows = Vec::with_capacity(m_max + 1);
    rows.push(vec![1.0; points.len()]);
    for k in 0..m_max {
        let (a, b, c) = (rec.a[k], rec.b[k], rec.c[k]);
        let next: Vec<f64> = points
            .iter()
            .enumerate()
            .map(|(j, &t)| {
                let prev = if k == 0 { 0.0 } else { rows[k - 1][j] };
                ((t - b) * rows[k][j] - a * prev) / c
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// Symmetric (Jacobi-matrix) form of the recurrence for the orthonormal
/// polynomials `q_m = P_m / √g_m`:
/// `t q_m = off[m] q_{m-1} + diag[m] q_m + off[m+1] q_{m+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalRecurrence {
    params: JacobiParams,
    diag: Vec<f64>,
    off: Vec<f64>,
    q0: f64,
}

impl OrthonormalRecurrence {
    /// Diagonal entries for degrees `0..len`, off-diagonals up to `len`.
    pub fn new(params: JacobiParams, len: usize) -> Self {
        let mut diag = Vec::with_capacity(len);
        let mut off = Vec::with_capacity(len + 1);
        off.push(0.0);
        let mut prev_c = 0.0;
        for m in 0..=len {
            let (a, b, c) = recurrence_coeffs(&params, m);
            if m > 0 {
                off.push((prev_c * a).sqrt());
            }
            if m < len {
                diag.push(b);
            }
            prev_c = c;
        }
        let q0 = 1.0 / jacobi_norm(&params, 0).sqrt();
        Self { params, diag, off, q0 }
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Diagonal `B_m`.
    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    /// `off[m]` couples degrees `m-1` and `m`; `off[0] = 0`.
    pub fn off(&self) -> &[f64] {
        &self.off
    }

    /// `q_0 = 1/√g_0`.
    pub fn q0(&self) -> f64 {
        self.q0
    }

    /// Writes `q_0(t), …, q_{out.len()-1}(t)` into `out`.
    pub fn eval_into(&self, t: f64, out: &mut [f64]) {
        assert!(out.len() <= self.len(), "recurrence too short");
        let mut prev = 0.0;
        let mut cur = self.q0;
        for (m, slot) in out.iter_mut().enumerate() {
            *slot = cur;
            if m + 1 < self.diag.len() + 1 && m + 1 < self.off.len() {
                let next = ((t - self.diag[m]) * cur - self.off[m] * prev) / self.off[m + 1];
                prev = cur;
                cur = next;
            }
        }
    }

    /// Clenshaw summation of `Σ d_m q_m(t)`.
    pub fn clenshaw(&self, d: &[f64], t: f64) -> f64 {
        assert!(d.len() <= self.len(), "recurrence too short");
        let n = d.len();
        let mut y1 = 0.0; // y_{k+1}
        let mut y2 = 0.0; // y_{k+2}
        for k in (0..n).rev() {
            let alpha = (t - self.diag[k]) / self.off[k + 1];
            let beta = if k + 2 < self.off.len() { -self.off[k + 1] / self.off[k + 2] } else { 0.0 };
            let y = d[k] + alpha * y1 + beta * y2;
            y2 = y1;
            y1 = y;
        }
        self.q0 * y1
    }
}

/// Orthonormal Jacobi polynomial `P_m(t)/√g_m`.
pub fn jacobi_orthonormal(params: &JacobiParams, m: usize, t: f64) -> f64 {
    let rec = OrthonormalRecurrence::new(*params, m + 1);
    let mut out = vec![0.0; m + 1];
    rec.eval_into(t, &mut out);
    out[m]
}

/// The four Chebyshev families, all Jacobi with α, β = ±1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    /// `cos mθ`, weight `(1-t²)^{-1/2}`.
    T,
    /// `sin (m+1)θ / sin θ`, weight `(1-t²)^{1/2}`.
    U,
    /// `sin (m+½)θ / sin(θ/2)`, weight `(1-t)^{1/2}(1+t)^{-1/2}`.
    V,
    /// `cos (m+½)θ / cos(θ/2)`, weight `(1-t)^{-1/2}(1+t)^{1/2}`.
    W,
}

impl ChebyshevKind {
    /// The Jacobi parameters sharing this kind's weight.
    pub fn params(self) -> JacobiParams {
        let (a, b) = match self {
            Self::T => (-0.5, -0.5),
            Self::U => (0.5, 0.5),
            Self::V => (0.5, -0.5),
            Self::W => (-0.5, 0.5),
        };
        JacobiParams::new(a, b).expect("half-integer parameters are valid")
    }

    /// Matches exactly ±1/2 parameter pairs.
    pub fn from_params(params: &JacobiParams) -> Option<Self> {
        match (params.alpha(), params.beta()) {
            (a, b) if a == -0.5 && b == -0.5 => Some(Self::T),
            (a, b) if a == 0.5 && b == 0.5 => Some(Self::U),
            (a, b) if a == 0.5 && b == -0.5 => Some(Self::V),
            (a, b) if a == -0.5 && b == 0.5 => Some(Self::W),
            _ => None,
        }
    }

    /// Value at `t = 1`.
    pub fn at_one(self, m: usize) -> f64 {
        match self {
            Self::T | Self::W => 1.0,
            Self::U => (m + 1) as f64,
            Self::V => (2 * m + 1) as f64,
        }
    }

    fn first(self, t: f64) -> f64 {
        match self {
            Self::T => t,
            Self::U => 2.0 * t,
            Self::V => 2.0 * t + 1.0,
            Self::W => 2.0 * t - 1.0,
        }
    }
}

// Below this distance from a removable singularity the trigonometric
// quotient is replaced by the recurrence in t = cos θ.
const NEAR_ENDPOINT: f64 = 1e-4;

/// Chebyshev polynomial of the given kind at `t = cos θ`, `θ ∈ [0, π]`.
pub fn chebyshev_eval(kind: ChebyshevKind, m: usize, theta: f64) -> f64 {
    let mf = m as f64;
    let near = match kind {
        ChebyshevKind::T => false,
        ChebyshevKind::U => theta.sin().abs() < NEAR_ENDPOINT,
        ChebyshevKind::V => (0.5 * theta).sin().abs() < NEAR_ENDPOINT,
        ChebyshevKind::W => (0.5 * theta).cos().abs() < NEAR_ENDPOINT,
    };
    if near {
        return chebyshev_recurrence(kind, m, theta.cos());
    }
    match kind {
        ChebyshevKind::T => (mf * theta).cos(),
        ChebyshevKind::U => ((mf + 1.0) * theta).sin() / theta.sin(),
        ChebyshevKind::V => ((mf + 0.5) * theta).sin() / (0.5 * theta).sin(),
        ChebyshevKind::W => ((mf + 0.5) * theta).cos() / (0.5 * theta).cos(),
    }
}

fn chebyshev_recurrence(kind: ChebyshevKind, m: usize, t: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = kind.first(t);
    for _ in 1..m {
        let next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Nodes and weights of an n-point Gauss–Jacobi rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    params: JacobiParams,
}

impl QuadratureRule {
    /// Strictly increasing nodes in (-1, 1).
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_k f(t_k) ≈ ∫ (1-t)^α (1+t)^β f(t) dt`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).sum()
    }
}

/// Golub–Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix,
/// weights are `g_0` times the squared first eigenvector components.
pub fn gauss_jacobi(params: &JacobiParams, n: usize) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::Size("quadrature rule needs n >= 1".into()));
    }
    let rec = OrthonormalRecurrence::new(*params, n);
    let mut d = rec.diag.clone();
    let mut e: Vec<f64> = rec.off[1..n].to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tridiagonal_ql(&mut d, &mut e, &mut z)?;

    let mass = jacobi_norm(params, 0);
    let mut pairs: Vec<(f64, f64)> = d.into_iter().zip(z).map(|(t, v)| (t, mass * v * v)).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule { nodes, weights, params: *params })
}

/// Implicit-shift QL on a symmetric tridiagonal matrix, tracking only the
/// first row `z` of the eigenvector matrix. `e[i]` couples `i` and `i+1`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    const MAX_SWEEPS: usize = 60;
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NoConvergence(format!("tridiagonal QL did not converge for eigenvalue {l} of {n}")));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Chebyshev–Gauss nodes `cos((2k+1)π/(2n))` in increasing order.
pub fn chebyshev_gauss_nodes(n: usize) -> Vec<f64> {
    (0..n).rev().map(|k| ((2 * k + 1) as f64 * PI / (2 * n) as f64).cos()).collect()
}

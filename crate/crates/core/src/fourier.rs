//! Fourier transforms of tanh-Jacobi expansions.
//!
//! With `F[f](ξ) = (2π)^{-1/2} ∫ f(x) e^{-ixξ} dx`,
//! `F[φ_m](ξ) = i^m g(ξ) p_m(ξ)` where
//! `g(ξ) = C Γ((α+1)/2 + iξ/2) Γ((β+1)/2 - iξ/2)` and `p_m` are the
//! orthonormal polynomials of the measure `|g(ξ)|² dξ`:
//! `b_m p_{m+1} = ξ p_m - b_{m-1} p_{m-1}`, `p_0 = 1`, with the same `b_m`
//! as the differentiation matrix.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::basis::{diff_coeff, diff_coeffs, DiffOp, Expansion, RangeMode};
use crate::error::{Error, Result};
use crate::jacobi::gauss_jacobi;
use crate::quadrature::{integrate, Tolerance};
use crate::special_fn::{log_gamma_complex, log_gamma_real, log_jacobi_norm, ComplexValue, JacobiParams};

const STORED_B: usize = 128;
const MASS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct FourierRep {
    params: JacobiParams,
    normalisation: f64,
    diff: DiffOp,
}

/// `ln |Γ(a + iξ/2) Γ(b - iξ/2)|²`.
fn log_density_unscaled(params: &JacobiParams, xi: f64) -> f64 {
    let z = log_weight_unscaled(params, xi);
    2.0 * z.re
}

fn log_weight_unscaled(params: &JacobiParams, xi: f64) -> Complex64 {
    let a = Complex64::new(0.5 * (params.alpha() + 1.0), 0.5 * xi);
    let b = Complex64::new(0.5 * (params.beta() + 1.0), -0.5 * xi);
    // no poles: both real parts are positive
    log_gamma_complex(a).expect("Re > 0") + log_gamma_complex(b).expect("Re > 0")
}

/// Half-width beyond which the unscaled density is below `e^{-45}` of its
/// value at 0.
fn cutoff(params: &JacobiParams) -> f64 {
    let peak = log_density_unscaled(params, 0.0);
    let mut l = 10.0;
    while log_density_unscaled(params, l) - peak > -45.0 {
        l *= 2.0;
    }
    l
}

/// Breakpoints on `[0, cutoff]`: geometric near the origin, where small
/// `α + 1` or `β + 1` make the density a narrow peak, then unit spacing.
fn panels(params: &JacobiParams) -> Vec<f64> {
    let width = 0.5 * (params.alpha().min(params.beta()) + 1.0);
    let mut pts = vec![0.0];
    let mut h = (0.1 * width).min(0.5);
    while h < 1.0 {
        pts.push(h);
        h *= 2.0;
    }
    let l = cutoff(params).ceil() as usize;
    pts.extend((1..=l).map(|k| k as f64));
    pts
}

/// `C` such that `∫ C² |Γ(…)Γ(…)|² dξ = 1`, by adaptive quadrature.
pub fn normalisation_constant(params: &JacobiParams) -> Result<f64> {
    let peak = log_density_unscaled(params, 0.0);
    let tol = Tolerance { abs: 1e-17, rel: 1e-14, max_intervals: 2000 };
    // the density is even in ξ
    let mut half = 0.0;
    for w in panels(params).windows(2) {
        half += integrate(|xi| (log_density_unscaled(params, xi) - peak).exp(), w[0], w[1], tol)?.0;
    }
    Ok((-0.5 * (peak + (2.0 * half).ln())).exp())
}

/// Closed form `C = (2π)^{-1/2} g_0^{-1/2} 2^{(α+β)/2} / Γ((α+β)/2 + 1)`.
pub fn normalisation_closed_form(params: &JacobiParams) -> f64 {
    let s = params.alpha() + params.beta();
    let ln_c = -0.5 * (2.0 * PI).ln() - 0.5 * log_jacobi_norm(params, 0) + 0.5 * s * std::f64::consts::LN_2
        - log_gamma_real(0.5 * s + 1.0).expect("argument exceeds 0");
    ln_c.exp()
}

impl FourierRep {
    /// Computes `C` and checks the unit mass with an independent composite
    /// Gauss–Legendre rule.
    pub fn new(params: JacobiParams) -> Result<Self> {
        let normalisation = normalisation_constant(&params)?;
        let rep = Self { params, normalisation, diff: diff_coeffs(&params, STORED_B) };
        let mass = rep.mass()?;
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(Error::NoConvergence(format!("measure mass {mass} differs from 1 after normalisation")));
        }
        Ok(rep)
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn normalisation(&self) -> f64 {
        self.normalisation
    }

    pub fn diff(&self) -> &DiffOp {
        &self.diff
    }

    /// `b_m`, from the stored sequence where available.
    pub fn b(&self, m: usize) -> f64 {
        self.diff.b().get(m).copied().unwrap_or_else(|| diff_coeff(&self.params, m))
    }

    /// Total mass of `|g|² dξ` from 20-point rules on fixed panels.
    pub fn mass(&self) -> Result<f64> {
        let rule = gauss_jacobi(&JacobiParams::new(0.0, 0.0)?, 20)?;
        let mut total = 0.0;
        for w in panels(&self.params).windows(2) {
            let (c, r) = (0.5 * (w[0] + w[1]), 0.5 * (w[1] - w[0]));
            total += r * rule.integrate(|s| self.measure_density(c + r * s));
        }
        Ok(2.0 * total)
    }

    pub fn g_weight(&self, xi: f64) -> ComplexValue {
        self.normalisation * log_weight_unscaled(&self.params, xi).exp()
    }

    /// `|g(ξ)|²`.
    pub fn measure_density(&self, xi: f64) -> f64 {
        self.normalisation.powi(2) * log_density_unscaled(&self.params, xi).exp()
    }

    /// `p_m(ξ)` by forward recurrence.
    pub fn carlitz_eval(&self, m: usize, xi: f64) -> f64 {
        let (mut prev, mut cur) = (0.0, 1.0);
        for k in 0..m {
            let down = if k == 0 { 0.0 } else { self.b(k - 1) * prev };
            let next = (xi * cur - down) / self.b(k);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `Σ d_m p_m(ξ)` by Clenshaw.
    fn carlitz_sum(&self, d: &[Complex64], xi: f64) -> Complex64 {
        let zero = Complex64::new(0.0, 0.0);
        let (mut y1, mut y2) = (zero, zero);
        for k in (0..d.len()).rev() {
            let bk = self.b(k);
            let y = d[k] + y1 * (xi / bk) - y2 * (bk / self.b(k + 1));
            y2 = y1;
            y1 = y;
        }
        y1
    }

    /// `F[f](ξ_j)` for the full-range expansion `e`.
    pub fn transform(&self, e: &Expansion, xi_points: &[f64]) -> Result<Vec<ComplexValue>> {
        if e.spec().mode() != RangeMode::Full {
            return Err(Error::Mode("Fourier transforms are defined for full-mode expansions".into()));
        }
        if *e.params() != self.params {
            return Err(Error::Domain(format!(
                "expansion parameters ({}, {}) differ from the representation's ({}, {})",
                e.params().alpha(),
                e.params().beta(),
                self.params.alpha(),
                self.params.beta()
            )));
        }
        let i_pow =
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, -1.0)];
        let d: Vec<Complex64> = e.coeffs().iter().enumerate().map(|(m, &c)| i_pow[m % 4] * c).collect();
        Ok(xi_points.iter().map(|&xi| self.g_weight(xi) * self.carlitz_sum(&d, xi)).collect())
    }

    /// `2π² C² / (cosh πξ + cos πα)`, the density when `β = -α`.
    pub fn carlitz_closed_form(&self, xi: f64) -> Option<f64> {
        if self.params.alpha() != -self.params.beta() {
            return None;
        }
        let c2 = self.normalisation.powi(2);
        Some(2.0 * PI * PI * c2 / ((PI * xi).cosh() + (PI * self.params.alpha()).cos()))
    }
}

/// Fourier transform of a full-range expansion at the given frequencies.
pub fn fourier_transform(e: &Expansion, xi_points: &[f64]) -> Result<Vec<ComplexValue>> {
    FourierRep::new(*e.params())?.transform(e, xi_points)
}

/// `|Γ((n+1)/2 + iξ/2)|²` for integer `n ≥ 0`, as an elementary function.
pub fn integer_profile(n: u32, xi: f64) -> f64 {
    let y = 0.25 * xi * xi;
    if n.is_multiple_of(2) {
        let base = PI / (0.5 * PI * xi).cosh();
        (0..n / 2).fold(base, |acc, j| acc * ((j as f64 + 0.5).powi(2) + y))
    } else {
        let h = 0.5 * PI * xi;
        let base = if h == 0.0 { 1.0 } else { h / h.sinh() };
        (1..=(n - 1) / 2).fold(base, |acc, j| acc * ((j as f64).powi(2) + y))
    }
}

//! Tanh-Jacobi basis functions, the differentiation coefficients `b_m` and
//! evaluation of expansions.
//!
//! The full-range functions are
//! `φ_m(x) = (-1)^m g_m^{-1/2} (1-t)^{(α+1)/2} (1+t)^{(β+1)/2} P_m^{(α,β)}(t)`
//! with `t = tanh x`. They are orthonormal in `L₂(ℝ)` and satisfy
//! `φ_m' = -b_{m-1} φ_{m-1} + b_m φ_{m+1}`.

use crate::error::{Error, Result};
use crate::jacobi::OrthonormalRecurrence;
use crate::special_fn::JacobiParams;

use std::f64::consts::LN_2;

/// Which construction of the basis an expansion refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RangeMode {
    Full,
    /// Even/odd split with separate transforms on the half line.
    /// Only defined for `α = β`.
    Half,
}

impl std::str::FromStr for RangeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Self::Full),
            "half" => Ok(Self::Half),
            other => Err(Error::Mode(format!("unknown range mode '{other}' (expected full or half)"))),
        }
    }
}

impl std::fmt::Display for RangeMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Full => "full",
            Self::Half => "half",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisSpec {
    params: JacobiParams,
    mode: RangeMode,
}

impl BasisSpec {
    pub fn new(params: JacobiParams, mode: RangeMode) -> Result<Self> {
        if mode == RangeMode::Half && !params.is_symmetric() {
            return Err(Error::Mode(format!(
                "half mode requires alpha = beta (got alpha = {}, beta = {})",
                params.alpha(),
                params.beta()
            )));
        }
        Ok(Self { params, mode })
    }

    pub fn full(params: JacobiParams) -> Self {
        Self { params, mode: RangeMode::Full }
    }

    pub fn half(alpha: f64) -> Result<Self> {
        Ok(Self { params: JacobiParams::symmetric(alpha)?, mode: RangeMode::Half })
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn mode(&self) -> RangeMode {
        self.mode
    }
}

/// Coefficients `c_0..c_{N-1}` against a tanh-Jacobi basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    spec: BasisSpec,
    coeffs: Vec<f64>,
}

impl Expansion {
    pub fn new(spec: BasisSpec, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Size("an expansion needs at least one coefficient".into()));
        }
        if let Some(m) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::Domain(format!("coefficient {m} is not finite")));
        }
        Ok(Self { spec, coeffs })
    }

    pub fn zeros(spec: BasisSpec, n: usize) -> Result<Self> {
        Self::new(spec, vec![0.0; n])
    }

    /// The expansion of `φ_m` itself.
    pub fn unit(spec: BasisSpec, n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(Error::Index(format!("unit vector index {m} outside length {n}")));
        }
        let mut c = vec![0.0; n];
        c[m] = 1.0;
        Self::new(spec, c)
    }

    pub fn spec(&self) -> &BasisSpec {
        &self.spec
    }

    pub fn params(&self) -> &JacobiParams {
        &self.spec.params
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same coefficients, other range mode. Both modes describe the same
    /// functions when `α = β`.
    pub fn with_mode(&self, mode: RangeMode) -> Result<Self> {
        Ok(Self { spec: BasisSpec::new(self.spec.params, mode)?, coeffs: self.coeffs.clone() })
    }

    pub fn eval(&self, x: f64) -> f64 {
        clenshaw_eval(self, x)
    }
}

/// The off-diagonal sequence `b_0, b_1, …` of the differentiation matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffOp {
    params: JacobiParams,
    b: Vec<f64>,
}

impl DiffOp {
    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }
}

/// `b_m` for one degree. At `m = 0` the factor
/// `(α+β+m+1)/(α+β+2m+1)` is cancelled, which also covers `α+β = -1`.
pub fn diff_coeff(params: &JacobiParams, m: usize) -> f64 {
    let (a, b) = (params.alpha(), params.beta());
    let s = a + b;
    if m == 0 {
        return ((a + 1.0) * (b + 1.0) / (s + 3.0)).sqrt();
    }
    let mf = m as f64;
    let num = (mf + 1.0) * (a + mf + 1.0) * (b + mf + 1.0) * (s + mf + 1.0);
    let den = (s + 2.0 * mf + 1.0) * (s + 2.0 * mf + 3.0);
    (num / den).sqrt()
}

pub fn diff_coeffs(params: &JacobiParams, count: usize) -> DiffOp {
    DiffOp { params: *params, b: (0..count).map(|m| diff_coeff(params, m)).collect() }
}

fn softplus(y: f64) -> f64 {
    y.max(0.0) + (-y.abs()).exp().ln_1p()
}

/// `ln(1 - tanh x)` and `ln(1 + tanh x)` without cancellation.
pub(crate) fn log_one_minus_plus_tanh(x: f64) -> (f64, f64) {
    (LN_2 - softplus(2.0 * x), LN_2 - softplus(-2.0 * x))
}

/// `(1-t)^{(α+1)/2} (1+t)^{(β+1)/2}` at `t = tanh x`.
pub fn weight(params: &JacobiParams, x: f64) -> f64 {
    let (lm, lp) = log_one_minus_plus_tanh(x);
    (0.5 * (params.alpha() + 1.0) * lm + 0.5 * (params.beta() + 1.0) * lp).exp()
}

fn sign(m: usize) -> f64 {
    if m.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Full-range basis function `φ_m(x)`.
pub fn phi_full(spec: &BasisSpec, m: usize, x: f64) -> f64 {
    let rec = OrthonormalRecurrence::new(spec.params, m + 1);
    let mut q = vec![0.0; m + 1];
    rec.eval_into(x.tanh(), &mut q);
    sign(m) * weight(&spec.params, x) * q[m]
}

/// Half-range construction of `φ_m` (`α = β`): with `s = 1 - 2 sech²x`,
/// even `m = 2k` uses `P_k^{(α,-1/2)}(s)`, odd `m = 2k+1` uses
/// `tanh x · P_k^{(α,1/2)}(s)`, both times `sech^{1+α} x`.
pub fn phi_half(spec: &BasisSpec, m: usize, x: f64) -> f64 {
    let alpha = spec.params.alpha();
    let k = m / 2;
    let odd = m % 2 == 1;
    let beta = if odd { 0.5 } else { -0.5 };
    let p = JacobiParams::new(alpha, beta).expect("alpha already validated");

    let ax = x.abs();
    let e = (-2.0 * ax).exp();
    let ln_sech = LN_2 - ax - e.ln_1p();
    // 1 - s = 2 sech²x, kept separately for accuracy near s = 1
    let one_minus_s = 2.0 * (2.0 * ln_sech).exp();
    let s = 1.0 - one_minus_s;

    let rec = OrthonormalRecurrence::new(p, k + 1);
    let mut q = vec![0.0; k + 1];
    rec.eval_into(s, &mut q);
    let scale = 2f64.powf((2.0 * alpha + if odd { 3.0 } else { 1.0 }) / 4.0);
    let w = ((1.0 + alpha) * ln_sech).exp();
    if odd {
        -scale * w * x.tanh() * q[k]
    } else {
        scale * w * q[k]
    }
}

/// `φ_m(x)` through the construction belonging to the `BasisSpec` mode.
pub fn phi(spec: &BasisSpec, m: usize, x: f64) -> f64 {
    match spec.mode {
        RangeMode::Full => phi_full(spec, m, x),
        RangeMode::Half => phi_half(spec, m, x),
    }
}

/// `-b_{m-1} φ_{m-1}(x) + b_m φ_{m+1}(x)`.
pub fn derivative_pointwise(spec: &BasisSpec, m: usize, x: f64) -> f64 {
    let p = &spec.params;
    let up = diff_coeff(p, m) * phi(spec, m + 1, x);
    if m == 0 {
        up
    } else {
        up - diff_coeff(p, m - 1) * phi(spec, m - 1, x)
    }
}

/// Reusable Clenshaw evaluator for expansions of a fixed length.
#[derive(Debug, Clone)]
pub struct Evaluator {
    params: JacobiParams,
    rec: OrthonormalRecurrence,
    signed: Vec<f64>,
}

impl Evaluator {
    pub fn new(e: &Expansion) -> Self {
        let params = *e.params();
        let signed = e.coeffs.iter().enumerate().map(|(m, &c)| sign(m) * c).collect();
        Self { params, rec: OrthonormalRecurrence::new(params, e.len()), signed }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let w = weight(&self.params, x);
        if w == 0.0 {
            return 0.0;
        }
        w * self.rec.clenshaw(&self.signed, x.tanh())
    }
}

/// `Σ c_m φ_m(x)`; the weight is applied once after a Clenshaw sweep in
/// `t = tanh x`. Half-mode expansions describe the same functions as the
/// full-range `(α, α)` basis and share this path.
pub fn clenshaw_eval(e: &Expansion, x: f64) -> f64 {
    Evaluator::new(e).eval(x)
}

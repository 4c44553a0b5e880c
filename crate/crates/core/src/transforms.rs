//! Expansion coefficients `f̂_m = ∫ f φ_m dx` and synthesis.
//!
//! With `t = tanh x` the coefficient integral becomes a Jacobi integral of
//! `F = f / ((1-t)^{(α+1)/2} (1+t)^{(β+1)/2})`. For the four Chebyshev
//! parameter pairs it is discretised in `θ = arccos t`, which turns it into
//! a single DCT/DST. The midpoint grid `θ_k = (2k+1)π/(2N)` is used except
//! for `(½, ½)`, which samples the interior points `θ_k = (k+1)π/(N+1)`:
//!
//! | params     | samples          | kernel  |
//! |------------|------------------|---------|
//! | (-½, -½)   | `F`              | DCT-II  |
//! | (½, ½)     | `F sin θ`        | DST-I   |
//! | (½, -½)    | `2F sin(θ/2)`    | DST-IV  |
//! | (-½, ½)    | `2F cos(θ/2)`    | DCT-IV  |
//!
//! Each rule is exact when `f` is a combination of the first `N` basis
//! functions.
//!
//! Other parameters use an `N`-point Gauss–Jacobi rule (`O(N²)`).
//! The half-range transform splits `f` into even and odd parts and applies
//! the same machinery with parameters `(α, ∓½)` in `s = 1 - 2 sech²x`.

use std::f64::consts::PI;

use crate::basis::{BasisSpec, Evaluator, Expansion, RangeMode};
use crate::dct::{TrigKernel, TrigKind};
use crate::error::{Error, Result};
use crate::jacobi::{gauss_jacobi, ChebyshevKind, OrthonormalRecurrence};
use crate::special_fn::{log_jacobi_at_one, log_jacobi_norm, JacobiParams};

/// Midpoint grid in `θ` together with the matching `x` values.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    theta: Vec<f64>,
    x: Vec<f64>,
}

impl SampleGrid {
    /// `x_k = arctanh(cos θ_k)`.
    pub fn full(n: usize) -> Result<Self> {
        let theta = midpoints(n)?;
        let x = theta.iter().map(|&th| -(0.5 * th).tan().ln()).collect();
        Ok(Self { theta, x })
    }

    /// `x_k = arctanh(cos(θ_k/2))`, all positive.
    pub fn half(n: usize) -> Result<Self> {
        let theta = midpoints(n)?;
        let x = theta.iter().map(|&th| -(0.25 * th).tan().ln()).collect();
        Ok(Self { theta, x })
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn size(&self) -> usize {
        self.theta.len()
    }
}

fn midpoints(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Size("transform size must be at least 1".into()));
    }
    let nf = n as f64;
    Ok((0..n).map(|k| (2 * k + 1) as f64 * PI / (2.0 * nf)).collect())
}

fn interior_points(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Size("transform size must be at least 1".into()));
    }
    let h = PI / (n + 1) as f64;
    Ok((0..n).map(|k| (k + 1) as f64 * h).collect())
}

/// How the Jacobi integrals are discretised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Trigonometric transform when the parameters allow it, else quadrature.
    Auto,
    /// Always the Gauss–Jacobi rule.
    Quadrature,
}

/// A point of the Jacobi variable with both distances to the endpoints
/// carried separately, so that weights near `±1` keep full accuracy.
#[derive(Debug, Clone, Copy)]
struct Node {
    one_minus: f64,
    one_plus: f64,
}

fn trig_setup(kind: ChebyshevKind) -> (TrigKind, fn(f64) -> f64) {
    match kind {
        ChebyshevKind::T => (TrigKind::DctII, |_| 1.0),
        ChebyshevKind::U => (TrigKind::DstI, f64::sin),
        ChebyshevKind::V => (TrigKind::DstIV, |th| 2.0 * (0.5 * th).sin()),
        ChebyshevKind::W => (TrigKind::DctIV, |th| 2.0 * (0.5 * th).cos()),
    }
}

/// `J_m = ∫ (1-t)^α (1+t)^β G(t) q_m(t) dt` for `m < n`, `q_m` orthonormal.
fn project<G>(params: &JacobiParams, n: usize, method: Method, g: G) -> Result<Vec<f64>>
where
    G: Fn(Node) -> Result<f64>,
{
    let kind = match method {
        Method::Auto => ChebyshevKind::from_params(params),
        Method::Quadrature => None,
    };
    match kind {
        Some(kind) => project_trig(kind, n, g),
        None => project_quadrature(params, n, g),
    }
}

fn project_trig<G>(kind: ChebyshevKind, n: usize, g: G) -> Result<Vec<f64>>
where
    G: Fn(Node) -> Result<f64>,
{
    let (trig, sigma) = trig_setup(kind);
    let (theta, h) = match kind {
        ChebyshevKind::U => (interior_points(n)?, PI / (n + 1) as f64),
        _ => (midpoints(n)?, PI / n as f64),
    };
    let mut samples = Vec::with_capacity(n);
    for &th in &theta {
        let (s, c) = (0.5 * th).sin_cos();
        let node = Node { one_minus: 2.0 * s * s, one_plus: 2.0 * c * c };
        samples.push(g(node)? * sigma(th));
    }
    let raw = TrigKernel::new(trig, n)?.apply(&samples)?;

    let params = kind.params();
    let alpha = params.alpha();
    Ok(raw
        .iter()
        .enumerate()
        .map(|(m, &v)| {
            // P_m(1) / (K_m(1) √g_m) converts the Chebyshev integral
            let ln_scale = log_jacobi_at_one(alpha, m) - 0.5 * log_jacobi_norm(&params, m);
            h * v * ln_scale.exp() / kind.at_one(m)
        })
        .collect())
}

fn project_quadrature<G>(params: &JacobiParams, n: usize, g: G) -> Result<Vec<f64>>
where
    G: Fn(Node) -> Result<f64>,
{
    let rule = gauss_jacobi(params, n)?;
    let rec = OrthonormalRecurrence::new(*params, n);
    let mut out = vec![0.0; n];
    let mut q = vec![0.0; n];
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        let v = w * g(Node { one_minus: 1.0 - t, one_plus: 1.0 + t })?;
        rec.eval_into(t, &mut q);
        for (o, &qm) in out.iter_mut().zip(&q) {
            *o += v * qm;
        }
    }
    Ok(out)
}

fn checked(value: f64, x: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteSample { x })
    }
}

fn alternate(mut c: Vec<f64>) -> Vec<f64> {
    for v in c.iter_mut().skip(1).step_by(2) {
        *v = -*v;
    }
    c
}

/// Full-range coefficients `c_0..c_{N-1}` of `f`.
pub fn analyze_full<F: Fn(f64) -> f64>(spec: &BasisSpec, f: F, n: usize) -> Result<Expansion> {
    analyze_full_with(spec, f, n, Method::Auto)
}

/// Full-range coefficients through the Gauss–Jacobi rule regardless of the
/// parameters.
pub fn analyze_full_quadrature<F: Fn(f64) -> f64>(spec: &BasisSpec, f: F, n: usize) -> Result<Expansion> {
    analyze_full_with(spec, f, n, Method::Quadrature)
}

pub fn analyze_full_with<F: Fn(f64) -> f64>(spec: &BasisSpec, f: F, n: usize, method: Method) -> Result<Expansion> {
    let p = *spec.params();
    let (ea, eb) = (0.5 * (p.alpha() + 1.0), 0.5 * (p.beta() + 1.0));
    let j = project(&p, n, method, |nd: Node| {
        let x = 0.5 * (nd.one_plus / nd.one_minus).ln();
        let w = (ea * nd.one_minus.ln() + eb * nd.one_plus.ln()).exp();
        checked(f(x) / w, x)
    })?;
    Expansion::new(BasisSpec::full(p), alternate(j))
}

/// Half-range coefficients for `α = β`, interleaved as `c_0, c_1, …`.
/// `n` must be even; `n/2` even and `n/2` odd coefficients are computed.
pub fn analyze_half<F: Fn(f64) -> f64>(spec: &BasisSpec, f: F, n: usize) -> Result<Expansion> {
    analyze_half_with(spec, f, n, Method::Auto)
}

pub fn analyze_half_with<F: Fn(f64) -> f64>(spec: &BasisSpec, f: F, n: usize, method: Method) -> Result<Expansion> {
    let alpha = spec.params().alpha();
    let half_spec = BasisSpec::half(alpha)?;
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::Size(format!("half-range transform needs an even size (got {n})")));
    }
    let n2 = n / 2;
    let ea = 0.5 * (1.0 + alpha);

    // nodes are values of s; x > 0 with tanh x = √((1+s)/2)
    let x_of = |nd: Node| {
        let tau = (0.5 * nd.one_plus).sqrt();
        let one_minus_tau = 0.5 * nd.one_minus / (1.0 + tau);
        0.5 * ((1.0 + tau) / one_minus_tau).ln()
    };
    let even = JacobiParams::new(alpha, -0.5)?;
    let odd = JacobiParams::new(alpha, 0.5)?;
    let je = project(&even, n2, method, |nd: Node| {
        let x = x_of(nd);
        let fe = 0.5 * (f(x) + f(-x));
        checked(fe / (ea * nd.one_minus.ln()).exp(), x)
    })?;
    let jo = project(&odd, n2, method, |nd: Node| {
        let x = x_of(nd);
        let fo = 0.5 * (f(x) - f(-x));
        checked(fo / (ea * nd.one_minus.ln() + 0.5 * nd.one_plus.ln()).exp(), x)
    })?;

    let k = 2f64.powf(0.25);
    let mut c = Vec::with_capacity(n);
    for (e, o) in je.iter().zip(&jo) {
        c.push(k * e);
        c.push(-k * o);
    }
    Expansion::new(half_spec, c)
}

/// Coefficients in the construction selected by the `BasisSpec` mode.
pub fn analyze<F: Fn(f64) -> f64>(spec: &BasisSpec, f: F, n: usize) -> Result<Expansion> {
    match spec.mode() {
        RangeMode::Full => analyze_full(spec, f, n),
        RangeMode::Half => analyze_half(spec, f, n),
    }
}

/// `Σ c_m φ_m(x_j)` at each point.
pub fn synthesize(e: &Expansion, points: &[f64]) -> Vec<f64> {
    let ev = Evaluator::new(e);
    points.iter().map(|&x| ev.eval(x)).collect()
}

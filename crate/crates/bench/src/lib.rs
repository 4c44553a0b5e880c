//! Shared inputs for the benchmarks.

use tanhspec::{weight, BasisSpec, ChebyshevKind, JacobiParams};

pub const SIZES: [usize; 4] = [1 << 8, 1 << 10, 1 << 12, 1 << 14];

pub fn chebyshev_spec(kind: ChebyshevKind) -> BasisSpec {
    BasisSpec::full(kind.params())
}

pub fn general_spec() -> BasisSpec {
    BasisSpec::full(JacobiParams::new(1.3, 0.2).expect("valid parameters"))
}

/// Smooth and decaying like the basis weight.
pub fn test_function(spec: BasisSpec) -> impl Fn(f64) -> f64 {
    move |x| weight(spec.params(), x) * (0.7 * x.tanh()).exp() * (2.0 * x.tanh() + 0.3).cos()
}

/// Deterministic coefficient vector with a decaying envelope.
pub fn coefficients(n: usize) -> Vec<f64> {
    (0..n).map(|m| ((m as f64 * 0.618).sin()) / (1.0 + m as f64)).collect()
}

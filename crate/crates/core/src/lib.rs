//! Orthonormal tanh-Jacobi bases on the real line.
//!
//! The functions `φ_m(x)` are weighted Jacobi polynomials in `t = tanh x`.
//! The crate computes expansion coefficients (fast trigonometric transforms
//! for the four Chebyshev parameter pairs, Gauss–Jacobi quadrature
//! otherwise), evaluates expansions, applies the tridiagonal skew-symmetric
//! differentiation matrix and multiplication operators, solves first-order
//! equations with a banded QR, and evaluates Fourier transforms.

pub mod basis;
pub mod dct;
pub mod error;
pub mod fourier;
pub mod jacobi;
pub mod operators;
pub mod quadrature;
pub mod special_fn;
pub mod transforms;

pub use basis::{
    clenshaw_eval, derivative_pointwise, diff_coeff, diff_coeffs, phi, phi_full, phi_half, weight, BasisSpec, DiffOp,
    Evaluator, Expansion, RangeMode,
};
pub use dct::{dct, dct_naive, TrigKernel, TrigKind};
pub use error::{Error, Result};
pub use fourier::{fourier_transform, integer_profile, normalisation_closed_form, normalisation_constant, FourierRep};
pub use jacobi::{
    chebyshev_eval, gauss_jacobi, jacobi_eval, jacobi_eval_batch, jacobi_orthonormal, ChebyshevKind,
    OrthonormalRecurrence, QuadratureRule, Recurrence,
};
pub use operators::{
    assemble_first_order, banded_least_squares, diff_apply, diff_matrix, diff_squared_apply, differentiate, mult_op,
    multiplier_coeffs, solve_first_order, BandedMatrix, FirstOrderSolution, MultOp,
};
pub use special_fn::{
    gamma_complex, jacobi_norm, log_gamma_complex, log_gamma_real, log_jacobi_norm, norm_ratio, ComplexValue,
    JacobiParams, Step,
};
pub use transforms::{
    analyze, analyze_full, analyze_full_quadrature, analyze_full_with, analyze_half, analyze_half_with, synthesize,
    Method, SampleGrid,
};

use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the documented domain.
    #[error("domain: {0}")]
    Domain(String),

    /// Complex Gamma evaluated at a non-positive integer.
    #[error("pole: Gamma has a pole at {0}")]
    Pole(f64),

    /// An index step would leave the non-negative integers.
    #[error("index: {0}")]
    Index(String),

    /// The sampled function is not finite on the transform grid.
    #[error("non-finite sample at x = {x}: the function likely decays too slowly for this basis")]
    NonFiniteSample { x: f64 },

    /// Operation requires a different basis mode or parameter family.
    #[error("mode: {0}")]
    Mode(String),

    /// Incompatible sizes.
    #[error("size: {0}")]
    Size(String),

    /// An iterative method did not converge.
    #[error("convergence: {0}")]
    NoConvergence(String),

    /// The truncated operator is numerically rank deficient.
    #[error("rank deficient: {0}")]
    RankDeficient(String),
}

pub type Result<T> = std::result::Result<T, Error>;

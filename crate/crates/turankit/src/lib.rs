//! Evaluation of symmetric orthogonal polynomial families from their
//! three-term recurrence coefficients, stable computation of (normalized)
//! Turán determinants, and numerical verification of the associated
//! identities, inequalities and density bounds.
//!
//! The central objects are [`schemes::RecurrenceScheme`] (the normalized
//! coefficients `(alpha_n, gamma_n)` with `alpha_n + gamma_n = 1`) and
//! [`schemes::OrthonormalScheme`] (the off-diagonal Jacobi-matrix entries
//! `lambda_n`). Everything else is built on forward recurrences in these
//! coefficients.

// Loops indexed by the polynomial order n deliberately mirror the formulas
// they implement, and `!(x > c)` comparisons deliberately reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod grid;
pub mod polyeval;
pub mod reference;
pub mod report;
pub mod schemes;
pub mod turan;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("coefficient index {index} exceeds table bound {max_n}")]
    IndexOutOfRange { index: usize, max_n: usize },

    /// The alpha-recursion from lambda left the admissible cone (0,1).
    #[error("alpha_{n} = {alpha} is outside (0,1); lambda sequence is not admissible")]
    AlphaOutOfCone { n: usize, alpha: f64 },

    #[error("operation requires gamma_0 = 1, got gamma_0 = {0}")]
    NotNormalized(f64),

    #[error("x = {0} is inside the removable-singularity band |1-x^2| <= 1e-8")]
    NearSingular(f64),

    #[error("invalid family descriptor: {0}")]
    BadDescriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Relative residual between two routes to the same quantity.
///
/// `|a - b| / max(|a|, |b|, floor)` with `floor = 1e-30` so that the
/// residual stays finite when both sides vanish.
pub fn rel_residual(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs()).max(1e-30);
    (a - b).abs() / scale
}

/// Tolerance growing linearly in `n`; forward recurrences accumulate
/// rounding roughly linearly on [-1,1].
pub fn scaled_tol(base: f64, n: usize) -> f64 {
    base * (1.0 + n as f64 / 50.0)
}

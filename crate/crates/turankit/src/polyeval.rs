//! Forward three-term recurrence evaluation of the `p_n`, `P_n`, `q_n`
//! and `qtilde_n` sequences at a single abscissa.
//!
//! For |x| <= 1 and coefficients in (0,1) the forward recurrence grows at
//! most polynomially, so no backward (Miller-type) algorithm is needed.

use serde::Serialize;

use crate::schemes::{OrthonormalScheme, RecurrenceScheme};
use crate::{Error, Result};

/// Which sequence an [`EvalSequence`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// `p_n`, normalized by `p_n(1) = 1` when `gamma_0 = 1`.
    P,
    /// Orthonormal `P_n`.
    Orthonormal,
    /// `q_n = (p_{n+2} - p_n)/(x^2 - 1)`.
    Q,
    /// Rescaled `qtilde_n` with `qtilde_0 = 1`.
    QTilde,
}

/// Which route produced the values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Recurrence,
    QuotientIdentity,
}

/// Values `v_0(x) .. v_N(x)` of one sequence at one abscissa.
#[derive(Debug, Clone, Serialize)]
pub struct EvalSequence {
    pub kind: Kind,
    pub x: f64,
    pub values: Vec<f64>,
    pub route: Route,
}

impl EvalSequence {
    pub fn value(&self, n: usize) -> f64 {
        self.values[n]
    }
}

/// `p_{n+1} = (x p_n - alpha_n p_{n-1}) / gamma_n` from `p_0 = 1`.
pub fn eval_p(s: &RecurrenceScheme, n_max: usize, x: f64) -> Result<EvalSequence> {
    if n_max > 0 {
        s.check_n(n_max - 1)?;
    }
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1.0);
    let mut prev = 0.0; // p_{-1}
    let mut cur = 1.0;
    for n in 0..n_max {
        let next = (x * cur - s.alpha(n) * prev) / s.gamma(n);
        values.push(next);
        prev = cur;
        cur = next;
    }
    Ok(EvalSequence { kind: Kind::P, x, values, route: Route::Recurrence })
}

/// `P_{n+1} = (x P_n - lambda_{n-1} P_{n-1}) / lambda_n` from `P_0 = 1`.
pub fn eval_orthonormal(l: &OrthonormalScheme, n_max: usize, x: f64) -> Result<EvalSequence> {
    if n_max > 0 {
        l.check_n(n_max - 1)?;
    }
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1.0);
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut lam_prev = 0.0; // lambda_{-1}
    for n in 0..n_max {
        let lam = l.lambda(n);
        let next = (x * cur - lam_prev * prev) / lam;
        values.push(next);
        prev = cur;
        cur = next;
        lam_prev = lam;
    }
    Ok(EvalSequence { kind: Kind::Orthonormal, x, values, route: Route::Recurrence })
}

/// `q_{n+1} = (x q_n - alpha_n q_{n-1}) / gamma_{n+2}` from `q_0 = 1/gamma_1`.
///
/// Only defined for normalized families (`gamma_0 = 1`).
pub fn eval_q(s: &RecurrenceScheme, n_max: usize, x: f64) -> Result<EvalSequence> {
    s.require_normalized()?;
    s.check_n(n_max + 1)?;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1.0 / s.gamma(1));
    let mut prev = 0.0; // q_{-1}
    let mut cur = values[0];
    for n in 0..n_max {
        let next = (x * cur - s.alpha(n) * prev) / s.gamma(n + 2);
        values.push(next);
        prev = cur;
        cur = next;
    }
    Ok(EvalSequence { kind: Kind::Q, x, values, route: Route::Recurrence })
}

/// Band around x = ±1 where the quotient route loses its meaning.
pub const SINGULAR_BAND: f64 = 1e-8;

/// The defining quotient `q_n = (p_{n+2} - p_n)/(x^2 - 1)`, used as an
/// independent cross-check of [`eval_q`] away from x = ±1.
pub fn eval_q_quotient(s: &RecurrenceScheme, n_max: usize, x: f64) -> Result<EvalSequence> {
    s.require_normalized()?;
    let denom = x * x - 1.0;
    if denom.abs() <= SINGULAR_BAND {
        return Err(Error::NearSingular(x));
    }
    let p = eval_p(s, n_max + 2, x)?;
    let values = (0..=n_max).map(|n| (p.values[n + 2] - p.values[n]) / denom).collect();
    Ok(EvalSequence { kind: Kind::Q, x, values, route: Route::QuotientIdentity })
}

/// `qtilde_{n+1} = (x qtilde_n - gamma_{n+1} qtilde_{n-1}) / alpha_{n+1}`
/// from `qtilde_0 = 1`.
pub fn eval_qtilde(s: &RecurrenceScheme, n_max: usize, x: f64) -> Result<EvalSequence> {
    s.require_normalized()?;
    s.check_n(n_max)?;
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1.0);
    let mut prev = 0.0;
    let mut cur = 1.0;
    for n in 0..n_max {
        let next = (x * cur - s.gamma(n + 1) * prev) / s.alpha(n + 1);
        values.push(next);
        prev = cur;
        cur = next;
    }
    Ok(EvalSequence { kind: Kind::QTilde, x, values, route: Route::Recurrence })
}

/// Closed-form `p_n(0)`: zero for odd `n`, and
/// `(-1)^m prod_{k=1..m} alpha_{2k-1}/gamma_{2k-1}` for `n = 2m`.
pub fn p_at_zero(s: &RecurrenceScheme, n: usize) -> Result<f64> {
    s.require_normalized()?;
    if n % 2 == 1 {
        return Ok(0.0);
    }
    if n > 0 {
        s.check_n(n - 1)?;
    }
    let m = n / 2;
    let mut prod = 1.0;
    for k in 1..=m {
        prod *= s.alpha(2 * k - 1) / s.gamma(2 * k - 1);
    }
    Ok(if m.is_multiple_of(2) { prod } else { -prod })
}

/// `delta_n = sqrt((gamma_0 .. gamma_{n-1}) / (alpha_1 .. alpha_n))`, the
/// factor with `P_n = delta_n p_n`.
pub fn orthonormal_factor(s: &RecurrenceScheme, n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(1.0);
    }
    s.check_n(n)?;
    let mut d = 1.0_f64;
    for k in 1..=n {
        d *= s.gamma(k - 1) / s.alpha(k);
    }
    Ok(d.sqrt())
}

//! Turán determinants `Delta_n`, normalized Turán determinants
//! `Delta_n/(1-x^2)`, the auxiliary determinants `D_n` and `scriptD_n`,
//! and residual checks of the structural identities relating them.
//!
//! Determinants are computed through the one-step-eliminated forms (the
//! raw difference `p_n^2 - p_{n-1} p_{n+1}` loses all significant digits
//! near x = ±1); the raw form is kept as a cross-check oracle.

use rayon::prelude::*;
use serde::Serialize;

use crate::polyeval::{
    eval_orthonormal, eval_p, eval_q, p_at_zero, EvalSequence, SINGULAR_BAND,
};
use crate::report::fmt_float;
use crate::schemes::{FamilyDescriptor, OrthonormalScheme, RecurrenceScheme};
use crate::{rel_residual, scaled_tol, Result};

/// Stabilized Turán determinant
/// `Delta_n = (alpha_n p_{n-1}^2 + gamma_n p_n^2 - x p_{n-1} p_n) / gamma_n`.
pub fn turan_delta(s: &RecurrenceScheme, n: usize, x: f64) -> Result<f64> {
    s.check_n(n)?;
    let p = eval_p(s, n, x)?;
    Ok(delta_from_pair(s, n, x, p.value(n - 1), p.value(n)))
}

fn delta_from_pair(s: &RecurrenceScheme, n: usize, x: f64, pm1: f64, pn: f64) -> f64 {
    (s.alpha(n) * pm1 * pm1 + s.gamma(n) * pn * pn - x * pm1 * pn) / s.gamma(n)
}

/// Raw difference `p_n^2 - p_{n-1} p_{n+1}`; cancellation-prone near ±1,
/// used only as an independent oracle.
pub fn turan_delta_raw(s: &RecurrenceScheme, n: usize, x: f64) -> Result<f64> {
    let p = eval_p(s, n + 1, x)?;
    Ok(p.value(n) * p.value(n) - p.value(n - 1) * p.value(n + 1))
}

/// Right-hand side of the fundamental identity:
/// `Delta_n/(1-x^2) = alpha_n gamma_n q_{n-1}^2 - alpha_{n-1} gamma_{n+1} q_{n-2} q_n`.
///
/// Polynomial in x, so valid through x = ±1. Convention `q_{-1} = 0`
/// makes the `n = 1` value `alpha_1 gamma_1 q_0^2` (the second term also
/// carries `alpha_0 = 0`).
pub fn normalized_turan_qform(s: &RecurrenceScheme, n: usize, x: f64) -> Result<f64> {
    s.require_normalized()?;
    s.check_n(n + 1)?;
    let q = eval_q(s, n, x)?;
    Ok(qform_from_seq(s, n, &q))
}

fn qform_from_seq(s: &RecurrenceScheme, n: usize, q: &EvalSequence) -> f64 {
    let head = s.alpha(n) * s.gamma(n) * q.value(n - 1) * q.value(n - 1);
    if n >= 2 {
        head - s.alpha(n - 1) * s.gamma(n + 1) * q.value(n - 2) * q.value(n)
    } else {
        head
    }
}

/// Normalized Turán determinant `Delta_n(x)/(1-x^2)`.
///
/// Inside the band `|1-x^2| <= 1e-8` the quotient has a removable
/// singularity and the value is routed through the q-form instead.
pub fn normalized_turan(s: &RecurrenceScheme, n: usize, x: f64) -> Result<f64> {
    s.require_normalized()?;
    let w = 1.0 - x * x;
    if w.abs() > SINGULAR_BAND {
        Ok(turan_delta(s, n, x)? / w)
    } else {
        normalized_turan_qform(s, n, x)
    }
}

/// Normalized Turán values for all `1 <= n <= n_max` at one abscissa.
/// Index 0 of the returned vector is unused (NaN).
pub fn normalized_turan_row(s: &RecurrenceScheme, n_max: usize, x: f64) -> Result<Vec<f64>> {
    s.require_normalized()?;
    s.check_n(n_max + 1)?;
    let w = 1.0 - x * x;
    let mut row = vec![f64::NAN; n_max + 1];
    if w.abs() > SINGULAR_BAND {
        let p = eval_p(s, n_max, x)?;
        for n in 1..=n_max {
            row[n] = delta_from_pair(s, n, x, p.value(n - 1), p.value(n)) / w;
        }
    } else {
        let q = eval_q(s, n_max, x)?;
        for n in 1..=n_max {
            row[n] = qform_from_seq(s, n, &q);
        }
    }
    Ok(row)
}

/// `D_n = alpha_{n-1} q_{n-2}^2 + gamma_n q_{n-1}^2 - x q_{n-2} q_{n-1}`,
/// for `n >= 2`.
pub fn d_n(s: &RecurrenceScheme, n: usize, x: f64) -> Result<f64> {
    s.require_normalized()?;
    assert!(n >= 2, "D_n needs n >= 2");
    let q = eval_q(s, n - 1, x)?;
    let (a, b) = (q.value(n - 2), q.value(n - 1));
    Ok(s.alpha(n - 1) * a * a + s.gamma(n) * b * b - x * a * b)
}

/// `scriptD_n = lambda_{n-1}(P_{n-1}^2 + P_n^2) - x P_{n-1} P_n`, `n >= 1`.
pub fn script_d_n(l: &OrthonormalScheme, n: usize, x: f64) -> Result<f64> {
    assert!(n >= 1, "scriptD_n needs n >= 1");
    let p = eval_orthonormal(l, n, x)?;
    let (a, b) = (p.value(n - 1), p.value(n));
    Ok(l.lambda(n - 1) * (a * a + b * b) - x * a * b)
}

/// `Delta_n(0)` via the closed-form products:
/// `Delta_{2m}(0) = p_{2m}(0)^2`, `Delta_{2m+1}(0) = -p_{2m}(0) p_{2m+2}(0)`.
pub fn delta_zero(s: &RecurrenceScheme, n: usize) -> Result<f64> {
    s.require_normalized()?;
    assert!(n >= 1, "delta_zero needs n >= 1");
    if n.is_multiple_of(2) {
        let p = p_at_zero(s, n)?;
        Ok(p * p)
    } else {
        Ok(-p_at_zero(s, n - 1)? * p_at_zero(s, n + 1)?)
    }
}

/// Identity under residual test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityTag {
    Prop21,
    Fund,
    TuranTuran,
}

/// Max relative residual of one identity over an n-range and a grid.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityResidualReport {
    pub identity: IdentityTag,
    pub n_min: usize,
    pub n_max: usize,
    pub grid_len: usize,
    pub max_residual: f64,
    pub worst_n: usize,
    pub worst_x: f64,
    /// n skipped because the identity's hypothesis is void there.
    pub skipped_n: Vec<usize>,
    pub base_tol: f64,
    pub pass: bool,
}

fn residual_report(
    identity: IdentityTag,
    n_min: usize,
    n_max: usize,
    grid: &[f64],
    base_tol: f64,
    skipped_n: Vec<usize>,
    // per grid point: Vec of (n, lhs, rhs)
    rows: Vec<Vec<(usize, f64, f64)>>,
) -> IdentityResidualReport {
    let mut max_residual = 0.0;
    let mut worst_n = n_min;
    let mut worst_x = f64::NAN;
    let mut pass = true;
    for (row, &x) in rows.iter().zip(grid) {
        for &(n, lhs, rhs) in row {
            let r = rel_residual(lhs, rhs);
            if r > max_residual {
                max_residual = r;
                worst_n = n;
                worst_x = x;
            }
            if r > scaled_tol(base_tol, n) {
                pass = false;
            }
        }
    }
    IdentityResidualReport {
        identity,
        n_min,
        n_max,
        grid_len: grid.len(),
        max_residual,
        worst_n,
        worst_x,
        skipped_n,
        base_tol,
        pass,
    }
}

/// One-step Turán recursion: for `alpha_n != gamma_n`,
/// `Delta_n = [(gamma_n-alpha_n) alpha_{n-1} / ((gamma_{n-1}-alpha_{n-1}) gamma_n)] Delta_{n-1}
///  + [(alpha_n-alpha_{n-1}) / ((gamma_{n-1}-alpha_{n-1}) gamma_n)] (p_{n-1}^2 + p_n^2 - 2x p_{n-1} p_n)`.
///
/// n with `|gamma_n - alpha_n| < 1e-12` are skipped (hypothesis void).
pub fn check_prop21(
    s: &RecurrenceScheme,
    n_range: (usize, usize),
    grid: &[f64],
    base_tol: f64,
) -> Result<IdentityResidualReport> {
    let (n_min, n_max) = n_range;
    assert!(n_min >= 2);
    s.check_n(n_max)?;
    let skipped: Vec<usize> = (n_min..=n_max)
        .filter(|&n| {
            (s.gamma(n) - s.alpha(n)).abs() < 1e-12
                || (s.gamma(n - 1) - s.alpha(n - 1)).abs() < 1e-12
        })
        .collect();
    let rows: Vec<Vec<(usize, f64, f64)>> = grid
        .par_iter()
        .map(|&x| {
            let p = eval_p(s, n_max, x).expect("range checked");
            let mut out = Vec::with_capacity(n_max - n_min + 1);
            for n in n_min..=n_max {
                if skipped.contains(&n) {
                    continue;
                }
                let lhs = delta_from_pair(s, n, x, p.value(n - 1), p.value(n));
                let prev = delta_from_pair(s, n - 1, x, p.value(n - 2), p.value(n - 1));
                let den = (s.gamma(n - 1) - s.alpha(n - 1)) * s.gamma(n);
                let cross = p.value(n - 1) * p.value(n - 1) + p.value(n) * p.value(n)
                    - 2.0 * x * p.value(n - 1) * p.value(n);
                let rhs = (s.gamma(n) - s.alpha(n)) * s.alpha(n - 1) / den * prev
                    + (s.alpha(n) - s.alpha(n - 1)) / den * cross;
                out.push((n, lhs, rhs));
            }
            out
        })
        .collect();
    Ok(residual_report(IdentityTag::Prop21, n_min, n_max, grid, base_tol, skipped, rows))
}

/// Fundamental identity: `Delta_n/(1-x^2)` from the p-recurrence against
/// the q-form, on interior grid points only.
pub fn check_fundamental(
    s: &RecurrenceScheme,
    n_range: (usize, usize),
    grid: &[f64],
    base_tol: f64,
) -> Result<IdentityResidualReport> {
    s.require_normalized()?;
    let (n_min, n_max) = n_range;
    assert!(n_min >= 1);
    s.check_n(n_max + 1)?;
    let interior: Vec<f64> = grid
        .iter()
        .cloned()
        .filter(|&x| (1.0 - x * x).abs() > SINGULAR_BAND)
        .collect();
    let rows: Vec<Vec<(usize, f64, f64)>> = interior
        .par_iter()
        .map(|&x| {
            let w = 1.0 - x * x;
            let p = eval_p(s, n_max, x).expect("range checked");
            let q = eval_q(s, n_max, x).expect("range checked");
            (n_min..=n_max)
                .map(|n| {
                    let direct = delta_from_pair(s, n, x, p.value(n - 1), p.value(n)) / w;
                    (n, direct, qform_from_seq(s, n, &q))
                })
                .collect()
        })
        .collect();
    Ok(residual_report(IdentityTag::Fund, n_min, n_max, &interior, base_tol, vec![], rows))
}

/// Turán-of-Turán identity: the normalized determinant against the scaled
/// qtilde Turán determinant of order `n-1`.
pub fn check_turanturan(
    s: &RecurrenceScheme,
    n_range: (usize, usize),
    grid: &[f64],
    base_tol: f64,
) -> Result<IdentityResidualReport> {
    s.require_normalized()?;
    let (n_min, n_max) = n_range;
    assert!(n_min >= 1);
    s.check_n(n_max + 1)?;
    let rows: Vec<Vec<(usize, f64, f64)>> = grid
        .par_iter()
        .map(|&x| {
            let lhs_row = normalized_turan_row(s, n_max, x).expect("range checked");
            let qt = crate::polyeval::eval_qtilde(s, n_max, x).expect("range checked");
            let mut ratio = 1.0_f64; // prod alpha_k/gamma_k for k <= n
            (n_min..=n_max)
                .map(|n| {
                    // extend product up to n lazily
                    while_ratio(&mut ratio, s, n_min, n);
                    let prev = if n >= 2 { qt.value(n - 2) } else { 0.0 };
                    let det = qt.value(n - 1) * qt.value(n - 1) - prev * qt.value(n);
                    let rhs = s.gamma(n) / s.alpha(n) * ratio * ratio * det;
                    (n, lhs_row[n], rhs)
                })
                .collect()
        })
        .collect();
    Ok(residual_report(IdentityTag::TuranTuran, n_min, n_max, grid, base_tol, vec![], rows))
}

// Running product prod_{k=1..n} alpha_k/gamma_k, advanced once per n.
fn while_ratio(ratio: &mut f64, s: &RecurrenceScheme, n_min: usize, n: usize) {
    if n == n_min {
        *ratio = 1.0;
        for k in 1..=n {
            *ratio *= s.alpha(k) / s.gamma(k);
        }
    } else {
        *ratio *= s.alpha(n) / s.gamma(n);
    }
}

/// Per-n, per-grid-point Turán determinant values with summaries.
#[derive(Debug, Clone, Serialize)]
pub struct TuranScan {
    pub family: FamilyDescriptor,
    pub n_max: usize,
    pub grid: Vec<f64>,
    /// `delta[n-1][i] = Delta_n(grid[i])`.
    pub delta: Vec<Vec<f64>>,
    /// `normalized[n-1][i] = Delta_n(grid[i]) / (1 - grid[i]^2)`.
    pub normalized: Vec<Vec<f64>>,
    /// `delta0[n-1] = Delta_n(0)`.
    pub delta0: Vec<f64>,
    /// Per-n (min, max) of the normalized values over the grid.
    pub summaries: Vec<(f64, f64)>,
}

impl TuranScan {
    pub fn run(s: &RecurrenceScheme, n_max: usize, grid: &[f64]) -> Result<Self> {
        s.require_normalized()?;
        s.check_n(n_max + 1)?;
        assert!(n_max >= 1);
        // columns per grid point, in grid order
        let cols: Vec<(Vec<f64>, Vec<f64>)> = grid
            .par_iter()
            .map(|&x| {
                let norm = normalized_turan_row(s, n_max, x).expect("range checked");
                let w = 1.0 - x * x;
                let delta: Vec<f64> = (1..=n_max).map(|n| norm[n] * w).collect();
                let norm: Vec<f64> = (1..=n_max).map(|n| norm[n]).collect();
                (delta, norm)
            })
            .collect();
        let mut delta = vec![vec![0.0; grid.len()]; n_max];
        let mut normalized = vec![vec![0.0; grid.len()]; n_max];
        for (i, (d, f)) in cols.into_iter().enumerate() {
            for k in 0..n_max {
                delta[k][i] = d[k];
                normalized[k][i] = f[k];
            }
        }
        let delta0: Vec<f64> = (1..=n_max).map(|n| delta_zero(s, n)).collect::<Result<_>>()?;
        let summaries = normalized
            .iter()
            .map(|row| {
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for &v in row {
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
                (lo, hi)
            })
            .collect();
        Ok(Self {
            family: s.descriptor().clone(),
            n_max,
            grid: grid.to_vec(),
            delta,
            normalized,
            delta0,
            summaries,
        })
    }

    /// Columns: n, x, delta, normalized. 17 significant digits, scientific.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,x,delta,normalized\n");
        for n in 1..=self.n_max {
            for (i, &x) in self.grid.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    n,
                    fmt_float(x),
                    fmt_float(self.delta[n - 1][i]),
                    fmt_float(self.normalized[n - 1][i]),
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::interior_grid;
    use crate::grid::Spacing;
    use crate::schemes::OrthonormalScheme;

    #[test]
    fn chebyshev_delta_is_one_minus_x2() {
        let s = RecurrenceScheme::jacobi(-0.5).unwrap();
        for n in 1..=20 {
            let d = turan_delta(&s, n, 0.4).unwrap();
            assert!((d - 0.84).abs() < 1e-13, "n={n} d={d}");
        }
    }

    #[test]
    fn legendre_delta_at_zero() {
        let s = RecurrenceScheme::jacobi(0.0).unwrap();
        assert!((turan_delta(&s, 2, 0.0).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn delta_vanishes_at_endpoints() {
        for a in [-0.75, 0.0, 2.0] {
            let s = RecurrenceScheme::jacobi(a).unwrap();
            for n in 1..=10 {
                assert!(turan_delta(&s, n, 1.0).unwrap().abs() < 1e-11);
                assert!(turan_delta(&s, n, -1.0).unwrap().abs() < 1e-11);
            }
        }
    }

    #[test]
    fn stabilized_matches_raw_away_from_cancellation() {
        for a in [-0.75, 0.0, 1.5] {
            let s = RecurrenceScheme::jacobi(a).unwrap();
            for n in 1..=100 {
                for x in [-0.9, -0.3, 0.0, 0.55, 0.9] {
                    let stab = turan_delta(&s, n, x).unwrap();
                    let raw = turan_delta_raw(&s, n, x).unwrap();
                    if raw.abs() > 1e-13 {
                        assert!(rel_residual(stab, raw) < 1e-9, "a={a} n={n} x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn normalized_chebyshev_is_one_near_boundary() {
        let s = RecurrenceScheme::jacobi(-0.5).unwrap();
        let f = normalized_turan(&s, 7, 0.999999).unwrap();
        assert!((f - 1.0).abs() < 1e-9);
        // inside the singular band the q-form takes over
        let f = normalized_turan(&s, 7, 1.0).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
    }

    #[test]
    fn legendre_normalized_values() {
        let s = RecurrenceScheme::jacobi(0.0).unwrap();
        // f_n(1) = 1/2
        for n in 1..=30 {
            let f = normalized_turan(&s, n, 1.0).unwrap();
            assert!((f - 0.5).abs() < 1e-11, "n={n} f={f}");
        }
        // f_3(0) = mu_1 mu_2 = 3/16
        let f = normalized_turan(&s, 3, 0.0).unwrap();
        assert!((f - 3.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn prop21_identity_residuals() {
        let grid = interior_grid(101, Spacing::Uniform);
        for a in [0.0, 2.0] {
            let s = RecurrenceScheme::jacobi(a).unwrap();
            let rep = check_prop21(&s, (2, 50), &grid, 1e-10).unwrap();
            assert!(rep.pass, "a={a} residual={:e}", rep.max_residual);
            assert!(rep.max_residual < 1e-10);
            assert!(rep.skipped_n.is_empty());
        }
    }

    #[test]
    fn prop21_skips_void_hypothesis() {
        // alpha_n = 1/2 for n >= 1: hypothesis void everywhere, vacuous pass
        let s = RecurrenceScheme::jacobi(-0.5).unwrap();
        let grid = interior_grid(11, Spacing::Uniform);
        let rep = check_prop21(&s, (2, 10), &grid, 1e-10).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.skipped_n, (2..=10).collect::<Vec<_>>());
    }

    #[test]
    fn fundamental_identity_residuals() {
        let grid = interior_grid(101, Spacing::Uniform);
        for a in [-0.75, 0.0, 2.0] {
            let s = RecurrenceScheme::jacobi(a).unwrap();
            let rep = check_fundamental(&s, (1, 50), &grid, 1e-10).unwrap();
            assert!(rep.pass, "a={a} residual={:e}", rep.max_residual);
        }
    }

    #[test]
    fn turanturan_identity_residuals() {
        let grid = interior_grid(51, Spacing::Chebyshev);
        let s = RecurrenceScheme::jacobi(0.0).unwrap();
        let rep = check_turanturan(&s, (2, 30), &grid, 1e-10).unwrap();
        assert!(rep.pass, "residual={:e}", rep.max_residual);

        let r = RecurrenceScheme::remark28(0.05).unwrap();
        let rep = check_turanturan(&r, (3, 3), &grid, 1e-10).unwrap();
        assert!(rep.pass, "residual={:e}", rep.max_residual);
    }

    #[test]
    fn turanturan_n1_edge() {
        // both routes reduce to alpha_1/gamma_1 at n=1
        let s = RecurrenceScheme::jacobi(0.0).unwrap();
        let grid = [0.3, -0.8];
        let rep = check_turanturan(&s, (1, 1), &grid, 1e-12).unwrap();
        assert!(rep.pass);
        let expect = s.alpha(1) / s.gamma(1);
        let f = normalized_turan(&s, 1, 0.3).unwrap();
        // Delta_1/(1-x^2) = alpha_1 gamma_1 q_0^2 = alpha_1/gamma_1
        assert!((f - expect).abs() < 1e-14);
    }

    #[test]
    fn d2_closed_form() {
        for a in [-0.75, 0.0, 1.5] {
            let s = RecurrenceScheme::jacobi(a).unwrap();
            for x in [-0.7, 0.0, 0.9] {
                let d = d_n(&s, 2, x).unwrap();
                let expect = s.alpha(1) / (s.gamma(1) * s.gamma(1));
                assert!((d - expect).abs() < 1e-13, "a={a} x={x}");
            }
        }
    }

    #[test]
    fn script_d1_is_lambda0() {
        let l = OrthonormalScheme::q_ultra(0.5, 0.25).unwrap();
        for x in [-0.9, 0.1, 0.8] {
            let d = script_d_n(&l, 1, x).unwrap();
            assert!((d - l.lambda(0)).abs() < 1e-14);
        }
    }

    #[test]
    fn remark36_script_d_closed_form() {
        let l0 = 0.6_f64;
        let l = OrthonormalScheme::remark36(l0).unwrap();
        for n in 2..=20 {
            for x in [-0.95, -0.2, 0.0, 0.4, 0.99] {
                let d = script_d_n(&l, n, x).unwrap();
                let expect = 2.0 / (l0 * l0) * (l0.powi(4) - (l0 * l0 - 0.25) * x * x);
                assert!((d - expect).abs() < 1e-13, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn delta_zero_products() {
        let s = RecurrenceScheme::jacobi(0.0).unwrap();
        assert!((delta_zero(&s, 2).unwrap() - 0.25).abs() < 1e-15);
        assert!((delta_zero(&s, 3).unwrap() - 3.0 / 16.0).abs() < 1e-15);
        // Delta_1(0) = alpha_1/gamma_1
        let expect = s.alpha(1) / s.gamma(1);
        assert!((delta_zero(&s, 1).unwrap() - expect).abs() < 1e-15);
        // against the scan route
        for n in 1..=40 {
            let direct = turan_delta(&s, n, 0.0).unwrap();
            assert!((delta_zero(&s, n).unwrap() - direct).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn positivity_on_interior_grid() {
        // Cor 2.2 hypotheses: (i) jacobi a=0 (alpha increasing, <= gamma),
        // (ii) jacobi a=-0.75 (alpha decreasing, >= gamma)
        let grid = interior_grid(101, Spacing::Uniform);
        for a in [0.0, -0.75] {
            let s = RecurrenceScheme::jacobi(a).unwrap();
            for &x in &grid {
                let row = normalized_turan_row(&s, 60, x).unwrap();
                let w = 1.0 - x * x;
                for n in 1..=60 {
                    assert!(row[n] * w > 0.0, "a={a} n={n} x={x}");
                }
            }
        }
    }

    #[test]
    fn scan_shape_and_consistency() {
        let s = RecurrenceScheme::jacobi(0.0).unwrap();
        let grid = interior_grid(21, Spacing::Uniform);
        let scan = TuranScan::run(&s, 5, &grid).unwrap();
        assert_eq!(scan.delta.len(), 5);
        assert_eq!(scan.delta[0].len(), 21);
        // normalized * (1-x^2) = delta at interior points
        for n in 1..=5 {
            for (i, &x) in grid.iter().enumerate() {
                let lhs = scan.normalized[n - 1][i] * (1.0 - x * x);
                assert!(rel_residual(lhs, scan.delta[n - 1][i]) < 1e-10);
            }
            // delta0 matches closed form
            assert!((scan.delta0[n - 1] - delta_zero(&s, n).unwrap()).abs() < 1e-12);
        }
        let csv = scan.to_csv();
        assert_eq!(csv.lines().count(), 1 + 5 * 21);
        assert!(csv.starts_with("n,x,delta,normalized"));
    }
}

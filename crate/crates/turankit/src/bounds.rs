//! Inequality verification: the two-sided bounds on the normalized Turán
//! determinant, the Turán inequality for the renormalized q-polynomials,
//! the lower-boundedness (LB) infimum scans, and spectral-density
//! estimates through the Máté–Nevai limit.
//!
//! A certificate whose hypotheses fail is reported as *inapplicable*,
//! never as a bound failure: the theorems are conditional, and a scan with
//! unmet preconditions says nothing about the bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::polyeval::{eval_orthonormal, eval_q, orthonormal_factor};
use crate::schemes::{
    check_sequence_property, OrthonormalScheme, RecurrenceScheme, SeqProperty,
};
use crate::turan::{delta_zero, normalized_turan, normalized_turan_row};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremTag {
    Thm2Lower,
    Thm2aUpper,
    Prop29TuranQ,
    Prop31Lb,
    Cor33JacobiLb,
    Thm41QUltra,
    Cor12UltraBounds,
}

/// One checked hypothesis of a conditional theorem.
#[derive(Debug, Clone, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub first_violation: Option<(usize, f64)>,
}

/// Outcome of a bound scan.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCertificate {
    pub theorem: TheoremTag,
    pub family: String,
    /// The explicit constant of the theorem, when it has one.
    pub constant: Option<f64>,
    pub constant_formula: Option<String>,
    pub hypotheses: Vec<Hypothesis>,
    pub n_max: usize,
    pub grid_len: usize,
    pub min_margin: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl BoundCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn hypothesis(name: &str, seq: &[f64], prop: SeqProperty, start: usize, n: usize) -> Hypothesis {
    let v = check_sequence_property(seq, prop, start, n);
    Hypothesis { name: name.to_string(), holds: v.holds, first_violation: v.first_violation }
}

fn finish(
    mut cert: BoundCertificate,
    min_margin: f64,
) -> BoundCertificate {
    let applicable = cert.hypotheses.iter().all(|h| h.holds);
    cert.min_margin = min_margin;
    cert.verdict = if !applicable {
        Verdict::Inapplicable
    } else if min_margin >= -cert.tolerance {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    cert
}

/// Lower bound `Delta_n(x)/(1-x^2) >= c Delta_n(0)` with
/// `c = 2 alpha_1 gamma_2 / gamma_1`, under: `(alpha_n)` increasing,
/// `alpha_n <= 1/2`, and the q-concavity condition.
pub fn verify_thm2_lower(
    s: &RecurrenceScheme,
    n_max: usize,
    grid: &[f64],
    tol: f64,
) -> Result<BoundCertificate> {
    s.require_normalized()?;
    s.check_n(n_max + 2)?;
    let alphas = &s.alphas()[..=(n_max + 2).min(s.max_n())];
    let hyps = vec![
        hypothesis("alpha increasing", alphas, SeqProperty::Increasing, 0, n_max + 1),
        hypothesis("alpha <= 1/2", alphas, SeqProperty::BoundedByHalf, 1, n_max + 1),
        hypothesis("qconcave", alphas, SeqProperty::QConcave, 1, n_max + 1),
    ];
    let c = 2.0 * s.alpha(1) * s.gamma(2) / s.gamma(1);
    let cert = BoundCertificate {
        theorem: TheoremTag::Thm2Lower,
        family: s.descriptor().label(),
        constant: Some(c),
        constant_formula: Some("2*alpha_1*gamma_2/gamma_1".into()),
        hypotheses: hyps,
        n_max,
        grid_len: grid.len(),
        min_margin: f64::NAN,
        tolerance: tol,
        verdict: Verdict::Inapplicable,
        notes: vec![],
    };
    if !cert.hypotheses.iter().all(|h| h.holds) {
        return Ok(finish(cert, f64::NAN));
    }
    let d0: Vec<f64> = (1..=n_max).map(|n| delta_zero(s, n)).collect::<Result<_>>()?;
    let min_margin = grid
        .par_iter()
        .map(|&x| {
            let row = normalized_turan_row(s, n_max, x).expect("range checked");
            (1..=n_max)
                .map(|n| row[n] - c * d0[n - 1])
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(finish(cert, min_margin))
}

/// Upper bound `Delta_n(x)/(1-x^2) <= C Delta_n(0)` with
/// `C = 2 alpha_1 gamma_2 / gamma_1`, under: `(alpha_n)_{n>=1}` decreasing,
/// `alpha_n >= 1/2`, and the reversed q-concavity condition for `n >= 2`.
///
/// The constant mirrors the lower-bound one: reversing every inequality in
/// that argument gives `Delta_n(x)/(1-x^2) <= (prod alpha/gamma) *
/// alpha_1 gamma_2 / (gamma_1 alpha_n)`, then `alpha_n >= 1/2` and
/// `prod alpha/gamma <= Delta_n(0)` (the product sandwich reverses for
/// decreasing alpha). Note any valid C must satisfy `C >= 1`, because the
/// normalized determinant equals `Delta_n(0)` at `x = 0`; the factor
/// `alpha_1/gamma_1 >= 1` is what lifts `2 gamma_2 <= 1` above that floor.
pub fn verify_thm2a_upper(
    s: &RecurrenceScheme,
    n_max: usize,
    grid: &[f64],
    tol: f64,
) -> Result<BoundCertificate> {
    s.require_normalized()?;
    s.check_n(n_max + 2)?;
    let alphas = &s.alphas()[..=(n_max + 2).min(s.max_n())];
    let hyps = vec![
        hypothesis("alpha decreasing (n>=1)", alphas, SeqProperty::Decreasing, 1, n_max + 1),
        hypothesis("alpha >= 1/2", alphas, SeqProperty::AtLeastHalf, 1, n_max + 1),
        hypothesis("qconcave2 (n>=2)", alphas, SeqProperty::QConcave2, 2, n_max + 1),
    ];
    let c = 2.0 * s.alpha(1) * s.gamma(2) / s.gamma(1);
    let cert = BoundCertificate {
        theorem: TheoremTag::Thm2aUpper,
        family: s.descriptor().label(),
        constant: Some(c),
        constant_formula: Some("2*alpha_1*gamma_2/gamma_1".into()),
        hypotheses: hyps,
        n_max,
        grid_len: grid.len(),
        min_margin: f64::NAN,
        tolerance: tol,
        verdict: Verdict::Inapplicable,
        notes: vec![],
    };
    if !cert.hypotheses.iter().all(|h| h.holds) {
        return Ok(finish(cert, f64::NAN));
    }
    let d0: Vec<f64> = (1..=n_max).map(|n| delta_zero(s, n)).collect::<Result<_>>()?;
    let min_margin = grid
        .par_iter()
        .map(|&x| {
            let row = normalized_turan_row(s, n_max, x).expect("range checked");
            (1..=n_max)
                .map(|n| c * d0[n - 1] - row[n])
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(finish(cert, min_margin))
}

/// Turán inequality for `Q_n = q_n/q_n(1)`, plus the proof's auxiliary
/// sequence `c_n = gamma_{n+2} q_{n+1}(1)/q_n(1)`: `c_0 = 1`, decreasing,
/// `c_n >= 1/2`.
pub fn verify_prop29(
    s: &RecurrenceScheme,
    n_max: usize,
    grid: &[f64],
    tol: f64,
) -> Result<BoundCertificate> {
    s.require_normalized()?;
    s.check_n(n_max + 3)?;
    let alphas = &s.alphas()[..=(n_max + 2).min(s.max_n())];
    let hyps = vec![
        hypothesis("alpha increasing", alphas, SeqProperty::Increasing, 0, n_max + 1),
        hypothesis("alpha <= 1/2", alphas, SeqProperty::BoundedByHalf, 1, n_max + 1),
        hypothesis("qconcave", alphas, SeqProperty::QConcave, 1, n_max + 1),
    ];
    let mut cert = BoundCertificate {
        theorem: TheoremTag::Prop29TuranQ,
        family: s.descriptor().label(),
        constant: None,
        constant_formula: None,
        hypotheses: hyps,
        n_max,
        grid_len: grid.len(),
        min_margin: f64::NAN,
        tolerance: tol,
        verdict: Verdict::Inapplicable,
        notes: vec![],
    };
    if !cert.hypotheses.iter().all(|h| h.holds) {
        return Ok(finish(cert, f64::NAN));
    }

    // q_n(1) by recurrence; positivity is asserted, not proven here.
    let q_at_one = eval_q(s, n_max + 1, 1.0)?;
    for n in 0..=n_max + 1 {
        if q_at_one.value(n) <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "q_{n}(1) = {} is not positive",
                q_at_one.value(n)
            )));
        }
    }
    let c_seq: Vec<f64> = (0..=n_max)
        .map(|n| s.gamma(n + 2) * q_at_one.value(n + 1) / q_at_one.value(n))
        .collect();
    let c0_margin = 1e-12 - (c_seq[0] - 1.0).abs();
    let dec = check_sequence_property(&c_seq, SeqProperty::Decreasing, 0, n_max);
    let half = check_sequence_property(&c_seq, SeqProperty::AtLeastHalf, 0, n_max);
    cert.notes.push(format!("c_0 = {}", c_seq[0]));
    cert.notes.push(format!("c sequence decreasing min margin = {:e}", dec.min_margin));
    cert.notes.push(format!("min c_n - 1/2 = {:e}", half.min_margin));

    // Turán determinant of the Q_n via the stabilized eliminated form.
    let q_turan_min = grid
        .par_iter()
        .map(|&x| {
            let q = eval_q(s, n_max, x).expect("range checked");
            let mut m = f64::INFINITY;
            for n in 1..n_max {
                let qm1 = q.value(n - 1) / q_at_one.value(n - 1);
                let qn = q.value(n) / q_at_one.value(n);
                let cn = c_seq[n];
                let det = ((1.0 - cn) * qm1 * qm1 + cn * qn * qn - x * qm1 * qn) / cn;
                m = m.min(det);
            }
            m
        })
        .reduce(|| f64::INFINITY, f64::min);

    // 1e-12-scale structural margins are folded in at the scan tolerance
    let structural = c0_margin.min(dec.min_margin + 1e-12).min(half.min_margin + 1e-12);
    Ok(finish(cert, q_turan_min.min(structural)))
}

/// Result of an (LB) infimum scan of `P_n^2 + P_{n-1}^2`.
#[derive(Debug, Clone, Serialize)]
pub struct LbScan {
    pub n_max: usize,
    pub grid_len: usize,
    /// Empirical infimum over the enriched grid and `1 <= n <= n_max`.
    pub infimum: f64,
    pub inf_x: f64,
    pub inf_n: usize,
    /// `lambda_0^2 / (2 L^2)` with L the supplied limit or the table sup.
    pub bound: f64,
    pub limit_l: f64,
    pub lambda_increasing: bool,
    pub verdict: Verdict,
}

/// Scan `inf_{x, n <= N} P_n^2 + P_{n-1}^2` against the bound
/// `lambda_0^2/(2 L^2)`. Evenness and monotonicity outside [-1,1] reduce
/// the scan to [0, 1]; the grid is enriched near x = 1 down to angles 1/N.
pub fn lb_infimum_scan(
    l: &OrthonormalScheme,
    n_max: usize,
    grid_count: usize,
) -> Result<LbScan> {
    l.check_n(n_max)?;
    let lam = &l.lambdas()[..=n_max];
    let increasing = check_sequence_property(lam, SeqProperty::Increasing, 0, n_max).holds;
    let limit_l = l.limit_l.unwrap_or_else(|| lam.iter().cloned().fold(0.0, f64::max));
    let bound = l.lambda(0) * l.lambda(0) / (2.0 * limit_l * limit_l);
    let grid = crate::grid::lb_grid(grid_count, n_max);
    let (infimum, inf_x, inf_n) = grid
        .par_iter()
        .map(|&x| {
            let p = eval_orthonormal(l, n_max, x).expect("range checked");
            let mut best = (f64::INFINITY, x, 0usize);
            for n in 1..=n_max {
                let v = p.value(n) * p.value(n) + p.value(n - 1) * p.value(n - 1);
                if v < best.0 {
                    best = (v, x, n);
                }
            }
            best
        })
        .reduce(
            || (f64::INFINITY, f64::NAN, 0),
            |a, b| if a.0 <= b.0 { a } else { b },
        );
    let verdict = if !increasing {
        Verdict::Inapplicable
    } else if infimum >= bound - 1e-9 {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(LbScan {
        n_max,
        grid_len: grid.len(),
        infimum,
        inf_x,
        inf_n,
        bound,
        limit_l,
        lambda_increasing: increasing,
        verdict,
    })
}

/// Density estimate at finite n through the Máté–Nevai limit
/// `P_n^2 - P_{n-1} P_{n+1} -> 2 sqrt(1-x^2) / (pi g(x))`.
#[derive(Debug, Clone, Serialize)]
pub struct DensityEstimate {
    pub grid: Vec<f64>,
    pub n: usize,
    /// `g_n(x)`; NaN where the Turán value was not positive (flagged).
    pub g: Vec<f64>,
    /// Convergence diagnostic: the same estimate at n/2.
    pub g_half: Vec<f64>,
    /// Upper bound curve `(1/(2 pi lambda_0^2)) sqrt(1-x^2)`.
    pub bound_upper: Vec<f64>,
    /// Empirical envelope sup/inf of `g_n(x) sqrt(1-x^2)` over the grid.
    pub envelope_sup: f64,
    pub envelope_inf: f64,
    /// `k_n` and `delta_n` from the recovered normalized scheme, when the
    /// lambda table is admissible.
    pub k_n: Option<f64>,
    pub delta_n: Option<f64>,
    /// Total variation of lambda up to n and its tail from n/2.
    pub bv_total: f64,
    pub bv_tail: f64,
    pub bv_plateau: bool,
    /// Grid indices where the Turán value was not positive.
    pub flagged: Vec<usize>,
}

pub fn density_estimate(
    l: &OrthonormalScheme,
    n: usize,
    grid: &[f64],
) -> Result<DensityEstimate> {
    assert!(n >= 2);
    l.check_n(n + 1)?;
    let lam0 = l.lambda(0);
    let estimate_at = |m: usize, x: f64| -> f64 {
        let p = eval_orthonormal(l, m + 1, x).expect("range checked");
        let turan = p.value(m) * p.value(m) - p.value(m - 1) * p.value(m + 1);
        if turan > 0.0 {
            2.0 * (1.0 - x * x).sqrt() / (std::f64::consts::PI * turan)
        } else {
            f64::NAN
        }
    };
    let vals: Vec<(f64, f64)> = grid
        .par_iter()
        .map(|&x| (estimate_at(n, x), estimate_at(n / 2, x)))
        .collect();
    let g: Vec<f64> = vals.iter().map(|v| v.0).collect();
    let g_half: Vec<f64> = vals.iter().map(|v| v.1).collect();
    let flagged: Vec<usize> = g
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.is_nan().then_some(i))
        .collect();
    let bound_upper: Vec<f64> = grid
        .iter()
        .map(|&x| (1.0 - x * x).sqrt() / (2.0 * std::f64::consts::PI * lam0 * lam0))
        .collect();
    let mut envelope_sup = f64::NEG_INFINITY;
    let mut envelope_inf = f64::INFINITY;
    for (&x, &gv) in grid.iter().zip(&g) {
        if gv.is_nan() {
            continue;
        }
        let e = gv * (1.0 - x * x).sqrt();
        envelope_sup = envelope_sup.max(e);
        envelope_inf = envelope_inf.min(e);
    }
    let lam = &l.lambdas()[..=n.min(l.max_n())];
    let bv_total: f64 = lam.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
    let bv_tail: f64 = lam[n / 2..].windows(2).map(|w| (w[1] - w[0]).abs()).sum();
    let bv_plateau = bv_tail <= 0.01 * bv_total + 1e-12;
    let (k_n, delta_n) = match l.to_scheme() {
        Ok(s) if n < s.max_n() => {
            let k = (s.alpha(n + 1) * s.gamma(n - 1) / (s.alpha(n) * s.gamma(n))).sqrt();
            (Some(k), orthonormal_factor(&s, n).ok())
        }
        _ => (None, None),
    };
    Ok(DensityEstimate {
        grid: grid.to_vec(),
        n,
        g,
        g_half,
        bound_upper,
        envelope_sup,
        envelope_inf,
        k_n,
        delta_n,
        bv_total,
        bv_tail,
        bv_plateau,
        flagged,
    })
}

impl DensityEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("estimate serializes")
    }

    pub fn to_csv(&self) -> String {
        use crate::report::fmt_float;
        let mut out = String::from("x,g,g_half,bound_upper\n");
        for i in 0..self.grid.len() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt_float(self.grid[i]),
                fmt_float(self.g[i]),
                fmt_float(self.g_half[i]),
                fmt_float(self.bound_upper[i]),
            ));
        }
        out
    }
}

/// q-ultraspherical main theorem: case (i) `0 <= beta <= q` gives (LB)
/// through increasing lambda; case (ii) `0 <= q <= beta` gives the lower
/// Turán bound with `c = 2 alpha_1 (1-alpha_2)/(1-alpha_1)`.
pub fn verify_thm41(
    q: f64,
    beta: f64,
    n_max: usize,
    grid: &[f64],
    tol: f64,
) -> Result<BoundCertificate> {
    let lam = OrthonormalScheme::q_ultra_with_max(q, beta, n_max + 3)?;
    let mut notes = vec![];
    let mut hyps = vec![];
    let mut margins = vec![];
    if beta <= q {
        // case (i): lambda increasing, (LB) holds
        let v = check_sequence_property(lam.lambdas(), SeqProperty::Increasing, 0, n_max);
        hyps.push(Hypothesis {
            name: "case (i): lambda increasing".into(),
            holds: v.holds,
            first_violation: v.first_violation,
        });
        let scan = lb_infimum_scan(&lam, n_max, 200)?;
        notes.push(format!(
            "case (i): inf = {:e}, bound = {:e}",
            scan.infimum, scan.bound
        ));
        margins.push(scan.infimum - scan.bound);
    }
    let mut constant = None;
    if q <= beta {
        // case (ii): alpha increasing and concave, lower Turán bound
        let s = RecurrenceScheme::q_ultra_with_max(q, beta, n_max + 3)?;
        let alphas = &s.alphas()[..=(n_max + 2).min(s.max_n())];
        hyps.push(hypothesis(
            "case (ii): alpha increasing",
            alphas,
            SeqProperty::Increasing,
            0,
            n_max + 1,
        ));
        hyps.push(hypothesis(
            "case (ii): alpha concave",
            alphas,
            SeqProperty::Concave,
            1,
            n_max + 1,
        ));
        let inner = verify_thm2_lower(&s, n_max, grid, tol)?;
        constant = inner.constant;
        notes.push(format!(
            "case (ii): thm2 margin = {:e}, c = {}",
            inner.min_margin,
            inner.constant.unwrap_or(f64::NAN)
        ));
        margins.push(inner.min_margin);
    }
    let min_margin = margins.iter().cloned().fold(f64::INFINITY, f64::min);
    let cert = BoundCertificate {
        theorem: TheoremTag::Thm41QUltra,
        family: format!("qultra:{q},{beta}"),
        constant,
        constant_formula: constant.map(|_| "2*alpha_1*(1-alpha_2)/(1-alpha_1)".into()),
        hypotheses: hyps,
        n_max,
        grid_len: grid.len(),
        min_margin: f64::NAN,
        tolerance: tol,
        verdict: Verdict::Inapplicable,
        notes,
    };
    Ok(finish(cert, min_margin))
}

/// Lemma "sandwich" around `Delta_n(0)`:
/// `Delta_n(0) <= prod(alpha)/prod(gamma) <= (gamma_1/alpha_1) Delta_n(0)`.
/// Returns the minimal (left, right) margins over `1 <= n <= n_max`.
pub fn lemma26_margins(s: &RecurrenceScheme, n_max: usize) -> Result<(f64, f64)> {
    s.require_normalized()?;
    s.check_n(n_max)?;
    let ratio0 = s.gamma(1) / s.alpha(1);
    let mut prod = 1.0_f64;
    let mut left = f64::INFINITY;
    let mut right = f64::INFINITY;
    for n in 1..=n_max {
        prod *= s.alpha(n) / s.gamma(n);
        let d0 = delta_zero(s, n)?;
        left = left.min(prod - d0);
        right = right.min(ratio0 * d0 - prod);
    }
    Ok((left, right))
}

/// Minimal margin of the D-step inequality
/// `D_n - (alpha_{n-2}/gamma_n) D_{n-1} >= 0` over the grid, `3 <= n <= n_max`.
pub fn d_step_min_margin(s: &RecurrenceScheme, n_max: usize, grid: &[f64]) -> Result<f64> {
    s.require_normalized()?;
    s.check_n(n_max + 1)?;
    let min = grid
        .par_iter()
        .map(|&x| {
            let q = eval_q(s, n_max - 1, x).expect("range checked");
            let d = |n: usize| {
                let (a, b) = (q.value(n - 2), q.value(n - 1));
                s.alpha(n - 1) * a * a + s.gamma(n) * b * b - x * a * b
            };
            let mut m = f64::INFINITY;
            let mut prev = d(2);
            for n in 3..=n_max {
                let cur = d(n);
                m = m.min(cur - s.alpha(n - 2) / s.gamma(n) * prev);
                prev = cur;
            }
            m
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(min)
}

/// Minimal margin of the scriptD-step inequality
/// `scriptD_n - (lambda_{n-2}/lambda_{n-1}) scriptD_{n-1} >= 0`, `2 <= n <= n_max`.
pub fn script_d_step_min_margin(
    l: &OrthonormalScheme,
    n_max: usize,
    grid: &[f64],
) -> Result<f64> {
    l.check_n(n_max)?;
    let min = grid
        .par_iter()
        .map(|&x| {
            let p = eval_orthonormal(l, n_max, x).expect("range checked");
            let d = |n: usize| {
                let (a, b) = (p.value(n - 1), p.value(n));
                l.lambda(n - 1) * (a * a + b * b) - x * a * b
            };
            let mut m = f64::INFINITY;
            let mut prev = d(1);
            for n in 2..=n_max {
                let cur = d(n);
                m = m.min(cur - l.lambda(n - 2) / l.lambda(n - 1) * prev);
                prev = cur;
            }
            m
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(min)
}

/// Monotonicity scan of the normalized Turán determinant on (0, 1).
#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityScan {
    pub n: usize,
    pub is_monotone: bool,
    /// Strict interior extrema as (x, value, is_minimum).
    pub witnesses: Vec<(f64, f64, bool)>,
}

pub fn detect_nonmonotonicity(
    s: &RecurrenceScheme,
    n: usize,
    grid: &[f64],
) -> Result<MonotonicityScan> {
    s.require_normalized()?;
    assert!(grid.windows(2).all(|w| w[0] < w[1]), "grid must be increasing");
    let values: Vec<f64> = grid
        .iter()
        .map(|&x| normalized_turan(s, n, x))
        .collect::<Result<_>>()?;
    let scale = values.iter().cloned().fold(0.0_f64, |a, v| a.max(v.abs()));
    let tol = 1e-12 * scale.max(1e-30);
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let is_monotone =
        diffs.iter().all(|&d| d >= -tol) || diffs.iter().all(|&d| d <= tol);
    let mut witnesses = vec![];
    for i in 1..diffs.len() {
        let (before, after) = (diffs[i - 1], diffs[i]);
        if before < -tol && after > tol {
            witnesses.push((grid[i], values[i], true));
        } else if before > tol && after < -tol {
            witnesses.push((grid[i], values[i], false));
        }
    }
    Ok(MonotonicityScan { n, is_monotone, witnesses })
}

/// Coefficients (A, B) of the even quartic `x^4 + A x^2 + B` proportional
/// to the order-2 qtilde Turán determinant of a scheme, obtained by
/// running the qtilde recurrence on polynomial coefficients.
pub fn qtilde_quartic_coefficients(s: &RecurrenceScheme) -> Result<(f64, f64)> {
    s.require_normalized()?;
    s.check_n(3)?;
    // qtilde_{n+1} = (x qtilde_n - gamma_{n+1} qtilde_{n-1}) / alpha_{n+1}
    let mut prev = vec![1.0]; // qtilde_0
    let mut cur = vec![0.0, 1.0 / s.alpha(1)]; // qtilde_1 = x/alpha_1
    let mut polys = vec![prev.clone(), cur.clone()];
    for n in 1..=2usize {
        let mut next = vec![0.0; cur.len() + 1];
        for (k, &c) in cur.iter().enumerate() {
            next[k + 1] += c;
        }
        for (k, &c) in prev.iter().enumerate() {
            next[k] -= s.gamma(n + 1) * c;
        }
        for c in next.iter_mut() {
            *c /= s.alpha(n + 1);
        }
        polys.push(next.clone());
        prev = cur;
        cur = next;
    }
    let sq = poly_mul(&polys[2], &polys[2]);
    let cross = poly_mul(&polys[1], &polys[3]);
    let det: Vec<f64> = (0..sq.len().max(cross.len()))
        .map(|k| sq.get(k).copied().unwrap_or(0.0) - cross.get(k).copied().unwrap_or(0.0))
        .collect();
    let c4 = det[4];
    if c4 == 0.0 {
        return Err(Error::InvalidParameter("qtilde Turán determinant is not quartic".into()));
    }
    Ok((det[2] / c4, det[0] / c4))
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

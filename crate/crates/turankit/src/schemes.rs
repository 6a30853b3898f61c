//! Recurrence-coefficient families and conversions between the normalized
//! form `(alpha_n, gamma_n)` and the orthonormal form `lambda_n`.
//!
//! All built-in schemes pre-fill their coefficient tables at construction,
//! so a scheme is immutable afterwards and safe to share across parallel
//! grid workers.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default table bound for built-in families.
pub const DEFAULT_MAX_N: usize = 1000;

/// Tag identifying a built-in family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilyDescriptor {
    /// Symmetric Jacobi (ultraspherical) with weight `(1-x^2)^alpha`.
    #[serde(rename = "jacobi")]
    Jacobi { alpha: f64 },
    /// Continuous q-ultraspherical with parameters `(q, beta)`.
    #[serde(rename = "q_ultra")]
    QUltra { q: f64, beta: f64 },
    /// Explicit alpha table; access beyond the table is an error.
    #[serde(rename = "custom_table")]
    CustomTable { alphas: Vec<f64> },
    /// Counterexample family `(0, 1/2-3e, 1/2-2e, 1/2-e, 1/2, 1/2, ...)`.
    #[serde(rename = "remark28")]
    Remark28 { epsilon: f64 },
    /// `lambda_0 in (1/2, 1/sqrt 2)`, `lambda_n = 1/2` for `n >= 1`.
    #[serde(rename = "remark36")]
    Remark36 { lambda0: f64 },
}

impl FamilyDescriptor {
    /// Parse either a JSON descriptor or the shorthand syntax
    /// `jacobi:0`, `qultra:0.5,0.25`, `remark28:0.05`, `remark36:0.6`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            return serde_json::from_str(text)
                .map_err(|e| Error::BadDescriptor(format!("{text}: {e}")));
        }
        let (name, args) = match text.split_once(':') {
            Some((n, a)) => (n, a),
            None => return Err(Error::BadDescriptor(format!("missing ':' in `{text}`"))),
        };
        let nums: Vec<f64> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::BadDescriptor(format!("bad number `{t}` in `{text}`")))
            })
            .collect::<Result<_>>()?;
        match (name, nums.as_slice()) {
            ("jacobi", [a]) => Ok(Self::Jacobi { alpha: *a }),
            ("qultra", [q, b]) => Ok(Self::QUltra { q: *q, beta: *b }),
            ("remark28", [e]) => Ok(Self::Remark28 { epsilon: *e }),
            ("remark36", [l]) => Ok(Self::Remark36 { lambda0: *l }),
            _ => Err(Error::BadDescriptor(format!("unknown shorthand `{text}`"))),
        }
    }

    /// Short label used in reports and file names.
    pub fn label(&self) -> String {
        match self {
            Self::Jacobi { alpha } => format!("jacobi:{alpha}"),
            Self::QUltra { q, beta } => format!("qultra:{q},{beta}"),
            Self::CustomTable { alphas } => format!("custom_table[{}]", alphas.len()),
            Self::Remark28 { epsilon } => format!("remark28:{epsilon}"),
            Self::Remark36 { lambda0 } => format!("remark36:{lambda0}"),
        }
    }

    /// Build the normalized scheme for this family.
    pub fn build(&self, max_n: usize) -> Result<RecurrenceScheme> {
        match self {
            Self::Jacobi { alpha } => RecurrenceScheme::jacobi_with_max(*alpha, max_n),
            Self::QUltra { q, beta } => RecurrenceScheme::q_ultra_with_max(*q, *beta, max_n),
            Self::CustomTable { alphas } => RecurrenceScheme::custom_table(alphas.clone()),
            Self::Remark28 { epsilon } => RecurrenceScheme::remark28_with_max(*epsilon, max_n),
            Self::Remark36 { lambda0 } => {
                let lam = OrthonormalScheme::remark36_with_max(*lambda0, max_n + 1)?;
                let mut s = lam.to_scheme()?;
                s.descriptor = self.clone();
                Ok(s)
            }
        }
    }

    /// Build the orthonormal scheme for this family.
    pub fn build_orthonormal(&self, max_n: usize) -> Result<OrthonormalScheme> {
        match self {
            Self::QUltra { q, beta } => {
                OrthonormalScheme::q_ultra_with_max(*q, *beta, max_n)
            }
            Self::Remark36 { lambda0 } => OrthonormalScheme::remark36_with_max(*lambda0, max_n),
            _ => {
                let s = self.build(max_n + 1)?;
                let mut lam = s.to_orthonormal()?;
                if matches!(self, Self::Jacobi { .. } | Self::Remark28 { .. }) {
                    lam.limit_l = Some(0.5);
                }
                Ok(lam)
            }
        }
    }
}

/// A symmetric family given by normalized recurrence coefficients:
/// `x p_n = gamma_n p_{n+1} + alpha_n p_{n-1}`, `alpha_n + gamma_n = 1`
/// for `n >= 1`, `alpha_0 = 0`, `0 < gamma_0 <= 1`.
#[derive(Debug, Clone)]
pub struct RecurrenceScheme {
    descriptor: FamilyDescriptor,
    alpha: Vec<f64>,
    gamma: Vec<f64>,
    max_n: usize,
}

impl RecurrenceScheme {
    /// Symmetric Jacobi: `gamma_n = (n+2a+1)/(2n+2a+1)`, `alpha_n = n/(2n+2a+1)`.
    ///
    /// The `n = 0` entry is always `(alpha_0, gamma_0) = (0, 1)`; for
    /// `a = -1/2` (Chebyshev T) the formula gives 0/0 there and this is the
    /// standing interpretation.
    pub fn jacobi(a: f64) -> Result<Self> {
        Self::jacobi_with_max(a, DEFAULT_MAX_N)
    }

    pub fn jacobi_with_max(a: f64, max_n: usize) -> Result<Self> {
        if !(a > -1.0) {
            return Err(Error::InvalidParameter(format!(
                "jacobi alpha must be > -1 (weight not integrable), got {a}"
            )));
        }
        let mut alpha = Vec::with_capacity(max_n + 1);
        let mut gamma = Vec::with_capacity(max_n + 1);
        alpha.push(0.0);
        gamma.push(1.0);
        for n in 1..=max_n {
            // form numerator/denominator before dividing
            let nf = n as f64;
            let den = 2.0 * nf + 2.0 * a + 1.0;
            alpha.push(nf / den);
            gamma.push((nf + 2.0 * a + 1.0) / den);
        }
        let s = Self {
            descriptor: FamilyDescriptor::Jacobi { alpha: a },
            alpha,
            gamma,
            max_n,
        };
        s.validate()?;
        Ok(s)
    }

    /// Continuous q-ultraspherical, via the orthonormal coefficients and
    /// the alpha-recursion `alpha_{n+1} = lambda_n^2 / (1 - alpha_n)`.
    pub fn q_ultra(q: f64, beta: f64) -> Result<Self> {
        Self::q_ultra_with_max(q, beta, DEFAULT_MAX_N)
    }

    pub fn q_ultra_with_max(q: f64, beta: f64, max_n: usize) -> Result<Self> {
        let lam = OrthonormalScheme::q_ultra_with_max(q, beta, max_n + 1)?;
        let mut s = lam.to_scheme()?;
        s.descriptor = FamilyDescriptor::QUltra { q, beta };
        Ok(s)
    }

    /// The counterexample family of increasing concave alphas
    /// `(0, 1/2-3e, 1/2-2e, 1/2-e, 1/2, 1/2, ...)`, `0 < e < 1/8`.
    pub fn remark28(epsilon: f64) -> Result<Self> {
        Self::remark28_with_max(epsilon, DEFAULT_MAX_N)
    }

    pub fn remark28_with_max(epsilon: f64, max_n: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.125) {
            return Err(Error::InvalidParameter(format!(
                "remark28 epsilon must lie in (0, 1/8), got {epsilon}"
            )));
        }
        let alphas: Vec<f64> = (0..=max_n)
            .map(|n| match n {
                0 => 0.0,
                1 => 0.5 - 3.0 * epsilon,
                2 => 0.5 - 2.0 * epsilon,
                3 => 0.5 - epsilon,
                _ => 0.5,
            })
            .collect();
        let gamma = normalized_gammas(&alphas);
        let s = Self {
            descriptor: FamilyDescriptor::Remark28 { epsilon },
            alpha: alphas,
            gamma,
            max_n,
        };
        s.validate()?;
        Ok(s)
    }

    /// Scheme from an explicit alpha table `alpha_0..alpha_N`; coefficient
    /// access beyond the table is an error, never extrapolation.
    pub fn custom_table(alphas: Vec<f64>) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::InvalidParameter(
                "custom table needs at least alpha_0, alpha_1".into(),
            ));
        }
        let max_n = alphas.len() - 1;
        let gamma = normalized_gammas(&alphas);
        let s = Self {
            descriptor: FamilyDescriptor::CustomTable { alphas: alphas.clone() },
            alpha: alphas,
            gamma,
            max_n,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.alpha[0] != 0.0 {
            return Err(Error::InvalidParameter(format!(
                "alpha_0 must be 0, got {}",
                self.alpha[0]
            )));
        }
        if !(self.gamma[0] > 0.0 && self.gamma[0] <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma_0 must lie in (0,1], got {}",
                self.gamma[0]
            )));
        }
        for n in 1..=self.max_n {
            let (a, g) = (self.alpha[n], self.gamma[n]);
            if !(a > 0.0 && g > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "alpha_{n} = {a}, gamma_{n} = {g} must both be positive"
                )));
            }
            if (a + g - 1.0).abs() >= 1e-14 {
                return Err(Error::InvalidParameter(format!(
                    "alpha_{n} + gamma_{n} - 1 = {:e}",
                    a + g - 1.0
                )));
            }
        }
        Ok(())
    }

    pub fn descriptor(&self) -> &FamilyDescriptor {
        &self.descriptor
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn is_normalized(&self) -> bool {
        self.gamma[0] == 1.0
    }

    pub fn alpha(&self, n: usize) -> f64 {
        self.alpha[n]
    }

    pub fn gamma(&self, n: usize) -> f64 {
        self.gamma[n]
    }

    /// Checked access, for callers driven by external input.
    pub fn try_alpha(&self, n: usize) -> Result<f64> {
        self.check_n(n)?;
        Ok(self.alpha[n])
    }

    pub fn try_gamma(&self, n: usize) -> Result<f64> {
        self.check_n(n)?;
        Ok(self.gamma[n])
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::IndexOutOfRange { index: n, max_n: self.max_n })
        } else {
            Ok(())
        }
    }

    pub fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.gamma[0]))
        }
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alpha
    }

    /// `lambda_n = sqrt(alpha_{n+1} gamma_n)` for `n <= max_n - 1`.
    pub fn to_orthonormal(&self) -> Result<OrthonormalScheme> {
        let lambda: Vec<f64> = (0..self.max_n)
            .map(|n| (self.alpha[n + 1] * self.gamma[n]).sqrt())
            .collect();
        OrthonormalScheme::from_table(lambda, None)
    }
}

fn normalized_gammas(alphas: &[f64]) -> Vec<f64> {
    let mut g = vec![1.0];
    g.extend(alphas[1..].iter().map(|a| 1.0 - a));
    g
}

/// Off-diagonal entries of a symmetric Jacobi matrix:
/// `x P_n = lambda_n P_{n+1} + lambda_{n-1} P_{n-1}`.
#[derive(Debug, Clone)]
pub struct OrthonormalScheme {
    lambda: Vec<f64>,
    /// Limit (or sup) of the lambda sequence, when known.
    pub limit_l: Option<f64>,
    max_n: usize,
}

impl OrthonormalScheme {
    pub fn from_table(lambda: Vec<f64>, limit_l: Option<f64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidParameter("empty lambda table".into()));
        }
        if let Some(&bad) = lambda.iter().find(|l| !(**l > 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "lambda entries must be positive, got {bad}"
            )));
        }
        let max_n = lambda.len() - 1;
        Ok(Self { lambda, limit_l, max_n })
    }

    /// q-ultraspherical orthonormal coefficients
    /// `lambda_n = (1/2) sqrt((1-q^{n+1})(1-b^2 q^n) / ((1-b q^n)(1-b q^{n+1})))`.
    pub fn q_ultra(q: f64, beta: f64) -> Result<Self> {
        Self::q_ultra_with_max(q, beta, DEFAULT_MAX_N)
    }

    pub fn q_ultra_with_max(q: f64, beta: f64, max_n: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&q) || !(0.0..1.0).contains(&beta) {
            return Err(Error::InvalidParameter(format!(
                "q-ultraspherical needs q, beta in [0,1), got q={q}, beta={beta}"
            )));
        }
        let mut lambda = Vec::with_capacity(max_n + 1);
        let mut qn = 1.0_f64; // q^n
        for _ in 0..=max_n {
            let qn1 = qn * q;
            let num = (1.0 - qn1) * (1.0 - beta * beta * qn);
            let den = (1.0 - beta * qn) * (1.0 - beta * qn1);
            lambda.push(0.5 * (num / den).sqrt());
            qn = qn1;
        }
        Self::from_table(lambda, Some(0.5))
    }

    /// `lambda_0 in (1/2, 1/sqrt 2)`, `lambda_n = 1/2` afterwards.
    pub fn remark36(lambda0: f64) -> Result<Self> {
        Self::remark36_with_max(lambda0, DEFAULT_MAX_N)
    }

    pub fn remark36_with_max(lambda0: f64, max_n: usize) -> Result<Self> {
        if !(lambda0 > 0.5 && lambda0 < std::f64::consts::FRAC_1_SQRT_2) {
            return Err(Error::InvalidParameter(format!(
                "remark36 lambda0 must lie in (1/2, 1/sqrt 2), got {lambda0}"
            )));
        }
        let mut lambda = vec![0.5; max_n + 1];
        lambda[0] = lambda0;
        Self::from_table(lambda, Some(0.5))
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn lambda(&self, n: usize) -> f64 {
        self.lambda[n]
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambda
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::IndexOutOfRange { index: n, max_n: self.max_n })
        } else {
            Ok(())
        }
    }

    /// Sup of the table, used as a stand-in for the limit when none is known.
    pub fn sup_lambda(&self) -> f64 {
        self.lambda.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Recover the normalized scheme through
    /// `alpha_{n+1} = lambda_n^2 / (1 - alpha_n)`, `alpha_0 = 0`, `gamma_0 = 1`.
    ///
    /// Reports the first `n` where `alpha_n` leaves (0,1), which signals a
    /// lambda sequence outside the admissible cone.
    pub fn to_scheme(&self) -> Result<RecurrenceScheme> {
        let mut alpha = Vec::with_capacity(self.max_n + 2);
        alpha.push(0.0);
        for n in 0..=self.max_n {
            let l = self.lambda[n];
            let next = l * l / (1.0 - alpha[n]);
            if !(next > 0.0 && next < 1.0) {
                return Err(Error::AlphaOutOfCone { n: n + 1, alpha: next });
            }
            alpha.push(next);
        }
        let gamma = normalized_gammas(&alpha);
        let max_n = alpha.len() - 1;
        let s = RecurrenceScheme {
            descriptor: FamilyDescriptor::CustomTable { alphas: alpha.clone() },
            alpha,
            gamma,
            max_n,
        };
        s.validate()?;
        Ok(s)
    }
}

/// Pointwise sequence property used in theorem hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqProperty {
    /// Non-decreasing.
    Increasing,
    /// Non-increasing.
    Decreasing,
    /// `s_n - s_{n-1} >= s_{n+1} - s_n`.
    Concave,
    /// `s_n - s_{n-1} >= s_n/(1-s_n) (s_{n+1} - s_n)`, `n >= 1`
    /// (equivalently `s_n (1-s_{n+1})` non-decreasing).
    QConcave,
    /// The reversed inequality, checked for `n >= 2`.
    QConcave2,
    /// `s_n <= 1/2`.
    BoundedByHalf,
    /// `s_n >= 1/2`.
    AtLeastHalf,
}

/// Outcome of a finite sequence-property check. A property is only ever
/// claimed up to the checked bound, never for all `n`.
#[derive(Debug, Clone, Serialize)]
pub struct SequenceVerdict {
    pub property: SeqProperty,
    pub checked_up_to: usize,
    pub holds: bool,
    /// First index with a negative margin, and that margin.
    pub first_violation: Option<(usize, f64)>,
    /// Smallest margin seen (>= 0 when the property holds exactly).
    pub min_margin: f64,
}

/// Slack allowed on property margins; built-in tables are exact rationals
/// but derived alpha recursions carry a few ulps of rounding.
const PROPERTY_SLACK: f64 = 1e-13;

/// Evaluate `property` pointwise on `seq[start..=n_limit]`.
///
/// `start` picks the first index the property quantifies over: hypotheses
/// on `(alpha_n)_{n>=1}` (e.g. decreasing with `alpha_0 = 0`) use
/// `start = 1`, global ones use `start = 0`.
pub fn check_sequence_property(
    seq: &[f64],
    property: SeqProperty,
    start: usize,
    n_limit: usize,
) -> SequenceVerdict {
    let n_limit = n_limit.min(seq.len().saturating_sub(1));
    let mut min_margin = f64::INFINITY;
    let mut first_violation = None;
    let mut record = |n: usize, margin: f64| {
        if margin < min_margin {
            min_margin = margin;
        }
        if margin < -PROPERTY_SLACK && first_violation.is_none() {
            first_violation = Some((n, margin));
        }
    };
    match property {
        SeqProperty::Increasing => {
            for n in start..n_limit {
                record(n, seq[n + 1] - seq[n]);
            }
        }
        SeqProperty::Decreasing => {
            for n in start..n_limit {
                record(n, seq[n] - seq[n + 1]);
            }
        }
        SeqProperty::Concave => {
            for n in (start.max(1))..n_limit {
                record(n, (seq[n] - seq[n - 1]) - (seq[n + 1] - seq[n]));
            }
        }
        SeqProperty::QConcave => {
            for n in (start.max(1))..n_limit {
                let ratio = seq[n] / (1.0 - seq[n]);
                record(n, (seq[n] - seq[n - 1]) - ratio * (seq[n + 1] - seq[n]));
            }
        }
        SeqProperty::QConcave2 => {
            for n in (start.max(2))..n_limit {
                let ratio = seq[n] / (1.0 - seq[n]);
                record(n, ratio * (seq[n + 1] - seq[n]) - (seq[n] - seq[n - 1]));
            }
        }
        SeqProperty::BoundedByHalf => {
            for n in start..=n_limit {
                record(n, 0.5 - seq[n]);
            }
        }
        SeqProperty::AtLeastHalf => {
            for n in start..=n_limit {
                record(n, seq[n] - 0.5);
            }
        }
    }
    if !min_margin.is_finite() {
        min_margin = 0.0;
    }
    SequenceVerdict {
        property,
        checked_up_to: n_limit,
        holds: first_violation.is_none(),
        first_violation,
        min_margin,
    }
}

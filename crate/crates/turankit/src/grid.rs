//! Abscissa grids used by the scans.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    Uniform,
    Chebyshev,
}

impl std::str::FromStr for Spacing {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Self::Uniform),
            "chebyshev" => Ok(Self::Chebyshev),
            other => Err(format!("unknown spacing `{other}` (uniform|chebyshev)")),
        }
    }
}

/// `count` points strictly inside (-1, 1).
pub fn interior_grid(count: usize, spacing: Spacing) -> Vec<f64> {
    match spacing {
        Spacing::Uniform => {
            let step = 2.0 / (count as f64 + 1.0);
            (1..=count).map(|k| -1.0 + k as f64 * step).collect()
        }
        Spacing::Chebyshev => (0..count)
            .map(|k| {
                (std::f64::consts::PI * (2.0 * k as f64 + 1.0) / (2.0 * count as f64)).cos()
            })
            .rev()
            .collect(),
    }
}

/// `count` points strictly inside (0, 1), increasing.
pub fn unit_grid(count: usize, spacing: Spacing) -> Vec<f64> {
    interior_grid(2 * count + 1, spacing)
        .into_iter()
        .filter(|&x| x > 0.0)
        .collect()
}

/// Grid for infimum scans of `P_n^2 + P_{n-1}^2`: Chebyshev-spaced points
/// on [0, 1] enriched with the near-boundary points `cos(k/N)`, `k = 1..10`,
/// so angles reach down to about `1/N`.
pub fn lb_grid(count: usize, n_max: usize) -> Vec<f64> {
    let mut g: Vec<f64> = (0..count)
        .map(|k| {
            let t = (std::f64::consts::PI * (2.0 * k as f64 + 1.0) / (2.0 * count as f64)).cos();
            0.5 * (t + 1.0)
        })
        .collect();
    for k in 1..=10 {
        g.push((k as f64 / n_max as f64).cos());
    }
    g.sort_by(|a, b| a.partial_cmp(b).unwrap());
    g.dedup();
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_grids_stay_interior() {
        for spacing in [Spacing::Uniform, Spacing::Chebyshev] {
            let g = interior_grid(201, spacing);
            assert_eq!(g.len(), 201);
            assert!(g.iter().all(|&x| x > -1.0 && x < 1.0));
            assert!(g.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn uniform_grid_is_symmetric() {
        let g = interior_grid(11, Spacing::Uniform);
        assert!((g[5] - 0.0).abs() < 1e-15);
        assert!((g[0] + g[10]).abs() < 1e-15);
    }

    #[test]
    fn lb_grid_reaches_boundary_region() {
        let g = lb_grid(100, 400);
        assert!(g.iter().all(|&x| (0.0..=1.0).contains(&x)));
        let closest = g.iter().cloned().fold(0.0_f64, f64::max);
        assert!(closest >= (1.0_f64 / 400.0).cos());
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScalingModel {
    KLnK,
    KSquared,
    NK,
    KSquaredLnK,
}

impl ScalingModel {
    pub fn predictor(self, n: usize, k: usize) -> f64 {
        let (n, k) = (n as f64, k as f64);
        match self {
            ScalingModel::KLnK => k * k.ln(),
            ScalingModel::KSquared => k * k,
            ScalingModel::NK => n * k,
            ScalingModel::KSquaredLnK => k * k * k.ln(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub k: usize,
    pub median_iterations: f64,
}

/// Descriptive fit of `median ~ c * predictor(n, k)`. Not a test verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingReport {
    pub model: ScalingModel,
    /// Least-squares `c` for a line through the origin.
    pub constant: f64,
    /// `median - c * predictor`, per point.
    pub residuals: Vec<f64>,
    /// Root mean square of `residual / median`.
    pub relative_rms: f64,
    /// Slope of `ln(median)` against `ln(k)`.
    pub log_log_slope: f64,
    /// Set when the medians barely grow with `k` (`|slope| < 0.1`).
    pub flat: bool,
}

pub fn fit_scaling(points: &[ScalingPoint], model: ScalingModel) -> Result<ScalingReport> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: points.len(),
        });
    }
    let xs: Vec<f64> = points.iter().map(|p| model.predictor(p.n, p.k)).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.median_iterations).collect();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
    let constant = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let residuals: Vec<f64> = xs.iter().zip(&ys).map(|(x, y)| y - constant * x).collect();
    let relative_rms = (residuals
        .iter()
        .zip(&ys)
        .map(|(r, y)| if *y != 0.0 { (r / y).powi(2) } else { 0.0 })
        .sum::<f64>()
        / ys.len() as f64)
        .sqrt();

    let lx: Vec<f64> = points.iter().map(|p| (p.k as f64).ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.max(1.0).ln()).collect();
    let mx = lx.iter().sum::<f64>() / lx.len() as f64;
    let my = ly.iter().sum::<f64>() / ly.len() as f64;
    let cov: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let log_log_slope = if var > 0.0 { cov / var } else { 0.0 };

    Ok(ScalingReport {
        model,
        constant,
        residuals,
        relative_rms,
        log_log_slope,
        flat: log_log_slope.abs() < 0.1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(data: &[(usize, f64)]) -> Vec<ScalingPoint> {
        data.iter()
            .map(|&(k, m)| ScalingPoint {
                n: k,
                k,
                median_iterations: m,
            })
            .collect()
    }

    #[test]
    fn exact_model_has_zero_residuals() {
        let data: Vec<_> = [8usize, 16, 32, 64]
            .iter()
            .map(|&k| (k, 3.0 * k as f64 * (k as f64).ln()))
            .collect();
        let r = fit_scaling(&pts(&data), ScalingModel::KLnK).unwrap();
        assert!((r.constant - 3.0).abs() < 1e-9);
        assert!(r.residuals.iter().all(|e| e.abs() < 1e-6));
        assert!(!r.flat);
    }

    #[test]
    fn constant_series_is_flagged_flat() {
        let r = fit_scaling(
            &pts(&[(1, 7.0), (2, 7.0), (3, 7.0)]),
            ScalingModel::KSquared,
        )
        .unwrap();
        assert!(r.flat);
        assert!(r.log_log_slope.abs() < 1e-12);
    }

    #[test]
    fn too_few_points() {
        assert!(matches!(
            fit_scaling(&pts(&[(1, 1.0), (2, 2.0)]), ScalingModel::NK),
            Err(Error::TooFewPoints { needed: 3, got: 2 })
        ));
    }
}

//! Reference model: ordinary least squares of scene temperature on station
//! temperature, hour by hour.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BaselineError {
    #[error("need at least 2 pairs, got {0}")]
    TooFewPoints(usize),
    #[error("station temperatures have zero variance")]
    DegenerateX,
    #[error("non-finite pair at index {0}")]
    NonFinite(usize),
}

impl BaselineError {
    pub fn code(&self) -> &'static str {
        match self {
            BaselineError::TooFewPoints(_) => "TooFewPoints",
            BaselineError::DegenerateX => "DegenerateX",
            BaselineError::NonFinite(_) => "NonFinite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearModel {
    pub slope: f64,
    pub intercept: f64,
    pub n: usize,
    #[serde(default)]
    pub r_sse: f64,
}

impl LinearModel {
    pub fn predict(&self, station_temp: f64) -> f64 {
        self.slope * station_temp + self.intercept
    }
}

pub fn predict_lm(model: &LinearModel, station_temp: f64) -> f64 {
    model.predict(station_temp)
}

/// Fits `scene ≈ slope·station + intercept` from `(station, scene)` pairs.
pub fn fit_lm(pairs: &[(f64, f64)]) -> Result<LinearModel, BaselineError> {
    let n = pairs.len();
    if n < 2 {
        return Err(BaselineError::TooFewPoints(n));
    }
    if let Some(i) = pairs.iter().position(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(BaselineError::NonFinite(i));
    }
    let nf = n as f64;
    let mean_x = pairs.iter().map(|p| p.0).sum::<f64>() / nf;
    let mean_y = pairs.iter().map(|p| p.1).sum::<f64>() / nf;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for &(x, y) in pairs {
        let dx = x - mean_x;
        sxx += dx * dx;
        sxy += dx * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(BaselineError::DegenerateX);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_sse = pairs.iter().map(|&(x, y)| (y - slope * x - intercept).powi(2)).sum();
    Ok(LinearModel { slope, intercept, n, r_sse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exact_line() {
        let m = fit_lm(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)]).unwrap();
        assert_eq!((m.slope, m.intercept, m.r_sse, m.n), (2.0, 1.0, 0.0, 3));
        assert_eq!(predict_lm(&m, 10.0), 21.0);
    }

    #[test]
    fn flat_response() {
        let m = fit_lm(&[(0.0, 5.0), (1.0, 5.0), (2.0, 5.0)]).unwrap();
        assert_eq!((m.slope, m.intercept), (0.0, 5.0));
        assert_eq!(m.predict(-40.0), 5.0);
    }

    #[test]
    fn errors() {
        assert_eq!(fit_lm(&[(1.0, 2.0)]).unwrap_err(), BaselineError::TooFewPoints(1));
        assert_eq!(fit_lm(&[(1.0, 2.0), (1.0, 3.0)]).unwrap_err(), BaselineError::DegenerateX);
        assert_eq!(fit_lm(&[(1.0, f64::NAN), (2.0, 3.0)]).unwrap_err(), BaselineError::NonFinite(0));
    }

    #[test]
    fn json_shape() {
        let m = LinearModel { slope: 0.5, intercept: 2.0, n: 10, r_sse: 1.5 };
        let v: serde_json::Value = serde_json::to_value(m).unwrap();
        assert_eq!(v["slope"], 0.5);
        assert_eq!(v["n"], 10);
        let bare: LinearModel = serde_json::from_str(r#"{"slope":1.0,"intercept":0.0,"n":2}"#).unwrap();
        assert_eq!(bare.r_sse, 0.0);
    }

    proptest! {
        #[test]
        fn residuals_sum_to_zero_and_order_is_irrelevant(
            pts in prop::collection::vec((-30.0..40.0f64, -30.0..40.0f64), 3..60)
        ) {
            prop_assume!(pts.iter().any(|p| (p.0 - pts[0].0).abs() > 1e-3));
            let m = fit_lm(&pts).unwrap();
            let resid: f64 = pts.iter().map(|&(x, y)| y - m.predict(x)).sum();
            prop_assert!(resid.abs() < 1e-9 * pts.len() as f64 * 40.0);

            let mut rev = pts.clone();
            rev.reverse();
            let r = fit_lm(&rev).unwrap();
            prop_assert!((r.slope - m.slope).abs() < 1e-9 && (r.intercept - m.intercept).abs() < 1e-9);
        }

        #[test]
        fn exact_lines_are_reproduced(slope in -3.0..3.0f64, icpt in -20.0..20.0f64, x in -30.0..40.0f64) {
            let pts: Vec<_> = (0..10).map(|i| { let xi = i as f64 * 2.5 - 5.0; (xi, slope * xi + icpt) }).collect();
            let m = fit_lm(&pts).unwrap();
            prop_assert!((m.predict(x) - (slope * x + icpt)).abs() < 1e-9);
        }
    }
}

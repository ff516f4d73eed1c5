//! Concurrent functional regression of scene curves on station curves.
//!
//! The model is `Y(t) = β0(t)·X(t) + β1(t)` with both coefficient functions
//! expanded in the same three-term Fourier basis as the data. The integrated
//! squared error over a day is discretised with trapezoidal weights on a
//! uniform grid, which turns the fit into a dense 6-unknown least-squares
//! problem.

use chrono::NaiveDate;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::{basis, DailyCurve, Fourier3};

#[derive(Debug, Error, PartialEq)]
pub enum MtmError {
    #[error("station and scene curves disagree on dates (first mismatch at position {0})")]
    DateMismatch(usize),
    #[error("need at least {needed} training days, got {got}")]
    TooFewDays { needed: usize, got: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("non-finite curve coefficients on {0}")]
    NonFinite(NaiveDate),
}

impl MtmError {
    pub fn code(&self) -> &'static str {
        match self {
            MtmError::DateMismatch(_) => "DateMismatch",
            MtmError::TooFewDays { .. } => "TooFewDays",
            MtmError::InvalidConfig(_) => "InvalidConfig",
            MtmError::NonFinite(_) => "NonFinite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MtmConfig {
    /// Number of uniform grid points on [0, 24], endpoints included.
    pub grid_points: usize,
    pub min_train_days: usize,
    /// Condition estimates above this are reported as ill-conditioned.
    pub condition_threshold: f64,
}

impl Default for MtmConfig {
    fn default() -> Self {
        Self { grid_points: 241, min_train_days: 2, condition_threshold: 1e6 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MtmModel {
    /// Multiplier function on the station curve.
    pub beta0: Fourier3,
    /// Additive offset function, in °C.
    pub beta1: Fourier3,
    pub n_train_days: usize,
    /// Integrated squared error over the training days, in °C²·h.
    pub sse: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MtmFitDiagnostics {
    /// Per training day: residuals `Y - β0·X - β1` on the grid.
    pub residual_curves: Vec<(NaiveDate, Vec<f64>)>,
    /// Ratio of extreme singular values of the weighted design matrix.
    pub condition_estimate: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MtmWarning {
    IllConditioned { condition: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MtmFit {
    pub model: MtmModel,
    pub diagnostics: MtmFitDiagnostics,
    pub warnings: Vec<MtmWarning>,
}

impl MtmModel {
    pub fn identity() -> Self {
        Self { beta0: Fourier3::constant(1.0), beta1: Fourier3::ZERO, n_train_days: 0, sse: 0.0 }
    }

    pub fn eval(&self, station: &Fourier3, t: f64) -> f64 {
        self.beta0.eval(t) * station.eval(t) + self.beta1.eval(t)
    }

    /// Scene temperatures at t = 0..23 for a smoothed station day.
    pub fn predict(&self, station_day: &Fourier3) -> [f64; 24] {
        std::array::from_fn(|h| self.eval(station_day, h as f64))
    }

    /// The six scalar unknowns `[β0; β1]`.
    pub fn coefficients(&self) -> [f64; 6] {
        let (b, c) = (self.beta0.to_array(), self.beta1.to_array());
        [b[0], b[1], b[2], c[0], c[1], c[2]]
    }
}

pub fn predict_mtm(model: &MtmModel, station_day: &Fourier3) -> [f64; 24] {
    model.predict(station_day)
}

/// Grid nodes on [0, 24] and their trapezoidal weights.
pub fn quadrature_grid(grid_points: usize) -> (Vec<f64>, Vec<f64>) {
    let h = 24.0 / (grid_points - 1) as f64;
    let nodes = (0..grid_points).map(|g| g as f64 * h).collect();
    let weights = (0..grid_points)
        .map(|g| if g == 0 || g == grid_points - 1 { h / 2.0 } else { h })
        .collect();
    (nodes, weights)
}

/// Pairs up the two curve lists by date, sorted, after validating them.
fn paired_days<'a>(
    station: &'a [DailyCurve],
    scene: &'a [DailyCurve],
    cfg: &MtmConfig,
) -> Result<Vec<(&'a DailyCurve, &'a DailyCurve)>, MtmError> {
    if cfg.grid_points < 3 {
        return Err(MtmError::InvalidConfig("grid_points must be at least 3".into()));
    }
    if station.len() != scene.len() {
        return Err(MtmError::DateMismatch(station.len().min(scene.len())));
    }
    let mut days: Vec<_> = station.iter().zip(scene).collect();
    days.sort_by_key(|(x, _)| x.date);
    for (i, (x, y)) in days.iter().enumerate() {
        if x.date != y.date || (i > 0 && days[i - 1].0.date == x.date) {
            return Err(MtmError::DateMismatch(i));
        }
        if !x.coeffs.is_finite() {
            return Err(MtmError::NonFinite(x.date));
        }
        if !y.coeffs.is_finite() {
            return Err(MtmError::NonFinite(y.date));
        }
    }
    let needed = cfg.min_train_days.max(1);
    if days.len() < needed {
        return Err(MtmError::TooFewDays { needed, got: days.len() });
    }
    Ok(days)
}

/// Row-weighted design matrix and response of the discretised problem.
/// Rows are `√w_g · [X_d(t_g)·φ(t_g), φ(t_g)]` for day d and node g.
pub fn stacked_system(
    station: &[DailyCurve],
    scene: &[DailyCurve],
    grid_points: usize,
) -> (DMatrix<f64>, DVector<f64>) {
    let (nodes, weights) = quadrature_grid(grid_points);
    let rows = station.len() * grid_points;
    let mut a = DMatrix::zeros(rows, 6);
    let mut b = DVector::zeros(rows);
    for (d, (x, y)) in station.iter().zip(scene).enumerate() {
        for (g, (&t, &w)) in nodes.iter().zip(&weights).enumerate() {
            let r = d * grid_points + g;
            let sw = w.sqrt();
            let phi = basis(t);
            let xv = x.coeffs.eval(t);
            for k in 0..3 {
                a[(r, k)] = sw * xv * phi[k];
                a[(r, 3 + k)] = sw * phi[k];
            }
            b[r] = sw * y.coeffs.eval(t);
        }
    }
    (a, b)
}

pub fn fit_mtm(
    station: &[DailyCurve],
    scene: &[DailyCurve],
    cfg: &MtmConfig,
) -> Result<MtmFit, MtmError> {
    let days = paired_days(station, scene, cfg)?;
    let (xs, ys): (Vec<DailyCurve>, Vec<DailyCurve>) = days.iter().map(|(x, y)| (**x, **y)).unzip();
    let (a, b) = stacked_system(&xs, &ys, cfg.grid_points);

    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    // rank-deficient systems fall back to the minimum-norm solution
    let coef = svd
        .solve(&b, smax * f64::EPSILON * a.nrows() as f64)
        .expect("svd was computed with both factors");

    let beta0 = Fourier3::new(coef[0], coef[1], coef[2]);
    let beta1 = Fourier3::new(coef[3], coef[4], coef[5]);

    let (nodes, weights) = quadrature_grid(cfg.grid_points);
    let mut sse = 0.0;
    let mut residual_curves = Vec::with_capacity(xs.len());
    for (x, y) in xs.iter().zip(&ys) {
        let res: Vec<f64> = nodes
            .iter()
            .map(|&t| y.coeffs.eval(t) - beta0.eval(t) * x.coeffs.eval(t) - beta1.eval(t))
            .collect();
        sse += res.iter().zip(&weights).map(|(r, w)| w * r * r).sum::<f64>();
        residual_curves.push((x.date, res));
    }

    let mut warnings = Vec::new();
    if !(condition <= cfg.condition_threshold) {
        warnings.push(MtmWarning::IllConditioned { condition: format!("{condition:.3e}") });
    }

    Ok(MtmFit {
        model: MtmModel { beta0, beta1, n_train_days: xs.len(), sse },
        diagnostics: MtmFitDiagnostics { residual_curves, condition_estimate: condition },
        warnings,
    })
}

/// On-disk form: `{ "beta0": [..3], "beta1": [..3], "n_train_days": n, "sse": s }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MtmModelFile {
    pub beta0: [f64; 3],
    pub beta1: [f64; 3],
    pub n_train_days: usize,
    pub sse: f64,
}

impl From<&MtmModel> for MtmModelFile {
    fn from(m: &MtmModel) -> Self {
        Self {
            beta0: m.beta0.to_array(),
            beta1: m.beta1.to_array(),
            n_train_days: m.n_train_days,
            sse: m.sse,
        }
    }
}

impl From<MtmModelFile> for MtmModel {
    fn from(f: MtmModelFile) -> Self {
        Self {
            beta0: Fourier3::from_array(f.beta0),
            beta1: Fourier3::from_array(f.beta1),
            n_train_days: f.n_train_days,
            sse: f.sse,
        }
    }
}

impl MtmModel {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&MtmModelFile::from(self)).expect("plain numbers serialise")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str::<MtmModelFile>(s).map(Into::into)
    }
}

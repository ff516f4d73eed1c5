//! Short-term reconstruction from a few hours of scene measurements.
//!
//! A single day's curve is chosen by maximum a posteriori search over a grid
//! of candidate curves. For each candidate the residual standard deviation
//! σ is scanned on its own grid, scoring
//!
//! ```text
//! log p(σ) + Σ_x log N(y_x − M(t_x); 0, σ),   p(σ) = N(σ; prior_mean, prior_sd)
//! ```
//!
//! and the best σ is kept. Other days are then obtained by multiplying each
//! coefficient by the station's day-over-day coefficient ratio
//! `h_i(j) = b_i(j) / b_i(0)`.

use std::cmp::Ordering;
use std::f64::consts::PI;

use chrono::NaiveDate;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{ConfigError, FlatConfig};
use crate::curves::{basis, DailyCurve, Fourier3};

#[derive(Debug, Error, PartialEq)]
pub enum StmError {
    #[error("no measurement points")]
    EmptyData,
    #[error("need at least 2 measurement points, got {0}")]
    TooFewPoints(usize),
    #[error("candidate grid is empty for this configuration")]
    EmptyGrid,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("measurement day {0} is not among the station curves")]
    MeasurementDayAbsent(NaiveDate),
    #[error("{0} is outside the ratio series")]
    DateOutOfRange(NaiveDate),
    #[error("non-finite measurement at t = {0}")]
    NonFinite(f64),
}

impl StmError {
    pub fn code(&self) -> &'static str {
        match self {
            StmError::EmptyData => "EmptyData",
            StmError::TooFewPoints(_) => "TooFewPoints",
            StmError::EmptyGrid => "EmptyGrid",
            StmError::InvalidConfig(_) => "InvalidConfig",
            StmError::MeasurementDayAbsent(_) => "MeasurementDayAbsent",
            StmError::DateOutOfRange(_) => "DateOutOfRange",
            StmError::NonFinite(_) => "NonFinite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StmConfig {
    /// Mean of the normal prior on σ, °C.
    pub prior_mean: f64,
    /// Standard deviation of the prior on σ, °C.
    pub prior_sd: f64,
    /// Candidate a0 lies strictly within `t_m ± a0_halfwidth`.
    pub a0_halfwidth: f64,
    pub a0_step: f64,
    /// Candidate amplitudes satisfy `sqrt(a1² + a2²) < amp_max`.
    pub amp_max: f64,
    /// Grid step for a1 and a2.
    pub a_step: f64,
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub sigma_step: f64,
    /// Mean station temperature for the case, °C.
    pub t_m: f64,
}

impl Default for StmConfig {
    fn default() -> Self {
        Self {
            prior_mean: 1.0,
            prior_sd: 0.75,
            a0_halfwidth: 5.0,
            a0_step: 0.25,
            amp_max: 20.0,
            a_step: 0.25,
            sigma_min: 0.05,
            sigma_max: 5.0,
            sigma_step: 0.01,
            t_m: 0.0,
        }
    }
}

impl StmConfig {
    pub const KEYS: [&'static str; 10] = [
        "prior_mean",
        "prior_sd",
        "a0_halfwidth",
        "a0_step",
        "amp_max",
        "a_step",
        "sigma_min",
        "sigma_max",
        "sigma_step",
        "t_m",
    ];

    pub fn with_t_m(self, t_m: f64) -> Self {
        Self { t_m, ..self }
    }

    /// Amplitude grid stepping 0.01 °C. Roughly 10⁸ candidates at the default bounds.
    pub fn fine_amplitude_grid(self) -> Self {
        Self { a_step: 0.01, ..self }
    }

    /// Overrides fields present in `cfg`; other keys are left for the caller.
    pub fn apply(&mut self, cfg: &FlatConfig) -> Result<(), ConfigError> {
        cfg.update("prior_mean", &mut self.prior_mean)?;
        cfg.update("prior_sd", &mut self.prior_sd)?;
        cfg.update("a0_halfwidth", &mut self.a0_halfwidth)?;
        cfg.update("a0_step", &mut self.a0_step)?;
        cfg.update("amp_max", &mut self.amp_max)?;
        cfg.update("a_step", &mut self.a_step)?;
        cfg.update("sigma_min", &mut self.sigma_min)?;
        cfg.update("sigma_max", &mut self.sigma_max)?;
        cfg.update("sigma_step", &mut self.sigma_step)?;
        cfg.update("t_m", &mut self.t_m)?;
        Ok(())
    }

    pub fn validate(&self) -> Result<(), StmError> {
        let positive = [
            ("prior_sd", self.prior_sd),
            ("a0_step", self.a0_step),
            ("a_step", self.a_step),
            ("amp_max", self.amp_max),
            ("sigma_min", self.sigma_min),
            ("sigma_step", self.sigma_step),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(StmError::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        for (name, v) in [("prior_mean", self.prior_mean), ("t_m", self.t_m), ("a0_halfwidth", self.a0_halfwidth)] {
            if !v.is_finite() {
                return Err(StmError::InvalidConfig(format!("{name} must be finite")));
            }
        }
        if !(self.sigma_max >= self.sigma_min) || !self.sigma_max.is_finite() {
            return Err(StmError::InvalidConfig("sigma_max must be at least sigma_min".into()));
        }
        Ok(())
    }

    /// σ values `sigma_min + k·sigma_step` up to `sigma_max`.
    pub fn sigma_values(&self) -> Vec<f64> {
        let n = ((self.sigma_max - self.sigma_min) / self.sigma_step + 1e-9).floor() as usize;
        (0..=n).map(|k| self.sigma_min + k as f64 * self.sigma_step).collect()
    }

    /// a0 values `t_m + k·a0_step` strictly inside `t_m ± a0_halfwidth`, ascending.
    pub fn a0_values(&self) -> Vec<f64> {
        let kmax = (self.a0_halfwidth / self.a0_step).floor() as i64;
        (-kmax..=kmax)
            .map(|k| k as f64 * self.a0_step)
            .filter(|off| off.abs() < self.a0_halfwidth)
            .map(|off| self.t_m + off)
            .collect()
    }

    /// `(a1, a2)` pairs on the square lattice with amplitude strictly below
    /// `amp_max`, in lexicographic order.
    pub fn amplitude_pairs(&self) -> Vec<(f64, f64)> {
        let kmax = (self.amp_max / self.a_step).ceil() as i64;
        let limit = self.amp_max * self.amp_max;
        let axis: Vec<f64> = (-kmax..=kmax).map(|k| k as f64 * self.a_step).collect();
        let mut out = Vec::new();
        for &a1 in &axis {
            for &a2 in &axis {
                if a1 * a1 + a2 * a2 < limit {
                    out.push((a1, a2));
                }
            }
        }
        out
    }

    pub fn candidate_count(&self) -> usize {
        self.a0_values().len() * self.amplitude_pairs().len()
    }
}

fn log_normal_density(x: f64, mean: f64, sd: f64) -> f64 {
    let z = (x - mean) / sd;
    -0.5 * z * z - sd.ln() - 0.5 * (2.0 * PI).ln()
}

struct SigmaNode {
    sigma: f64,
    log_prior: f64,
    log_norm: f64,
    inv_two_var: f64,
}

/// Precomputed σ grid; the posterior of a candidate depends on the data
/// only through its residual sum of squares and the point count.
pub struct SigmaGrid {
    nodes: Vec<SigmaNode>,
}

impl SigmaGrid {
    pub fn new(cfg: &StmConfig) -> Self {
        let nodes = cfg
            .sigma_values()
            .into_iter()
            .map(|sigma| SigmaNode {
                sigma,
                log_prior: log_normal_density(sigma, cfg.prior_mean, cfg.prior_sd),
                log_norm: sigma.ln() + 0.5 * (2.0 * PI).ln(),
                inv_two_var: 0.5 / (sigma * sigma),
            })
            .collect();
        Self { nodes }
    }

    /// Best `(log posterior, σ)` for `n` residuals with sum of squares `sse`.
    /// Ties go to the smaller σ.
    pub fn best(&self, sse: f64, n: usize) -> SigmaScore {
        let nf = n as f64;
        let mut best = SigmaScore { log_posterior: f64::NEG_INFINITY, sigma: f64::NAN };
        for node in &self.nodes {
            let lp = node.log_prior - nf * node.log_norm - sse * node.inv_two_var;
            if lp > best.log_posterior {
                best = SigmaScore { log_posterior: lp, sigma: node.sigma };
            }
        }
        best
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaScore {
    pub log_posterior: f64,
    pub sigma: f64,
}

fn check_points(points: &[(f64, f64)]) -> Result<(), StmError> {
    if points.is_empty() {
        return Err(StmError::EmptyData);
    }
    match points.iter().find(|(t, y)| !t.is_finite() || !y.is_finite()) {
        Some(&(t, _)) => Err(StmError::NonFinite(t)),
        None => Ok(()),
    }
}

/// `(y, sin ωt, cos ωt)` per point.
fn prepare(points: &[(f64, f64)]) -> Vec<[f64; 3]> {
    points
        .iter()
        .map(|&(t, y)| {
            let [_, s, c] = basis(t);
            [y, s, c]
        })
        .collect()
}

fn sse(prepared: &[[f64; 3]], c: &Fourier3) -> f64 {
    prepared
        .iter()
        .map(|&[y, s, co]| {
            let r = y - c.a0 - c.a1 * s - c.a2 * co;
            r * r
        })
        .sum()
}

/// Maximum over the σ grid of the log posterior of one candidate curve.
pub fn score_candidate(
    points: &[(f64, f64)],
    candidate: &Fourier3,
    cfg: &StmConfig,
) -> Result<SigmaScore, StmError> {
    check_points(points)?;
    cfg.validate()?;
    let prepared = prepare(points);
    Ok(SigmaGrid::new(cfg).best(sse(&prepared, candidate), points.len()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StmDayFit {
    pub curve: Fourier3,
    pub map_sigma: f64,
    pub log_posterior: f64,
    /// Candidates whose score equals the maximum exactly.
    pub n_tied: usize,
    pub n_candidates: usize,
}

#[derive(Clone, Copy)]
struct Scored {
    lp: f64,
    sigma: f64,
    curve: Fourier3,
    ties: usize,
}

fn lexicographic(a: &Fourier3, b: &Fourier3) -> Ordering {
    a.a0.total_cmp(&b.a0)
        .then(a.a1.total_cmp(&b.a1))
        .then(a.a2.total_cmp(&b.a2))
}

/// Associative, commutative merge: higher score wins, equal scores keep the
/// lexicographically smallest curve and pool the tie count.
fn merge(a: Scored, b: Scored) -> Scored {
    match a.lp.total_cmp(&b.lp) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal => {
            let ties = a.ties + b.ties;
            let mut w = if lexicographic(&a.curve, &b.curve) == Ordering::Greater { b } else { a };
            w.ties = ties;
            w
        }
    }
}

/// Exhaustive MAP search over the candidate grid for one measurement day.
pub fn fit_stm_day(points: &[(f64, f64)], cfg: &StmConfig) -> Result<StmDayFit, StmError> {
    check_points(points)?;
    if points.len() < 2 {
        return Err(StmError::TooFewPoints(points.len()));
    }
    cfg.validate()?;
    let a0s = cfg.a0_values();
    let pairs = cfg.amplitude_pairs();
    if a0s.is_empty() || pairs.is_empty() || cfg.sigma_values().is_empty() {
        return Err(StmError::EmptyGrid);
    }

    let prepared = prepare(points);
    let grid = SigmaGrid::new(cfg);
    let n = points.len();

    let best = pairs
        .par_iter()
        .flat_map_iter(|&(a1, a2)| a0s.iter().map(move |&a0| Fourier3::new(a0, a1, a2)))
        .map(|curve| {
            let s = grid.best(sse(&prepared, &curve), n);
            Scored { lp: s.log_posterior, sigma: s.sigma, curve, ties: 1 }
        })
        .reduce_with(merge)
        .ok_or(StmError::EmptyGrid)?;

    Ok(StmDayFit {
        curve: best.curve,
        map_sigma: best.sigma,
        log_posterior: best.lp,
        n_tied: best.ties,
        n_candidates: a0s.len() * pairs.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioEntry {
    /// Day offset from the measurement day.
    pub j: i64,
    pub h: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioFallback {
    /// Coefficient index whose measurement-day value was too close to zero.
    pub coefficient: usize,
}

/// Day-over-day coefficient ratios relative to the measurement day.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSeries {
    pub measurement_date: NaiveDate,
    pub entries: Vec<RatioEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fallbacks: Vec<RatioFallback>,
}

impl RatioSeries {
    pub fn offset_of(&self, date: NaiveDate) -> i64 {
        (date - self.measurement_date).num_days()
    }

    pub fn get(&self, date: NaiveDate) -> Option<[f64; 3]> {
        let j = self.offset_of(date);
        self.entries.iter().find(|e| e.j == j).map(|e| e.h)
    }
}

/// Denominator thresholds below which a ratio falls back to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioEpsilon(pub [f64; 3]);

impl RatioEpsilon {
    pub fn for_mean_temp(t_m: f64) -> Self {
        Self([1e-6 * t_m.abs(), 1e-3, 1e-3])
    }
}

pub fn compute_ratios(
    station_curves: &[DailyCurve],
    measurement_date: NaiveDate,
    eps: RatioEpsilon,
) -> Result<RatioSeries, StmError> {
    let base = station_curves
        .iter()
        .find(|c| c.date == measurement_date)
        .ok_or(StmError::MeasurementDayAbsent(measurement_date))?
        .coeffs
        .to_array();
    let fallbacks: Vec<RatioFallback> = (0..3)
        .filter(|&i| !(base[i].abs() >= eps.0[i]) || base[i] == 0.0)
        .map(|coefficient| RatioFallback { coefficient })
        .collect();
    let use_ratio = |i: usize| !fallbacks.iter().any(|f| f.coefficient == i);

    let mut entries: Vec<RatioEntry> = station_curves
        .iter()
        .map(|c| {
            let j = (c.date - measurement_date).num_days();
            let b = c.coeffs.to_array();
            let h = std::array::from_fn(|i| {
                if j == 0 || !use_ratio(i) {
                    1.0
                } else {
                    b[i] / base[i]
                }
            });
            RatioEntry { j, h }
        })
        .collect();
    entries.sort_by_key(|e| e.j);
    entries.dedup_by_key(|e| e.j);
    Ok(RatioSeries { measurement_date, entries, fallbacks })
}

#[derive(Debug, Clone, PartialEq)]
pub struct StmModel {
    pub day0: DailyCurve,
    pub map_sigma: f64,
    pub log_posterior: f64,
    pub ratios: RatioSeries,
}

impl StmModel {
    pub fn new(measurement_date: NaiveDate, fit: &StmDayFit, ratios: RatioSeries) -> Self {
        Self {
            day0: DailyCurve::new(measurement_date, fit.curve),
            map_sigma: fit.map_sigma,
            log_posterior: fit.log_posterior,
            ratios,
        }
    }

    /// The propagated curve `h_i(j)·a_i(0)` for `date`.
    pub fn curve_for(&self, date: NaiveDate) -> Result<Fourier3, StmError> {
        let h = self.ratios.get(date).ok_or(StmError::DateOutOfRange(date))?;
        let a = self.day0.coeffs.to_array();
        Ok(Fourier3::new(h[0] * a[0], h[1] * a[1], h[2] * a[2]))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&StmModelFile::from(self)).expect("plain numbers serialise")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str::<StmModelFile>(s).map(Into::into)
    }
}

pub fn predict_stm(model: &StmModel, target_date: NaiveDate) -> Result<[f64; 24], StmError> {
    Ok(model.curve_for(target_date)?.hourly())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StmModelFile {
    pub measurement_date: NaiveDate,
    pub day0: Fourier3,
    pub map_sigma: f64,
    pub log_posterior: f64,
    pub ratios: Vec<RatioEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ratio_fallbacks: Vec<RatioFallback>,
}

impl From<&StmModel> for StmModelFile {
    fn from(m: &StmModel) -> Self {
        Self {
            measurement_date: m.day0.date,
            day0: m.day0.coeffs,
            map_sigma: m.map_sigma,
            log_posterior: m.log_posterior,
            ratios: m.ratios.entries.clone(),
            ratio_fallbacks: m.ratios.fallbacks.clone(),
        }
    }
}

impl From<StmModelFile> for StmModel {
    fn from(f: StmModelFile) -> Self {
        Self {
            day0: DailyCurve::new(f.measurement_date, f.day0),
            map_sigma: f.map_sigma,
            log_posterior: f.log_posterior,
            ratios: RatioSeries {
                measurement_date: f.measurement_date,
                entries: f.ratios,
                fallbacks: f.ratio_fallbacks,
            },
        }
    }
}

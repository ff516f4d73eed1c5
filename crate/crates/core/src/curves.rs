//! Three-term Fourier representation of a day of hourly temperatures.
//!
//! A day is the curve `a0 + a1 sin(ωt) + a2 cos(ωt)` with `ω = 2π/24` and
//! `t` in hours since midnight. Hourly means sit at the hour start.

use std::f64::consts::PI;
use std::io::{Read, Write};

use chrono::NaiveDate;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::HourlySeries;

/// Angular frequency of one cycle per day, in radians per hour.
pub const OMEGA: f64 = 2.0 * PI / 24.0;

pub const CURVE_HEADER: [&str; 4] = ["date", "a0", "a1", "a2"];

#[derive(Debug, Error, PartialEq)]
pub enum CurveError {
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("design matrix has rank below 3")]
    RankDeficient,
    #[error("non-finite input at t = {0}")]
    NonFinite(f64),
    #[error("no day has at least {min_hours} hourly points")]
    NoCompleteDays { min_hours: usize },
    #[error("curve csv: {0}")]
    Csv(String),
}

impl CurveError {
    pub fn code(&self) -> &'static str {
        match self {
            CurveError::TooFewPoints(_) => "TooFewPoints",
            CurveError::RankDeficient => "RankDeficient",
            CurveError::NonFinite(_) => "NonFinite",
            CurveError::NoCompleteDays { .. } => "NoCompleteDays",
            CurveError::Csv(_) => "Csv",
        }
    }
}

/// Coefficients of `a0 + a1 sin(ωt) + a2 cos(ωt)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Fourier3 {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
}

impl Fourier3 {
    pub const ZERO: Fourier3 = Fourier3 { a0: 0.0, a1: 0.0, a2: 0.0 };

    pub const fn new(a0: f64, a1: f64, a2: f64) -> Self {
        Self { a0, a1, a2 }
    }

    pub fn constant(level: f64) -> Self {
        Self::new(level, 0.0, 0.0)
    }

    pub fn from_array(c: [f64; 3]) -> Self {
        Self::new(c[0], c[1], c[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.a0, self.a1, self.a2]
    }

    pub fn get(&self, i: usize) -> f64 {
        self.to_array()[i]
    }

    /// Value at `t` hours; `t` is wrapped onto one day.
    pub fn eval(&self, t: f64) -> f64 {
        let [one, s, c] = basis(t);
        self.a0 * one + self.a1 * s + self.a2 * c
    }

    /// Values at the 24 hour starts of a day.
    pub fn hourly(&self) -> [f64; 24] {
        std::array::from_fn(|h| self.eval(h as f64))
    }

    pub fn amplitude(&self) -> f64 {
        self.a1.hypot(self.a2)
    }

    pub fn is_finite(&self) -> bool {
        self.a0.is_finite() && self.a1.is_finite() && self.a2.is_finite()
    }
}

/// `(1, sin ωt, cos ωt)` with `t` reduced modulo 24.
pub fn basis(t: f64) -> [f64; 3] {
    let x = OMEGA * t.rem_euclid(24.0);
    let (s, c) = x.sin_cos();
    [1.0, s, c]
}

pub fn eval_curve(curve: &Fourier3, t: f64) -> f64 {
    curve.eval(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DailyCurve {
    pub date: NaiveDate,
    #[serde(flatten)]
    pub coeffs: Fourier3,
}

impl DailyCurve {
    pub fn new(date: NaiveDate, coeffs: Fourier3) -> Self {
        Self { date, coeffs }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoothingDiagnostics {
    /// `(t, observed - fitted)` for every input point.
    pub residuals: Vec<(f64, f64)>,
    pub rmse: f64,
    pub n_points: usize,
}

impl SmoothingDiagnostics {
    pub fn sse(&self) -> f64 {
        self.residuals.iter().map(|(_, r)| r * r).sum()
    }
}

/// Least-squares projection of `(t, temp)` points onto the three-term basis,
/// solved by Householder QR of the n×3 design matrix.
pub fn smooth_day(points: &[(f64, f64)]) -> Result<(Fourier3, SmoothingDiagnostics), CurveError> {
    let n = points.len();
    if n < 3 {
        return Err(CurveError::TooFewPoints(n));
    }
    if let Some(&(t, _)) = points.iter().find(|(t, y)| !t.is_finite() || !y.is_finite()) {
        return Err(CurveError::NonFinite(t));
    }

    let design = DMatrix::from_fn(n, 3, |r, c| basis(points[r].0)[c]);
    let y = DVector::from_iterator(n, points.iter().map(|p| p.1));

    let qr = design.qr();
    let r = qr.r();
    let diag_max = (0..3).map(|i| r[(i, i)].abs()).fold(0.0, f64::max);
    let diag_min = (0..3).map(|i| r[(i, i)].abs()).fold(f64::INFINITY, f64::min);
    if diag_min <= 1e-10 * diag_max.max(1.0) {
        return Err(CurveError::RankDeficient);
    }
    let qty = qr.q().transpose() * &y;
    let coef = r.solve_upper_triangular(&qty).ok_or(CurveError::RankDeficient)?;
    let curve = Fourier3::new(coef[0], coef[1], coef[2]);

    let residuals: Vec<(f64, f64)> = points.iter().map(|&(t, v)| (t, v - curve.eval(t))).collect();
    let sse: f64 = residuals.iter().map(|(_, r)| r * r).sum();
    Ok((
        curve,
        SmoothingDiagnostics { residuals, rmse: (sse / n as f64).sqrt(), n_points: n },
    ))
}

/// A smoothed series plus the days that were skipped for being incomplete.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSet {
    pub curves: Vec<DailyCurve>,
    /// `(date, number of hourly points found)` for each skipped day.
    pub skipped: Vec<(NaiveDate, usize)>,
}

impl CurveSet {
    pub fn get(&self, date: NaiveDate) -> Option<&DailyCurve> {
        self.curves
            .binary_search_by_key(&date, |c| c.date)
            .ok()
            .map(|i| &self.curves[i])
    }
}

/// One curve per complete day, in date order.
pub fn curve_series(series: &HourlySeries, min_hours_per_day: usize) -> Result<CurveSet, CurveError> {
    let mut curves = Vec::new();
    let mut skipped = Vec::new();
    for (date, points) in series.by_day() {
        if points.len() < min_hours_per_day.max(3) {
            skipped.push((date, points.len()));
            continue;
        }
        let (coeffs, _) = smooth_day(&points)?;
        curves.push(DailyCurve { date, coeffs });
    }
    if curves.is_empty() {
        return Err(CurveError::NoCompleteDays { min_hours: min_hours_per_day });
    }
    Ok(CurveSet { curves, skipped })
}

pub fn write_curves_csv<W: Write>(curves: &[DailyCurve], writer: W) -> Result<(), CurveError> {
    let mut w = csv::Writer::from_writer(writer);
    let err = |e: csv::Error| CurveError::Csv(e.to_string());
    w.write_record(CURVE_HEADER).map_err(err)?;
    for c in curves {
        w.write_record([
            c.date.to_string(),
            c.coeffs.a0.to_string(),
            c.coeffs.a1.to_string(),
            c.coeffs.a2.to_string(),
        ])
        .map_err(err)?;
    }
    w.flush().map_err(|e| CurveError::Csv(e.to_string()))
}

pub fn read_curves_csv<R: Read>(reader: R) -> Result<Vec<DailyCurve>, CurveError> {
    let mut rdr = csv::Reader::from_reader(reader);
    let err = |e: csv::Error| CurveError::Csv(e.to_string());
    let header: Vec<String> = rdr.headers().map_err(err)?.iter().map(str::to_string).collect();
    if header != CURVE_HEADER {
        return Err(CurveError::Csv(format!("unexpected header {}", header.join(","))));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row.map_err(err)?;
        let bad = || CurveError::Csv(format!("row {}: malformed", i + 1));
        let date = NaiveDate::parse_from_str(row.get(0).ok_or_else(bad)?, "%Y-%m-%d").map_err(|_| bad())?;
        let mut c = [0.0; 3];
        for (k, slot) in c.iter_mut().enumerate() {
            *slot = row.get(k + 1).ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        }
        out.push(DailyCurve { date, coeffs: Fourier3::from_array(c) });
    }
    Ok(out)
}

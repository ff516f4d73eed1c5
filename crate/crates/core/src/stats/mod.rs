//! Checks of the coefficient-ratio assumption behind the short-term model:
//! ratio tables, paired t-tests between scene and station ratio sequences,
//! and one-way ANOVA across stations.

mod shapiro;
pub mod special;

use std::collections::BTreeMap;
use std::io::Write;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::DailyCurve;
use crate::stm::{compute_ratios, RatioEpsilon, RatioFallback, StmError};

pub use shapiro::{shapiro_wilk, ShapiroWilk};
pub use special::{beta_reg, f_upper_tail, ln_gamma, student_t_cdf, student_t_two_sided};

/// Ratio differences at or below this magnitude are treated as exact agreement.
pub const RATIO_TOLERANCE: f64 = 1e-9;

pub const DEFAULT_ALPHA: f64 = 0.05;

pub const REPORT_HEADER: [&str; 6] =
    ["test_kind", "location", "coefficient", "statistic", "p_value", "passed"];

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("need at least 2 paired values, got {0}")]
    TooFewPoints(usize),
    #[error("samples have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("all paired differences are equal")]
    ZeroVariance,
    #[error("need at least 2 groups with 2 values each")]
    TooFewGroups,
    #[error("within-group variance is zero")]
    ZeroWithinVariance,
    #[error("measurement day {0} is absent")]
    MeasurementDayAbsent(NaiveDate),
    #[error("curve sets cover different dates (`{0}`)")]
    DateRangeMismatch(String),
    #[error("non-finite input")]
    NonFinite,
    #[error("report csv: {0}")]
    Csv(String),
}

impl StatsError {
    pub fn code(&self) -> &'static str {
        match self {
            StatsError::TooFewPoints(_) => "TooFewPoints",
            StatsError::LengthMismatch(..) => "LengthMismatch",
            StatsError::ZeroVariance => "ZeroVariance",
            StatsError::TooFewGroups => "TooFewGroups",
            StatsError::ZeroWithinVariance => "ZeroWithinVariance",
            StatsError::MeasurementDayAbsent(_) => "MeasurementDayAbsent",
            StatsError::DateRangeMismatch(_) => "DateRangeMismatch",
            StatsError::NonFinite => "NonFinite",
            StatsError::Csv(_) => "Csv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AssumptionFlags {
    /// Shapiro–Wilk on the differences (t-test) or pooled residuals (ANOVA).
    pub normality: Option<ShapiroWilk>,
    /// Largest over smallest group variance (ANOVA only).
    pub variance_ratio: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub statistic: f64,
    pub p_value: f64,
    pub df: f64,
    /// Denominator degrees of freedom for F tests.
    pub df2: Option<f64>,
    pub assumption_flags: AssumptionFlags,
}

/// `rows[i][k]` is `coefficient_i(day) / coefficient_i(day0)` for `offsets[k]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioTable {
    pub day0: NaiveDate,
    pub offsets: Vec<i64>,
    pub rows: [Vec<f64>; 3],
    pub fallbacks: Vec<RatioFallback>,
}

impl RatioTable {
    pub fn cell(&self, coefficient: usize, offset: i64) -> Option<f64> {
        let k = self.offsets.iter().position(|&j| j == offset)?;
        Some(self.rows[coefficient][k])
    }

    /// Ratios for every day except day 0.
    pub fn sequence(&self, coefficient: usize) -> Vec<f64> {
        self.offsets
            .iter()
            .zip(&self.rows[coefficient])
            .filter(|(j, _)| **j != 0)
            .map(|(_, v)| *v)
            .collect()
    }
}

fn mean_level(curves: &[DailyCurve]) -> f64 {
    curves.iter().map(|c| c.coeffs.a0).sum::<f64>() / curves.len().max(1) as f64
}

pub fn ratio_table(curves: &[DailyCurve], day0: NaiveDate) -> Result<RatioTable, StatsError> {
    ratio_table_with(curves, day0, RatioEpsilon::for_mean_temp(mean_level(curves)))
}

pub fn ratio_table_with(
    curves: &[DailyCurve],
    day0: NaiveDate,
    eps: RatioEpsilon,
) -> Result<RatioTable, StatsError> {
    let series = compute_ratios(curves, day0, eps).map_err(|e| match e {
        StmError::MeasurementDayAbsent(d) => StatsError::MeasurementDayAbsent(d),
        _ => StatsError::NonFinite,
    })?;
    let offsets = series.entries.iter().map(|e| e.j).collect();
    let rows = std::array::from_fn(|i| series.entries.iter().map(|e| e.h[i]).collect());
    Ok(RatioTable { day0, offsets, rows, fallbacks: series.fallbacks })
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Two-sided paired t-test on `x - y`.
pub fn paired_t_test(x: &[f64], y: &[f64]) -> Result<TestResult, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch(x.len(), y.len()));
    }
    let n = x.len();
    if n < 2 {
        return Err(StatsError::TooFewPoints(n));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let md = mean(&d);
    let var = d.iter().map(|v| (v - md).powi(2)).sum::<f64>() / (n - 1) as f64;
    if var == 0.0 || d.iter().all(|&v| v == d[0]) {
        return Err(StatsError::ZeroVariance);
    }
    let t = md / (var / n as f64).sqrt();
    let df = (n - 1) as f64;
    Ok(TestResult {
        statistic: t,
        p_value: student_t_two_sided(t, df),
        df,
        df2: None,
        assumption_flags: AssumptionFlags { normality: shapiro_wilk(&d), variance_ratio: None },
    })
}

/// One-way ANOVA: `F = MS_between / MS_within` on (k−1, N−k) degrees of freedom.
pub fn one_way_anova(groups: &[Vec<f64>]) -> Result<TestResult, StatsError> {
    if groups.len() < 2 || groups.iter().any(|g| g.len() < 2) {
        return Err(StatsError::TooFewGroups);
    }
    if groups.iter().flatten().any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let k = groups.len();
    let total: usize = groups.iter().map(Vec::len).sum();
    let grand = groups.iter().flatten().sum::<f64>() / total as f64;
    let means: Vec<f64> = groups.iter().map(|g| mean(g)).collect();

    let ss_between: f64 = groups
        .iter()
        .zip(&means)
        .map(|(g, m)| g.len() as f64 * (m - grand).powi(2))
        .sum();
    let ss_within: f64 = groups
        .iter()
        .zip(&means)
        .map(|(g, m)| g.iter().map(|v| (v - m).powi(2)).sum::<f64>())
        .sum();
    if ss_within == 0.0 {
        return Err(StatsError::ZeroWithinVariance);
    }
    let df1 = (k - 1) as f64;
    let df2 = (total - k) as f64;
    let f = (ss_between / df1) / (ss_within / df2);

    let residuals: Vec<f64> = groups
        .iter()
        .zip(&means)
        .flat_map(|(g, m)| g.iter().map(move |v| v - m))
        .collect();
    let variances: Vec<f64> = groups
        .iter()
        .zip(&means)
        .map(|(g, m)| g.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (g.len() - 1) as f64)
        .collect();
    let vmax = variances.iter().cloned().fold(0.0, f64::max);
    let vmin = variances.iter().cloned().fold(f64::INFINITY, f64::min);

    Ok(TestResult {
        statistic: f,
        p_value: f_upper_tail(f, df1, df2),
        df: df1,
        df2: Some(df2),
        assumption_flags: AssumptionFlags {
            normality: shapiro_wilk(&residuals),
            variance_ratio: Some(if vmin > 0.0 { vmax / vmin } else { f64::INFINITY }),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestKind {
    PairedT,
    Anova,
}

impl TestKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TestKind::PairedT => "paired_t",
            TestKind::Anova => "anova",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestRow {
    pub test_kind: TestKind,
    pub location: String,
    pub coefficient: usize,
    pub result: TestResult,
    /// No significant difference at the report's α.
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioMae {
    pub location: String,
    pub coefficient: usize,
    pub mae: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssumptionReport {
    pub day0: NaiveDate,
    pub alpha: f64,
    pub ratio_mae: Vec<RatioMae>,
    pub tests: Vec<TestRow>,
}

impl AssumptionReport {
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), StatsError> {
        let err = |e: csv::Error| StatsError::Csv(e.to_string());
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(REPORT_HEADER).map_err(err)?;
        for row in &self.tests {
            w.write_record([
                row.test_kind.as_str().to_string(),
                row.location.clone(),
                row.coefficient.to_string(),
                row.result.statistic.to_string(),
                row.result.p_value.to_string(),
                row.passed.to_string(),
            ])
            .map_err(err)?;
        }
        w.flush().map_err(|e| StatsError::Csv(e.to_string()))
    }
}

fn dates(curves: &[DailyCurve]) -> Vec<NaiveDate> {
    let mut d: Vec<NaiveDate> = curves.iter().map(|c| c.date).collect();
    d.sort();
    d
}

fn snap(v: f64) -> f64 {
    if v.abs() <= RATIO_TOLERANCE {
        0.0
    } else {
        v
    }
}

/// Paired t-test on ratio sequences, treating exact agreement as no evidence
/// of a difference and a constant non-zero offset as decisive.
fn ratio_t_test(scene: &[f64], station: &[f64]) -> Result<TestResult, StatsError> {
    let diffs: Vec<f64> = scene.iter().zip(station).map(|(a, b)| snap(a - b)).collect();
    let zeros = vec![0.0; diffs.len()];
    match paired_t_test(&diffs, &zeros) {
        Err(StatsError::ZeroVariance) => {
            let d = diffs[0];
            Ok(TestResult {
                statistic: if d == 0.0 { 0.0 } else { d.signum() * f64::INFINITY },
                p_value: if d == 0.0 { 1.0 } else { 0.0 },
                df: (diffs.len() - 1) as f64,
                df2: None,
                assumption_flags: AssumptionFlags::default(),
            })
        }
        other => other,
    }
}

fn ratio_anova(groups: &[Vec<f64>]) -> Result<TestResult, StatsError> {
    match one_way_anova(groups) {
        Err(StatsError::ZeroWithinVariance) => {
            let first = &groups[0];
            let same = groups.iter().all(|g| g.iter().zip(first).all(|(a, b)| snap(a - b) == 0.0));
            let total: usize = groups.iter().map(Vec::len).sum();
            Ok(TestResult {
                statistic: if same { 0.0 } else { f64::INFINITY },
                p_value: if same { 1.0 } else { 0.0 },
                df: (groups.len() - 1) as f64,
                df2: Some((total - groups.len()) as f64),
                assumption_flags: AssumptionFlags::default(),
            })
        }
        other => other,
    }
}

/// Compares day-over-day coefficient ratios at each scene location against
/// the reference station (MAE and a paired t-test per coefficient), then
/// runs one ANOVA per coefficient across the reference and other stations.
pub fn assumption_report(
    scene_curve_sets: &BTreeMap<String, Vec<DailyCurve>>,
    station_curves: &[DailyCurve],
    other_station_curve_sets: &BTreeMap<String, Vec<DailyCurve>>,
    day0: NaiveDate,
    alpha: f64,
) -> Result<AssumptionReport, StatsError> {
    let reference = dates(station_curves);
    for (name, set) in scene_curve_sets.iter().chain(other_station_curve_sets) {
        if dates(set) != reference {
            return Err(StatsError::DateRangeMismatch(name.clone()));
        }
    }
    let station = ratio_table(station_curves, day0)?;

    let mut ratio_mae = Vec::new();
    let mut tests = Vec::new();
    for (location, curves) in scene_curve_sets {
        let scene = ratio_table(curves, day0)?;
        for i in 0..3 {
            let (a, b) = (scene.sequence(i), station.sequence(i));
            let mae = a.iter().zip(&b).map(|(x, y)| snap(x - y).abs()).sum::<f64>() / a.len().max(1) as f64;
            ratio_mae.push(RatioMae { location: location.clone(), coefficient: i, mae });
            let result = ratio_t_test(&a, &b)?;
            tests.push(TestRow {
                test_kind: TestKind::PairedT,
                location: location.clone(),
                coefficient: i,
                passed: result.p_value > alpha,
                result,
            });
        }
    }

    if !other_station_curve_sets.is_empty() {
        let mut tables = vec![station];
        for curves in other_station_curve_sets.values() {
            tables.push(ratio_table(curves, day0)?);
        }
        for i in 0..3 {
            let groups: Vec<Vec<f64>> = tables.iter().map(|t| t.sequence(i)).collect();
            let result = ratio_anova(&groups)?;
            tests.push(TestRow {
                test_kind: TestKind::Anova,
                location: "all_stations".into(),
                coefficient: i,
                passed: result.p_value > alpha,
                result,
            });
        }
    }

    Ok(AssumptionReport { day0, alpha, ratio_mae, tests })
}

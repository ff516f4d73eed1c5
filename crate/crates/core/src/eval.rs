//! Train/test evaluation of the reconstruction models.
//!
//! The test set is the oldest complete days; models are trained on the days
//! that follow. Every model is scored by mean absolute error against the
//! measured scene temperature at each test hour.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::io::Write;

use chrono::{NaiveDate, NaiveDateTime, Timelike};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::baseline::{fit_lm, LinearModel};
use crate::config::{ConfigError, FlatConfig};
use crate::curves::{smooth_day, DailyCurve, Fourier3};
use crate::ingest::{align, HourlySeries, IngestError, PairedHour, SplitSpec, DEFAULT_MIN_HOURS_PER_DAY};
use crate::mtm::{fit_mtm, MtmConfig, MtmFit, MtmModel};
use crate::stm::{compute_ratios, fit_stm_day, RatioEpsilon, StmConfig, StmDayFit, StmModel};

pub const REPORT_HEADER: [&str; 3] = ["duration_h", "model", "mae"];

#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("actual and predicted have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("no values to compare")]
    EmptyInput,
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("no test hours available")]
    NoTestData,
    #[error("durations must be positive and strictly increasing")]
    InvalidDurations,
    #[error("{0}")]
    Ingest(String),
    #[error("no prediction for test hour {0}")]
    MissingPrediction(NaiveDateTime),
    #[error("report: {0}")]
    Io(String),
}

impl EvalError {
    pub fn code(&self) -> &'static str {
        match self {
            EvalError::LengthMismatch(..) => "LengthMismatch",
            EvalError::EmptyInput => "EmptyInput",
            EvalError::InvalidSplit(_) => "InvalidSplit",
            EvalError::NoTestData => "NoTestData",
            EvalError::InvalidDurations => "InvalidDurations",
            EvalError::Ingest(_) => "Ingest",
            EvalError::MissingPrediction(_) => "MissingPrediction",
            EvalError::Io(_) => "Io",
        }
    }
}

impl From<IngestError> for EvalError {
    fn from(e: IngestError) -> Self {
        EvalError::Ingest(format!("{}: {e}", e.code()))
    }
}

/// `(1/n) Σ |actual_i − predicted_i|`.
pub fn mae(actual: &[f64], predicted: &[f64]) -> Result<f64, EvalError> {
    if actual.len() != predicted.len() {
        return Err(EvalError::LengthMismatch(actual.len(), predicted.len()));
    }
    if actual.is_empty() {
        return Err(EvalError::EmptyInput);
    }
    let total: f64 = actual.iter().zip(predicted).map(|(a, p)| (a - p).abs()).sum();
    Ok(total / actual.len() as f64)
}

/// Why a model produced no score: the originating error code and its message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFailure {
    pub code: &'static str,
    pub message: String,
}

impl ModelFailure {
    fn infeasible(message: String) -> Self {
        Self { code: "InfeasibleDuration", message }
    }
}

impl std::fmt::Display for ModelFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

macro_rules! failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for ModelFailure {
            fn from(e: $t) -> Self {
                Self { code: e.code(), message: e.to_string() }
            }
        }
    )*};
}

failure_from!(
    crate::baseline::BaselineError,
    crate::curves::CurveError,
    crate::mtm::MtmError,
    crate::stm::StmError
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Uncorrected,
    Lm,
    Mtm,
    Stm,
}

impl ModelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelKind::Uncorrected => "uncorrected",
            ModelKind::Lm => "lm",
            ModelKind::Mtm => "mtm",
            ModelKind::Stm => "stm",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepKind {
    /// Whole training days; rows for uncorrected, lm and mtm.
    Mtm,
    /// Hours of the first training day; rows for uncorrected, lm and stm.
    Stm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub n_test_days: usize,
    pub min_hours_per_day: usize,
    pub mtm: MtmConfig,
    /// `t_m` is replaced by the measurement day's mean station temperature.
    pub stm: StmConfig,
    pub stm_hours: usize,
    pub stm_start_hour: u32,
    /// Number of leading training days for LM and MTM; `None` uses all.
    pub train_days: Option<usize>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            n_test_days: 3,
            min_hours_per_day: DEFAULT_MIN_HOURS_PER_DAY,
            mtm: MtmConfig::default(),
            stm: StmConfig::default(),
            stm_hours: 5,
            stm_start_hour: 0,
            train_days: None,
        }
    }
}

impl EvalConfig {
    /// Keys read by [`EvalConfig::apply`], besides the STM keys.
    pub const KEYS: [&'static str; 8] = [
        "test_days",
        "min_hours",
        "train_days",
        "stm_hours",
        "stm_start_hour",
        "grid_points",
        "min_train_days",
        "condition_threshold",
    ];

    pub fn all_keys() -> Vec<&'static str> {
        Self::KEYS.iter().chain(StmConfig::KEYS.iter()).copied().collect()
    }

    /// Overrides fields present in `cfg` and rejects unknown keys.
    pub fn apply(&mut self, cfg: &FlatConfig) -> Result<(), ConfigError> {
        cfg.check_keys(&Self::all_keys())?;
        cfg.update("test_days", &mut self.n_test_days)?;
        cfg.update("min_hours", &mut self.min_hours_per_day)?;
        if let Some(d) = cfg.parse_value("train_days")? {
            self.train_days = Some(d);
        }
        cfg.update("stm_hours", &mut self.stm_hours)?;
        cfg.update("stm_start_hour", &mut self.stm_start_hour)?;
        cfg.update("grid_points", &mut self.mtm.grid_points)?;
        cfg.update("min_train_days", &mut self.mtm.min_train_days)?;
        cfg.update("condition_threshold", &mut self.mtm.condition_threshold)?;
        self.stm.apply(cfg)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelScore {
    pub model: ModelKind,
    /// Training duration in hours.
    pub duration_h: usize,
    pub mae: Option<f64>,
    pub n_test_points: usize,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub duration_h: usize,
    pub model: ModelKind,
    pub mae: Option<f64>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub test_days: Vec<NaiveDate>,
    pub train_days: Vec<NaiveDate>,
    pub n_test_points: usize,
    pub scores: Vec<ModelScore>,
    pub sweep: Vec<SweepRow>,
}

impl EvalReport {
    pub fn mae(&self, model: ModelKind) -> Option<f64> {
        self.scores.iter().find(|s| s.model == model).and_then(|s| s.mae)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), EvalError> {
        let rows: Vec<SweepRow> = self
            .scores
            .iter()
            .map(|s| SweepRow { duration_h: s.duration_h, model: s.model, mae: s.mae, reason: s.error.clone() })
            .chain(self.sweep.iter().cloned())
            .collect();
        write_sweep_csv(&rows, writer)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Fixed-width table for terminals.
    pub fn table(&self) -> String {
        let mut out = format!("{:<12} {:>10} {:>12}  {}\n", "model", "train_h", "mae", "note");
        for s in &self.scores {
            let mae = s.mae.map_or("-".to_string(), |m| format!("{m:.6}"));
            out.push_str(&format!(
                "{:<12} {:>10} {:>12}  {}\n",
                s.model.as_str(),
                s.duration_h,
                mae,
                s.error.as_deref().unwrap_or("")
            ));
        }
        out
    }
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], writer: W) -> Result<(), EvalError> {
    let err = |e: csv::Error| EvalError::Io(e.to_string());
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(REPORT_HEADER).map_err(err)?;
    for r in rows {
        w.write_record([
            r.duration_h.to_string(),
            r.model.as_str().to_string(),
            r.mae.map(|m| m.to_string()).unwrap_or_default(),
        ])
        .map_err(err)?;
    }
    w.flush().map_err(|e| EvalError::Io(e.to_string()))
}

pub fn sweep_table(rows: &[SweepRow]) -> String {
    let mut out = format!("{:>10} {:<12} {:>12}  {}\n", "duration_h", "model", "mae", "note");
    for r in rows {
        let mae = r.mae.map_or("-".to_string(), |m| format!("{m:.6}"));
        out.push_str(&format!(
            "{:>10} {:<12} {:>12}  {}\n",
            r.duration_h,
            r.model.as_str(),
            mae,
            r.reason.as_deref().unwrap_or("")
        ));
    }
    out
}

#[derive(Debug, Clone, Copy)]
struct TestHour {
    date: NaiveDate,
    hour: usize,
    scene: f64,
    station: f64,
}

/// Everything the models need, prepared once per scene/station/split.
pub struct EvalCase {
    split: SplitSpec,
    cfg: EvalConfig,
    paired_days: BTreeMap<NaiveDate, Vec<PairedHour>>,
    station_days: BTreeMap<NaiveDate, Vec<(f64, f64)>>,
    scene_days: BTreeMap<NaiveDate, Vec<(f64, f64)>>,
    test: Vec<TestHour>,
}

fn hour_of(ts: NaiveDateTime) -> usize {
    ts.hour() as usize
}

impl EvalCase {
    pub fn new(
        scene: &HourlySeries,
        station: &HourlySeries,
        split: &SplitSpec,
        cfg: &EvalConfig,
    ) -> Result<Self, EvalError> {
        if split.train_days.is_empty() || split.test_days.is_empty() {
            return Err(EvalError::InvalidSplit("test and train days must be non-empty".into()));
        }
        let last_test = split.test_days.iter().max().expect("non-empty");
        let first_train = split.train_days.iter().min().expect("non-empty");
        if last_test >= first_train {
            return Err(EvalError::InvalidSplit("every test day must precede every train day".into()));
        }
        let paired = align(scene, station)?;
        let paired_days = paired.by_day();
        let test: Vec<TestHour> = split
            .test_days
            .iter()
            .flat_map(|d| paired_days.get(d).into_iter().flatten())
            .map(|p| TestHour {
                date: p.hour_start.date(),
                hour: hour_of(p.hour_start),
                scene: p.scene,
                station: p.station,
            })
            .collect();
        if test.is_empty() {
            return Err(EvalError::NoTestData);
        }
        Ok(Self {
            split: split.clone(),
            cfg: *cfg,
            paired_days,
            station_days: station.by_day(),
            scene_days: scene.by_day(),
            test,
        })
    }

    pub fn n_test_points(&self) -> usize {
        self.test.len()
    }

    pub fn split(&self) -> &SplitSpec {
        &self.split
    }

    /// Number of leading training days used by LM and MTM.
    pub fn n_train_days(&self) -> usize {
        self.cfg.train_days.unwrap_or(self.split.train_days.len()).min(self.split.train_days.len())
    }

    /// Paired hours on the first `n_days` training days.
    pub fn train_hours(&self, n_days: usize) -> usize {
        self.split.train_days[..n_days.min(self.split.train_days.len())]
            .iter()
            .map(|d| self.paired_days.get(d).map_or(0, Vec::len))
            .sum()
    }

    /// MAE of externally produced predictions over the test hours.
    pub fn predictions_mae(&self, predictions: &HourlySeries) -> Result<f64, EvalError> {
        let lookup: BTreeMap<NaiveDateTime, f64> =
            predictions.points().iter().map(|p| (p.hour_start, p.temp_c)).collect();
        let pred = self
            .test
            .iter()
            .map(|t| {
                let ts = t.date.and_hms_opt(t.hour as u32, 0, 0).expect("valid hour");
                lookup.get(&ts).copied().ok_or(EvalError::MissingPrediction(ts))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        mae(&self.actual(), &pred)
    }

    fn actual(&self) -> Vec<f64> {
        self.test.iter().map(|t| t.scene).collect()
    }

    fn score(&self, predicted: &[f64]) -> f64 {
        mae(&self.actual(), predicted).expect("one prediction per test hour")
    }

    pub fn uncorrected_mae(&self) -> f64 {
        let pred: Vec<f64> = self.test.iter().map(|t| t.station).collect();
        self.score(&pred)
    }

    /// Paired hours of the training window in time order.
    fn train_pairs(&self) -> impl Iterator<Item = &PairedHour> {
        self.split
            .train_days
            .iter()
            .flat_map(move |d| self.paired_days.get(d).into_iter().flatten())
    }

    pub fn lm_mae(&self, pairs: &[(f64, f64)]) -> Result<(LinearModel, f64), ModelFailure> {
        let model = fit_lm(pairs)?;
        let pred: Vec<f64> = self.test.iter().map(|t| model.predict(t.station)).collect();
        Ok((model, self.score(&pred)))
    }

    fn station_curve(&self, date: NaiveDate) -> Result<Fourier3, ModelFailure> {
        let missing = |message| ModelFailure { code: "MissingStationDay", message };
        let pts = self.station_days.get(&date).ok_or_else(|| missing(format!("no station data on {date}")))?;
        if pts.len() < self.cfg.min_hours_per_day {
            return Err(missing(format!("station day {date} is incomplete")));
        }
        Ok(smooth_day(pts)?.0)
    }

    fn scene_curve(&self, date: NaiveDate) -> Result<Fourier3, ModelFailure> {
        let pts = self.scene_days.get(&date).ok_or_else(|| ModelFailure {
            code: "MissingSceneDay",
            message: format!("no scene data on {date}"),
        })?;
        Ok(smooth_day(pts)?.0)
    }

    /// MTM fitted on the first `n_days` training days.
    pub fn fit_mtm_days(&self, n_days: usize) -> Result<MtmFit, ModelFailure> {
        if n_days > self.split.train_days.len() {
            return Err(ModelFailure::infeasible(format!(
                "only {} training day(s) available",
                self.split.train_days.len()
            )));
        }
        let days = &self.split.train_days[..n_days];
        let mut x = Vec::with_capacity(n_days);
        let mut y = Vec::with_capacity(n_days);
        for &d in days {
            x.push(DailyCurve::new(d, self.station_curve(d)?));
            y.push(DailyCurve::new(d, self.scene_curve(d)?));
        }
        Ok(fit_mtm(&x, &y, &self.cfg.mtm)?)
    }

    pub fn mtm_mae(&self, n_days: usize) -> Result<(MtmModel, f64), ModelFailure> {
        let model = self.fit_mtm_days(n_days)?.model;
        let mut cache: BTreeMap<NaiveDate, [f64; 24]> = BTreeMap::new();
        let mut pred = Vec::with_capacity(self.test.len());
        for t in &self.test {
            if let Entry::Vacant(slot) = cache.entry(t.date) {
                slot.insert(model.predict(&self.station_curve(t.date)?));
            }
            pred.push(cache[&t.date][t.hour]);
        }
        Ok((model, self.score(&pred)))
    }

    /// The first training day and its measured points in the STM window.
    pub fn stm_window(&self, hours: usize) -> Result<(NaiveDate, Vec<PairedHour>), ModelFailure> {
        let start = self.cfg.stm_start_hour as usize;
        if hours < 2 {
            return Err(ModelFailure::infeasible(format!("{hours} h is below the 2-point minimum")));
        }
        if start + hours > 24 {
            return Err(ModelFailure::infeasible(format!("{hours} h from {start}:00 runs past midnight")));
        }
        let day = self.split.train_days[0];
        let pts: Vec<PairedHour> = self.paired_days[&day]
            .iter()
            .filter(|p| (start..start + hours).contains(&hour_of(p.hour_start)))
            .copied()
            .collect();
        if pts.len() < 2 {
            return Err(ModelFailure::infeasible(format!("only {} measured point(s) in the window", pts.len())));
        }
        Ok((day, pts))
    }

    /// STM fitted on `hours` points of the first training day, with ratios
    /// from every complete station day.
    pub fn fit_stm(&self, hours: usize) -> Result<(StmModel, StmDayFit), ModelFailure> {
        let (day, window) = self.stm_window(hours)?;
        let station_day = &self.station_days[&day];
        let t_m = station_day.iter().map(|p| p.1).sum::<f64>() / station_day.len() as f64;
        let cfg = self.cfg.stm.with_t_m(t_m);
        let points: Vec<(f64, f64)> = window.iter().map(|p| (hour_of(p.hour_start) as f64, p.scene)).collect();
        let fit = fit_stm_day(&points, &cfg)?;

        let station_curves = self
            .station_days
            .iter()
            .filter(|(_, pts)| pts.len() >= self.cfg.min_hours_per_day)
            .map(|(&d, pts)| smooth_day(pts).map(|(c, _)| DailyCurve::new(d, c)))
            .collect::<Result<Vec<_>, _>>()?;
        let ratios = compute_ratios(&station_curves, day, RatioEpsilon::for_mean_temp(t_m))?;
        Ok((StmModel::new(day, &fit, ratios), fit))
    }

    pub fn stm_mae(&self, hours: usize) -> Result<(StmModel, f64), ModelFailure> {
        let model = self.fit_stm(hours)?.0;
        let mut cache: BTreeMap<NaiveDate, [f64; 24]> = BTreeMap::new();
        let mut pred = Vec::with_capacity(self.test.len());
        for t in &self.test {
            if let Entry::Vacant(slot) = cache.entry(t.date) {
                slot.insert(model.curve_for(t.date)?.hourly());
            }
            pred.push(cache[&t.date][t.hour]);
        }
        Ok((model, self.score(&pred)))
    }

    fn stm_lm_pairs(&self, hours: usize) -> Result<Vec<(f64, f64)>, ModelFailure> {
        let (_, window) = self.stm_window(hours)?;
        Ok(window.iter().map(|p| (p.station, p.scene)).collect())
    }

    /// `(station, scene)` pairs for the first `hours` paired hours of the training window.
    pub fn leading_train_pairs(&self, hours: usize) -> Result<Vec<(f64, f64)>, ModelFailure> {
        let pairs: Vec<(f64, f64)> = self.train_pairs().take(hours).map(|p| (p.station, p.scene)).collect();
        if pairs.len() < hours {
            return Err(ModelFailure::infeasible(format!("only {} training hour(s) available", pairs.len())));
        }
        Ok(pairs)
    }

    /// Rows for one duration of a sweep.
    pub fn sweep_rows(&self, duration_h: usize, kind: SweepKind) -> Vec<SweepRow> {
        let row = |model, res: Result<f64, ModelFailure>| SweepRow {
            duration_h,
            model,
            mae: res.as_ref().ok().copied(),
            reason: res.err().map(|e| e.to_string()),
        };
        let mut rows = vec![row(ModelKind::Uncorrected, Ok(self.uncorrected_mae()))];
        match kind {
            SweepKind::Mtm => {
                let lm = self.leading_train_pairs(duration_h).and_then(|p| self.lm_mae(&p)).map(|r| r.1);
                rows.push(row(ModelKind::Lm, lm));
                let days = duration_h / 24;
                let mtm = if days < self.cfg.mtm.min_train_days {
                    Err(ModelFailure::infeasible(format!(
                        "{days} day(s) is below the minimum of {}",
                        self.cfg.mtm.min_train_days
                    )))
                } else {
                    self.mtm_mae(days).map(|r| r.1)
                };
                rows.push(row(ModelKind::Mtm, mtm));
            }
            SweepKind::Stm => {
                let lm = self.stm_lm_pairs(duration_h).and_then(|p| self.lm_mae(&p)).map(|r| r.1);
                rows.push(row(ModelKind::Lm, lm));
                rows.push(row(ModelKind::Stm, self.stm_mae(duration_h).map(|r| r.1)));
            }
        }
        rows
    }
}

/// Fits every model on the training window and scores it on the test days.
/// A failing model is reported with its error; the others still run.
pub fn evaluate_models(
    scene: &HourlySeries,
    station: &HourlySeries,
    split: &SplitSpec,
    cfg: &EvalConfig,
) -> Result<EvalReport, EvalError> {
    let case = EvalCase::new(scene, station, split, cfg)?;
    let n = case.n_test_points();
    let n_train = case.n_train_days();
    let train_hours = case.train_hours(n_train);

    let score = |model, duration_h, res: Result<f64, ModelFailure>| ModelScore {
        model,
        duration_h,
        mae: res.as_ref().ok().copied(),
        n_test_points: n,
        error: res.err().map(|e| e.to_string()),
    };

    let lm = case.leading_train_pairs(train_hours).and_then(|p| case.lm_mae(&p)).map(|r| r.1);
    let scores = vec![
        score(ModelKind::Uncorrected, 0, Ok(case.uncorrected_mae())),
        score(ModelKind::Lm, train_hours, lm),
        score(ModelKind::Mtm, n_train * 24, case.mtm_mae(n_train).map(|r| r.1)),
        score(ModelKind::Stm, cfg.stm_hours, case.stm_mae(cfg.stm_hours).map(|r| r.1)),
    ];

    Ok(EvalReport {
        test_days: split.test_days.clone(),
        train_days: split.train_days.clone(),
        n_test_points: n,
        scores,
        sweep: Vec::new(),
    })
}

/// One block of rows per duration, in the order given. Rows are computed
/// independently and may run in parallel.
pub fn duration_sweep(
    scene: &HourlySeries,
    station: &HourlySeries,
    split: &SplitSpec,
    durations: &[usize],
    kind: SweepKind,
    cfg: &EvalConfig,
) -> Result<Vec<SweepRow>, EvalError> {
    if durations.is_empty() || durations[0] == 0 || durations.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EvalError::InvalidDurations);
    }
    let case = EvalCase::new(scene, station, split, cfg)?;
    let blocks: Vec<Vec<SweepRow>> = durations.par_iter().map(|&d| case.sweep_rows(d, kind)).collect();
    Ok(blocks.into_iter().flatten().collect())
}

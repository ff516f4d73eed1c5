//! CSV ingestion, hourly aggregation, alignment and the chronological
//! train/test split.
//!
//! Timestamps are naive local wall-clock values. Logger files carry one
//! reading per probe per minute; station files carry one hourly mean per row.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use chrono::{NaiveDate, NaiveDateTime, Timelike};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const LOGGER_HEADER: [&str; 3] = ["timestamp", "probe_id", "temp_c"];
pub const STATION_HEADER: [&str; 2] = ["timestamp", "temp_c"];
pub const HOURLY_HEADER: [&str; 2] = ["hour_start", "temp_c"];

pub const LOGGER_TIME_FORMAT: &str = "%Y-%m-%d %H:%M";
pub const STATION_TIME_FORMAT: &str = "%Y-%m-%d %H:00";

/// Default number of hourly points a calendar day needs to count as complete.
pub const DEFAULT_MIN_HOURS_PER_DAY: usize = 18;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("file not found: {0}")]
    MissingFile(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("header mismatch: expected `{expected}`, found `{found}`")]
    SchemaMismatch { expected: String, found: String },
    #[error("{} malformed row(s): {}", .0.len(), format_rows(.0))]
    MalformedRow(Vec<RowError>),
    #[error("no records to aggregate")]
    EmptyInput,
    #[error("scene and station series share no hours")]
    NoOverlap,
    #[error("need at least {needed} complete days, found {found}")]
    InsufficientData { needed: usize, found: usize },
    #[error("invalid hourly series: {0}")]
    InvalidSeries(String),
}

impl IngestError {
    pub fn code(&self) -> &'static str {
        match self {
            IngestError::MissingFile(_) => "MissingFile",
            IngestError::Io(_) => "Io",
            IngestError::SchemaMismatch { .. } => "SchemaMismatch",
            IngestError::MalformedRow(_) => "MalformedRow",
            IngestError::EmptyInput => "EmptyInput",
            IngestError::NoOverlap => "NoOverlap",
            IngestError::InsufficientData { .. } => "InsufficientData",
            IngestError::InvalidSeries(_) => "InvalidSeries",
        }
    }
}

/// A rejected data row. `row` counts data rows from 1 (the header is row 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowError {
    pub row: usize,
    pub reason: String,
}

fn format_rows(rows: &[RowError]) -> String {
    const SHOWN: usize = 5;
    let mut out = rows
        .iter()
        .take(SHOWN)
        .map(|r| format!("row {}: {}", r.row, r.reason))
        .collect::<Vec<_>>()
        .join("; ");
    if rows.len() > SHOWN {
        out.push_str(&format!("; and {} more", rows.len() - SHOWN));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct RawLoggerRecord {
    pub timestamp: NaiveDateTime,
    pub probe_id: String,
    pub temp_c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HourlyPoint {
    pub hour_start: NaiveDateTime,
    pub temp_c: f64,
}

/// Hourly mean temperatures for one source, strictly increasing in time.
#[derive(Debug, Clone, PartialEq)]
pub struct HourlySeries {
    pub source_id: String,
    points: Vec<HourlyPoint>,
}

impl HourlySeries {
    pub fn new(
        source_id: impl Into<String>,
        points: Vec<HourlyPoint>,
    ) -> Result<Self, IngestError> {
        for (i, p) in points.iter().enumerate() {
            if !p.temp_c.is_finite() {
                return Err(IngestError::InvalidSeries(format!(
                    "non-finite temperature at {}",
                    p.hour_start
                )));
            }
            if truncate_to_hour(p.hour_start) != p.hour_start {
                return Err(IngestError::InvalidSeries(format!(
                    "{} is not on an hour boundary",
                    p.hour_start
                )));
            }
            if i > 0 && points[i - 1].hour_start >= p.hour_start {
                return Err(IngestError::InvalidSeries(format!(
                    "hour_start not strictly increasing at {}",
                    p.hour_start
                )));
            }
        }
        Ok(Self {
            source_id: source_id.into(),
            points,
        })
    }

    pub fn points(&self) -> &[HourlyPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Hours missing between consecutive points, as (first missing hour, count).
    pub fn gaps(&self) -> Vec<(NaiveDateTime, i64)> {
        self.points
            .windows(2)
            .filter_map(|w| {
                let hours = (w[1].hour_start - w[0].hour_start).num_hours();
                (hours > 1).then(|| (w[0].hour_start + chrono::Duration::hours(1), hours - 1))
            })
            .collect()
    }

    /// Points grouped by calendar date, each as (hour of day, temp).
    pub fn by_day(&self) -> BTreeMap<NaiveDate, Vec<(f64, f64)>> {
        let mut days: BTreeMap<NaiveDate, Vec<(f64, f64)>> = BTreeMap::new();
        for p in &self.points {
            days.entry(p.hour_start.date())
                .or_default()
                .push((p.hour_start.hour() as f64, p.temp_c));
        }
        days
    }
}

pub fn truncate_to_hour(ts: NaiveDateTime) -> NaiveDateTime {
    ts.date()
        .and_hms_opt(ts.hour(), 0, 0)
        .expect("hour of an existing timestamp is valid")
}

fn open(path: &Path) -> Result<File, IngestError> {
    File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => IngestError::MissingFile(path.display().to_string()),
        _ => IngestError::Io(e),
    })
}

fn check_header(headers: &csv::StringRecord, expected: &[&str]) -> Result<(), IngestError> {
    let found: Vec<&str> = headers.iter().map(str::trim).collect();
    if found != expected {
        return Err(IngestError::SchemaMismatch {
            expected: expected.join(","),
            found: found.join(","),
        });
    }
    Ok(())
}

fn csv_reader<R: Read>(reader: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader)
}

fn parse_temp(field: Option<&str>) -> Result<f64, String> {
    let raw = field.ok_or_else(|| "missing temp_c".to_string())?.trim();
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!("non-numeric temperature `{raw}`")),
    }
}

fn parse_time(field: Option<&str>, format: &str) -> Result<NaiveDateTime, String> {
    let raw = field.ok_or_else(|| "missing timestamp".to_string())?.trim();
    if format == STATION_TIME_FORMAT {
        // chrono cannot build a time from a literal minute field
        return match NaiveDateTime::parse_from_str(raw, LOGGER_TIME_FORMAT) {
            Ok(ts) if ts.minute() == 0 => Ok(ts),
            Ok(_) => Err(format!("timestamp `{raw}` is not on the hour")),
            Err(_) => Err(format!("bad timestamp `{raw}`")),
        };
    }
    NaiveDateTime::parse_from_str(raw, format).map_err(|_| format!("bad timestamp `{raw}`"))
}

pub fn parse_logger_csv(path: impl AsRef<Path>) -> Result<Vec<RawLoggerRecord>, IngestError> {
    read_logger_csv(open(path.as_ref())?)
}

pub fn read_logger_csv<R: Read>(reader: R) -> Result<Vec<RawLoggerRecord>, IngestError> {
    let mut rdr = csv_reader(reader);
    check_header(&rdr.headers().map_err(csv_io)?.clone(), &LOGGER_HEADER)?;

    let mut records = Vec::new();
    let mut bad = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row_no = i + 1;
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                bad.push(RowError { row: row_no, reason: e.to_string() });
                continue;
            }
        };
        if row.len() != LOGGER_HEADER.len() {
            bad.push(RowError {
                row: row_no,
                reason: format!("expected 3 fields, found {}", row.len()),
            });
            continue;
        }
        let parsed = parse_time(row.get(0), LOGGER_TIME_FORMAT).and_then(|ts| {
            let temp = parse_temp(row.get(2))?;
            Ok(RawLoggerRecord {
                timestamp: ts,
                probe_id: row.get(1).unwrap_or_default().trim().to_string(),
                temp_c: temp,
            })
        });
        match parsed {
            Ok(r) => records.push(r),
            Err(reason) => bad.push(RowError { row: row_no, reason }),
        }
    }
    if !bad.is_empty() {
        return Err(IngestError::MalformedRow(bad));
    }
    Ok(records)
}

pub fn parse_station_csv(
    path: impl AsRef<Path>,
    source_id: &str,
) -> Result<HourlySeries, IngestError> {
    read_station_csv(open(path.as_ref())?, source_id)
}

pub fn read_station_csv<R: Read>(reader: R, source_id: &str) -> Result<HourlySeries, IngestError> {
    read_hourly_table(reader, source_id, &STATION_HEADER, STATION_TIME_FORMAT)
}

/// Reads the `hour_start,temp_c` format written by [`write_hourly_csv`].
pub fn parse_hourly_csv(
    path: impl AsRef<Path>,
    source_id: &str,
) -> Result<HourlySeries, IngestError> {
    read_hourly_table(open(path.as_ref())?, source_id, &HOURLY_HEADER, STATION_TIME_FORMAT)
}

fn read_hourly_table<R: Read>(
    reader: R,
    source_id: &str,
    header: &[&str],
    format: &str,
) -> Result<HourlySeries, IngestError> {
    let mut rdr = csv_reader(reader);
    check_header(&rdr.headers().map_err(csv_io)?.clone(), header)?;

    let mut points = Vec::new();
    let mut bad = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row_no = i + 1;
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                bad.push(RowError { row: row_no, reason: e.to_string() });
                continue;
            }
        };
        let parsed = parse_time(row.get(0), format)
            .and_then(|ts| Ok(HourlyPoint { hour_start: ts, temp_c: parse_temp(row.get(1))? }));
        match parsed {
            Ok(p) => points.push(p),
            Err(reason) => bad.push(RowError { row: row_no, reason }),
        }
    }
    if !bad.is_empty() {
        return Err(IngestError::MalformedRow(bad));
    }
    points.sort_by_key(|p| p.hour_start);
    if let Some(w) = points.windows(2).find(|w| w[0].hour_start == w[1].hour_start) {
        return Err(IngestError::InvalidSeries(format!(
            "duplicate hour {}",
            w[0].hour_start
        )));
    }
    HourlySeries::new(source_id, points)
}

fn csv_io(e: csv::Error) -> IngestError {
    IngestError::Io(std::io::Error::other(e.to_string()))
}

pub fn write_hourly_csv<W: Write>(series: &HourlySeries, writer: W) -> Result<(), IngestError> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(HOURLY_HEADER).map_err(csv_io)?;
    for p in series.points() {
        w.write_record([
            p.hour_start.format(STATION_TIME_FORMAT).to_string(),
            p.temp_c.to_string(),
        ])
        .map_err(csv_io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_station_csv<W: Write>(series: &HourlySeries, writer: W) -> Result<(), IngestError> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(STATION_HEADER).map_err(csv_io)?;
    for p in series.points() {
        w.write_record([
            p.hour_start.format(STATION_TIME_FORMAT).to_string(),
            p.temp_c.to_string(),
        ])
        .map_err(csv_io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_logger_csv<W: Write>(records: &[RawLoggerRecord], writer: W) -> Result<(), IngestError> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(LOGGER_HEADER).map_err(csv_io)?;
    for r in records {
        w.write_record([
            r.timestamp.format(LOGGER_TIME_FORMAT).to_string(),
            r.probe_id.clone(),
            r.temp_c.to_string(),
        ])
        .map_err(csv_io)?;
    }
    w.flush()?;
    Ok(())
}

/// Hourly mean over every record (all probes, all minutes) that falls in the hour.
pub fn aggregate_hourly(
    records: &[RawLoggerRecord],
    source_id: &str,
) -> Result<HourlySeries, IngestError> {
    if records.is_empty() {
        return Err(IngestError::EmptyInput);
    }
    let mut buckets: BTreeMap<NaiveDateTime, Vec<f64>> = BTreeMap::new();
    for r in records {
        buckets.entry(truncate_to_hour(r.timestamp)).or_default().push(r.temp_c);
    }
    let points = buckets
        .into_iter()
        .map(|(hour_start, mut temps)| {
            // sorting makes the floating-point sum independent of input order
            temps.sort_by(f64::total_cmp);
            let mean = temps.iter().sum::<f64>() / temps.len() as f64;
            let (lo, hi) = (temps[0], temps[temps.len() - 1]);
            HourlyPoint { hour_start, temp_c: mean.clamp(lo, hi) }
        })
        .collect();
    HourlySeries::new(source_id, points)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairedHour {
    pub hour_start: NaiveDateTime,
    pub scene: f64,
    pub station: f64,
}

/// Scene and station series joined on `hour_start`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSeries {
    pub pairs: Vec<PairedHour>,
    /// Scene hours with no station counterpart.
    pub dropped_scene: usize,
    /// Station hours with no scene counterpart.
    pub dropped_station: usize,
}

impl PairedSeries {
    pub fn by_day(&self) -> BTreeMap<NaiveDate, Vec<PairedHour>> {
        let mut days: BTreeMap<NaiveDate, Vec<PairedHour>> = BTreeMap::new();
        for p in &self.pairs {
            days.entry(p.hour_start.date()).or_default().push(*p);
        }
        days
    }

    pub fn scene_series(&self) -> HourlySeries {
        HourlySeries {
            source_id: "scene".into(),
            points: self
                .pairs
                .iter()
                .map(|p| HourlyPoint { hour_start: p.hour_start, temp_c: p.scene })
                .collect(),
        }
    }

    pub fn station_series(&self) -> HourlySeries {
        HourlySeries {
            source_id: "station".into(),
            points: self
                .pairs
                .iter()
                .map(|p| HourlyPoint { hour_start: p.hour_start, temp_c: p.station })
                .collect(),
        }
    }
}

pub fn align(scene: &HourlySeries, station: &HourlySeries) -> Result<PairedSeries, IngestError> {
    if scene.is_empty() || station.is_empty() {
        return Err(IngestError::EmptyInput);
    }
    let station_map: BTreeMap<NaiveDateTime, f64> = station
        .points()
        .iter()
        .map(|p| (p.hour_start, p.temp_c))
        .collect();
    let pairs: Vec<PairedHour> = scene
        .points()
        .iter()
        .filter_map(|p| {
            station_map.get(&p.hour_start).map(|&st| PairedHour {
                hour_start: p.hour_start,
                scene: p.temp_c,
                station: st,
            })
        })
        .collect();
    if pairs.is_empty() {
        return Err(IngestError::NoOverlap);
    }
    Ok(PairedSeries {
        dropped_scene: scene.len() - pairs.len(),
        dropped_station: station.len() - pairs.len(),
        pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub test_days: Vec<NaiveDate>,
    pub train_days: Vec<NaiveDate>,
    /// Days with fewer than the minimum number of hourly points.
    pub excluded_days: Vec<NaiveDate>,
}

impl SplitSpec {
    pub fn is_test(&self, date: NaiveDate) -> bool {
        self.test_days.binary_search(&date).is_ok()
    }

    pub fn is_train(&self, date: NaiveDate) -> bool {
        self.train_days.binary_search(&date).is_ok()
    }
}

/// Dates with at least `min_hours_per_day` paired points, in order.
pub fn complete_days(series: &PairedSeries, min_hours_per_day: usize) -> Vec<NaiveDate> {
    series
        .by_day()
        .into_iter()
        .filter(|(_, hours)| hours.len() >= min_hours_per_day)
        .map(|(d, _)| d)
        .collect()
}

/// The `n_test_days` earliest complete days form the test set; every later
/// complete day is training data.
pub fn split_train_test(
    series: &PairedSeries,
    n_test_days: usize,
    min_hours_per_day: usize,
) -> Result<SplitSpec, IngestError> {
    let days = series.by_day();
    let complete: Vec<NaiveDate> = days
        .iter()
        .filter(|(_, h)| h.len() >= min_hours_per_day)
        .map(|(d, _)| *d)
        .collect();
    if complete.len() < n_test_days + 1 {
        return Err(IngestError::InsufficientData {
            needed: n_test_days + 1,
            found: complete.len(),
        });
    }
    let excluded: BTreeSet<NaiveDate> = days
        .iter()
        .filter(|(_, h)| h.len() < min_hours_per_day)
        .map(|(d, _)| *d)
        .collect();
    Ok(SplitSpec {
        test_days: complete[..n_test_days].to_vec(),
        train_days: complete[n_test_days..].to_vec(),
        excluded_days: excluded.into_iter().collect(),
    })
}

//! Seeded synthetic worlds with known ground truth.
//!
//! The station reports the exact value of its daily curve at each hour start.
//! The scene is derived from the station by a [`SceneTransform`] and then
//! observed by a logger with `probes` probes reading once a minute; every
//! reading carries independent N(0, noise_sd²) error and the scene's hourly
//! value is the mean of that hour's readings.
//!
//! Noise comes from ChaCha8 (`rand_chacha`) seeded with `seed` through
//! `SeedableRng::seed_from_u64`, with the stream number set to the day index,
//! so each day can be generated independently. Standard normals use the
//! Box–Muller transform on pairs of uniforms `u1, u2` drawn as `f64` in
//! [0, 1): `r = sqrt(-2 ln(1 - u1))`, yielding `r cos(2π u2)` then
//! `r sin(2π u2)`. Within an hour, readings are drawn minute by minute and,
//! within a minute, probe by probe.

use std::f64::consts::PI;
use std::str::FromStr;

use chrono::{Duration, NaiveDate, NaiveDateTime};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::{DailyCurve, Fourier3, OMEGA};
use crate::ingest::{HourlyPoint, HourlySeries, RawLoggerRecord};

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("invalid world spec: {0}")]
    InvalidSpec(String),
}

impl SynthError {
    pub fn code(&self) -> &'static str {
        "InvalidSpec"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SceneTransform {
    Identity,
    /// `scene = slope·station + offset`, hour by hour.
    Affine { slope: f64, offset: f64 },
    /// `scene(t) = β0(t)·station(t) + β1(t)`.
    Concurrent { beta0: Fourier3, beta1: Fourier3 },
    /// Scene day j has coefficients `h_i(j)·day0_i`, with `h` the station's
    /// ratios relative to day index `measurement_day`.
    ExactRatio { day0: Fourier3, measurement_day: usize },
    /// Mean shifted by `offset`, daily cycle scaled by `damping` and delayed
    /// by `lag_hours`.
    QuasiIndoor { offset: f64, damping: f64, lag_hours: f64 },
}

impl SceneTransform {
    /// Scene curve for a station day, when the transform stays inside the basis.
    fn curve(&self, station: &[Fourier3], day: usize) -> Option<Fourier3> {
        let b = station[day];
        match *self {
            SceneTransform::Identity => Some(b),
            SceneTransform::Affine { slope, offset } => {
                Some(Fourier3::new(slope * b.a0 + offset, slope * b.a1, slope * b.a2))
            }
            SceneTransform::Concurrent { .. } => None,
            SceneTransform::ExactRatio { day0, measurement_day } => {
                let base = station[measurement_day].to_array();
                let cur = b.to_array();
                let a = day0.to_array();
                Some(Fourier3::from_array(std::array::from_fn(|i| cur[i] / base[i] * a[i])))
            }
            SceneTransform::QuasiIndoor { offset, damping, lag_hours } => {
                let (s, c) = (OMEGA * lag_hours).sin_cos();
                Some(Fourier3::new(
                    b.a0 + offset,
                    damping * (b.a1 * c + b.a2 * s),
                    damping * (b.a2 * c - b.a1 * s),
                ))
            }
        }
    }

    fn value(&self, station: &[Fourier3], day: usize, t: f64) -> f64 {
        let x = station[day].eval(t);
        match self {
            SceneTransform::Identity => x,
            SceneTransform::Affine { slope, offset } => slope * x + offset,
            SceneTransform::Concurrent { beta0, beta1 } => beta0.eval(t) * x + beta1.eval(t),
            _ => self.curve(station, day).expect("in-basis transform").eval(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorldSpec {
    pub start_date: NaiveDate,
    pub n_days: usize,
    pub station_coeffs: Vec<Fourier3>,
    pub scene_transform: SceneTransform,
    /// Standard deviation of each individual probe reading, °C.
    pub noise_sd: f64,
    pub seed: u64,
    pub probes: usize,
    pub readings_per_hour: usize,
}

impl WorldSpec {
    pub fn new(station_coeffs: Vec<Fourier3>, scene_transform: SceneTransform) -> Self {
        Self {
            start_date: default_start(),
            n_days: station_coeffs.len(),
            station_coeffs,
            scene_transform,
            noise_sd: 0.0,
            seed: 1,
            probes: 4,
            readings_per_hour: 60,
        }
    }

    pub fn with_noise(self, noise_sd: f64, seed: u64) -> Self {
        Self { noise_sd, seed, ..self }
    }

    /// Standard deviation of an hourly mean of readings.
    pub fn hourly_noise_sd(&self) -> f64 {
        self.noise_sd / ((self.probes * self.readings_per_hour) as f64).sqrt()
    }

    pub fn validate(&self) -> Result<(), SynthError> {
        let bad = |m: &str| Err(SynthError::InvalidSpec(m.to_string()));
        if self.n_days < 1 {
            return bad("n_days must be at least 1");
        }
        if self.station_coeffs.len() != self.n_days {
            return bad("station_coeffs must have one entry per day");
        }
        if self.station_coeffs.iter().any(|c| !c.is_finite()) {
            return bad("station coefficients must be finite");
        }
        if !(self.noise_sd >= 0.0 && self.noise_sd.is_finite()) {
            return bad("noise_sd must be finite and non-negative");
        }
        if self.probes == 0 || self.readings_per_hour == 0 || self.readings_per_hour > 60 {
            return bad("need at least one probe and 1..=60 readings per hour");
        }
        match &self.scene_transform {
            SceneTransform::ExactRatio { day0, measurement_day } => {
                if *measurement_day >= self.n_days {
                    return bad("measurement_day outside the world");
                }
                if self.station_coeffs[*measurement_day].to_array().contains(&0.0) {
                    return bad("station coefficient is zero on the measurement day");
                }
                if !day0.is_finite() {
                    return bad("day0 must be finite");
                }
            }
            SceneTransform::Affine { slope, offset } if !(slope.is_finite() && offset.is_finite()) => {
                return bad("affine parameters must be finite");
            }
            SceneTransform::Concurrent { beta0, beta1 } if !(beta0.is_finite() && beta1.is_finite()) => {
                return bad("concurrent coefficients must be finite");
            }
            SceneTransform::QuasiIndoor { offset, damping, lag_hours }
                if !(offset.is_finite() && damping.is_finite() && lag_hours.is_finite()) =>
            {
                return bad("quasi-indoor parameters must be finite");
            }
            _ => {}
        }
        Ok(())
    }

    pub fn date(&self, day: usize) -> NaiveDate {
        self.start_date + chrono::Days::new(day as u64)
    }
}

fn default_start() -> NaiveDate {
    NaiveDate::from_ymd_opt(2021, 8, 2).expect("valid date")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Truth {
    pub station_curves: Vec<DailyCurve>,
    /// `None` when the transform leaves the three-term basis.
    pub scene_curves: Option<Vec<DailyCurve>>,
    /// Noise-free scene value at every hour.
    pub scene_hourly: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct World {
    pub station: HourlySeries,
    pub scene: HourlySeries,
    pub truth: Truth,
}

/// Standard normal stream (Box–Muller on ChaCha8 uniforms).
pub struct NormalStream {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl NormalStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng, spare: None }
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1: f64 = self.rng.gen();
        let u2: f64 = self.rng.gen();
        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
        let (s, c) = (2.0 * PI * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

fn hour_start(spec: &WorldSpec, day: usize, hour: usize) -> NaiveDateTime {
    spec.date(day).and_hms_opt(hour as u32, 0, 0).expect("valid hour")
}

/// Visits every reading of one day as `(hour, minute, probe, noise)`.
fn for_each_reading(spec: &WorldSpec, day: usize, mut f: impl FnMut(usize, usize, usize, f64)) {
    let mut normals = NormalStream::new(spec.seed, day as u64);
    for hour in 0..24 {
        for minute in 0..spec.readings_per_hour {
            for probe in 0..spec.probes {
                let z = if spec.noise_sd > 0.0 { spec.noise_sd * normals.next_normal() } else { 0.0 };
                f(hour, minute, probe, z);
            }
        }
    }
}

pub fn generate(spec: &WorldSpec) -> Result<World, SynthError> {
    spec.validate()?;
    let per_hour = (spec.probes * spec.readings_per_hour) as f64;

    let mut station_pts = Vec::with_capacity(spec.n_days * 24);
    let mut scene_pts = Vec::with_capacity(spec.n_days * 24);
    let mut scene_truth = Vec::with_capacity(spec.n_days * 24);
    for day in 0..spec.n_days {
        let mut noise_sum = [0.0f64; 24];
        for_each_reading(spec, day, |hour, _, _, z| noise_sum[hour] += z);
        for (hour, noise) in noise_sum.iter().enumerate() {
            let t = hour as f64;
            let hs = hour_start(spec, day, hour);
            let truth = spec.scene_transform.value(&spec.station_coeffs, day, t);
            station_pts.push(HourlyPoint { hour_start: hs, temp_c: spec.station_coeffs[day].eval(t) });
            scene_pts.push(HourlyPoint { hour_start: hs, temp_c: truth + noise / per_hour });
            scene_truth.push(truth);
        }
    }

    let station_curves = (0..spec.n_days)
        .map(|d| DailyCurve::new(spec.date(d), spec.station_coeffs[d]))
        .collect();
    let scene_curves = (0..spec.n_days)
        .map(|d| {
            spec.scene_transform
                .curve(&spec.station_coeffs, d)
                .map(|c| DailyCurve::new(spec.date(d), c))
        })
        .collect::<Option<Vec<_>>>();

    Ok(World {
        station: HourlySeries::new("station", station_pts).expect("ordered hourly points"),
        scene: HourlySeries::new("scene", scene_pts).expect("ordered hourly points"),
        truth: Truth { station_curves, scene_curves, scene_hourly: scene_truth },
    })
}

/// The individual probe readings behind the scene's hourly means.
pub fn logger_records(spec: &WorldSpec) -> Result<Vec<RawLoggerRecord>, SynthError> {
    spec.validate()?;
    let probe_ids: Vec<String> = (1..=spec.probes).map(|p| format!("probe{p}")).collect();
    let mut out = Vec::with_capacity(spec.n_days * 24 * spec.readings_per_hour * spec.probes);
    for day in 0..spec.n_days {
        for_each_reading(spec, day, |hour, minute, probe, z| {
            let truth = spec.scene_transform.value(&spec.station_coeffs, day, hour as f64);
            out.push(RawLoggerRecord {
                timestamp: hour_start(spec, day, hour) + Duration::minutes(minute as i64),
                probe_id: probe_ids[probe].clone(),
                temp_c: truth + z,
            });
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresetKind {
    Attic,
    Garage,
    Shack,
    Uninhabited,
    Underground,
    Roof,
}

impl PresetKind {
    pub const ALL: [PresetKind; 6] = [
        PresetKind::Attic,
        PresetKind::Garage,
        PresetKind::Shack,
        PresetKind::Uninhabited,
        PresetKind::Underground,
        PresetKind::Roof,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PresetKind::Attic => "attic",
            PresetKind::Garage => "garage",
            PresetKind::Shack => "shack",
            PresetKind::Uninhabited => "uninhabited",
            PresetKind::Underground => "underground",
            PresetKind::Roof => "roof",
        }
    }

    /// Invented `(offset °C, damping, lag hours)` for each kind of site.
    pub fn parameters(&self) -> (f64, f64, f64) {
        match self {
            PresetKind::Roof => (1.5, 0.9, 0.5),
            PresetKind::Attic => (2.0, 0.6, 1.5),
            PresetKind::Shack => (0.5, 0.7, 1.0),
            PresetKind::Garage => (-1.0, 0.45, 2.5),
            PresetKind::Uninhabited => (-1.5, 0.3, 3.5),
            PresetKind::Underground => (-3.0, 0.12, 7.0),
        }
    }
}

impl FromStr for PresetKind {
    type Err = SynthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PresetKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SynthError::InvalidSpec(format!("unknown preset `{s}`")))
    }
}

pub const PRESET_DAYS: usize = 15;
pub const PRESET_NOISE_SD: f64 = 0.5;
pub const STATION_SEED: u64 = 2021;
pub const STATION_COEFF_STEP: f64 = 0.25;

/// A summer station record: daily mean 18 ± 1.5 °C, amplitude 6 × [0.7, 1.3] °C
/// and afternoon peak at 15:00 ± 0.5 h, all drawn uniformly per day. The sine
/// and cosine coefficients are rounded to multiples of [`STATION_COEFF_STEP`]
/// so that an identity scene lies on the default STM candidate lattice.
pub fn reference_station(n_days: usize, seed: u64) -> Vec<Fourier3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_days)
        .map(|_| {
            let mean = 18.0 + 1.5 * (2.0 * rng.gen::<f64>() - 1.0);
            let amp = 6.0 * (0.7 + 0.6 * rng.gen::<f64>());
            let peak = 15.0 + 0.5 * (2.0 * rng.gen::<f64>() - 1.0);
            // amp·sin(ω(t - peak) + π/2) peaks at t = peak
            let phase = OMEGA * (6.0 - peak);
            let snap = |v: f64| (v / STATION_COEFF_STEP).round() * STATION_COEFF_STEP;
            Fourier3::new(mean, snap(amp * phase.cos()), snap(amp * phase.sin()))
        })
        .collect()
}

/// Preset world for one kind of quasi-indoor site. Parameters are
/// illustrative, not measured.
pub fn quasi_indoor_preset(kind: PresetKind) -> WorldSpec {
    let (offset, damping, lag_hours) = kind.parameters();
    WorldSpec::new(
        reference_station(PRESET_DAYS, STATION_SEED),
        SceneTransform::QuasiIndoor { offset, damping, lag_hours },
    )
    .with_noise(PRESET_NOISE_SD, 1)
}

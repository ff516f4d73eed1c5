//! Scene temperature reconstruction from weather-station records.
//!
//! A scene logger is compared against a nearby station; daily curves are
//! smoothed onto a three-term Fourier basis and the scene is predicted from the
//! station by a per-hour linear model, a concurrent functional regression, or a
//! short-term Bayesian fit carried across days by station ratios.

pub mod baseline;
pub mod config;
pub mod curves;
pub mod eval;
pub mod ingest;
pub mod mtm;
pub mod stats;
pub mod stm;
pub mod synth;

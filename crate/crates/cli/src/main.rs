//! `scenetemp` command-line interface.
//!
//! Tables go to standard output, CSV and JSON go to the files named by the
//! `--out*` flags, and failures are a single `error: code=… message=…` line on
//! standard error.

mod error;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chrono::{Duration, NaiveDate};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use scenetemp::baseline::{fit_lm, LinearModel};
use scenetemp::config::FlatConfig;
use scenetemp::curves::{curve_series, write_curves_csv, DailyCurve};
use scenetemp::eval::{
    duration_sweep, evaluate_models, sweep_table, write_sweep_csv, EvalCase, EvalConfig, SweepKind, SweepRow,
};
use scenetemp::ingest::{
    aggregate_hourly, align, parse_hourly_csv, parse_logger_csv, parse_station_csv, split_train_test,
    write_hourly_csv, write_logger_csv, write_station_csv, HourlyPoint, HourlySeries, IngestError, SplitSpec,
    DEFAULT_MIN_HOURS_PER_DAY,
};
use scenetemp::mtm::MtmModel;
use scenetemp::stats::{assumption_report, DEFAULT_ALPHA};
use scenetemp::stm::{predict_stm, StmModel};
use scenetemp::synth::{
    generate, logger_records, quasi_indoor_preset, reference_station, PresetKind, SceneTransform, WorldSpec,
    PRESET_DAYS, STATION_SEED,
};

use error::CliError;

#[derive(Parser)]
#[command(name = "scenetemp", version, about = "Reconstruct scene temperatures from weather-station records")]
struct Cli {
    /// Flat `key = value` file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Extra diagnostics on standard error.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a logger or station CSV into an hourly series.
    Ingest(IngestArgs),
    /// Smooth each complete day onto the three-term Fourier basis.
    Smooth(SmoothArgs),
    /// Fit the linear baseline on the training window.
    FitLm(FitArgs),
    /// Fit the mid-term model on whole training days.
    FitMtm(FitArgs),
    /// Fit the short-term model on the first hours of the first training day.
    FitStm(FitStmArgs),
    /// Predict hourly scene temperatures from a fitted model.
    Predict(PredictArgs),
    /// Score all models, or a predictions file, on the test days.
    Evaluate(EvaluateArgs),
    /// Error against training duration.
    Sweep(SweepArgs),
    /// Coefficient-ratio assumption tests.
    Assumptions(AssumptionArgs),
    /// Write a synthetic station/scene pair.
    Synth(SynthArgs),
}

#[derive(Args)]
struct IngestArgs {
    /// Logger CSV (timestamp,probe_id,temp_c), averaged per hour.
    #[arg(long, conflicts_with = "station", required_unless_present = "station")]
    logger: Option<PathBuf>,
    /// Station CSV (timestamp,temp_c).
    #[arg(long)]
    station: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SmoothArgs {
    /// Logger, station or hourly CSV.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    min_hours: Option<usize>,
}

#[derive(Args)]
struct DataArgs {
    /// Scene data: logger, station or hourly CSV.
    #[arg(long)]
    scene: PathBuf,
    /// Station data: station or hourly CSV.
    #[arg(long)]
    station: PathBuf,
    /// Oldest complete days held out for testing.
    #[arg(long)]
    test_days: Option<usize>,
    /// Hours a day needs to count as complete.
    #[arg(long)]
    min_hours: Option<usize>,
    /// Leading training days used by LM and MTM (default: all).
    #[arg(long)]
    train_days: Option<usize>,
}

#[derive(Args)]
struct FitArgs {
    #[command(flatten)]
    data: DataArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct StmArgs {
    /// Measured hours on the first training day.
    #[arg(long)]
    hours: Option<usize>,
    /// Hour of the first measured point.
    #[arg(long)]
    start_hour: Option<u32>,
    #[arg(long)]
    prior_mean: Option<f64>,
    #[arg(long)]
    prior_sd: Option<f64>,
    #[arg(long)]
    a0_step: Option<f64>,
    #[arg(long)]
    a_step: Option<f64>,
    #[arg(long)]
    amp_max: Option<f64>,
}

#[derive(Args)]
struct FitStmArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    stm: StmArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PredictArgs {
    /// Model JSON written by fit-lm, fit-mtm or fit-stm.
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    station: PathBuf,
    /// Predict the oldest N complete station days.
    #[arg(long, conflicts_with = "date")]
    days: Option<usize>,
    /// Predict these dates (repeatable).
    #[arg(long)]
    date: Vec<NaiveDate>,
    #[arg(long)]
    min_hours: Option<usize>,
    /// Hourly CSV of predictions.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    stm: StmArgs,
    /// Score this hourly CSV instead of fitting the models.
    #[arg(long)]
    predictions: Option<PathBuf>,
    /// Model name for the predictions row.
    #[arg(long, default_value = "predictions")]
    label: String,
    #[arg(long)]
    out_csv: Option<PathBuf>,
    #[arg(long)]
    out_json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Mtm,
    Stm,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    stm: StmArgs,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Comma-separated hours (default: 48..288 step 24 for mtm, 1..8 for stm).
    #[arg(long, value_delimiter = ',')]
    durations: Vec<usize>,
    #[arg(long)]
    out_csv: Option<PathBuf>,
    #[arg(long)]
    out_json: Option<PathBuf>,
}

#[derive(Args)]
struct AssumptionArgs {
    /// NAME=PATH of a scene series (repeatable).
    #[arg(long, required = true)]
    scene: Vec<String>,
    /// Reference station series.
    #[arg(long)]
    station: PathBuf,
    /// NAME=PATH of another station for the ANOVA (repeatable).
    #[arg(long)]
    other_station: Vec<String>,
    /// Ratio denominator day (default: first complete station day).
    #[arg(long)]
    day0: Option<NaiveDate>,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    #[arg(long)]
    min_hours: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformArg {
    Identity,
    Affine,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, value_parser = parse_preset, conflicts_with = "transform", required_unless_present = "transform")]
    preset: Option<PresetKind>,
    #[arg(long, value_enum)]
    transform: Option<TransformArg>,
    #[arg(long, default_value_t = 1.0)]
    slope: f64,
    #[arg(long, default_value_t = 0.0)]
    offset: f64,
    #[arg(long, default_value_t = PRESET_DAYS)]
    days: usize,
    /// Standard deviation of each probe reading (presets default to their own value).
    #[arg(long)]
    noise_sd: Option<f64>,
    /// Seed of the measurement noise.
    #[arg(long)]
    seed: Option<u64>,
    /// Seed of the station weather.
    #[arg(long, default_value_t = STATION_SEED)]
    station_seed: u64,
    /// Skip the per-minute logger file.
    #[arg(long)]
    no_logger: bool,
    #[arg(long)]
    out_dir: PathBuf,
}

fn parse_preset(s: &str) -> Result<PresetKind, String> {
    s.parse().map_err(|e: scenetemp::synth::SynthError| e.to_string())
}

struct Context {
    config: FlatConfig,
    verbose: bool,
}

impl Context {
    fn note(&self, msg: impl AsRef<str>) {
        if self.verbose {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn min_hours(&self, flag: Option<usize>) -> Result<usize, CliError> {
        let mut v = DEFAULT_MIN_HOURS_PER_DAY;
        self.config.update("min_hours", &mut v)?;
        Ok(flag.unwrap_or(v))
    }

    fn eval_config(&self, data: &DataArgs, stm: Option<&StmArgs>) -> Result<EvalConfig, CliError> {
        let mut cfg = EvalConfig::default();
        cfg.apply(&self.config)?;
        if let Some(v) = data.test_days {
            cfg.n_test_days = v;
        }
        if let Some(v) = data.min_hours {
            cfg.min_hours_per_day = v;
        }
        if data.train_days.is_some() {
            cfg.train_days = data.train_days;
        }
        if let Some(s) = stm {
            let set = |slot: &mut f64, v: Option<f64>| {
                if let Some(v) = v {
                    *slot = v;
                }
            };
            if let Some(v) = s.hours {
                cfg.stm_hours = v;
            }
            if let Some(v) = s.start_hour {
                cfg.stm_start_hour = v;
            }
            set(&mut cfg.stm.prior_mean, s.prior_mean);
            set(&mut cfg.stm.prior_sd, s.prior_sd);
            set(&mut cfg.stm.a0_step, s.a0_step);
            set(&mut cfg.stm.a_step, s.a_step);
            set(&mut cfg.stm.amp_max, s.amp_max);
        }
        Ok(cfg)
    }
}

fn open_error(path: &Path, e: std::io::Error) -> CliError {
    match e.kind() {
        std::io::ErrorKind::NotFound => IngestError::MissingFile(path.display().to_string()).into(),
        _ => e.into(),
    }
}

/// Loads a logger, station or hourly CSV, chosen by its header.
fn load_series(path: &Path, source_id: &str) -> Result<HourlySeries, CliError> {
    let file = File::open(path).map_err(|e| open_error(path, e))?;
    let mut header = String::new();
    BufReader::new(file).read_line(&mut header)?;
    let header = header.trim_start_matches('\u{feff}').trim().replace(' ', "");
    Ok(match header.as_str() {
        "timestamp,probe_id,temp_c" => aggregate_hourly(&parse_logger_csv(path)?, source_id)?,
        "timestamp,temp_c" => parse_station_csv(path, source_id)?,
        "hour_start,temp_c" => parse_hourly_csv(path, source_id)?,
        _ => {
            return Err(IngestError::SchemaMismatch {
                expected: "timestamp,probe_id,temp_c | timestamp,temp_c | hour_start,temp_c".into(),
                found: header,
            }
            .into())
        }
    })
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    Ok(BufWriter::new(File::create(path)?))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let mut w = create(path)?;
    w.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serialises")
}

struct Loaded {
    scene: HourlySeries,
    station: HourlySeries,
    split: SplitSpec,
    cfg: EvalConfig,
}

fn load_case(ctx: &Context, data: &DataArgs, stm: Option<&StmArgs>) -> Result<Loaded, CliError> {
    let cfg = ctx.eval_config(data, stm)?;
    let scene = load_series(&data.scene, "scene")?;
    let station = load_series(&data.station, "station")?;
    let paired = align(&scene, &station)?;
    ctx.note(format!(
        "paired {} hours (dropped {} scene, {} station)",
        paired.pairs.len(),
        paired.dropped_scene,
        paired.dropped_station
    ));
    let split = split_train_test(&paired, cfg.n_test_days, cfg.min_hours_per_day)?;
    ctx.note(format!(
        "test days {:?}, {} training day(s), {} excluded",
        split.test_days,
        split.train_days.len(),
        split.excluded_days.len()
    ));
    Ok(Loaded { scene, station, split, cfg })
}

impl Loaded {
    fn case(&self) -> Result<EvalCase, CliError> {
        Ok(EvalCase::new(&self.scene, &self.station, &self.split, &self.cfg)?)
    }
}

fn ingest(args: &IngestArgs) -> Result<(), CliError> {
    let (path, id) = match (&args.logger, &args.station) {
        (Some(p), _) => (p, "scene"),
        (_, Some(p)) => (p, "station"),
        _ => unreachable!("clap requires one input"),
    };
    let series = load_series(path, id)?;
    write_hourly_csv(&series, create(&args.out)?)?;
    let pts = series.points();
    println!("{:<10} {:>6} {:>17} {:>17} {:>5}", "source", "hours", "first", "last", "gaps");
    println!(
        "{:<10} {:>6} {:>17} {:>17} {:>5}",
        id,
        pts.len(),
        pts.first().map_or("-".into(), |p| p.hour_start.to_string()),
        pts.last().map_or("-".into(), |p| p.hour_start.to_string()),
        series.gaps().len()
    );
    Ok(())
}

fn smooth(ctx: &Context, args: &SmoothArgs) -> Result<(), CliError> {
    let series = load_series(&args.input, "input")?;
    let set = curve_series(&series, ctx.min_hours(args.min_hours)?)?;
    write_curves_csv(&set.curves, create(&args.out)?)?;
    print_curves(&set.curves);
    for d in &set.skipped {
        ctx.note(format!("skipped {} ({} hours)", d.0, d.1));
    }
    Ok(())
}

fn print_curves(curves: &[DailyCurve]) {
    println!("{:<10} {:>10} {:>10} {:>10}", "date", "a0", "a1", "a2");
    for c in curves {
        println!("{:<10} {:>10.4} {:>10.4} {:>10.4}", c.date, c.coeffs.a0, c.coeffs.a1, c.coeffs.a2);
    }
}

fn fit_lm_cmd(ctx: &Context, args: &FitArgs) -> Result<(), CliError> {
    let loaded = load_case(ctx, &args.data, None)?;
    let case = loaded.case()?;
    let pairs = case.leading_train_pairs(case.train_hours(case.n_train_days()))?;
    let model = fit_lm(&pairs)?;
    write_text(&args.out, &to_json(&model))?;
    println!("{:<10} {:>12} {:>12} {:>6}", "model", "slope", "intercept", "n");
    println!("{:<10} {:>12.6} {:>12.6} {:>6}", "lm", model.slope, model.intercept, model.n);
    Ok(())
}

fn fit_mtm_cmd(ctx: &Context, args: &FitArgs) -> Result<(), CliError> {
    let loaded = load_case(ctx, &args.data, None)?;
    let case = loaded.case()?;
    let fit = case.fit_mtm_days(case.n_train_days())?;
    for w in &fit.warnings {
        eprintln!("warning: {w:?}");
    }
    ctx.note(format!("condition estimate {:.3e}", fit.diagnostics.condition_estimate));
    write_text(&args.out, &fit.model.to_json())?;
    let m = &fit.model;
    println!("{:<6} {:>10} {:>10} {:>10}", "beta", "c0", "c1", "c2");
    println!("{:<6} {:>10.5} {:>10.5} {:>10.5}", "beta0", m.beta0.a0, m.beta0.a1, m.beta0.a2);
    println!("{:<6} {:>10.5} {:>10.5} {:>10.5}", "beta1", m.beta1.a0, m.beta1.a1, m.beta1.a2);
    println!("trained on {} day(s), sse {:.6}", m.n_train_days, m.sse);
    Ok(())
}

fn fit_stm_cmd(ctx: &Context, args: &FitStmArgs) -> Result<(), CliError> {
    let loaded = load_case(ctx, &args.data, Some(&args.stm))?;
    let case = loaded.case()?;
    let (model, fit) = case.fit_stm(loaded.cfg.stm_hours)?;
    ctx.note(format!("{} candidates, {} tied at the maximum", fit.n_candidates, fit.n_tied));
    for f in &model.ratios.fallbacks {
        eprintln!("warning: ratio fallback for coefficient {}", f.coefficient);
    }
    write_text(&args.out, &model.to_json())?;
    let c = model.day0.coeffs;
    println!("{:<10} {:>9} {:>9} {:>9} {:>7} {:>12}", "date", "a0", "a1", "a2", "sigma", "log_post");
    println!(
        "{:<10} {:>9.4} {:>9.4} {:>9.4} {:>7.2} {:>12.4}",
        model.day0.date, c.a0, c.a1, c.a2, model.map_sigma, model.log_posterior
    );
    Ok(())
}

enum AnyModel {
    Lm(LinearModel),
    Mtm(MtmModel),
    Stm(StmModel),
}

fn load_model(path: &Path) -> Result<AnyModel, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| open_error(path, e))?;
    let bad = |e: serde_json::Error| CliError::data("ModelFormat", format!("{}: {e}", path.display()));
    let value: Value = serde_json::from_str(&text).map_err(bad)?;
    let has = |k: &str| value.get(k).is_some();
    if has("beta0") {
        Ok(AnyModel::Mtm(MtmModel::from_json(&text).map_err(bad)?))
    } else if has("day0") {
        Ok(AnyModel::Stm(StmModel::from_json(&text).map_err(bad)?))
    } else if has("slope") {
        Ok(AnyModel::Lm(serde_json::from_str(&text).map_err(bad)?))
    } else {
        Err(CliError::data("ModelFormat", format!("{}: not an lm, mtm or stm model", path.display())))
    }
}

fn predict(ctx: &Context, args: &PredictArgs) -> Result<(), CliError> {
    let model = load_model(&args.model)?;
    let station = load_series(&args.station, "station")?;
    let min_hours = ctx.min_hours(args.min_hours)?;
    let by_day = station.by_day();
    let dates: Vec<NaiveDate> = if args.date.is_empty() {
        let mut n = 3;
        ctx.config.update("test_days", &mut n)?;
        let n = args.days.unwrap_or(n);
        by_day.iter().filter(|(_, p)| p.len() >= min_hours).map(|(d, _)| *d).take(n).collect()
    } else {
        args.date.clone()
    };
    if dates.is_empty() {
        return Err(CliError::data("NoDates", "no complete station days to predict"));
    }

    let mut points = Vec::new();
    for date in &dates {
        let station_day = by_day
            .get(date)
            .ok_or_else(|| CliError::data("MissingStationDay", format!("no station data on {date}")))?;
        let hourly: Vec<(u32, f64)> = match &model {
            AnyModel::Lm(m) => station_day.iter().map(|&(h, t)| (h as u32, m.predict(t))).collect(),
            AnyModel::Mtm(m) => {
                if station_day.len() < min_hours {
                    return Err(CliError::data("MissingStationDay", format!("station day {date} is incomplete")));
                }
                let (curve, _) = scenetemp::curves::smooth_day(station_day)?;
                m.predict(&curve).iter().enumerate().map(|(h, &v)| (h as u32, v)).collect()
            }
            AnyModel::Stm(m) => predict_stm(m, *date)?.iter().enumerate().map(|(h, &v)| (h as u32, v)).collect(),
        };
        for (h, v) in hourly {
            points.push(HourlyPoint { hour_start: date.and_hms_opt(h, 0, 0).expect("valid hour"), temp_c: v });
        }
    }
    let series = HourlySeries::new("prediction", points)?;
    write_hourly_csv(&series, create(&args.out)?)?;
    println!("{:<10} {:>6} {:>9} {:>9} {:>9}", "date", "hours", "min", "mean", "max");
    for date in &dates {
        let v: Vec<f64> =
            series.points().iter().filter(|p| p.hour_start.date() == *date).map(|p| p.temp_c).collect();
        let mean = v.iter().sum::<f64>() / v.len() as f64;
        let (lo, hi) = v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
        println!("{:<10} {:>6} {:>9.3} {:>9.3} {:>9.3}", date, v.len(), lo, mean, hi);
    }
    Ok(())
}

fn evaluate(ctx: &Context, args: &EvaluateArgs) -> Result<(), CliError> {
    let loaded = load_case(ctx, &args.data, Some(&args.stm))?;
    if let Some(path) = &args.predictions {
        let predictions = load_series(path, "prediction")?;
        let case = loaded.case()?;
        let mae = case.predictions_mae(&predictions)?;
        let row = serde_json::json!({
            "model": args.label,
            "mae": mae,
            "n_test_points": case.n_test_points(),
            "test_days": loaded.split.test_days,
        });
        if let Some(p) = &args.out_csv {
            write_text(p, &format!("model,mae,n_test_points\n{},{},{}\n", args.label, mae, case.n_test_points()))?;
        }
        if let Some(p) = &args.out_json {
            write_text(p, &to_json(&row))?;
        }
        println!("{:<12} {:>12} {:>8}", "model", "mae", "n");
        println!("{:<12} {:>12.6} {:>8}", args.label, mae, case.n_test_points());
        return Ok(());
    }

    let report = evaluate_models(&loaded.scene, &loaded.station, &loaded.split, &loaded.cfg)?;
    if let Some(p) = &args.out_csv {
        let mut w = create(p)?;
        report.write_csv(&mut w)?;
        w.flush()?;
    }
    if let Some(p) = &args.out_json {
        write_text(p, &report.to_json())?;
    }
    print!("{}", report.table());
    Ok(())
}

fn sweep(ctx: &Context, args: &SweepArgs) -> Result<(), CliError> {
    let loaded = load_case(ctx, &args.data, Some(&args.stm))?;
    let kind = match args.kind {
        KindArg::Mtm => SweepKind::Mtm,
        KindArg::Stm => SweepKind::Stm,
    };
    let durations: Vec<usize> = if !args.durations.is_empty() {
        args.durations.clone()
    } else {
        match kind {
            SweepKind::Mtm => (2..=12).map(|d| d * 24).collect(),
            SweepKind::Stm => (1..=8).collect(),
        }
    };
    let rows: Vec<SweepRow> = duration_sweep(&loaded.scene, &loaded.station, &loaded.split, &durations, kind, &loaded.cfg)
        .map_err(|e| match e {
            scenetemp::eval::EvalError::InvalidDurations => CliError::usage("InvalidDurations", e.to_string()),
            e => e.into(),
        })?;
    if let Some(p) = &args.out_csv {
        let mut w = create(p)?;
        write_sweep_csv(&rows, &mut w)?;
        w.flush()?;
    }
    if let Some(p) = &args.out_json {
        write_text(p, &to_json(&rows))?;
    }
    print!("{}", sweep_table(&rows));
    Ok(())
}

fn named(spec: &str) -> Result<(String, PathBuf), CliError> {
    match spec.split_once('=') {
        Some((name, path)) if !name.is_empty() && !path.is_empty() => Ok((name.to_string(), PathBuf::from(path))),
        _ => Err(CliError::usage("BadArgument", format!("expected NAME=PATH, got `{spec}`"))),
    }
}

fn assumptions(ctx: &Context, args: &AssumptionArgs) -> Result<(), CliError> {
    let min_hours = ctx.min_hours(args.min_hours)?;
    let curves = |path: &Path, id: &str| -> Result<Vec<DailyCurve>, CliError> {
        Ok(curve_series(&load_series(path, id)?, min_hours)?.curves)
    };
    let station = curves(&args.station, "station")?;
    let mut scenes = BTreeMap::new();
    for spec in &args.scene {
        let (name, path) = named(spec)?;
        scenes.insert(name.clone(), curves(&path, &name)?);
    }
    let mut others = BTreeMap::new();
    for spec in &args.other_station {
        let (name, path) = named(spec)?;
        others.insert(name.clone(), curves(&path, &name)?);
    }
    let day0 = match args.day0 {
        Some(d) => d,
        None => station
            .first()
            .map(|c| c.date)
            .ok_or_else(|| CliError::data("NoCompleteDays", "station has no complete days"))?,
    };
    let report = assumption_report(&scenes, &station, &others, day0, args.alpha)?;
    let mut w = create(&args.out)?;
    report.write_csv(&mut w)?;
    w.flush()?;

    println!("{:<8} {:<14} {:>5} {:>11} {:>11} {:>6}", "test", "location", "coef", "statistic", "p_value", "passed");
    for r in &report.tests {
        println!(
            "{:<8} {:<14} {:>5} {:>11.4} {:>11.4} {:>6}",
            r.test_kind.as_str(),
            r.location,
            r.coefficient,
            r.result.statistic,
            r.result.p_value,
            r.passed
        );
    }
    for m in &report.ratio_mae {
        ctx.note(format!("ratio mae {} b{}: {:.4}", m.location, m.coefficient, m.mae));
    }
    Ok(())
}

fn synth(args: &SynthArgs) -> Result<(), CliError> {
    let mut spec = match (args.preset, args.transform) {
        (Some(kind), _) => {
            let mut spec = quasi_indoor_preset(kind);
            if args.days != PRESET_DAYS || args.station_seed != STATION_SEED {
                spec.station_coeffs = reference_station(args.days, args.station_seed);
                spec.n_days = args.days;
            }
            spec
        }
        (None, Some(t)) => {
            let transform = match t {
                TransformArg::Identity => SceneTransform::Identity,
                TransformArg::Affine => SceneTransform::Affine { slope: args.slope, offset: args.offset },
            };
            WorldSpec::new(reference_station(args.days, args.station_seed), transform)
        }
        (None, None) => unreachable!("clap requires a preset or a transform"),
    };
    if let Some(sd) = args.noise_sd {
        spec.noise_sd = sd;
    }
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    let world = generate(&spec)?;
    let dir = &args.out_dir;
    std::fs::create_dir_all(dir)?;
    write_station_csv(&world.station, create(&dir.join("station.csv"))?)?;
    write_hourly_csv(&world.scene, create(&dir.join("scene.csv"))?)?;
    if !args.no_logger {
        write_logger_csv(&logger_records(&spec)?, create(&dir.join("logger.csv"))?)?;
    }
    write_text(&dir.join("world.json"), &to_json(&spec))?;

    let first = spec.date(0);
    println!("{:<12} {:>5} {:>10} {:>10} {:>8} {:>6}", "world", "days", "first", "last", "noise", "seed");
    println!(
        "{:<12} {:>5} {:>10} {:>10} {:>8} {:>6}",
        args.preset.map_or("custom", |k| k.name()),
        spec.n_days,
        first,
        first + Duration::days(spec.n_days as i64 - 1),
        spec.noise_sd,
        spec.seed
    );
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(p) => FlatConfig::load(p)?,
        None => FlatConfig::default(),
    };
    config.check_keys(&EvalConfig::all_keys())?;
    let ctx = Context { config, verbose: cli.verbose > 0 };
    match &cli.command {
        Command::Ingest(a) => ingest(a),
        Command::Smooth(a) => smooth(&ctx, a),
        Command::FitLm(a) => fit_lm_cmd(&ctx, a),
        Command::FitMtm(a) => fit_mtm_cmd(&ctx, a),
        Command::FitStm(a) => fit_stm_cmd(&ctx, a),
        Command::Predict(a) => predict(&ctx, a),
        Command::Evaluate(a) => evaluate(&ctx, a),
        Command::Sweep(a) => sweep(&ctx, a),
        Command::Assumptions(a) => assumptions(&ctx, a),
        Command::Synth(a) => synth(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
                eprintln!("{}", CliError::usage("Usage", first));
                return ExitCode::from(2);
            }
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

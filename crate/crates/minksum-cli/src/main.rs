//! Command-line frontend for closed-form Minkowski boundaries.
//!
//! Subcommands:
//!
//! - `minksum`: evaluate the combined boundary of two bodies over a grid.
//! - `validate`: check a boundary against independent slow constructions.
//! - `bench`: time the closed form against the sampling baselines.
//! - `cspace`: sweep robot orientations into C-obstacle slices.
//! - `collide`: separation status, distance, and witness points.
//! - `plot2d`: render bodies and a boundary as SVG.
//!
//! Exit codes: 0 on success, 1 when `validate` finds a threshold violation,
//! 2 on usage errors or malformed input. Every command is deterministic
//! given its inputs, seed, and configuration; `MINKSUM_THREADS` caps the
//! worker pool without changing any output.

mod manifest;
mod svg;

use std::collections::HashSet;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand};
use nalgebra::Vector2;
use serde_json::json;

use minksum::baseline::{
    definition_sum_samples, edge_sort_sum2d, hull2d, kissing_errors, support_check,
    surface_samples,
};
use minksum::collide::{proximity_query, QueryMethod};
use minksum::cspace::{cobstacle_slices, Scene};
use minksum::io::{
    proximity_json, read_body_file, read_cloud_csv, read_scene_file, save_cloud, write_cloud,
    AnyBody, AnyScene, CloudFormat,
};
use minksum::nls::SolverConfig;
use minksum::{
    boundary_cloud, BodyInstance, BoundaryCloud, ConvexBody, GridSpec, MinkMode, MinkSumQuery,
    Param2, SphericalParam, Superquadric2,
};

use manifest::RunManifest;

#[derive(Parser)]
#[command(
    name = "minksum",
    version,
    about = "Exact Minkowski sum and contact-space boundaries for convex superquadrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the combined boundary of two bodies over a parameter grid.
    Minksum(MinksumArgs),
    /// Check a computed boundary against slow independent oracles.
    Validate(ValidateArgs),
    /// Time the closed form against the sampling baselines.
    Bench(BenchArgs),
    /// Sweep robot orientations into configuration-space obstacle slices.
    Cspace(CspaceArgs),
    /// Report separation status, distance, and witness points.
    Collide(CollideArgs),
    /// Render 2D bodies and their combined boundary as SVG.
    Plot2d(Plot2dArgs),
}

/// Grid size argument: `N`, or `ExO` for an eta-by-omega 3D grid.
#[derive(Clone, Copy, Debug)]
enum GridArg {
    Square(usize),
    Rect(usize, usize),
}

impl FromStr for GridArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("grid: expected a positive integer, got `{t}`"))
        };
        match s.split_once(['x', 'X']) {
            Some((a, b)) => Ok(GridArg::Rect(num(a)?, num(b)?)),
            None => Ok(GridArg::Square(num(s)?)),
        }
    }
}

/// Resolves an optional grid argument against the body dimension.
/// Defaults: 50 points in 2D, a 9x14 grid (100 points) in 3D.
fn grid_spec(arg: Option<GridArg>, dim: usize) -> Result<GridSpec> {
    match (dim, arg) {
        (2, None) => Ok(GridSpec::TwoD { n: 50 }),
        (2, Some(GridArg::Square(n))) => Ok(GridSpec::TwoD { n }),
        (2, Some(GridArg::Rect(..))) => {
            bail!("grid: a 2D boundary takes a single count, not `ExO`")
        }
        (3, None) => Ok(GridSpec::ThreeD { n_eta: 9, n_omega: 14 }),
        (3, Some(GridArg::Square(n))) => Ok(GridSpec::ThreeD { n_eta: n, n_omega: n }),
        (3, Some(GridArg::Rect(a, b))) => Ok(GridSpec::ThreeD { n_eta: a, n_omega: b }),
        (d, _) => bail!("unsupported dimension {d}"),
    }
}

fn grid_string(spec: &GridSpec) -> String {
    match *spec {
        GridSpec::TwoD { n } => n.to_string(),
        GridSpec::ThreeD { n_eta, n_omega } => format!("{n_eta}x{n_omega}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = setup_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Applies the `MINKSUM_THREADS` cap before any parallel work starts.
fn setup_threads() -> Result<()> {
    let Ok(v) = std::env::var("MINKSUM_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .with_context(|| format!("MINKSUM_THREADS must be a positive integer, got `{v}`"))?;
    ensure!(n >= 1, "MINKSUM_THREADS must be at least 1");
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring the worker pool")?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Cmd::Minksum(a) => run_minksum(a),
        Cmd::Validate(a) => run_validate(a),
        Cmd::Bench(a) => run_bench(a),
        Cmd::Cspace(a) => run_cspace(a),
        Cmd::Collide(a) => run_collide(a),
        Cmd::Plot2d(a) => run_plot2d(a),
    }
}

/// Reads two body files and requires matching dimensions.
fn read_pair(p1: &Path, p2: &Path) -> Result<(AnyBody, AnyBody)> {
    let b1 = read_body_file(p1).with_context(|| format!("reading body `{}`", p1.display()))?;
    let b2 = read_body_file(p2).with_context(|| format!("reading body `{}`", p2.display()))?;
    if b1.dim() != b2.dim() {
        bail!("bodies must share a dimension, got {}D and {}D", b1.dim(), b2.dim());
    }
    Ok((b1, b2))
}

/// Runs one generic closure on a dimension-matched pair.
macro_rules! dispatch_pair {
    ($pair:expr, |$b1:ident, $b2:ident| $body:expr) => {
        match $pair {
            (AnyBody::D2($b1), AnyBody::D2($b2)) => $body,
            (AnyBody::D3($b1), AnyBody::D3($b2)) => $body,
            _ => unreachable!("dimensions checked at read time"),
        }
    };
}

fn emit_json(value: &serde_json::Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n")
            .with_context(|| format!("writing `{}`", p.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// minksum

#[derive(Args)]
struct MinksumArgs {
    /// JSON description of the first body.
    body1: PathBuf,
    /// JSON description of the second body.
    body2: PathBuf,
    /// Grid size: a point count in 2D; `N` or `ExO` (eta x omega) in 3D.
    #[arg(long)]
    grid: Option<GridArg>,
    /// Boundary to compute: `contact` (second body negated) or `sum`.
    #[arg(long, default_value = "contact", value_parser = MinkMode::from_str)]
    mode: MinkMode,
    /// Output format.
    #[arg(long, default_value = "csv", value_parser = CloudFormat::from_str)]
    format: CloudFormat,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a JSON run manifest (config, timings, outputs).
    #[arg(long)]
    manifest: Option<PathBuf>,
}

fn run_minksum(a: MinksumArgs) -> Result<ExitCode> {
    let mut man = RunManifest::new(
        "minksum",
        json!({
            "body1": a.body1.display().to_string(),
            "body2": a.body2.display().to_string(),
            "mode": a.mode.to_string(),
        }),
    );

    let t = Instant::now();
    let pair = read_pair(&a.body1, &a.body2)?;
    man.stage("read", t);

    dispatch_pair!(pair, |b1, b2| {
        let spec = grid_spec(a.grid, b1.shape().dim())?;
        man.config["grid"] = json!(grid_string(&spec));
        let t = Instant::now();
        let cloud = boundary_cloud(&MinkSumQuery::new(b1, b2, a.mode), &spec)?;
        man.stage("evaluate", t);
        let t = Instant::now();
        emit_cloud(&cloud, a.format, a.out.as_deref())?;
        man.stage("write", t);
    });

    if let Some(out) = &a.out {
        man.output(out);
    }
    finish_manifest(man, a.manifest.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn emit_cloud<B: ConvexBody>(
    cloud: &BoundaryCloud<B>,
    format: CloudFormat,
    out: Option<&Path>,
) -> Result<()> {
    match out {
        Some(path) => save_cloud(cloud, format, path)
            .with_context(|| format!("writing `{}`", path.display()))?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_cloud(cloud, format, &mut lock)?;
            if format == CloudFormat::Json {
                writeln!(lock)?;
            }
        }
    }
    Ok(())
}

fn finish_manifest(man: RunManifest, path: Option<&Path>) -> Result<()> {
    if let Some(p) = path {
        man.write(p)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// validate

#[derive(Args)]
struct ValidateArgs {
    body1: PathBuf,
    body2: PathBuf,
    /// Grid size for the boundary under test.
    #[arg(long)]
    grid: Option<GridArg>,
    #[arg(long, default_value = "contact", value_parser = MinkMode::from_str)]
    mode: MinkMode,
    /// Threshold on the mean implicit-value error of reconstructed contact
    /// points. Default: 1e-12 in 2D, 1e-8 in 3D.
    #[arg(long)]
    implicit_tol: Option<f64>,
    /// Threshold on the mean gradient-alignment error at contact.
    #[arg(long, default_value_t = 1e-5)]
    gradient_tol: f64,
    /// Threshold on the worst support-function violation.
    #[arg(long, default_value_t = 1e-9)]
    support_tol: f64,
    /// Per-body sample grid for the support oracle.
    #[arg(long)]
    support_grid: Option<GridArg>,
    /// Report file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
}

fn run_validate(a: ValidateArgs) -> Result<ExitCode> {
    let mut man = RunManifest::new(
        "validate",
        json!({
            "body1": a.body1.display().to_string(),
            "body2": a.body2.display().to_string(),
            "mode": a.mode.to_string(),
        }),
    );

    let t = Instant::now();
    let pair = read_pair(&a.body1, &a.body2)?;
    man.stage("read", t);

    let report = dispatch_pair!(pair, |b1, b2| {
        let dim = b1.shape().dim();
        let spec = grid_spec(a.grid, dim)?;
        let support_spec = match a.support_grid {
            Some(g) => grid_spec(Some(g), dim)?,
            None if dim == 2 => GridSpec::TwoD { n: 256 },
            None => GridSpec::ThreeD { n_eta: 24, n_omega: 24 },
        };
        let implicit_tol = a.implicit_tol.unwrap_or(if dim == 2 { 1e-12 } else { 1e-8 });
        man.config["grid"] = json!(grid_string(&spec));
        man.config["support_grid"] = json!(grid_string(&support_spec));

        let t = Instant::now();
        let query = MinkSumQuery::new(b1.clone(), b2.clone(), a.mode);
        let cloud = boundary_cloud(&query, &spec)?;
        man.stage("evaluate", t);

        let t = Instant::now();
        let kissing = kissing_errors(&cloud)?;
        let s1 = surface_samples(&b1, &support_spec)?;
        let s2 = surface_samples(&b2, &support_spec)?;
        let violation = support_check(&cloud, &s1, &s2);
        man.stage("check", t);

        let pass = kissing.mean_implicit <= implicit_tol
            && kissing.mean_gradient <= a.gradient_tol
            && violation <= a.support_tol;
        json!({
            "grid_points": cloud.len(),
            "kissing": {
                "mean_implicit": kissing.mean_implicit,
                "max_implicit": kissing.max_implicit,
                "mean_gradient": kissing.mean_gradient,
                "max_gradient": kissing.max_gradient,
            },
            "support": {
                "max_violation": violation,
                "samples_per_body": support_spec.total_points(),
            },
            "thresholds": {
                "mean_implicit": implicit_tol,
                "mean_gradient": a.gradient_tol,
                "support": a.support_tol,
            },
            "pass": pass,
        })
    });

    emit_json(&report, a.out.as_deref())?;
    if let Some(out) = &a.out {
        man.output(out);
    }
    finish_manifest(man, a.manifest.as_deref())?;
    if report["pass"].as_bool() == Some(true) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

// ---------------------------------------------------------------------------
// bench

#[derive(Args)]
struct BenchArgs {
    body1: PathBuf,
    body2: PathBuf,
    /// Per-body sample counts to sweep (2D: also the cloud grid size;
    /// 3D: per-axis grid count).
    #[arg(long, value_delimiter = ',', default_value = "100,200,400")]
    sizes: Vec<usize>,
    /// Timed repetitions per size; the median is reported after one
    /// discarded warm-up run.
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value = "contact", value_parser = MinkMode::from_str)]
    mode: MinkMode,
    /// CSV output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
}

/// Median wall time in microseconds over `reps` runs, after one warm-up.
fn median_micros<F: FnMut()>(reps: usize, mut f: F) -> f64 {
    f();
    let mut times: Vec<f64> = (0..reps)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64() * 1e6
        })
        .collect();
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        0.5 * (times[mid - 1] + times[mid])
    }
}

fn run_bench(a: BenchArgs) -> Result<ExitCode> {
    ensure!(a.reps >= 1, "bench needs at least one repetition");
    ensure!(!a.sizes.is_empty(), "bench needs at least one size");
    let mut man = RunManifest::new(
        "bench",
        json!({
            "body1": a.body1.display().to_string(),
            "body2": a.body2.display().to_string(),
            "sizes": a.sizes,
            "reps": a.reps,
            "mode": a.mode.to_string(),
        }),
    );

    let t = Instant::now();
    let pair = read_pair(&a.body1, &a.body2)?;
    man.stage("read", t);

    let t = Instant::now();
    let mut wtr = csv::Writer::from_writer(out_writer(a.out.as_deref())?);
    match pair {
        (AnyBody::D2(b1), AnyBody::D2(b2)) => bench2d(&a, b1, b2, &mut wtr)?,
        (AnyBody::D3(b1), AnyBody::D3(b2)) => bench3d(&a, b1, b2, &mut wtr)?,
        _ => unreachable!("dimensions checked at read time"),
    }
    wtr.flush()?;
    man.stage("bench", t);

    if let Some(out) = &a.out {
        man.output(out);
    }
    finish_manifest(man, a.manifest.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn out_writer(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(
            std::fs::File::create(p).with_context(|| format!("creating `{}`", p.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    })
}

/// 2D: closed form vs hull-of-definition-sums vs polygon edge merge.
fn bench2d<W: Write>(
    a: &BenchArgs,
    b1: BodyInstance<Superquadric2>,
    b2: BodyInstance<Superquadric2>,
    wtr: &mut csv::Writer<W>,
) -> Result<()> {
    wtr.write_record(["n", "points", "closed_us", "hull_us", "edge_us"])?;
    let query = MinkSumQuery::new(b1.clone(), b2.clone(), a.mode);
    for &n in &a.sizes {
        let spec = GridSpec::TwoD { n };
        let closed = median_micros(a.reps, || {
            boundary_cloud(&query, &spec).expect("closed-form cloud");
        });

        let s1 = surface_samples(&b1, &spec)?;
        let s2 = surface_samples(&b2, &spec)?;
        let hull = median_micros(a.reps, || {
            hull2d(&definition_sum_samples(&s1, &s2, a.mode)).expect("hull baseline");
        });

        // The edge merge consumes convex polygons; reflect the second body's
        // samples first in contact mode.
        let s2m: Vec<Vector2<f64>> = match a.mode {
            MinkMode::Sum => s2.clone(),
            MinkMode::Contact => s2.iter().map(|v| -v).collect(),
        };
        let p1 = hull2d(&s1)?;
        let p2 = hull2d(&s2m)?;
        let edge = median_micros(a.reps, || {
            edge_sort_sum2d(&p1, &p2).expect("edge-merge baseline");
        });

        wtr.write_record([
            n.to_string(),
            n.to_string(),
            format!("{closed:.3}"),
            format!("{hull:.3}"),
            format!("{edge:.3}"),
        ])?;
    }
    Ok(())
}

/// 3D: closed form only; no polygon baselines exist off the plane.
fn bench3d<W: Write>(
    a: &BenchArgs,
    b1: BodyInstance<minksum::Superquadric3>,
    b2: BodyInstance<minksum::Superquadric3>,
    wtr: &mut csv::Writer<W>,
) -> Result<()> {
    wtr.write_record(["n", "points", "closed_us"])?;
    let query = MinkSumQuery::new(b1, b2, a.mode);
    for &n in &a.sizes {
        ensure!(n >= 2, "3D grid needs at least 2 per axis, got {n}");
        let spec = GridSpec::ThreeD { n_eta: n, n_omega: n };
        let closed = median_micros(a.reps, || {
            boundary_cloud(&query, &spec).expect("closed-form cloud");
        });
        wtr.write_record([
            n.to_string(),
            spec.total_points().to_string(),
            format!("{closed:.3}"),
        ])?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// cspace

#[derive(Args)]
struct CspaceArgs {
    /// JSON scene description: a robot shape and placed obstacles.
    scene: PathBuf,
    /// Number of robot orientations to sweep.
    #[arg(long, default_value_t = 20)]
    orientations: usize,
    /// Boundary grid per (orientation, obstacle) pair.
    #[arg(long)]
    grid: Option<GridArg>,
    /// Seed for 3D orientation sampling; 2D orientations are evenly spaced.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory: one cloud CSV per (orientation, obstacle) pair
    /// plus `manifest.json`.
    #[arg(long)]
    out: PathBuf,
}

fn run_cspace(a: CspaceArgs) -> Result<ExitCode> {
    let mut man = RunManifest::new(
        "cspace",
        json!({
            "scene": a.scene.display().to_string(),
            "orientations": a.orientations,
            "out": a.out.display().to_string(),
        }),
    );
    man.seed = Some(a.seed);

    let t = Instant::now();
    let scene = read_scene_file(&a.scene)
        .with_context(|| format!("reading scene `{}`", a.scene.display()))?;
    man.stage("read", t);

    match scene {
        AnyScene::D2(s) => cspace_dim(&a, s, man),
        AnyScene::D3(s) => cspace_dim(&a, s, man),
    }
}

fn cspace_dim<B: ConvexBody>(
    a: &CspaceArgs,
    scene: Scene<B>,
    mut man: RunManifest,
) -> Result<ExitCode> {
    let dim = scene.robot().dim();
    let spec = grid_spec(a.grid, dim)?;
    man.config["grid"] = json!(grid_string(&spec));

    let orientations = B::sample_orientations(a.orientations, a.seed);
    man.config["orientation_components"] =
        json!(orientations.iter().map(B::orientation_components).collect::<Vec<_>>());

    let t = Instant::now();
    let set = cobstacle_slices(&scene, &orientations, &spec)?;
    man.stage("sweep", t);

    let t = Instant::now();
    std::fs::create_dir_all(&a.out)
        .with_context(|| format!("creating output directory `{}`", a.out.display()))?;
    let n_obs = scene.obstacles().len();
    let failed: HashSet<(usize, usize)> =
        set.failures.iter().map(|f| (f.orientation, f.obstacle)).collect();
    for (oi, slice) in set.slices.iter().enumerate() {
        let mut clouds = slice.clouds.iter();
        for ki in 0..n_obs {
            if failed.contains(&(oi, ki)) {
                continue;
            }
            let cloud = clouds.next().expect("one cloud per non-failed pair");
            let path = a.out.join(format!("slice_{oi:03}_{ki:03}.csv"));
            save_cloud(cloud, CloudFormat::Csv, &path)
                .with_context(|| format!("writing `{}`", path.display()))?;
            man.output(&path);
        }
    }
    man.stage("write", t);

    man.config["total_points"] = json!(set.total_points);
    man.config["micros_per_point"] = json!(set.micros_per_point());
    man.config["failures"] = json!(set
        .failures
        .iter()
        .map(|f| json!({
            "orientation": f.orientation,
            "obstacle": f.obstacle,
            "message": f.message,
        }))
        .collect::<Vec<_>>());

    let manifest_path = a.out.join("manifest.json");
    man.write(&manifest_path)?;

    println!(
        "{} slices x {} obstacles: {} points in {:.1} ms ({:.3} us/point), {} failures",
        set.slices.len(),
        n_obs,
        set.total_points,
        set.elapsed.as_secs_f64() * 1e3,
        set.micros_per_point(),
        set.failures.len(),
    );
    for f in &set.failures {
        eprintln!(
            "warning: orientation {} obstacle {} failed: {}",
            f.orientation, f.obstacle, f.message
        );
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// collide

#[derive(Args)]
struct CollideArgs {
    body1: PathBuf,
    body2: PathBuf,
    /// Query method: `ray` (status and ratio), `normal` or `common`
    /// (adds distance and witness points when separated).
    #[arg(long, default_value = "ray", value_parser = QueryMethod::from_str)]
    method: QueryMethod,
    /// Report file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
}

fn run_collide(a: CollideArgs) -> Result<ExitCode> {
    let mut man = RunManifest::new(
        "collide",
        json!({
            "body1": a.body1.display().to_string(),
            "body2": a.body2.display().to_string(),
            "method": a.method,
        }),
    );

    let t = Instant::now();
    let pair = read_pair(&a.body1, &a.body2)?;
    man.stage("read", t);

    let report = dispatch_pair!(pair, |b1, b2| {
        let query = MinkSumQuery::contact(b1, b2);
        let t = Instant::now();
        let result = proximity_query(&query, a.method, &SolverConfig::default())?;
        man.stage("solve", t);
        proximity_json(&result)
    });

    emit_json(&report, a.out.as_deref())?;
    if let Some(out) = &a.out {
        man.output(out);
    }
    finish_manifest(man, a.manifest.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// plot2d

#[derive(Args)]
struct Plot2dArgs {
    body1: PathBuf,
    body2: PathBuf,
    /// Boundary grid size (single count; the drawing is planar).
    #[arg(long)]
    grid: Option<GridArg>,
    #[arg(long, default_value = "contact", value_parser = MinkMode::from_str)]
    mode: MinkMode,
    /// Draw this many copies of the second body at evenly spaced boundary
    /// points instead of at its own center.
    #[arg(long, default_value_t = 0)]
    placements: usize,
    /// Reuse a cloud CSV instead of evaluating the boundary.
    #[arg(long)]
    cloud: Option<PathBuf>,
    /// SVG output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
}

const BODY1_COLOR: &str = "#1f77b4";
const BODY2_COLOR: &str = "#2ca02c";
const BOUNDARY_COLOR: &str = "#d62728";

fn run_plot2d(a: Plot2dArgs) -> Result<ExitCode> {
    let mut man = RunManifest::new(
        "plot2d",
        json!({
            "body1": a.body1.display().to_string(),
            "body2": a.body2.display().to_string(),
            "placements": a.placements,
        }),
    );

    let t = Instant::now();
    let pair = read_pair(&a.body1, &a.body2)?;
    let (AnyBody::D2(b1), AnyBody::D2(b2)) = pair else {
        bail!("plot2d draws planar scenes only; these bodies are 3D");
    };
    man.stage("read", t);

    let t = Instant::now();
    let (mode, points): (MinkMode, Vec<Vector2<f64>>) = match &a.cloud {
        Some(path) => {
            let file = std::fs::File::open(path)
                .with_context(|| format!("opening cloud `{}`", path.display()))?;
            let data = read_cloud_csv(BufReader::new(file))?;
            for p in &data.points {
                ensure!(p.len() == 2, "cloud `{}` is not 2D", path.display());
            }
            man.config["cloud"] = json!(path.display().to_string());
            (data.mode, data.points.iter().map(|p| Vector2::new(p[0], p[1])).collect())
        }
        None => {
            let spec = grid_spec(a.grid, 2)?;
            man.config["grid"] = json!(grid_string(&spec));
            let query = MinkSumQuery::new(b1.clone(), b2.clone(), a.mode);
            (a.mode, boundary_cloud(&query, &spec)?.points)
        }
    };
    man.config["mode"] = json!(mode.to_string());
    man.stage("evaluate", t);

    // Cloud points are displacements between centers; anchor them in the
    // workspace. In contact mode they are second-body centers that touch the
    // first body, so the offset is the first body's center; in sum mode the
    // summed body sits at the sum of the centers.
    let offset = match mode {
        MinkMode::Contact => *b1.center(),
        MinkMode::Sum => *b1.center() + *b2.center(),
    };

    let t = Instant::now();
    let mut fig = svg::Figure::new();
    fig.add_curve(outline(&b1, 256), BODY1_COLOR, 1.0);
    if a.placements == 0 {
        fig.add_curve(outline(&b2, 256), BODY2_COLOR, 1.0);
    }
    if !points.is_empty() {
        fig.add_curve(
            points.iter().map(|p| (p.x + offset.x, p.y + offset.y)).collect(),
            BOUNDARY_COLOR,
            1.0,
        );
    }
    if a.placements > 0 {
        ensure!(!points.is_empty(), "--placements needs a non-empty boundary");
        for i in 0..a.placements {
            let at = points[i * points.len() / a.placements] + offset;
            fig.add_curve(outline_at(&b2, at, 128), BODY2_COLOR, 0.55);
        }
    }
    let rendered = fig.render();
    match &a.out {
        Some(p) => {
            std::fs::write(p, &rendered).with_context(|| format!("writing `{}`", p.display()))?;
            man.output(p);
        }
        None => print!("{rendered}"),
    }
    man.stage("render", t);

    finish_manifest(man, a.manifest.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

/// A body's world outline: linear map and center applied.
fn outline(body: &BodyInstance<Superquadric2>, n: usize) -> Vec<(f64, f64)> {
    let params = Param2::grid(&GridSpec::TwoD { n }).expect("positive outline resolution");
    params
        .iter()
        .map(|p| {
            let w = body.world_point(&body.shape().surface_point(p));
            (w.x, w.y)
        })
        .collect()
}

/// A body's outline with its center replaced by `at`.
fn outline_at(
    body: &BodyInstance<Superquadric2>,
    at: Vector2<f64>,
    n: usize,
) -> Vec<(f64, f64)> {
    let params = Param2::grid(&GridSpec::TwoD { n }).expect("positive outline resolution");
    params
        .iter()
        .map(|p| {
            let w = body.linear() * body.shape().surface_point(p) + at;
            (w.x, w.y)
        })
        .collect()
}

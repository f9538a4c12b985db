//! `voidmie`: generate synthetic clouds, locate voids, re-render reports.
//!
//! Exit status is 0 on success, 1 for usage errors (bad flags or
//! parameters) and 2 for data errors (unreadable or degenerate input,
//! failed writes).

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use voidmie::datagen::{generate, EnsembleKind, EnsembleSpec};
use voidmie::engine::{InitialScope, SweepConfig};
use voidmie::io::{
    load_cloud, run, save_cloud, save_report, CloudFormat, InputSource, Report, ReportFormat,
    RunConfig,
};
use voidmie::locator::{LocatorConfig, StartPolicy};
use voidmie::pipeline::PipelineConfig;
use voidmie::svg::{save_svg, Layers, Scene};
use voidmie::Error;

#[derive(Parser)]
#[command(
    name = "voidmie",
    version,
    about = "Void detection in planar point clouds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded synthetic cloud to a file.
    Generate(GenerateArgs),
    /// Locate the void and grow its envelope.
    FindVoid(FindVoidArgs),
    /// Re-render the SVG or history CSV of a saved JSON report.
    Report(ReportArgs),
}

/// Ensemble flags. Unset fields take the ensemble defaults.
#[derive(Args)]
struct EnsembleArgs {
    #[arg(long)]
    kind: Option<EnsembleKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long)]
    jitter: Option<f64>,
    #[arg(long)]
    offset_factor: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
}

impl EnsembleArgs {
    fn any_set(&self) -> bool {
        self.kind.is_some()
            || self.n.is_some()
            || self.radius.is_some()
            || self.jitter.is_some()
            || self.offset_factor.is_some()
            || self.seed.is_some()
    }

    fn spec(&self) -> Result<EnsembleSpec, Error> {
        let d = EnsembleSpec::default();
        let spec = EnsembleSpec {
            kind: self.kind.unwrap_or(d.kind),
            n: self.n.unwrap_or(d.n),
            radius: self.radius.unwrap_or(d.radius),
            jitter: self.jitter.unwrap_or(d.jitter),
            offset_factor: self.offset_factor.unwrap_or(d.offset_factor),
            seed: self.seed.unwrap_or(d.seed),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    ensemble: EnsembleArgs,
    /// Cloud file to write.
    #[arg(long, short)]
    output: PathBuf,
    /// csv or json; defaults to the output extension.
    #[arg(long)]
    format: Option<CloudFormat>,
}

#[derive(Args)]
struct FindVoidArgs {
    /// Cloud file; without it an ensemble is generated from the flags below.
    #[arg(long)]
    input: Option<PathBuf>,
    /// csv or json; defaults to the input extension.
    #[arg(long)]
    format: Option<CloudFormat>,
    #[command(flatten)]
    ensemble: EnsembleArgs,
    /// Sweep steps per segment, at least 3 and at most the cloud size.
    #[arg(long, default_value_t = 31)]
    k: usize,
    #[arg(long, default_value_t = voidmie::engine::DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// all-pairs, single-start:<id> or random-start:<seed>.
    #[arg(long, default_value = "all-pairs")]
    policy: StartPolicy,
    /// best-only, all-from-best-endpoint or top-m:<m>.
    #[arg(long, default_value = "all-from-best-endpoint")]
    scope: InitialScope,
    /// Number of best segments kept for the report and figure.
    #[arg(long, default_value_t = 1)]
    top_m: usize,
    /// Absolute distance within which nearest points tie.
    #[arg(long, default_value_t = voidmie::engine::DEFAULT_TIE_TOL)]
    tie_tol: f64,
    /// JSON report path; the report goes to stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Per-order history table.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Comma-separated SVG layers: points, hull, segments, dv, polygon, all.
    #[arg(long, default_value = "all")]
    layers: Layers,
    /// Record stage timings in the report (breaks byte-identical reruns).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ReportArgs {
    /// Saved JSON report.
    #[arg(long)]
    input: PathBuf,
    /// Cloud for the points layer.
    #[arg(long)]
    cloud: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value = "all")]
    layers: Layers,
}

fn cloud_format(flag: Option<CloudFormat>, path: &Path) -> CloudFormat {
    flag.unwrap_or_else(|| CloudFormat::from_path(path))
}

/// Checks every parameter before any work is done.
fn run_config(a: &FindVoidArgs) -> Result<RunConfig, Error> {
    let sweep = SweepConfig::new(a.k, a.tie_tol, a.max_order)?;
    let locator = LocatorConfig::new(a.policy, a.top_m)?;
    let input = match &a.input {
        Some(path) => {
            if a.ensemble.any_set() {
                return Err(Error::InvalidConfig(
                    "--input cannot be combined with ensemble flags".into(),
                ));
            }
            InputSource::File {
                path: path.clone(),
                format: cloud_format(a.format, path),
            }
        }
        None => {
            let spec = a.ensemble.spec()?;
            sweep.check_cloud_size(spec.n)?;
            InputSource::Ensemble(spec)
        }
    };
    Ok(RunConfig {
        input,
        pipeline: PipelineConfig {
            locator,
            sweep,
            scope: a.scope,
        },
        timings: a.timings,
    })
}

fn find_void(a: &FindVoidArgs) -> Result<(), Error> {
    let cfg = run_config(a)?;
    let out = run(&cfg)?;
    match &a.report {
        Some(path) => save_report(&out.report, path, ReportFormat::Json)?,
        None => {
            let text = out.report.to_json()?;
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    if let Some(path) = &a.csv {
        save_report(&out.report, path, ReportFormat::Csv)?;
    }
    if let Some(path) = &a.svg {
        save_svg(
            &Scene::from_report(&out.report, Some(&out.cloud)),
            a.layers,
            path,
        )?;
    }
    Ok(())
}

fn rerender(a: &ReportArgs) -> Result<(), Error> {
    let report = Report::load(&a.input)?;
    let cloud = match &a.cloud {
        Some(path) => {
            let c = load_cloud(path, CloudFormat::from_path(path))?;
            if c.len() != report.n {
                return Err(Error::Parse {
                    line: 0,
                    reason: format!("cloud has {} points, report expects {}", c.len(), report.n),
                });
            }
            Some(c)
        }
        None => None,
    };
    if let Some(path) = &a.svg {
        save_svg(&Scene::from_report(&report, cloud.as_ref()), a.layers, path)?;
    }
    if let Some(path) = &a.csv {
        save_report(&report, path, ReportFormat::Csv)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or_default();
            eprintln!(
                "voidmie: usage error: {}",
                first.trim_start_matches("error: ")
            );
            return ExitCode::from(1);
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => (|| {
            let spec = a.ensemble.spec()?;
            let cloud = generate(&spec)?;
            save_cloud(&cloud, &a.output, cloud_format(a.format, &a.output))
        })(),
        Command::FindVoid(a) => find_void(a),
        Command::Report(a) => rerender(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is_usage() => {
            eprintln!("voidmie: usage error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("voidmie: data error: {e}");
            ExitCode::from(2)
        }
    }
}

//! One complete run: obtain the cloud, run the pipeline, build the report.

use std::path::PathBuf;

use super::report::{EnsembleEcho, InputEcho, Real, Report, RunEcho};
use super::{load_cloud, CloudFormat};
use crate::datagen::{generate, EnsembleSpec};
use crate::error::Result;
use crate::geom::PointCloud;
use crate::pipeline::{find_void, PipelineConfig, PipelineOutput};

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    File { path: PathBuf, format: CloudFormat },
    Ensemble(EnsembleSpec),
}

impl InputSource {
    pub fn load(&self) -> Result<PointCloud<f64>> {
        match self {
            InputSource::File { path, format } => load_cloud(path, *format),
            InputSource::Ensemble(spec) => generate(spec),
        }
    }

    fn echo(&self) -> InputEcho {
        match self {
            InputSource::File { path, .. } => InputEcho {
                path: Some(path.display().to_string()),
                ensemble: None,
            },
            InputSource::Ensemble(spec) => InputEcho {
                path: None,
                ensemble: Some(EnsembleEcho {
                    kind: spec.kind.to_string(),
                    n: spec.n,
                    radius: Real(spec.radius),
                    jitter: Real(spec.jitter),
                    offset_factor: Real(spec.offset_factor),
                    seed: spec.seed,
                }),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: InputSource,
    pub pipeline: PipelineConfig<f64>,
    /// Include stage timings in the report.
    pub timings: bool,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub cloud: PointCloud<f64>,
    pub output: PipelineOutput<f64>,
    pub report: Report,
}

pub fn run(cfg: &RunConfig) -> Result<RunOutcome> {
    let cloud = cfg.input.load()?;
    let output = find_void(&cloud, &cfg.pipeline)?;
    let echo = RunEcho::new(cfg.input.echo(), &cfg.pipeline);
    let report = Report::new(echo, &cloud, &output, cfg.timings);
    Ok(RunOutcome {
        cloud,
        output,
        report,
    })
}

//! Run manifests: a JSON record of what a command did.

use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;

/// What a command ran and produced: the effective configuration, wall-clock
/// time per stage, and every file written. A path listed in `outputs` is
/// guaranteed to exist when the command exits successfully.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub config: serde_json::Value,
    /// `[stage name, milliseconds]` pairs in execution order.
    pub stages_ms: Vec<(String, f64)>,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, config: serde_json::Value) -> Self {
        RunManifest {
            command: command.to_string(),
            seed: None,
            config,
            stages_ms: Vec::new(),
            outputs: Vec::new(),
        }
    }

    /// Records the time elapsed since `start` under `name`.
    pub fn stage(&mut self, name: &str, start: Instant) {
        self.stages_ms.push((name.to_string(), start.elapsed().as_secs_f64() * 1e3));
    }

    pub fn output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path)
            .with_context(|| format!("creating manifest `{}`", path.display()))?;
        serde_json::to_writer_pretty(file, self).context("serializing manifest")?;
        Ok(())
    }
}

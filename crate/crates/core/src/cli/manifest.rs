//! Artifact manifest: every emitted file, the scenario echo, and solver
//! reports, written even when a solver fails to converge.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Default)]
pub struct ArtifactManifest {
    pub scenario: String,
    pub params: Vec<(String, String)>,
    pub files: Vec<PathBuf>,
    pub reports: Vec<(String, String)>,
    pub converged: bool,
}

impl ArtifactManifest {
    pub fn new(scenario: &str, params: &std::collections::BTreeMap<String, String>) -> Self {
        Self {
            scenario: scenario.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            files: Vec::new(),
            reports: Vec::new(),
            converged: true,
        }
    }

    pub fn add_file(&mut self, path: &Path) {
        self.files.push(path.to_path_buf());
    }

    pub fn add_report(&mut self, name: &str, text: &str) {
        self.reports.push((name.to_string(), text.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "schema_version={SCHEMA_VERSION}");
        let _ = writeln!(out, "scenario={}", self.scenario);
        let _ = writeln!(out, "converged={}", self.converged);
        for (k, v) in &self.params {
            let _ = writeln!(out, "param.{k}={v}");
        }
        for f in &self.files {
            let _ = writeln!(out, "file={}", f.display());
        }
        for (name, text) in &self.reports {
            let _ = writeln!(out, "report.{name}={}", text.replace('\n', " | "));
        }
        out
    }

    pub fn write(&self, dir: &Path) -> std::io::Result<PathBuf> {
        let path = dir.join("manifest.txt");
        std::fs::write(&path, self.render())?;
        Ok(path)
    }
}

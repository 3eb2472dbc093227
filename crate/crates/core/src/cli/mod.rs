//! Scenario-driven command-line front end: config parsing, dispatch to the
//! computational modules, CSV tables, and SVG plots.
//!
//! Artifacts are deterministic: identical config and seed produce
//! byte-identical files. Numbers are written with 17 significant digits so
//! they round-trip through f64 exactly.

mod config;
mod csv;
mod manifest;
mod scenario;
mod svg;

pub use config::{ConfigError, Scenario, ScenarioConfig};
pub use csv::{read_csv, write_csv, CsvError, CsvTable};
pub use manifest::ArtifactManifest;
pub use scenario::{run_scenario, ScenarioError};
pub use svg::{emit_plot, PlotSpec, SvgError};

/// Exit codes of the `solq` binary.
pub mod exit_codes {
    pub const SUCCESS: i32 = 0;
    pub const CONFIG_ERROR: i32 = 2;
    pub const SOLVER_NON_CONVERGENCE: i32 = 3;
    pub const IO_ERROR: i32 = 4;
}

//! Scenario runner: `solq <scenario> [--key=value ...] [--config path] [--out dir]`.

use solq_core::cli::{exit_codes, run_scenario, ScenarioConfig, ScenarioError};
use std::process::ExitCode;

const USAGE: &str = "usage: solq <scenario> [--key=value ...] [--config path] [--out dir]

scenarios:
  dirac-soliton    self-field Dirac-Poisson soliton (shooting + constraint scan)
  photon-soliton   nonlinear field profiles, ground state, energy-radius family
  uehling          vacuum-polarization potential: closed form and asymptotics
  trajectories     guidance-law trajectories (double slit, plane wave, entangled)
  equivariance     Born-rule transport check for an ensemble of trajectories
  bloch            rotating-frame two-level dynamics with the force diagram
  dipole-decay     classical dipole decay constants over a frequency sweep

keys are scenario-specific (see README); values given as --key=value override
config-file entries, which override built-in defaults. The output directory
comes from --out, else $SOLQ_OUT, else the config, else ./solq-out.";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" {
        eprintln!("{USAGE}");
        return ExitCode::from(exit_codes::CONFIG_ERROR as u8);
    }

    let mut overrides: Vec<(String, String)> = Vec::new();
    let mut config_path: Option<String> = None;
    let mut out_dir: Option<String> = None;
    let mut scenario: Option<String> = None;

    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        if let Some(rest) = arg.strip_prefix("--") {
            if let Some((k, v)) = rest.split_once('=') {
                match k {
                    "config" => config_path = Some(v.to_string()),
                    "out" => out_dir = Some(v.to_string()),
                    _ => overrides.push((k.to_string(), v.to_string())),
                }
            } else {
                // space-separated form: --config path / --out dir
                match rest {
                    "config" | "out" if i + 1 < args.len() => {
                        let v = args[i + 1].clone();
                        if rest == "config" {
                            config_path = Some(v);
                        } else {
                            out_dir = Some(v);
                        }
                        i += 1;
                    }
                    _ => {
                        eprintln!("unrecognized flag '{arg}'\n{USAGE}");
                        return ExitCode::from(exit_codes::CONFIG_ERROR as u8);
                    }
                }
            }
        } else if scenario.is_none() {
            scenario = Some(arg.clone());
        } else {
            eprintln!("unexpected positional argument '{arg}'\n{USAGE}");
            return ExitCode::from(exit_codes::CONFIG_ERROR as u8);
        }
        i += 1;
    }

    let file_text = match config_path {
        Some(path) => match std::fs::read_to_string(&path) {
            Ok(text) => Some(text),
            Err(e) => {
                eprintln!("cannot read config '{path}': {e}");
                return ExitCode::from(exit_codes::IO_ERROR as u8);
            }
        },
        None => None,
    };
    if let Some(name) = scenario {
        overrides.insert(0, ("scenario".to_string(), name));
    }

    let config = match ScenarioConfig::parse(file_text.as_deref(), &overrides, out_dir.as_deref())
    {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(exit_codes::CONFIG_ERROR as u8);
        }
    };

    match run_scenario(&config) {
        Ok(manifest) => {
            println!("{}", manifest.render());
            ExitCode::from(exit_codes::SUCCESS as u8)
        }
        Err(ScenarioError::Config(e)) => {
            eprintln!("config error: {e}");
            ExitCode::from(exit_codes::CONFIG_ERROR as u8)
        }
        Err(ScenarioError::NonConvergence(msg)) => {
            eprintln!("solver non-convergence: {msg}");
            ExitCode::from(exit_codes::SOLVER_NON_CONVERGENCE as u8)
        }
        Err(e @ (ScenarioError::Io(_) | ScenarioError::Csv(_) | ScenarioError::Svg(_))) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(exit_codes::IO_ERROR as u8)
        }
    }
}

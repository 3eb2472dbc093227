//! Scenario configuration: plain-text key=value files with CLI overrides.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    MissingScenario,
    UnknownScenario(String),
    UnknownKey { scenario: &'static str, key: String },
    BadValue { key: String, value: String },
    BadLine(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingScenario => write!(f, "missing scenario name"),
            Self::UnknownScenario(s) => write!(
                f,
                "unknown scenario '{s}' (expected dirac-soliton | photon-soliton | uehling | \
                 trajectories | equivariance | bloch | dipole-decay)"
            ),
            Self::UnknownKey { scenario, key } => {
                write!(f, "unknown key '{key}' for scenario {scenario}")
            }
            Self::BadValue { key, value } => {
                write!(f, "cannot parse value '{value}' for key '{key}'")
            }
            Self::BadLine(l) => write!(f, "cannot parse config line '{l}' (expected key=value)"),
        }
    }
}

impl std::error::Error for ConfigError {}

/// The seven scenarios the CLI can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    DiracSoliton,
    PhotonSoliton,
    Uehling,
    Trajectories,
    Equivariance,
    Bloch,
    DipoleDecay,
}

impl Scenario {
    pub fn parse(name: &str) -> Result<Self, ConfigError> {
        Ok(match name {
            "dirac-soliton" => Self::DiracSoliton,
            "photon-soliton" => Self::PhotonSoliton,
            "uehling" => Self::Uehling,
            "trajectories" => Self::Trajectories,
            "equivariance" => Self::Equivariance,
            "bloch" => Self::Bloch,
            "dipole-decay" => Self::DipoleDecay,
            other => return Err(ConfigError::UnknownScenario(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::DiracSoliton => "dirac-soliton",
            Self::PhotonSoliton => "photon-soliton",
            Self::Uehling => "uehling",
            Self::Trajectories => "trajectories",
            Self::Equivariance => "equivariance",
            Self::Bloch => "bloch",
            Self::DipoleDecay => "dipole-decay",
        }
    }

    /// Complete default parameter set; unknown keys are rejected against it.
    pub fn defaults(&self) -> BTreeMap<String, String> {
        let pairs: &[(&str, &str)] = match self {
            Self::DiracSoliton => &[
                ("kappa", "-1"),
                ("alpha", ""), // empty: pick by kappa (0.101 / 0.0685)
                ("rho_max", "30"),
                ("rho_min", "1e-4"),
                ("beta_lo", "0.05"),
                ("beta_hi", "0.95"),
                ("beta_steps", "12"),
                ("trace_points", "3000"),
                ("full_solve", "true"),
                ("beta", "0.35"),
                ("amplitude", "0.1"),
            ],
            Self::PhotonSoliton => &[
                ("rho_max", "18"),
                ("grid_points", "4000"),
                ("scale_lo", "0.25"),
                ("scale_hi", "3.5"),
                ("family_members", "13"),
                ("shoot_tol", "1e-12"),
                ("mass_param", "1"),
            ],
            Self::Uehling => &[
                ("c1", "1"),
                ("z", "1"),
                ("r_lo_re", "0.1"),
                ("r_hi_re", "50"),
                ("points", "200"),
            ],
            Self::Trajectories => &[
                ("field", "double-slit"),
                ("d", "100"),
                ("w", "10"),
                ("lambda", "1"),
                ("screen", "10000"),
                ("n", "100"),
                ("seed", "7"),
                ("dt", "5"),
                ("z0", "1"),
                ("phase_drift", "0"),
                ("entangled", "false"),
            ],
            Self::Equivariance => &[
                ("field", "gaussian"),
                ("sigma0", "1"),
                ("k0", "0"),
                ("n", "10000"),
                ("seed", "11"),
                ("bins", "30"),
                ("spreading_times", "2"),
                ("d", "100"),
                ("w", "10"),
                ("lambda", "1"),
                ("screen", "10000"),
                ("dt", "0.01"),
            ],
            Self::Bloch => &[
                ("omega", "1"),
                ("omega_a", "1"),
                ("epsilon", "0.05"),
                ("tau0", "inf"),
                ("x0", "1"),
                ("mass", "1"),
                ("charge", "1"),
                ("u0", "0"),
                ("v0", "0"),
                ("w0", "0"),
                ("cycles", "50"),
                ("steps_per_cycle", "400"),
            ],
            Self::DipoleDecay => &[
                ("omega_lo", "1e12"),
                ("omega_hi", "1e16"),
                ("points", "40"),
                ("omega_example", "3.77e15"),
            ],
        };
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }
}

/// Fully resolved scenario configuration.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub params: BTreeMap<String, String>,
    pub out_dir: std::path::PathBuf,
    pub seed: u64,
}

impl ScenarioConfig {
    /// Build from config-file text and CLI overrides; flag values win over
    /// file values, defaults fill the rest. `scenario` may come from either
    /// source under the key `scenario`.
    pub fn parse(
        file_text: Option<&str>,
        overrides: &[(String, String)],
        out_dir: Option<&str>,
    ) -> Result<Self, ConfigError> {
        let mut raw: BTreeMap<String, String> = BTreeMap::new();
        if let Some(text) = file_text {
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let Some((k, v)) = line.split_once('=') else {
                    return Err(ConfigError::BadLine(line.to_string()));
                };
                raw.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        for (k, v) in overrides {
            raw.insert(k.clone(), v.clone());
        }

        let scenario_name = raw.remove("scenario").ok_or(ConfigError::MissingScenario)?;
        let scenario = Scenario::parse(&scenario_name)?;
        let mut params = scenario.defaults();
        for (k, v) in raw {
            if k == "seed" || k == "out" {
                params.insert(k, v);
                continue;
            }
            if !params.contains_key(&k) {
                return Err(ConfigError::UnknownKey {
                    scenario: scenario.name(),
                    key: k,
                });
            }
            params.insert(k, v);
        }
        let seed = match params.get("seed") {
            Some(s) => s.parse::<u64>().map_err(|_| ConfigError::BadValue {
                key: "seed".into(),
                value: s.clone(),
            })?,
            None => 0,
        };
        // Output dir priority: CLI flag, then env, then config, then default.
        let out = out_dir
            .map(|s| s.to_string())
            .or_else(|| std::env::var("SOLQ_OUT").ok())
            .or_else(|| params.get("out").cloned())
            .unwrap_or_else(|| "solq-out".to_string());
        Ok(Self {
            scenario,
            params,
            out_dir: out.into(),
            seed,
        })
    }

    pub fn f64(&self, key: &str) -> Result<f64, ConfigError> {
        let v = self.params.get(key).ok_or_else(|| ConfigError::UnknownKey {
            scenario: self.scenario.name(),
            key: key.to_string(),
        })?;
        if v == "inf" {
            return Ok(f64::INFINITY);
        }
        v.parse().map_err(|_| ConfigError::BadValue {
            key: key.to_string(),
            value: v.clone(),
        })
    }

    /// f64 lookup that treats an empty default as absent.
    pub fn f64_opt(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        match self.params.get(key) {
            None => Ok(None),
            Some(v) if v.is_empty() => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| ConfigError::BadValue {
                    key: key.to_string(),
                    value: v.clone(),
                }),
        }
    }

    pub fn i64(&self, key: &str) -> Result<i64, ConfigError> {
        let v = self.params.get(key).ok_or_else(|| ConfigError::UnknownKey {
            scenario: self.scenario.name(),
            key: key.to_string(),
        })?;
        v.parse().map_err(|_| ConfigError::BadValue {
            key: key.to_string(),
            value: v.clone(),
        })
    }

    pub fn usize(&self, key: &str) -> Result<usize, ConfigError> {
        Ok(self.i64(key)?.max(0) as usize)
    }

    pub fn bool(&self, key: &str) -> Result<bool, ConfigError> {
        let v = self.params.get(key).ok_or_else(|| ConfigError::UnknownKey {
            scenario: self.scenario.name(),
            key: key.to_string(),
        })?;
        match v.as_str() {
            "true" | "1" | "yes" => Ok(true),
            "false" | "0" | "no" => Ok(false),
            _ => Err(ConfigError::BadValue {
                key: key.to_string(),
                value: v.clone(),
            }),
        }
    }

    pub fn str(&self, key: &str) -> &str {
        self.params.get(key).map(|s| s.as_str()).unwrap_or("")
    }
}

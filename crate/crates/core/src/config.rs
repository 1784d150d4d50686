//! Simulation configuration: TOML loading, validation, `key=value`
//! overrides and the built-in presets.
//!
//! ```toml
//! source = { x = 0.0, y = 0.0 }
//! receiver = { x = 10.0, y = 0.0 }
//!
//! [medium]
//! sound_speed = 344.0
//! density = 1.2
//!
//! [array]
//! columns = 3
//! rows = 5
//! lattice_constant = 0.3
//! standoff = 1.5
//! height = 0.15
//! radius = 0.1
//!
//! [scatterer]
//! model = "rigid"
//!
//! [ground]
//! model = "impedance"
//! admittance = { model = "one_parameter", flow_resistivity = 20000.0 }
//!
//! [frequencies]
//! min = 100.0
//! max = 1200.0
//! count = 512
//! spacing = "linear"
//!
//! [solver]
//! truncation = 7
//! refine_depth = 3
//! convergence_check = false
//! ```
//!
//! Either `[array]` or a list of `[[scatterers]]` (each with `center` and
//! `radius`) describes the cylinders; with neither, the scene is empty.
//! All quantities are SI.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{build_square_lattice, ArrayConfig, Point2, Scatterer, Scene};
use crate::ground::{AdmittanceModel, GroundModel};
use crate::mst::{Problem, TruncationOrder};
use crate::scatterer::{Medium, ScattererModel, ShellMaterial};
use crate::specfun::MAX_ORDER;
use crate::sweep::{FrequencyGrid, SweepOptions};

/// One violated invariant, located by its dotted field path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigIssue {
    pub path: String,
    pub message: String,
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration:\n{}", format_issues(.0))]
    Invalid(Vec<ConfigIssue>),
    #[error("bad override '{0}': expected dotted.key=value")]
    Override(String),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
}

fn format_issues(issues: &[ConfigIssue]) -> String {
    issues
        .iter()
        .map(|i| format!("  - {i}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    #[serde(default)]
    pub truncation: TruncationOrder,
    #[serde(default = "default_refine_depth")]
    pub refine_depth: u32,
    /// Compare `N` with `N + 2` at a few probe frequencies before the sweep.
    #[serde(default)]
    pub convergence_check: bool,
}

fn default_refine_depth() -> u32 {
    SweepOptions::default().refine_depth
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            truncation: TruncationOrder::default(),
            refine_depth: default_refine_depth(),
            convergence_check: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Spectrum file; standard output when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

impl OutputConfig {
    fn is_default(&self) -> bool {
        self == &Self::default()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationConfig {
    pub source: Point2,
    pub receiver: Point2,
    #[serde(default)]
    pub medium: Medium,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub array: Option<ArrayConfig>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scatterers: Vec<Scatterer>,
    #[serde(default)]
    pub scatterer: ScattererModel,
    pub ground: GroundModel,
    pub frequencies: FrequencyGrid,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default, skip_serializing_if = "OutputConfig::is_default")]
    pub output: OutputConfig,
}

fn issue(path: impl Into<String>, message: impl Into<String>) -> ConfigIssue {
    ConfigIssue {
        path: path.into(),
        message: message.into(),
    }
}

impl SimulationConfig {
    /// Cylinders of the scene (lattice or explicit list).
    pub fn scatterer_list(&self) -> Vec<Scatterer> {
        match &self.array {
            Some(array) => build_square_lattice(array, false).unwrap_or_default(),
            None => self.scatterers.clone(),
        }
    }

    /// Every violated invariant, not just the first.
    pub fn violations(&self) -> Vec<ConfigIssue> {
        let mut issues = Vec::new();
        let ground = self.ground.kind();
        let with_ground = ground.has_ground();
        issues.extend(self.medium.violations().into_iter().map(|m| issue("medium", m)));
        if self.array.is_some() && !self.scatterers.is_empty() {
            issues.push(issue("array", "give either [array] or [[scatterers]], not both"));
        }
        let mut geometry_ok = true;
        if let Some(array) = &self.array {
            let found = array.violations(with_ground);
            geometry_ok = found.is_empty();
            issues.extend(found.into_iter().map(|m| issue("array", m)));
        }
        {
            // Source and receiver are checked even when the lattice is invalid.
            let scene = Scene {
                source: self.source,
                receiver: self.receiver,
                scatterers: if geometry_ok { self.scatterer_list() } else { Vec::new() },
                ground,
            };
            let prefix = if self.array.is_some() { "array" } else { "scatterers" };
            for m in scene.violations() {
                let path = if m.starts_with("source") {
                    "source"
                } else if m.starts_with("receiver") {
                    "receiver"
                } else {
                    prefix
                };
                issues.push(issue(path, m));
            }
            if let ScattererModel::Shell(material) = &self.scatterer {
                for s in scene.scatterers.iter().take(1) {
                    issues.extend(
                        material
                            .with_radius(s.radius)
                            .violations()
                            .into_iter()
                            .map(|m| issue("scatterer", m)),
                    );
                }
            }
        }
        if let ScattererModel::Shell(material) = &self.scatterer {
            if self.scatterer_list().is_empty() {
                issues.extend(material.violations().into_iter().map(|m| issue("scatterer", m)));
            }
        }
        if let GroundModel::Impedance { admittance } = &self.ground {
            issues.extend(
                admittance
                    .violations()
                    .into_iter()
                    .map(|m| issue("ground.admittance", m)),
            );
            if let AdmittanceModel::Tabulated { entries, .. } = admittance {
                if let (Some(first), Some(last)) = (entries.first(), entries.last()) {
                    if self.frequencies.min < first[0] || self.frequencies.max > last[0] {
                        issues.push(issue(
                            "ground.admittance",
                            format!(
                                "table covers [{}, {}] Hz but the grid spans [{}, {}] Hz",
                                first[0], last[0], self.frequencies.min, self.frequencies.max
                            ),
                        ));
                    }
                }
            }
        }
        issues.extend(
            self.frequencies
                .violations()
                .into_iter()
                .map(|m| issue("frequencies", m)),
        );
        let max_truncation = MAX_ORDER / 2;
        if self.solver.truncation.0 > max_truncation {
            issues.push(issue(
                "solver.truncation",
                format!("must not exceed {max_truncation} (got {})", self.solver.truncation.0),
            ));
        }
        issues
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let issues = self.violations();
        if issues.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::Invalid(issues))
        }
    }

    pub fn problem(&self) -> Result<Problem, ConfigError> {
        self.validate()?;
        Ok(Problem {
            scene: Scene {
                source: self.source,
                receiver: self.receiver,
                scatterers: self.scatterer_list(),
                ground: self.ground.kind(),
            },
            scatterer: self.scatterer,
            medium: self.medium,
            ground: self.ground.clone(),
        })
    }

    pub fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            truncation: self.solver.truncation,
            refine_depth: self.solver.refine_depth,
            ..SweepOptions::default()
        }
    }

    pub fn to_toml_string(&self) -> Result<String, ConfigError> {
        toml::to_string(self).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    /// Applies `dotted.key=value` overrides. Values are parsed as TOML and
    /// fall back to plain strings.
    pub fn with_overrides<S: AsRef<str>>(&self, overrides: &[S]) -> Result<Self, ConfigError> {
        if overrides.is_empty() {
            return Ok(self.clone());
        }
        let mut table = toml::Table::try_from(self).map_err(|e| ConfigError::Parse(e.to_string()))?;
        for raw in overrides {
            let raw = raw.as_ref();
            let (key, value) = raw
                .split_once('=')
                .ok_or_else(|| ConfigError::Override(raw.to_string()))?;
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() {
                return Err(ConfigError::Override(raw.to_string()));
            }
            let parsed = format!("v = {value}")
                .parse::<toml::Table>()
                .ok()
                .and_then(|mut t| t.remove("v"))
                .unwrap_or_else(|| toml::Value::String(value.to_string()));
            set_dotted(&mut table, key, parsed).map_err(|_| ConfigError::Override(raw.to_string()))?;
        }
        let config: SimulationConfig = table
            .try_into()
            .map_err(|e: toml::de::Error| ConfigError::Parse(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }
}

fn set_dotted(table: &mut toml::Table, key: &str, value: toml::Value) -> Result<(), ()> {
    let mut parts: Vec<&str> = key.split('.').collect();
    let last = parts.pop().ok_or(())?;
    let mut current = table;
    for part in parts {
        current = current
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()))
            .as_table_mut()
            .ok_or(())?;
    }
    current.insert(last.to_string(), value);
    Ok(())
}

/// Parses and validates a configuration. Relative table paths resolve
/// against `base`.
pub fn from_toml_str(text: &str, base: Option<&Path>) -> Result<SimulationConfig, ConfigError> {
    let mut config: SimulationConfig =
        toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    if let GroundModel::Impedance { admittance } = &mut config.ground {
        admittance
            .resolve_table(base)
            .map_err(|e| ConfigError::Invalid(vec![issue("ground.admittance.path", e.to_string())]))?;
    }
    config.validate()?;
    Ok(config)
}

pub fn load_config(path: &Path) -> Result<SimulationConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    from_toml_str(&text, path.parent())
}

/// Built-in scenarios: name and one-line description.
pub const PRESETS: &[(&str, &str)] = &[
    ("fig2", "5x3 rigid array (a = 0.1, L = 0.3) over rigid ground, source (0,0), receiver (10,0)"),
    ("fig2-free", "fig2 array in the free field"),
    ("fig2-doubled", "fig2 array plus its mirror image (10x3) in the free field"),
    ("fig3", "7x3 rigid array (a = 0.0275, L = 0.069) over rigid ground, receiver (1.203,0)"),
    ("fig3-raised", "fig3 with receiver (1.203,0.235)"),
    ("fig3-free", "fig3 array in the free field"),
    ("fig4", "fig2 geometry with latex shells, wall 1 mm"),
    ("fig4-thick", "fig2 geometry with latex shells, wall 2 mm"),
    ("fig5a", "fig2 array over rigid ground, receiver (10,0.45)"),
    ("fig5b", "fig5a over impedance ground, one-parameter model, 20 kPa s/m^2"),
    ("fig6a", "7x3 latex shells (wall 0.25 mm) over rigid ground, receiver (1.203,0.117)"),
    ("fig6b", "fig6a with receiver (1.203,0.235)"),
    ("fig6c", "fig6a with receiver (1.203,0.352)"),
    ("fig7a", "7x3 rigid array over rigid ground, receiver (1.203,0.117)"),
    ("fig7b", "fig7a with receiver (1.203,0.235)"),
    ("fig7c", "fig7a with receiver (1.203,0.352)"),
    ("fig9a", "fig7a over foam (two-parameter stand-in model, 4 kPa s/m^2, 105 1/m)"),
    ("fig9b", "fig9a with receiver (1.203,0.235)"),
    ("fig9c", "fig9a with receiver (1.203,0.352)"),
];

fn large_array() -> ArrayConfig {
    ArrayConfig {
        columns: 3,
        rows: 5,
        lattice_constant: 0.3,
        standoff: 1.5,
        height: 0.15,
        radius: 0.1,
        radius_overrides: Vec::new(),
    }
}

fn small_array() -> ArrayConfig {
    ArrayConfig {
        columns: 3,
        rows: 7,
        lattice_constant: 0.069,
        standoff: 0.755,
        height: 0.0345,
        radius: 0.0275,
        radius_overrides: Vec::new(),
    }
}

fn base(array: ArrayConfig, source: Point2, receiver: Point2, grid: FrequencyGrid) -> SimulationConfig {
    SimulationConfig {
        source,
        receiver,
        medium: Medium::default(),
        array: Some(array),
        scatterers: Vec::new(),
        scatterer: ScattererModel::Rigid,
        ground: GroundModel::Rigid,
        frequencies: grid,
        solver: SolverConfig::default(),
        output: OutputConfig::default(),
    }
}

/// Preset configuration by name (see [`PRESETS`]).
pub fn preset(name: &str) -> Result<SimulationConfig, ConfigError> {
    let low = FrequencyGrid::linear(100.0, 1200.0, 512);
    let shell_grid = FrequencyGrid::linear(20.0, 1200.0, 512);
    let high = FrequencyGrid::linear(100.0, 4000.0, 512);
    let foam = FrequencyGrid::linear(100.0, 5000.0, 512);
    let origin = Point2::new(0.0, 0.0);
    let far = Point2::new(10.0, 0.0);
    let mid_source = Point2::new(0.0, 0.235);
    let behind = |y: f64| Point2::new(1.203, y);
    let foam_ground = GroundModel::Impedance {
        admittance: AdmittanceModel::TwoParameter {
            flow_resistivity: 4e3,
            porosity_rate: 105.0,
        },
    };

    let config = match name {
        "fig2" => base(large_array(), origin, far, low),
        "fig2-free" => SimulationConfig {
            ground: GroundModel::FreeField,
            ..base(large_array(), origin, far, low)
        },
        "fig2-doubled" => {
            let half = preset("fig2")?;
            let scene = half.problem()?.scene.with_image_array();
            SimulationConfig {
                array: None,
                scatterers: scene.scatterers,
                ground: GroundModel::FreeField,
                ..half
            }
        }
        "fig3" => base(small_array(), mid_source, behind(0.0), high),
        "fig3-raised" => base(small_array(), mid_source, behind(0.235), high),
        "fig3-free" => SimulationConfig {
            ground: GroundModel::FreeField,
            ..base(small_array(), mid_source, behind(0.0), high)
        },
        "fig4" | "fig4-thick" => {
            let wall = if name == "fig4" { 0.001 } else { 0.002 };
            SimulationConfig {
                scatterer: ScattererModel::Shell(ShellMaterial::latex(wall)),
                ..base(large_array(), origin, far, shell_grid)
            }
        }
        "fig5a" => base(large_array(), origin, Point2::new(10.0, 0.45), low),
        "fig5b" => SimulationConfig {
            ground: GroundModel::Impedance {
                admittance: AdmittanceModel::OneParameter { flow_resistivity: 20e3 },
            },
            ..base(large_array(), origin, Point2::new(10.0, 0.45), low)
        },
        "fig6a" | "fig6b" | "fig6c" => {
            let y = receiver_height(name);
            SimulationConfig {
                scatterer: ScattererModel::Shell(ShellMaterial::latex(0.00025)),
                ..base(small_array(), mid_source, behind(y), high)
            }
        }
        "fig7a" | "fig7b" | "fig7c" => base(small_array(), mid_source, behind(receiver_height(name)), high),
        "fig9a" | "fig9b" | "fig9c" => SimulationConfig {
            ground: foam_ground,
            ..base(small_array(), mid_source, behind(receiver_height(name)), foam)
        },
        _ => return Err(ConfigError::UnknownPreset(name.to_string())),
    };
    config.validate()?;
    Ok(config)
}

fn receiver_height(name: &str) -> f64 {
    match name.as_bytes().last() {
        Some(b'a') => 0.117,
        Some(b'b') => 0.235,
        _ => 0.352,
    }
}

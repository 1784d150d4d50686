//! Ground admittance models and the spherical-wave reflection coefficient.
//!
//! Time dependence is `exp(-i omega t)` throughout (outgoing waves are
//! `H^(1)`), so a porous surface has normalised impedance `Z = R + i X`
//! with `X > 0` and admittance `beta = 1 / Z`.

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::specfun::{f_boundary_loss, SpecfunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroundError {
    #[error("frequency {frequency_hz} Hz outside the tabulated range [{min}, {max}] Hz")]
    Extrapolation { frequency_hz: f64, min: f64, max: f64 },
    #[error("invalid admittance model: {0}")]
    Parameter(String),
    #[error("admittance table line {line}: {message}")]
    Table { line: usize, message: String },
    #[error("boundary-loss function failed for r = {distance} m, k = {wavenumber} 1/m: {source}")]
    BoundaryLoss {
        distance: f64,
        wavenumber: f64,
        source: SpecfunError,
    },
}

/// Surface admittance as a function of frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum AdmittanceModel {
    /// Miki's one-parameter model; `flow_resistivity` in Pa s/m^2.
    OneParameter { flow_resistivity: f64 },
    /// Variable-porosity two-parameter model (stand-in form, see
    /// [`two_parameter_impedance`]); `flow_resistivity` in Pa s/m^2,
    /// `porosity_rate` in 1/m.
    TwoParameter {
        flow_resistivity: f64,
        porosity_rate: f64,
    },
    /// Linear interpolation in a `(Hz, Re beta, Im beta)` table. `path`, when
    /// set, is read at configuration load into `entries`.
    Tabulated {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        path: Option<PathBuf>,
        #[serde(default)]
        entries: Vec<[f64; 3]>,
    },
}

/// Miki normalised impedance `1 + 5.50 X^-0.632 + 8.43 i X^-0.632`,
/// `X = 1000 f / sigma`.
pub fn miki_impedance(flow_resistivity: f64, frequency_hz: f64) -> Complex64 {
    let x = (1e3 * frequency_hz / flow_resistivity).powf(-0.632);
    Complex64::new(1.0 + 5.50 * x, 8.43 * x)
}

/// Variable-porosity surface impedance
/// `0.436 (1 + i) sqrt(sigma / f) + 19.74 i alpha / f`.
pub fn two_parameter_impedance(flow_resistivity: f64, porosity_rate: f64, frequency_hz: f64) -> Complex64 {
    let root = 0.436 * (flow_resistivity / frequency_hz).sqrt();
    Complex64::new(root, root + 19.74 * porosity_rate / frequency_hz)
}

impl AdmittanceModel {
    pub fn violations(&self) -> Vec<String> {
        let mut issues = Vec::new();
        match self {
            AdmittanceModel::OneParameter { flow_resistivity } => {
                if !(flow_resistivity.is_finite() && *flow_resistivity > 0.0) {
                    issues.push(format!("flow_resistivity must be positive (got {flow_resistivity})"));
                }
            }
            AdmittanceModel::TwoParameter {
                flow_resistivity,
                porosity_rate,
            } => {
                if !(flow_resistivity.is_finite() && *flow_resistivity > 0.0) {
                    issues.push(format!("flow_resistivity must be positive (got {flow_resistivity})"));
                }
                if !(porosity_rate.is_finite() && *porosity_rate >= 0.0) {
                    issues.push(format!("porosity_rate must be non-negative (got {porosity_rate})"));
                }
            }
            AdmittanceModel::Tabulated { entries, .. } => {
                if entries.is_empty() {
                    issues.push("tabulated admittance has no entries".to_string());
                }
                for (i, e) in entries.iter().enumerate() {
                    if !e.iter().all(|v| v.is_finite()) {
                        issues.push(format!("entry {i} is not finite"));
                    }
                    if e[0] <= 0.0 {
                        issues.push(format!("entry {i}: frequency must be positive"));
                    }
                    if e[1] < 0.0 {
                        issues.push(format!("entry {i}: Re(beta) must be non-negative (passive surface)"));
                    }
                }
                for (i, pair) in entries.windows(2).enumerate() {
                    if pair[1][0] <= pair[0][0] {
                        issues.push(format!(
                            "entries {i} and {}: frequencies must be strictly increasing",
                            i + 1
                        ));
                    }
                }
            }
        }
        issues
    }

    /// Admittance `beta(f)`.
    pub fn admittance(&self, frequency_hz: f64) -> Result<Complex64, GroundError> {
        if !(frequency_hz.is_finite() && frequency_hz > 0.0) {
            return Err(GroundError::Parameter(format!(
                "frequency must be positive (got {frequency_hz})"
            )));
        }
        let issues = self.violations();
        if !issues.is_empty() {
            return Err(GroundError::Parameter(issues.join("; ")));
        }
        match self {
            AdmittanceModel::OneParameter { flow_resistivity } => {
                Ok(1.0 / miki_impedance(*flow_resistivity, frequency_hz))
            }
            AdmittanceModel::TwoParameter {
                flow_resistivity,
                porosity_rate,
            } => Ok(1.0 / two_parameter_impedance(*flow_resistivity, *porosity_rate, frequency_hz)),
            AdmittanceModel::Tabulated { entries, .. } => interpolate(entries, frequency_hz),
        }
    }

    /// Reads `path` (relative to `base`) into `entries` for tabulated models.
    pub fn resolve_table(&mut self, base: Option<&Path>) -> Result<(), GroundError> {
        if let AdmittanceModel::Tabulated {
            path: Some(path),
            entries,
        } = self
        {
            let full = match base {
                Some(dir) if path.is_relative() => dir.join(&*path),
                _ => path.clone(),
            };
            let text = std::fs::read_to_string(&full).map_err(|e| GroundError::Table {
                line: 0,
                message: format!("{}: {e}", full.display()),
            })?;
            *entries = parse_admittance_table(&text)?;
        }
        Ok(())
    }
}

fn interpolate(entries: &[[f64; 3]], frequency_hz: f64) -> Result<Complex64, GroundError> {
    let first = entries[0][0];
    let last = entries[entries.len() - 1][0];
    if frequency_hz < first || frequency_hz > last {
        return Err(GroundError::Extrapolation {
            frequency_hz,
            min: first,
            max: last,
        });
    }
    let upper = entries.partition_point(|e| e[0] < frequency_hz);
    if upper == 0 {
        return Ok(Complex64::new(entries[0][1], entries[0][2]));
    }
    let (a, b) = (entries[upper - 1], entries[upper]);
    let t = (frequency_hz - a[0]) / (b[0] - a[0]);
    Ok(Complex64::new(
        a[1] + t * (b[1] - a[1]),
        a[2] + t * (b[2] - a[2]),
    ))
}

/// Parses whitespace- or comma-separated `frequency Re(beta) Im(beta)` rows.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_admittance_table(text: &str) -> Result<Vec<[f64; 3]>, GroundError> {
    let mut rows = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if fields.len() != 3 {
            return Err(GroundError::Table {
                line: index + 1,
                message: format!("expected 3 columns, found {}", fields.len()),
            });
        }
        let mut row = [0.0; 3];
        for (slot, field) in row.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| GroundError::Table {
                line: index + 1,
                message: format!("cannot parse '{field}' as a number"),
            })?;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Ground condition on the line `y = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroundModel {
    FreeField,
    Rigid,
    Impedance { admittance: AdmittanceModel },
}

impl GroundModel {
    pub fn kind(&self) -> crate::geometry::GroundKind {
        use crate::geometry::GroundKind;
        match self {
            GroundModel::FreeField => GroundKind::FreeField,
            GroundModel::Rigid => GroundKind::Rigid,
            GroundModel::Impedance { .. } => GroundKind::Impedance,
        }
    }

    /// `None` without a ground, `0` for rigid ground, `beta(f)` otherwise.
    pub fn admittance(&self, frequency_hz: f64) -> Result<Option<Complex64>, GroundError> {
        match self {
            GroundModel::FreeField => Ok(None),
            GroundModel::Rigid => Ok(Some(Complex64::new(0.0, 0.0))),
            GroundModel::Impedance { admittance } => admittance.admittance(frequency_hz).map(Some),
        }
    }
}

/// Spherical-wave reflection coefficient
/// `Q = V + (1 - V) F(w)`, `V = (cos a - beta) / (cos a + beta)`,
/// `w = sqrt(i k r / 2) (cos a + beta)`.
///
/// `r` is the image-to-receiver distance and `cos a` the cosine of the angle
/// between the specular path and the ground normal. `beta = 0` returns
/// exactly 1.
pub fn q_spherical(
    beta: Complex64,
    image_distance: f64,
    cos_alpha: f64,
    k: f64,
) -> Result<Complex64, GroundError> {
    if beta == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if !(image_distance.is_finite() && image_distance > 0.0) {
        return Err(GroundError::Parameter(format!(
            "image distance must be positive (got {image_distance})"
        )));
    }
    if !(0.0..=1.0).contains(&cos_alpha) {
        return Err(GroundError::Parameter(format!(
            "cos(alpha) must lie in [0, 1] (got {cos_alpha})"
        )));
    }
    if !(k.is_finite() && k > 0.0) {
        return Err(GroundError::Parameter(format!("wavenumber must be positive (got {k})")));
    }
    let sum = cos_alpha + beta;
    let plane_wave = (cos_alpha - beta) / sum;
    let w = Complex64::new(0.0, 0.5 * k * image_distance).sqrt() * sum;
    let f = f_boundary_loss(w).map_err(|source| GroundError::BoundaryLoss {
        distance: image_distance,
        wavenumber: k,
        source,
    })?;
    Ok(plane_wave + (1.0 - plane_wave) * f)
}

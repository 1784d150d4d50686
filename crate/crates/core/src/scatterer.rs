//! Boundary factors `Z_n` of rigid cylinders and thin elastic shells.
//!
//! `Z_n` maps the regular (incident) coefficient of mode `n` at a cylinder
//! to minus its outgoing coefficient. Radial derivatives are taken with
//! respect to `r`, i.e. `k` times the argument derivative.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::specfun::{CylinderTable, SpecfunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScattererError {
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("shell factor is singular for mode {mode} at {frequency_hz} Hz")]
    Singular { mode: i32, frequency_hz: f64 },
}

/// Fluid surrounding the scatterers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Medium {
    /// m/s
    pub sound_speed: f64,
    /// kg/m^3
    pub density: f64,
}

impl Default for Medium {
    fn default() -> Self {
        Self {
            sound_speed: 344.0,
            density: 1.2,
        }
    }
}

impl Medium {
    pub fn wavenumber(&self, frequency_hz: f64) -> f64 {
        2.0 * PI * frequency_hz / self.sound_speed
    }

    pub fn violations(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.sound_speed.is_finite() && self.sound_speed > 0.0) {
            issues.push(format!("sound_speed must be positive (got {})", self.sound_speed));
        }
        if !(self.density.is_finite() && self.density > 0.0) {
            issues.push(format!("density must be positive (got {})", self.density));
        }
        issues
    }
}

/// Which density enters the membrane wavenumber `k3 = omega sqrt(rho (1 - nu^2) / E)`.
///
/// `Medium` (the default) uses the density of the surrounding fluid, as the
/// formula is usually printed; `Shell` uses the shell material density, which
/// places the breathing resonance of thin latex shells at a few hundred Hz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembraneDensity {
    Shell,
    #[default]
    Medium,
}

/// Shell material, independent of the cylinder size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShellMaterial {
    /// kg/m^3
    pub density: f64,
    /// Pa
    pub young_modulus: f64,
    pub poisson_ratio: f64,
    /// m/s
    pub shear_speed: f64,
    /// Half the wall thickness, m.
    pub half_thickness: f64,
    #[serde(default)]
    pub membrane_density: MembraneDensity,
}

impl ShellMaterial {
    /// Latex sheet used for inflated shells, with the membrane wavenumber
    /// taken from the shell density.
    pub fn latex(wall_thickness: f64) -> Self {
        Self {
            density: 1650.0,
            young_modulus: 1.75e6,
            poisson_ratio: 0.4998,
            shear_speed: 23.0,
            half_thickness: 0.5 * wall_thickness,
            membrane_density: MembraneDensity::Shell,
        }
    }

    pub fn violations(&self) -> Vec<String> {
        let mut issues = Vec::new();
        for (name, value) in [
            ("density", self.density),
            ("young_modulus", self.young_modulus),
            ("shear_speed", self.shear_speed),
            ("half_thickness", self.half_thickness),
        ] {
            if !(value.is_finite() && value > 0.0) {
                issues.push(format!("{name} must be positive (got {value})"));
            }
        }
        if !(self.poisson_ratio > 0.0 && self.poisson_ratio < 0.5) {
            issues.push(format!(
                "poisson_ratio must lie in (0, 0.5) (got {})",
                self.poisson_ratio
            ));
        }
        issues
    }

    pub fn with_radius(self, outer_radius: f64) -> ElasticShell {
        ElasticShell {
            material: self,
            outer_radius,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticShell {
    pub material: ShellMaterial,
    pub outer_radius: f64,
}

impl ElasticShell {
    /// Mid-surface radius `S = a - h`.
    pub fn mid_radius(&self) -> f64 {
        self.outer_radius - self.material.half_thickness
    }

    pub fn violations(&self) -> Vec<String> {
        let mut issues = self.material.violations();
        if self.material.half_thickness >= self.outer_radius {
            issues.push(format!(
                "half_thickness {} must be smaller than the outer radius {}",
                self.material.half_thickness, self.outer_radius
            ));
        }
        issues
    }

    /// Membrane wavenumber `k3` at angular frequency `omega`.
    pub fn membrane_wavenumber(&self, omega: f64, medium: &Medium) -> f64 {
        let m = &self.material;
        let rho = match m.membrane_density {
            MembraneDensity::Shell => m.density,
            MembraneDensity::Medium => medium.density,
        };
        omega * (rho * (1.0 - m.poisson_ratio * m.poisson_ratio) / m.young_modulus).sqrt()
    }

    /// `1 + n^2 - k3^2 S^2`; its zeros are the in-vacuo ring resonances.
    pub fn resonance_denominator(&self, n: i32, omega: f64, medium: &Medium) -> f64 {
        let k3s = self.membrane_wavenumber(omega, medium) * self.mid_radius();
        let n2 = (n as f64) * (n as f64);
        1.0 + n2 - k3s * k3s
    }
}

/// Scatterer boundary model; one per run.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum ScattererModel {
    #[default]
    Rigid,
    Shell(ShellMaterial),
}

/// `Z_n = J_n'(ka) / H_n^(1)'(ka)` for a rigid cylinder of radius `a`.
pub fn z_rigid(n: i32, k: f64, a: f64) -> Result<Complex64, ScattererError> {
    positive("k", k)?;
    positive("a", a)?;
    let table = CylinderTable::new(n.unsigned_abs() as usize + 1, k * a)?;
    Ok(rigid_from_table(&table, n))
}

fn rigid_from_table(table: &CylinderTable, n: i32) -> Complex64 {
    Complex64::new(table.j_prime(n), 0.0) / table.h1_prime(n)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellFactor {
    pub value: Complex64,
    /// The resonance denominator of `U_n` nearly vanished.
    pub near_singular: bool,
}

const NEAR_SINGULAR: f64 = 1e-12;

/// Thin elastic shell factor evaluated at the mid-surface radius `S`:
///
/// `Z_n = d_r J_n(kS) / (d_r H_n(kS) + i U_n)`,
/// `U_n = (eps / kappa) (n^2 - k3^2 S^2) / (pi S h (1 + n^2 - k3^2 S^2) d_r J_n(kS))`,
/// with `eps / kappa = rho / rho_s`. Numerator and denominator are both
/// multiplied through by the `U_n` denominator, so the result stays finite
/// (it tends to zero) at the ring resonances.
pub fn z_shell(
    n: i32,
    omega: f64,
    medium: &Medium,
    shell: &ElasticShell,
) -> Result<ShellFactor, ScattererError> {
    positive("omega", omega)?;
    let issues = shell.violations();
    if !issues.is_empty() {
        return Err(ScattererError::Parameter(issues.join("; ")));
    }
    let k = omega / medium.sound_speed;
    let table = CylinderTable::new(n.unsigned_abs() as usize + 1, k * shell.mid_radius())?;
    shell_from_table(&table, n, k, omega, medium, shell)
}

fn shell_from_table(
    table: &CylinderTable,
    n: i32,
    k: f64,
    omega: f64,
    medium: &Medium,
    shell: &ElasticShell,
) -> Result<ShellFactor, ScattererError> {
    let s = shell.mid_radius();
    let h = shell.material.half_thickness;
    let k3s = shell.membrane_wavenumber(omega, medium) * s;
    let n2 = (n as f64) * (n as f64);
    let resonance = 1.0 + n2 - k3s * k3s;
    let impedance_ratio = medium.density / shell.material.density;

    let dj = k * table.j_prime(n);
    let dh = k * table.h1_prime(n);
    let u_denominator = PI * s * h * resonance * dj;
    let u_numerator = impedance_ratio * (n2 - k3s * k3s);

    let numerator = dj * u_denominator;
    let denominator = dh * u_denominator + Complex64::new(0.0, u_numerator);
    let scale = (dh * u_denominator).norm() + u_numerator.abs();
    if denominator.norm() == 0.0 {
        return Err(ScattererError::Singular {
            mode: n,
            frequency_hz: omega / (2.0 * PI),
        });
    }
    let near_singular = resonance.abs() < NEAR_SINGULAR * (1.0 + n2)
        || dj.abs() < NEAR_SINGULAR * k
        || denominator.norm() < NEAR_SINGULAR * scale;
    Ok(ShellFactor {
        value: Complex64::new(numerator, 0.0) / denominator,
        near_singular,
    })
}

/// Factors `Z_{-N} .. Z_N` for one cylinder.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorSet {
    pub values: Vec<Complex64>,
    pub near_singular: bool,
}

impl FactorSet {
    pub fn order(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    pub fn get(&self, n: i32) -> Complex64 {
        self.values[(n + self.order() as i32) as usize]
    }
}

/// `Z_n` for `n = -order..=order` for a cylinder of outer radius `radius`.
pub fn boundary_factors(
    model: &ScattererModel,
    medium: &Medium,
    omega: f64,
    radius: f64,
    order: usize,
) -> Result<FactorSet, ScattererError> {
    positive("omega", omega)?;
    positive("radius", radius)?;
    let k = omega / medium.sound_speed;
    let n_max = order as i32;
    let mut values = Vec::with_capacity(2 * order + 1);
    let mut near_singular = false;
    match model {
        ScattererModel::Rigid => {
            let table = CylinderTable::new(order + 1, k * radius)?;
            for n in -n_max..=n_max {
                values.push(rigid_from_table(&table, n));
            }
        }
        ScattererModel::Shell(material) => {
            let shell = material.with_radius(radius);
            let issues = shell.violations();
            if !issues.is_empty() {
                return Err(ScattererError::Parameter(issues.join("; ")));
            }
            let table = CylinderTable::new(order + 1, k * shell.mid_radius())?;
            for n in -n_max..=n_max {
                let factor = shell_from_table(&table, n, k, omega, medium, &shell)?;
                near_singular |= factor.near_singular;
                values.push(factor.value);
            }
        }
    }
    Ok(FactorSet {
        values,
        near_singular,
    })
}

fn positive(name: &str, value: f64) -> Result<(), ScattererError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(ScattererError::Parameter(format!(
            "{name} must be positive and finite (got {value})"
        )))
    }
}

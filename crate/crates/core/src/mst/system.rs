//! Assembly and solution of the truncated multiple-scattering system.
//!
//! Unknowns are `A_n^m`, `m = 0..M`, `n = -N..=N`, stored at
//! `m (2N + 1) + n + N`. The scattered field of cylinder `m` is
//! `sum_n A_n^m Z_n^m H_n(k r_m) e^{i n theta_m}` and the boundary condition
//! requires `A_n^m` to equal minus the regular coefficient of everything
//! else incident on `m`:
//!
//! `A_n^m + sum_{p != m, q} Z_q^p g_mp(q - n) A_q^p
//!        + sum_{p, q} Q_p Z_q^p (-1)^q g_mp'(-(q + n)) A_q^p
//!  = -g_m0(-n) - Q_0 g_m0'(-n)`
//!
//! with `g` the translation kernel of [`TranslationKernel`] from the
//! (image) centre to `c_m`. The image sum includes `p = m`.
//!
//! High-order factors `Z_q` of small cylinders are tiny while `g` grows
//! factorially with its order, so these equations are badly scaled: at low
//! frequency the rounding in `A x` alone exceeds `1e-10 ||b||`. The stored
//! system is the balanced one in `y_n^m = A_n^m / sigma_n^m`,
//! `sigma = |Z|^{-1/2}`: row `(m, n)` is divided by `sigma_n^m`, which keeps
//! the unit diagonal and makes entries `|Z_n Z_q|^{1/2} |g|`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::graf::{parity, TranslationKernel};
use super::linalg::{euclidean_norm, mat_vec, one_norm, LuFactorization};
use super::SolverError;
use crate::geometry::{Point2, Scene};
use crate::ground::{q_spherical, GroundError, GroundModel};
use crate::scatterer::{boundary_factors, FactorSet, Medium, ScattererModel};

/// Largest accepted one-norm condition estimate.
pub const MAX_CONDITION: f64 = 1e12;

const RESIDUAL_TOLERANCE: f64 = 1e-10;
const Q_ANOMALY_TOLERANCE: f64 = 1e-6;

/// Modes `-N..=N` are retained per cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncationOrder(pub usize);

impl Default for TruncationOrder {
    fn default() -> Self {
        Self(7)
    }
}

impl TruncationOrder {
    pub fn modes_per_cylinder(self) -> usize {
        2 * self.0 + 1
    }

    pub fn dimension(self, cylinders: usize) -> usize {
        cylinders * self.modes_per_cylinder()
    }
}

/// How the ground enters the system at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HalfSpace {
    FreeField,
    /// Method of images with unit reflection.
    RigidImage,
    /// Image terms weighted by spherical-wave reflection coefficients.
    WeylVanDerPol { beta: Complex64 },
}

impl HalfSpace {
    pub fn for_ground(ground: &GroundModel, frequency_hz: f64) -> Result<Self, GroundError> {
        Ok(match ground {
            GroundModel::FreeField => HalfSpace::FreeField,
            GroundModel::Rigid => HalfSpace::RigidImage,
            GroundModel::Impedance { .. } => HalfSpace::WeylVanDerPol {
                beta: ground.admittance(frequency_hz)?.unwrap_or_default(),
            },
        })
    }

    pub fn has_images(self) -> bool {
        !matches!(self, HalfSpace::FreeField)
    }
}

/// Reflection coefficients of the image source and image cylinders.
///
/// Each is fixed by the specular path from its image centre to the receiver,
/// so the same value weights an image wherever its field is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionFactors {
    pub source: Complex64,
    pub scatterers: Vec<Complex64>,
    /// Some `|Q|` exceeds one (the approximation is outside its comfort zone).
    pub anomaly: bool,
}

impl ReflectionFactors {
    fn unit(count: usize) -> Self {
        Self {
            source: Complex64::new(1.0, 0.0),
            scatterers: vec![Complex64::new(1.0, 0.0); count],
            anomaly: false,
        }
    }

    pub fn compute(scene: &Scene, beta: Complex64, k: f64) -> Result<Self, SolverError> {
        let receiver = scene.receiver;
        let q_at = |image: Point2, height: f64| -> Result<Complex64, SolverError> {
            let distance = receiver.distance_to(image);
            if distance == 0.0 {
                return Err(SolverError::Degenerate(
                    "receiver coincides with an image centre".into(),
                ));
            }
            let cos_alpha = ((height + receiver.y).abs() / distance).min(1.0);
            Ok(q_spherical(beta, distance, cos_alpha, k)?)
        };
        let source = q_at(scene.source.reflect(), scene.source.y)?;
        let scatterers = scene
            .scatterers
            .iter()
            .map(|s| q_at(s.center.reflect(), s.center.y))
            .collect::<Result<Vec<_>, _>>()?;
        let anomaly = std::iter::once(&source)
            .chain(&scatterers)
            .any(|q| q.norm() > 1.0 + Q_ANOMALY_TOLERANCE);
        Ok(Self {
            source,
            scatterers,
            anomaly,
        })
    }
}

/// Everything needed to solve one configuration at any frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub scene: Scene,
    pub scatterer: ScattererModel,
    pub medium: Medium,
    pub ground: GroundModel,
}

#[derive(Debug, Clone)]
pub struct ScatteringSystem {
    pub frequency_hz: f64,
    pub wavenumber: f64,
    pub order: TruncationOrder,
    pub mode: HalfSpace,
    pub cylinders: usize,
    /// Row-major, `dimension x dimension`.
    pub matrix: Vec<Complex64>,
    pub rhs: Vec<Complex64>,
    /// `A = scaling * y` elementwise, `y` being the solution of the stored
    /// system.
    pub scaling: Vec<f64>,
    pub factors: Vec<FactorSet>,
    /// `None` in free field.
    pub reflection: Option<ReflectionFactors>,
    /// Some shell factor sits on a resonance of its formula.
    pub near_singular: bool,
}

impl ScatteringSystem {
    pub fn dimension(&self) -> usize {
        self.rhs.len()
    }

    pub fn index(&self, m: usize, n: i32) -> usize {
        m * self.order.modes_per_cylinder() + (n + self.order.0 as i32) as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row * self.dimension() + col]
    }
}

fn check_clearance(distance: f64, radius: f64, what: impl FnOnce() -> String) -> Result<(), SolverError> {
    if distance > radius {
        Ok(())
    } else {
        Err(SolverError::Degenerate(what()))
    }
}

/// Builds the truncated system at one frequency.
pub fn assemble(
    scene: &Scene,
    model: &ScattererModel,
    medium: &Medium,
    mode: HalfSpace,
    frequency_hz: f64,
    order: TruncationOrder,
) -> Result<ScatteringSystem, SolverError> {
    if !(frequency_hz.is_finite() && frequency_hz > 0.0) {
        return Err(SolverError::Degenerate(format!(
            "frequency must be positive (got {frequency_hz})"
        )));
    }
    if mode.has_images() != scene.ground.has_ground() {
        return Err(SolverError::Mode(format!(
            "{mode:?} requested for a scene with ground {:?}",
            scene.ground
        )));
    }
    let omega = 2.0 * PI * frequency_hz;
    let k = medium.wavenumber(frequency_hz);
    let cylinders = scene.len();
    let n_max = order.0 as i32;
    let width = order.modes_per_cylinder();
    let dim = order.dimension(cylinders);

    let mut factors: Vec<FactorSet> = Vec::with_capacity(cylinders);
    for (m, s) in scene.scatterers.iter().enumerate() {
        let reuse = m > 0 && scene.scatterers[m - 1].radius == s.radius;
        let set = if reuse {
            factors[m - 1].clone()
        } else {
            boundary_factors(model, medium, omega, s.radius, order.0)?
        };
        factors.push(set);
    }
    let near_singular = factors.iter().any(|f| f.near_singular);

    let reflection = match mode {
        HalfSpace::FreeField => None,
        HalfSpace::RigidImage => Some(ReflectionFactors::unit(cylinders)),
        HalfSpace::WeylVanDerPol { beta } => Some(ReflectionFactors::compute(scene, beta, k)?),
    };

    let mut matrix = vec![Complex64::new(0.0, 0.0); dim * dim];
    let mut rhs = vec![Complex64::new(0.0, 0.0); dim];
    let coupling_order = 2 * order.0;
    let offset = coupling_order as i32;

    for (m, target) in scene.scatterers.iter().enumerate() {
        let c_m = target.center;
        for i in 0..width {
            matrix[(m * width + i) * dim + m * width + i] = Complex64::new(1.0, 0.0);
        }

        check_clearance(scene.source.distance_to(c_m), target.radius, || {
            format!("source lies within the radius of scatterer {m}")
        })?;
        let kernel = TranslationKernel::new(k, scene.source, c_m, order.0)?;
        for n in -n_max..=n_max {
            rhs[m * width + (n + n_max) as usize] -= kernel.g(-n);
        }

        for (p, other) in scene.scatterers.iter().enumerate() {
            if p == m {
                continue;
            }
            check_clearance(other.center.distance_to(c_m), target.radius, || {
                format!("scatterers {p} and {m} are too close")
            })?;
            let g = TranslationKernel::new(k, other.center, c_m, coupling_order)?.values();
            for n in -n_max..=n_max {
                let row = (m * width + (n + n_max) as usize) * dim + p * width;
                for q in -n_max..=n_max {
                    let value = factors[p].get(q) * g[(q - n + offset) as usize];
                    matrix[row + (q + n_max) as usize] += value;
                }
            }
        }

        if let Some(reflection) = &reflection {
            let image_source = scene.source.reflect();
            check_clearance(image_source.distance_to(c_m), target.radius, || {
                format!("image source lies within the radius of scatterer {m}")
            })?;
            let kernel = TranslationKernel::new(k, image_source, c_m, order.0)?;
            for n in -n_max..=n_max {
                rhs[m * width + (n + n_max) as usize] -= reflection.source * kernel.g(-n);
            }
            for (p, other) in scene.scatterers.iter().enumerate() {
                let image = other.center.reflect();
                check_clearance(image.distance_to(c_m), target.radius, || {
                    format!("image of scatterer {p} lies too close to scatterer {m}")
                })?;
                let g = TranslationKernel::new(k, image, c_m, coupling_order)?.values();
                let weight = reflection.scatterers[p];
                for n in -n_max..=n_max {
                    let row = (m * width + (n + n_max) as usize) * dim + p * width;
                    for q in -n_max..=n_max {
                        let value =
                            weight * factors[p].get(q) * parity(q) * g[(offset - q - n) as usize];
                        matrix[row + (q + n_max) as usize] += value;
                    }
                }
            }
        }
    }

    let scaling: Vec<f64> = factors
        .iter()
        .flat_map(|set| set.values.iter().map(|z| z.norm()))
        .map(|z| if z > 0.0 && z.is_finite() { 1.0 / z.sqrt() } else { 1.0 })
        .collect();
    for (i, row) in matrix.chunks_exact_mut(dim.max(1)).enumerate().take(dim) {
        let si = scaling[i];
        for (v, &sj) in row.iter_mut().zip(&scaling) {
            *v *= sj / si;
        }
        rhs[i] /= si;
    }

    Ok(ScatteringSystem {
        frequency_hz,
        wavenumber: k,
        order,
        mode,
        cylinders,
        matrix,
        rhs,
        scaling,
        factors,
        reflection,
        near_singular,
    })
}

/// Coefficients `A_n^m` with solve diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub coefficients: Vec<Complex64>,
    pub order: TruncationOrder,
    pub condition_estimate: f64,
    /// `||M y - b|| / ||b||` of the stored system.
    pub relative_residual: f64,
}

impl Solution {
    pub fn get(&self, m: usize, n: i32) -> Complex64 {
        self.coefficients[m * self.order.modes_per_cylinder() + (n + self.order.0 as i32) as usize]
    }
}

fn relative_residual(system: &ScatteringSystem, x: &[Complex64]) -> (Vec<Complex64>, f64) {
    let ax = mat_vec(&system.matrix, system.dimension(), x);
    let r: Vec<Complex64> = system.rhs.iter().zip(&ax).map(|(b, v)| b - v).collect();
    let scale = euclidean_norm(&system.rhs);
    let norm = euclidean_norm(&r);
    (r, if scale > 0.0 { norm / scale } else { norm })
}

/// LU solve with a condition check and one step of iterative refinement if
/// the first residual misses the tolerance. Returns the coefficients
/// `A_n^m`; the residual refers to the stored (balanced) system.
pub fn solve(system: &ScatteringSystem) -> Result<Solution, SolverError> {
    let dim = system.dimension();
    if dim == 0 {
        return Ok(Solution {
            coefficients: Vec::new(),
            order: system.order,
            condition_estimate: 1.0,
            relative_residual: 0.0,
        });
    }
    let lu = LuFactorization::new(&system.matrix, dim).map_err(|e| SolverError::Singular {
        frequency_hz: system.frequency_hz,
        column: e.column,
    })?;
    let condition = one_norm(&system.matrix, dim) * lu.inverse_norm_estimate();
    if !(condition <= MAX_CONDITION) {
        return Err(SolverError::IllConditioned {
            frequency_hz: system.frequency_hz,
            condition,
        });
    }
    let mut y = lu.solve(&system.rhs);
    let (r, mut residual) = relative_residual(system, &y);
    if residual > RESIDUAL_TOLERANCE {
        let correction = lu.solve(&r);
        y.iter_mut().zip(&correction).for_each(|(yi, ci)| *yi += ci);
        residual = relative_residual(system, &y).1;
    }
    if !(residual <= RESIDUAL_TOLERANCE) {
        return Err(SolverError::Residual {
            frequency_hz: system.frequency_hz,
            residual,
        });
    }
    Ok(Solution {
        coefficients: y.iter().zip(&system.scaling).map(|(v, s)| v * s).collect(),
        order: system.order,
        condition_estimate: condition,
        relative_residual: residual,
    })
}

//! Field evaluation and insertion loss.

use num_complex::Complex64;

use super::system::{assemble, solve, HalfSpace, Problem, ScatteringSystem, Solution, TruncationOrder};
use super::SolverError;
use crate::geometry::{relative_vector, Point2, Scene};
use crate::specfun::{hankel1, CylinderTable};

/// Relative slack that lets points computed on a cylinder surface count as
/// outside despite rounding.
const SURFACE_TOLERANCE: f64 = 1e-12;

/// Magnitudes below this count as an exact null of the total field.
pub const DEEP_NULL_THRESHOLD: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldValue {
    pub p_total: Complex64,
    /// Field of the source (and its image) without scatterers.
    pub p_reference: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InsertionLoss {
    pub db: f64,
    /// `|p_total|` underflowed; `db` is computed against the threshold.
    pub deep_null: bool,
}

/// `20 log10 |p_reference / p_total|`.
pub fn insertion_loss(field: FieldValue) -> Result<InsertionLoss, SolverError> {
    let reference = field.p_reference.norm();
    if !(reference > 0.0) {
        return Err(SolverError::ZeroReference);
    }
    let total = field.p_total.norm();
    if total < DEEP_NULL_THRESHOLD {
        return Ok(InsertionLoss {
            db: 20.0 * (reference / DEEP_NULL_THRESHOLD).log10(),
            deep_null: true,
        });
    }
    Ok(InsertionLoss {
        db: 20.0 * (reference / total).log10(),
        deep_null: false,
    })
}

/// Outgoing expansion `sum_n c_n H_n(k r) e^{+-i n theta}` about `centre`.
fn outgoing_sum(
    k: f64,
    centre: Point2,
    point: Point2,
    coefficients: impl Iterator<Item = (i32, Complex64)>,
    n_max: usize,
    reflected: bool,
) -> Result<Complex64, SolverError> {
    let v = relative_vector(centre, point)?;
    let table = CylinderTable::new(n_max, k * v.distance)?;
    let sign = if reflected { -1.0 } else { 1.0 };
    Ok(coefficients
        .map(|(n, c)| c * table.h1(n) * Complex64::from_polar(1.0, sign * n as f64 * v.angle))
        .sum())
}

/// Total and reference field at `point` (outside every scatterer; the
/// surface itself is allowed).
pub fn evaluate_field(
    system: &ScatteringSystem,
    scene: &Scene,
    solution: &Solution,
    point: Point2,
) -> Result<FieldValue, SolverError> {
    let inside = |s: &crate::geometry::Scatterer| {
        s.center.distance_to(point) < s.radius * (1.0 - SURFACE_TOLERANCE)
    };
    if let Some(index) = scene.scatterers.iter().position(inside) {
        return Err(SolverError::InsideScatterer {
            x: point.x,
            y: point.y,
            index,
        });
    }
    let k = system.wavenumber;
    let direct = point.distance_to(scene.source);
    if direct == 0.0 {
        return Err(SolverError::Degenerate("field point coincides with the source".into()));
    }
    let mut reference = hankel1(0, k * direct)?;
    if let Some(reflection) = &system.reflection {
        let image = point.distance_to(scene.source.reflect());
        if image == 0.0 {
            return Err(SolverError::Degenerate(
                "field point coincides with the image source".into(),
            ));
        }
        reference += reflection.source * hankel1(0, k * image)?;
    }

    let n_max = system.order.0 as i32;
    let mut scattered = Complex64::new(0.0, 0.0);
    for (m, s) in scene.scatterers.iter().enumerate() {
        let weights = (-n_max..=n_max).map(|n| (n, solution.get(m, n) * system.factors[m].get(n)));
        scattered += outgoing_sum(k, s.center, point, weights, system.order.0, false)?;
        if let Some(reflection) = &system.reflection {
            let weights =
                (-n_max..=n_max).map(|n| (n, solution.get(m, n) * system.factors[m].get(n)));
            scattered += reflection.scatterers[m]
                * outgoing_sum(k, s.center.reflect(), point, weights, system.order.0, true)?;
        }
    }
    Ok(FieldValue {
        p_total: reference + scattered,
        p_reference: reference,
    })
}

/// Result of a full assemble / solve / evaluate cycle at the receiver.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyResult {
    pub frequency_hz: f64,
    pub field: FieldValue,
    pub insertion_loss: InsertionLoss,
    pub near_singular: bool,
    pub q_anomaly: bool,
    pub condition_estimate: f64,
    pub relative_residual: f64,
}

pub fn solve_frequency(
    problem: &Problem,
    frequency_hz: f64,
    order: TruncationOrder,
) -> Result<FrequencyResult, SolverError> {
    let mode = HalfSpace::for_ground(&problem.ground, frequency_hz)?;
    solve_frequency_with_mode(problem, mode, frequency_hz, order)
}

/// As [`solve_frequency`] with an explicit ground mode.
pub fn solve_frequency_with_mode(
    problem: &Problem,
    mode: HalfSpace,
    frequency_hz: f64,
    order: TruncationOrder,
) -> Result<FrequencyResult, SolverError> {
    let system = assemble(
        &problem.scene,
        &problem.scatterer,
        &problem.medium,
        mode,
        frequency_hz,
        order,
    )?;
    let solution = solve(&system)?;
    let field = evaluate_field(&system, &problem.scene, &solution, problem.scene.receiver)?;
    Ok(FrequencyResult {
        frequency_hz,
        field,
        insertion_loss: insertion_loss(field)?,
        near_singular: system.near_singular,
        q_anomaly: system.reflection.as_ref().is_some_and(|r| r.anomaly),
        condition_estimate: solution.condition_estimate,
        relative_residual: solution.relative_residual,
    })
}

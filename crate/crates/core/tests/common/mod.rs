#![allow(dead_code)]

use std::f64::consts::PI;

use mst_ground::geometry::Point2;
use mst_ground::mst::{assemble, evaluate_field, solve, FieldValue, HalfSpace, Problem, TruncationOrder};
use num_complex::Complex64;

pub const SURFACE_ANGLES: usize = 64;

/// Largest `|dp/dr|` on each cylinder surface relative to the largest
/// `|dp_0/dr|` on that surface, maximised over cylinders. The radial
/// derivative is a one-sided fourth-order difference of the evaluated field.
pub fn boundary_residual(problem: &Problem, mode: HalfSpace, frequency_hz: f64, order: usize) -> f64 {
    let system = assemble(
        &problem.scene,
        &problem.scatterer,
        &problem.medium,
        mode,
        frequency_hz,
        TruncationOrder(order),
    )
    .expect("assemble");
    let solution = solve(&system).expect("solve");
    let mut worst: f64 = 0.0;
    for s in &problem.scene.scatterers {
        let h = 1e-3 * s.radius;
        let mut residual: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for j in 0..SURFACE_ANGLES {
            let theta = 2.0 * PI * j as f64 / SURFACE_ANGLES as f64;
            let samples: Vec<FieldValue> = (0..5)
                .map(|i| {
                    let r = s.radius + i as f64 * h;
                    let point = Point2::new(s.center.x + r * theta.cos(), s.center.y + r * theta.sin());
                    evaluate_field(&system, &problem.scene, &solution, point).expect("field")
                })
                .collect();
            let derivative = |pick: fn(&FieldValue) -> Complex64| {
                let v: Vec<Complex64> = samples.iter().map(pick).collect();
                (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) / (12.0 * h)
            };
            residual = residual.max(derivative(|f| f.p_total).norm());
            scale = scale.max(derivative(|f| f.p_reference).norm());
        }
        worst = worst.max(residual / scale);
    }
    worst
}

mod common;

use std::f64::consts::PI;

use mst_ground::config::preset;
use mst_ground::geometry::{relative_vector, GroundKind, Point2, PolarVector, Scatterer, Scene};
use mst_ground::ground::GroundModel;
use mst_ground::mst::linalg::{euclidean_norm, mat_vec};
use mst_ground::mst::{
    assemble, graf_translate, solve, solve_frequency, solve_frequency_with_mode, GrafForm, HalfSpace, Problem,
    SolverError, TruncationOrder,
};
use mst_ground::scatterer::{Medium, ScattererModel};
use mst_ground::specfun::hankel1;
use mst_ground::sweep::FrequencyGrid;
use num_complex::Complex64;
use proptest::prelude::*;

fn problem(source: Point2, receiver: Point2, scatterers: Vec<Scatterer>, ground: GroundModel) -> Problem {
    Problem {
        scene: Scene::new(source, receiver, scatterers, ground.kind()).unwrap(),
        scatterer: ScattererModel::Rigid,
        medium: Medium::default(),
        ground,
    }
}

fn fig2() -> Problem {
    preset("fig2").unwrap().problem().unwrap()
}

fn polar(from: Point2, to: Point2) -> PolarVector {
    relative_vector(from, to).unwrap()
}

#[test]
fn graf_addition_theorem_direct() {
    let k = 7.3;
    let c_p = Point2::new(0.9, 0.4);
    let c_m = Point2::new(0.2, 0.1);
    let translation = polar(c_m, c_p);
    for point in [Point2::new(0.25, 0.18), Point2::new(0.05, 0.0), Point2::new(0.3, -0.2)] {
        let local = polar(c_m, point);
        let seen = polar(c_p, point);
        for n in [-5, -1, 0, 2, 6] {
            let exact = hankel1(n, k * seen.distance).unwrap() * Complex64::from_polar(1.0, n as f64 * seen.angle);
            let series = graf_translate(n, k, local, translation, GrafForm::Direct, 40).unwrap();
            assert!((series - exact).norm() <= 1e-8 * exact.norm(), "n = {n}");
        }
    }
}

#[test]
fn graf_addition_theorem_reflected() {
    let k = 11.0;
    let c_p = Point2::new(0.6, 0.15);
    let image = c_p.reflect();
    let c_m = Point2::new(0.3, 0.15);
    let translation = polar(c_m, image);
    for point in [Point2::new(0.35, 0.2), Point2::new(0.3, 0.05), Point2::new(0.2, 0.1)] {
        let local = polar(c_m, point);
        let seen = polar(image, point);
        for n in [-4, 0, 1, 3] {
            let exact =
                hankel1(n, k * seen.distance).unwrap() * Complex64::from_polar(1.0, -(n as f64) * seen.angle);
            let series = graf_translate(n, k, local, translation, GrafForm::Reflected, 40).unwrap();
            assert!((series - exact).norm() <= 1e-8 * exact.norm(), "n = {n}");
        }
    }
}

#[test]
fn graf_rejects_points_outside_the_disk() {
    let local = PolarVector { distance: 1.0, angle: 0.0 };
    let translation = PolarVector { distance: 1.0, angle: 0.5 };
    assert!(matches!(
        graf_translate(0, 1.0, local, translation, GrafForm::Direct, 10),
        Err(SolverError::GrafRadius { .. })
    ));
}

#[test]
fn single_cylinder_closed_form() {
    let source = Point2::new(0.0, 0.0);
    let centre = Point2::new(1.7, 0.4);
    let p = problem(source, Point2::new(5.0, 0.0), vec![Scatterer::new(1.7, 0.4, 0.1)], GroundModel::FreeField);
    let order = 8;
    let f = 640.0;
    let k = p.medium.wavenumber(f);
    let system = assemble(&p.scene, &p.scatterer, &p.medium, HalfSpace::FreeField, f, TruncationOrder(order)).unwrap();
    let solution = solve(&system).unwrap();
    let r01 = source.distance_to(centre);
    let alpha01 = (centre.y - source.y).atan2(centre.x - source.x);
    for n in -(order as i32)..=order as i32 {
        let want = -hankel1(n, k * r01).unwrap() * Complex64::from_polar(1.0, -(n as f64) * (PI + alpha01));
        let got = solution.get(0, n);
        assert!((got - want).norm() <= 1e-12 * want.norm(), "n = {n}: {got} vs {want}");
    }
}

#[test]
fn rigid_ground_without_scatterers_doubles_the_free_field() {
    let source = Point2::new(0.0, 0.0);
    let receiver = Point2::new(10.0, 0.0);
    let p = problem(source, receiver, Vec::new(), GroundModel::Rigid);
    for f in [100.0, 573.0, 1200.0] {
        let result = solve_frequency(&p, f, TruncationOrder(7)).unwrap();
        let free = hankel1(0, p.medium.wavenumber(f) * 10.0).unwrap();
        assert!((result.field.p_total - 2.0 * free).norm() <= 1e-14 * free.norm());
        assert_eq!(result.insertion_loss.db, 0.0);
    }
}

#[test]
fn vanishing_scatterers_leave_the_field_unchanged() {
    let mut previous = f64::INFINITY;
    for radius in [1e-2, 1e-3, 1e-4] {
        let p = problem(
            Point2::new(0.0, 0.0),
            Point2::new(4.0, 0.3),
            vec![Scatterer::new(2.0, 0.2, radius), Scatterer::new(2.3, 0.2, radius)],
            GroundModel::FreeField,
        );
        let result = solve_frequency(&p, 800.0, TruncationOrder(7)).unwrap();
        let change = (result.field.p_total - result.field.p_reference).norm() / result.field.p_reference.norm();
        assert!(change < previous);
        previous = change;
    }
    assert!(previous < 1e-6);
}

#[test]
fn zero_admittance_reproduces_rigid_ground_exactly() {
    let p = preset("fig7a").unwrap().problem().unwrap();
    for f in [150.0, 1100.0, 2600.0] {
        let rigid = solve_frequency_with_mode(&p, HalfSpace::RigidImage, f, TruncationOrder(6)).unwrap();
        let wvdp = solve_frequency_with_mode(
            &p,
            HalfSpace::WeylVanDerPol { beta: Complex64::new(0.0, 0.0) },
            f,
            TruncationOrder(6),
        )
        .unwrap();
        assert_eq!(rigid.insertion_loss.db, wvdp.insertion_loss.db);
    }
}

#[test]
fn mirror_symmetry() {
    let base = fig2();
    let mirrored = Problem {
        scene: base.scene.mirror_image(),
        ..base.clone()
    };
    for mode in [HalfSpace::RigidImage, HalfSpace::FreeField] {
        let ground = if mode == HalfSpace::FreeField { GroundKind::FreeField } else { GroundKind::Rigid };
        let a = Problem {
            scene: Scene { ground, ..base.scene.clone() },
            ..base.clone()
        };
        let b = Problem {
            scene: Scene { ground, ..mirrored.scene.clone() },
            ..mirrored.clone()
        };
        for f in [230.0, 611.0] {
            let x = solve_frequency_with_mode(&a, mode, f, TruncationOrder(6)).unwrap();
            let y = solve_frequency_with_mode(&b, mode, f, TruncationOrder(6)).unwrap();
            assert!((x.insertion_loss.db - y.insertion_loss.db).abs() < 1e-9, "{mode:?} {f}");
        }
    }
}

#[test]
fn doubled_array_equivalence_on_a_few_frequencies() {
    let half = fig2();
    let doubled = Problem {
        scene: half.scene.with_image_array(),
        ground: GroundModel::FreeField,
        ..half.clone()
    };
    for f in [140.0, 573.0, 990.0] {
        let a = solve_frequency(&half, f, TruncationOrder(7)).unwrap();
        let b = solve_frequency(&doubled, f, TruncationOrder(7)).unwrap();
        assert!((a.insertion_loss.db - b.insertion_loss.db).abs() <= 1e-8, "{f} Hz");
    }
}

#[test]
fn truncation_error_decreases_with_order() {
    let p = fig2();
    let grid = FrequencyGrid::linear(100.0, 1200.0, 24).frequencies().unwrap();
    let il = |order: usize| -> Vec<f64> {
        grid.iter()
            .map(|&f| solve_frequency(&p, f, TruncationOrder(order)).unwrap().insertion_loss.db)
            .collect()
    };
    let spectra: Vec<Vec<f64>> = [4, 6, 8, 10].into_iter().map(il).collect();
    let gaps: Vec<f64> = spectra
        .windows(2)
        .map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
        .collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
}

#[test]
fn solve_meets_its_residual_and_is_deterministic() {
    let p = preset("fig7a").unwrap().problem().unwrap();
    for f in [100.0, 400.0, 2500.0] {
        let system = assemble(&p.scene, &p.scatterer, &p.medium, HalfSpace::RigidImage, f, TruncationOrder(7)).unwrap();
        let a = solve(&system).unwrap();
        let b = solve(&system).unwrap();
        assert_eq!(a, b);
        let y: Vec<Complex64> = a.coefficients.iter().zip(&system.scaling).map(|(c, s)| c / s).collect();
        let residual: Vec<Complex64> = mat_vec(&system.matrix, system.dimension(), &y)
            .iter()
            .zip(&system.rhs)
            .map(|(v, b)| v - b)
            .collect();
        assert!(euclidean_norm(&residual) <= 1e-10 * euclidean_norm(&system.rhs));
        assert!(a.relative_residual <= 1e-10);
    }
}

#[test]
fn free_field_diagonal_is_unity() {
    let p = fig2();
    let scene = Scene { ground: GroundKind::FreeField, ..p.scene.clone() };
    let system = assemble(&scene, &p.scatterer, &p.medium, HalfSpace::FreeField, 500.0, TruncationOrder(5)).unwrap();
    for i in 0..system.dimension() {
        assert_eq!(system.entry(i, i), Complex64::new(1.0, 0.0));
    }
}

#[test]
fn field_inside_a_scatterer_is_rejected() {
    let p = problem(
        Point2::new(0.0, 0.0),
        Point2::new(2.0, 0.0),
        vec![Scatterer::new(1.0, 0.0, 0.2)],
        GroundModel::FreeField,
    );
    let system = assemble(&p.scene, &p.scatterer, &p.medium, HalfSpace::FreeField, 300.0, TruncationOrder(5)).unwrap();
    let solution = solve(&system).unwrap();
    let inside = mst_ground::mst::evaluate_field(&system, &p.scene, &solution, Point2::new(1.05, 0.0));
    assert!(matches!(inside, Err(SolverError::InsideScatterer { index: 0, .. })));
}

#[test]
fn single_cylinder_satisfies_the_rigid_boundary_condition() {
    let p = problem(
        Point2::new(0.0, 0.0),
        Point2::new(10.0, 0.0),
        vec![Scatterer::new(1.6, 0.15, 0.1)],
        GroundModel::FreeField,
    );
    // The first neglected incident mode leaves J_{N+1}'(ka) unmatched, so
    // N = 8 resolves ka <= 1 and N = 12 resolves ka = 2.
    for (f, order) in [(200.0, 8), (573.0, 8), (1100.0, 12)] {
        let r = common::boundary_residual(&p, HalfSpace::FreeField, f, order);
        assert!(r <= 1e-6, "{f} Hz: {r:e}");
    }
}

#[test]
fn boundary_residual_falls_with_truncation_order() {
    let p = problem(
        Point2::new(0.0, 0.0),
        Point2::new(10.0, 0.0),
        vec![Scatterer::new(1.6, 0.15, 0.1), Scatterer::new(1.9, 0.15, 0.1)],
        GroundModel::Rigid,
    );
    let residuals: Vec<f64> = [4, 8, 12, 16]
        .into_iter()
        .map(|n| common::boundary_residual(&p, HalfSpace::RigidImage, 573.0, n))
        .collect();
    assert!(residuals.windows(2).all(|w| w[1] < 0.2 * w[0]), "{residuals:?}");
    assert!(residuals[3] <= 1e-6, "{residuals:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn graf_identity_at_random_points(
        n in -6i32..=6,
        k in 0.5..20.0f64,
        angle in -PI..PI,
        fraction in 0.0..0.6f64,
        local_angle in -PI..PI,
    ) {
        let translation = PolarVector { distance: 0.5, angle };
        let local = PolarVector { distance: fraction * 0.5, angle: local_angle };
        let c_p = Point2::new(0.5 * angle.cos(), 0.5 * angle.sin());
        let point = Point2::new(local.distance * local_angle.cos(), local.distance * local_angle.sin());
        let seen = polar(c_p, point);
        let exact = hankel1(n, k * seen.distance).unwrap() * Complex64::from_polar(1.0, n as f64 * seen.angle);
        let series = graf_translate(n, k, local, translation, GrafForm::Direct, 60).unwrap();
        prop_assert!((series - exact).norm() <= 1e-8 * exact.norm());
    }
}

//! Source, receiver and scatterer layout, and reflection in the ground line.
//!
//! Coordinates: the source plane is `x = 0`, the ground is the line `y = 0`
//! and the physical half-space is `y >= 0`. Lattice scatterers are indexed
//! row-major from the bottom-left cylinder.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("invalid geometry: {}", .0.join("; "))]
    Invalid(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Mirror image in the ground line `y = 0`.
    pub fn reflect(self) -> Self {
        Self::new(self.x, -self.y)
    }

    pub fn distance_to(self, other: Point2) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Distance and direction of one point as seen from another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarVector {
    pub distance: f64,
    /// Angle from the +x axis, in `(-pi, pi]`.
    pub angle: f64,
}

/// Vector from `from` to `to` in polar form.
pub fn relative_vector(from: Point2, to: Point2) -> Result<PolarVector, GeometryError> {
    let dx = to.x - from.x;
    let dy = to.y - from.y;
    let distance = dx.hypot(dy);
    if distance == 0.0 || !distance.is_finite() {
        return Err(GeometryError::Degenerate(format!(
            "zero-length vector from ({}, {}) to ({}, {})",
            from.x, from.y, to.x, to.y
        )));
    }
    let mut angle = dy.atan2(dx);
    if angle <= -PI {
        angle = PI;
    }
    Ok(PolarVector { distance, angle })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scatterer {
    pub center: Point2,
    pub radius: f64,
}

impl Scatterer {
    pub fn new(x: f64, y: f64, radius: f64) -> Self {
        Self {
            center: Point2::new(x, y),
            radius,
        }
    }

    pub fn contains(&self, point: Point2) -> bool {
        self.center.distance_to(point) < self.radius
    }

    pub fn reflect(&self) -> Self {
        Self {
            center: self.center.reflect(),
            radius: self.radius,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadiusOverride {
    /// Row-major scatterer index, 0-based.
    pub index: usize,
    pub radius: f64,
}

/// Square lattice of identical cylinders.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrayConfig {
    /// Number of cylinders along x.
    pub columns: usize,
    /// Number of cylinders along y.
    pub rows: usize,
    pub lattice_constant: f64,
    /// Distance from the source plane to the source-facing edge of the array.
    pub standoff: f64,
    /// Centre height of the lowest row.
    pub height: f64,
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub radius_overrides: Vec<RadiusOverride>,
}

impl ArrayConfig {
    pub fn len(&self) -> usize {
        self.columns * self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn radius_of(&self, index: usize) -> f64 {
        self.radius_overrides
            .iter()
            .rev()
            .find(|o| o.index == index)
            .map_or(self.radius, |o| o.radius)
    }

    /// Every violated invariant, one message each.
    pub fn violations(&self, ground_present: bool) -> Vec<String> {
        let mut issues = Vec::new();
        if self.columns == 0 {
            issues.push("columns must be at least 1".to_string());
        }
        if self.rows == 0 {
            issues.push("rows must be at least 1".to_string());
        }
        for (name, value) in [
            ("lattice_constant", self.lattice_constant),
            ("standoff", self.standoff),
            ("height", self.height),
            ("radius", self.radius),
        ] {
            if !(value.is_finite() && value > 0.0) {
                issues.push(format!("{name} must be positive and finite (got {value})"));
            }
        }
        for o in &self.radius_overrides {
            if o.index >= self.len() {
                issues.push(format!(
                    "radius_overrides: index {} out of range for {} cylinders",
                    o.index,
                    self.len()
                ));
            }
            if !(o.radius.is_finite() && o.radius > 0.0) {
                issues.push(format!(
                    "radius_overrides: radius for index {} must be positive (got {})",
                    o.index, o.radius
                ));
            }
        }
        let largest = self
            .radius_overrides
            .iter()
            .map(|o| o.radius)
            .fold(self.radius, f64::max);
        if self.lattice_constant <= 2.0 * largest {
            issues.push(format!(
                "lattice_constant {} must exceed the largest diameter {}",
                self.lattice_constant,
                2.0 * largest
            ));
        }
        if ground_present && self.height < largest {
            issues.push(format!(
                "height {} must be at least the radius {} above the ground",
                self.height, largest
            ));
        }
        issues
    }
}

/// Cylinder centres of a square lattice, row-major from the bottom-left.
///
/// Column `j`, row `i` sits at `(standoff + radius + j L, height + i L)`.
pub fn build_square_lattice(
    cfg: &ArrayConfig,
    ground_present: bool,
) -> Result<Vec<Scatterer>, GeometryError> {
    let issues = cfg.violations(ground_present);
    if !issues.is_empty() {
        return Err(GeometryError::Invalid(issues));
    }
    let first_column = cfg.standoff + cfg.radius;
    let mut out = Vec::with_capacity(cfg.len());
    for row in 0..cfg.rows {
        for column in 0..cfg.columns {
            let index = row * cfg.columns + column;
            out.push(Scatterer::new(
                first_column + column as f64 * cfg.lattice_constant,
                cfg.height + row as f64 * cfg.lattice_constant,
                cfg.radius_of(index),
            ));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroundKind {
    FreeField,
    Rigid,
    Impedance,
}

impl GroundKind {
    pub fn has_ground(self) -> bool {
        !matches!(self, GroundKind::FreeField)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub source: Point2,
    pub receiver: Point2,
    pub scatterers: Vec<Scatterer>,
    pub ground: GroundKind,
}

impl Scene {
    /// Validated scene.
    pub fn new(
        source: Point2,
        receiver: Point2,
        scatterers: Vec<Scatterer>,
        ground: GroundKind,
    ) -> Result<Self, GeometryError> {
        let scene = Self {
            source,
            receiver,
            scatterers,
            ground,
        };
        let issues = scene.violations();
        if issues.is_empty() {
            Ok(scene)
        } else {
            Err(GeometryError::Invalid(issues))
        }
    }

    pub fn len(&self) -> usize {
        self.scatterers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scatterers.is_empty()
    }

    /// Every violated invariant, one message each.
    pub fn violations(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !self.source.is_finite() {
            issues.push("source coordinates must be finite".into());
        }
        if !self.receiver.is_finite() {
            issues.push("receiver coordinates must be finite".into());
        }
        if self.source == self.receiver {
            issues.push("source and receiver coincide".into());
        }
        if self.ground.has_ground() {
            if self.source.y < 0.0 {
                issues.push(format!("source y = {} is below the ground", self.source.y));
            }
            if self.receiver.y < 0.0 {
                issues.push(format!("receiver y = {} is below the ground", self.receiver.y));
            }
        }
        for (m, s) in self.scatterers.iter().enumerate() {
            if !(s.center.is_finite() && s.radius.is_finite() && s.radius > 0.0) {
                issues.push(format!("scatterer {m}: radius must be positive and finite"));
                continue;
            }
            if self.ground.has_ground() && s.center.y < s.radius {
                issues.push(format!(
                    "scatterer {m}: centre height {} is less than its radius {}",
                    s.center.y, s.radius
                ));
            }
            if s.contains(self.source) {
                issues.push(format!("source lies inside scatterer {m}"));
            }
            if s.contains(self.receiver) {
                issues.push(format!("receiver lies inside scatterer {m}"));
            }
            for (p, other) in self.scatterers.iter().enumerate().skip(m + 1) {
                if s.center.distance_to(other.center) <= s.radius + other.radius {
                    issues.push(format!("scatterers {m} and {p} overlap"));
                }
            }
        }
        issues
    }

    /// The scene reflected in `y = 0`: image source, image receiver and image
    /// scatterers. Image `m` is the reflection of scatterer `m`.
    pub fn mirror_image(&self) -> Scene {
        Scene {
            source: self.source.reflect(),
            receiver: self.receiver.reflect(),
            scatterers: self.scatterers.iter().map(Scatterer::reflect).collect(),
            ground: self.ground,
        }
    }

    /// Free-field scene whose scatterers are the originals followed by their
    /// images.
    pub fn with_image_array(&self) -> Scene {
        let mut scatterers = self.scatterers.clone();
        scatterers.extend(self.scatterers.iter().map(Scatterer::reflect));
        Scene {
            source: self.source,
            receiver: self.receiver,
            scatterers,
            ground: GroundKind::FreeField,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(columns: usize, rows: usize, l: f64, height: f64, radius: f64) -> ArrayConfig {
        ArrayConfig {
            columns,
            rows,
            lattice_constant: l,
            standoff: 1.5,
            height,
            radius,
            radius_overrides: vec![],
        }
    }

    #[test]
    fn lowest_row_sits_half_a_lattice_constant_above_ground() {
        let cfg = lattice(5, 3, 0.3, 0.15, 0.1);
        let centers = build_square_lattice(&cfg, true).unwrap();
        assert_eq!(centers.len(), 15);
        for s in &centers[..5] {
            assert_eq!(s.center.y, 0.15);
            let image = s.reflect();
            assert!((s.center.distance_to(image.center) - 0.3).abs() < 1e-15);
        }
        assert_eq!(centers[0].center.x, 1.6);
    }

    #[test]
    fn single_cylinder_lattice() {
        let centers = build_square_lattice(&lattice(1, 1, 0.3, 0.15, 0.1), true).unwrap();
        assert_eq!(centers, vec![Scatterer::new(1.6, 0.15, 0.1)]);
    }

    #[test]
    fn top_row_height() {
        let centers = build_square_lattice(&lattice(7, 3, 0.069, 0.0345, 0.0275), true).unwrap();
        let top = centers.last().unwrap().center.y;
        assert!((top - 0.1725).abs() < 1e-15);
    }

    #[test]
    fn overrides_apply_by_index() {
        let mut cfg = lattice(2, 2, 0.3, 0.15, 0.1);
        cfg.radius_overrides.push(RadiusOverride { index: 3, radius: 0.05 });
        let centers = build_square_lattice(&cfg, true).unwrap();
        assert_eq!(centers[3].radius, 0.05);
        assert_eq!(centers[2].radius, 0.1);
    }

    #[test]
    fn lattice_violations_are_all_reported() {
        let cfg = lattice(0, 1, 0.15, 0.05, 0.1);
        let issues = cfg.violations(true);
        assert_eq!(issues.len(), 3, "{issues:?}");
        assert!(build_square_lattice(&cfg, true).is_err());
        // Without a ground the low lattice is acceptable.
        assert_eq!(lattice(1, 1, 0.3, 0.05, 0.1).violations(false).len(), 0);
    }

    #[test]
    fn reflection() {
        assert_eq!(Point2::new(0.0, 0.0).reflect(), Point2::new(0.0, 0.0));
        assert_eq!(Point2::new(1.5, 0.15).reflect(), Point2::new(1.5, -0.15));
        let p = Point2::new(0.3, 0.7);
        assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn relative_vectors() {
        let o = Point2::new(0.0, 0.0);
        let v = relative_vector(o, Point2::new(1.0, 0.0)).unwrap();
        assert_eq!((v.distance, v.angle), (1.0, 0.0));
        let v = relative_vector(o, Point2::new(0.0, 2.0)).unwrap();
        assert_eq!((v.distance, v.angle), (2.0, PI / 2.0));
        let v = relative_vector(Point2::new(0.0, 0.235), Point2::new(1.203, 0.352)).unwrap();
        assert!((v.distance - 1.208_676_1).abs() < 1e-6);
        assert!((v.angle - 0.096_951_9).abs() < 1e-6);
        let v = relative_vector(o, Point2::new(-1.0, -0.0)).unwrap();
        assert_eq!(v.angle, PI);
        assert!(relative_vector(o, o).is_err());
    }

    #[test]
    fn doubled_lattice_is_square() {
        let cfg = lattice(3, 5, 0.3, 0.15, 0.1);
        let scatterers = build_square_lattice(&cfg, true).unwrap();
        let scene = Scene::new(
            Point2::new(0.0, 0.0),
            Point2::new(10.0, 0.0),
            scatterers,
            GroundKind::Rigid,
        )
        .unwrap();
        let doubled = scene.with_image_array();
        assert_eq!(doubled.len(), 30);
        // Every centre sits on the grid x = 1.6 + jL, y = 0.15 + iL, i in -5..5.
        let mut cells: Vec<(i64, i64)> = doubled
            .scatterers
            .iter()
            .map(|s| {
                let j = (s.center.x - 1.6) / 0.3;
                let i = (s.center.y - 0.15) / 0.3;
                assert!((j - j.round()).abs() < 1e-12 && (i - i.round()).abs() < 1e-12);
                (i.round() as i64, j.round() as i64)
            })
            .collect();
        cells.sort_unstable();
        cells.dedup();
        assert_eq!(cells.len(), 30);
        assert_eq!(cells.first(), Some(&(-5, 0)));
        assert_eq!(cells.last(), Some(&(4, 2)));
    }

    #[test]
    fn scene_rejects_receiver_inside_cylinder_but_accepts_gaps() {
        let s = vec![Scatterer::new(1.0, 0.2, 0.1)];
        let err = Scene::new(Point2::new(0.0, 0.0), Point2::new(1.05, 0.2), s.clone(), GroundKind::Rigid);
        assert!(err.is_err());
        assert!(Scene::new(Point2::new(0.0, 0.0), Point2::new(1.0, 0.05), s, GroundKind::Rigid).is_ok());
    }
}

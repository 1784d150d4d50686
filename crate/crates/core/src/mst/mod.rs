//! Multiple-scattering solver: system assembly, dense solve and field
//! evaluation for free field, rigid ground (method of images) and impedance
//! ground (Weyl-Van der Pol reflection coefficients).

mod field;
mod graf;
pub mod linalg;
mod system;

pub use field::{
    evaluate_field, insertion_loss, solve_frequency, solve_frequency_with_mode, FieldValue,
    FrequencyResult, InsertionLoss, DEEP_NULL_THRESHOLD,
};
pub use graf::{graf_coefficients, graf_translate, GrafForm, TranslationKernel};
pub use system::{
    assemble, solve, HalfSpace, Problem, ReflectionFactors, ScatteringSystem, Solution,
    TruncationOrder, MAX_CONDITION,
};

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::ground::GroundError;
use crate::scatterer::ScattererError;
use crate::specfun::SpecfunError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Scatterer(#[from] ScattererError),
    #[error(transparent)]
    Ground(#[from] GroundError),
    #[error("addition theorem needs r_m < R (got r_m = {local}, R = {translation})")]
    GrafRadius { local: f64, translation: f64 },
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("ground mode does not match the scene: {0}")]
    Mode(String),
    #[error("system matrix is singular at {frequency_hz} Hz (column {column})")]
    Singular { frequency_hz: f64, column: usize },
    #[error("system matrix is ill-conditioned at {frequency_hz} Hz (condition estimate {condition:.3e})")]
    IllConditioned { frequency_hz: f64, condition: f64 },
    #[error("solution residual {residual:.3e} exceeds tolerance at {frequency_hz} Hz")]
    Residual { frequency_hz: f64, residual: f64 },
    #[error("field point ({x}, {y}) lies inside scatterer {index}")]
    InsideScatterer { x: f64, y: f64, index: usize },
    #[error("reference field vanishes; insertion loss is undefined")]
    ZeroReference,
}

//! Insertion loss of finite periodic arrays of cylinders above a ground
//! plane, computed by multiple scattering with the method of images (rigid
//! ground) or Weyl-Van der Pol reflection coefficients (impedance ground).
//!
//! A run goes configuration -> [`mst::Problem`] -> [`sweep::run_sweep`] ->
//! [`sweep::ILSpectrum`] -> [`output::write_spectrum`].

pub mod config;
pub mod geometry;
pub mod ground;
pub mod mst;
pub mod output;
pub mod scatterer;
pub mod specfun;
pub mod sweep;

use thiserror::Error;

pub use config::{load_config, preset, SimulationConfig};
pub use mst::{Problem, TruncationOrder};
pub use sweep::{run_sweep, FrequencyGrid, ILSpectrum, SweepOptions};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error(transparent)]
    Sweep(#[from] sweep::SweepError),
    #[error(transparent)]
    Solver(#[from] mst::SolverError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

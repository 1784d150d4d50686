//! Special functions needed by the scattering solver.
//!
//! Integer-order Bessel functions of the first and second kind for positive
//! real argument, Hankel functions of the first kind, their argument
//! derivatives, and the boundary-loss function of the spherical-wave
//! reflection coefficient (built on the Faddeeva function).
//!
//! Everything here is a pure function of its inputs.

mod bessel;
mod faddeeva;

pub use bessel::{
    bessel_j, bessel_j_prime, bessel_j_seq, bessel_y, bessel_y_seq, dr_bessel, hankel1,
    hankel1_prime, CylinderFunction, CylinderTable, MAX_ORDER,
};
pub use faddeeva::{f_boundary_loss, faddeeva, MAX_EXPONENT};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("{function}: argument {arg} outside the domain (must be finite and > 0)")]
    Domain { function: &'static str, arg: f64 },
    #[error("{function}: order {order} exceeds the supported maximum {max}")]
    Order {
        function: &'static str,
        order: i64,
        max: usize,
    },
    #[error("{function}: result overflows at argument {arg}")]
    Overflow { function: &'static str, arg: String },
}

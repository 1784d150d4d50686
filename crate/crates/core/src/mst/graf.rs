//! Graf's addition theorem for outgoing cylindrical waves.
//!
//! An outgoing wave centred on `c_p`, observed at a point `r_m, theta_m`
//! relative to `c_m`, is re-expanded in regular waves about `c_m`:
//!
//! `H_n(k r_p) e^{i n theta_p} = sum_q J_q(k r_m) H_{n-q}(k R) e^{i (n-q) (pi + alpha)} e^{i q theta_m}`
//!
//! where `R, alpha` locate `c_p` as seen from `c_m`. The reflected form
//! expands `H_n(k r'_p) e^{-i n theta'_p}`, the wave of an image centre:
//!
//! `... = sum_q J_q(k r_m) (-1)^n H_{-(n+q)}(k R') e^{-i (n+q) (pi + alpha')} e^{i q theta_m}`.
//!
//! Both converge only for `r_m < R`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::SolverError;
use crate::geometry::{relative_vector, Point2, PolarVector};
use crate::specfun::{bessel_j, CylinderTable};

/// Orientation of the expanded wave.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrafForm {
    /// `H_n(k r_p) e^{i n theta_p}` of a physical centre.
    Direct,
    /// `H_n(k r'_p) e^{-i n theta'_p}` of an image centre.
    Reflected,
}

/// `g(nu) = H_nu(k R) e^{i nu Theta}` with `R, Theta` the distance and polar
/// angle of `target - origin`: the translation factor that carries outgoing
/// waves centred at `origin` onto regular waves centred at `target`.
#[derive(Debug, Clone)]
pub struct TranslationKernel {
    table: CylinderTable,
    rotation: Complex64,
    vector: PolarVector,
}

impl TranslationKernel {
    pub fn new(k: f64, origin: Point2, target: Point2, max_order: usize) -> Result<Self, SolverError> {
        let vector = relative_vector(origin, target)?;
        Self::from_vector(k, vector, max_order)
    }

    pub fn from_vector(k: f64, vector: PolarVector, max_order: usize) -> Result<Self, SolverError> {
        let table = CylinderTable::new(max_order, k * vector.distance)?;
        Ok(Self {
            table,
            rotation: Complex64::from_polar(1.0, vector.angle),
            vector,
        })
    }

    pub fn vector(&self) -> PolarVector {
        self.vector
    }

    pub fn max_order(&self) -> usize {
        self.table.max_order()
    }

    pub fn g(&self, nu: i32) -> Complex64 {
        self.table.h1(nu) * self.rotation.powi(nu)
    }

    /// `g(nu)` for `nu = -max..=max`, indexed by `nu + max`.
    pub fn values(&self) -> Vec<Complex64> {
        let max = self.table.max_order() as i32;
        let mut out = vec![Complex64::new(0.0, 0.0); (2 * max + 1) as usize];
        let mut phase = Complex64::new(1.0, 0.0);
        let inverse = self.rotation.conj();
        out[max as usize] = self.table.h1(0);
        let mut back = Complex64::new(1.0, 0.0);
        for nu in 1..=max {
            phase *= self.rotation;
            back *= inverse;
            out[(max + nu) as usize] = self.table.h1(nu) * phase;
            out[(max - nu) as usize] = self.table.h1(-nu) * back;
        }
        out
    }
}

/// Coefficients `c_q`, `q = -q_max..=q_max`, of the re-expansion of mode `n`
/// about `c_m`, so that the wave equals `sum_q c_q J_q(k r_m) e^{i q theta_m}`.
/// `translation` is `(R, alpha)`, the position of the (image) centre seen from
/// `c_m`.
pub fn graf_coefficients(
    n: i32,
    k: f64,
    translation: PolarVector,
    form: GrafForm,
    q_max: usize,
) -> Result<Vec<Complex64>, SolverError> {
    let reversed = PolarVector {
        distance: translation.distance,
        angle: translation.angle + PI,
    };
    let max_order = n.unsigned_abs() as usize + q_max;
    let kernel = TranslationKernel::from_vector(k, reversed, max_order)?;
    let q_max = q_max as i32;
    Ok((-q_max..=q_max)
        .map(|q| match form {
            GrafForm::Direct => kernel.g(n - q),
            GrafForm::Reflected => parity(n) * kernel.g(-(n + q)),
        })
        .collect())
}

/// Evaluates the truncated right-hand side of the addition theorem at the
/// local point `(r_m, theta_m)`.
pub fn graf_translate(
    n: i32,
    k: f64,
    local: PolarVector,
    translation: PolarVector,
    form: GrafForm,
    q_max: usize,
) -> Result<Complex64, SolverError> {
    if !(local.distance < translation.distance) {
        return Err(SolverError::GrafRadius {
            local: local.distance,
            translation: translation.distance,
        });
    }
    let coefficients = graf_coefficients(n, k, translation, form, q_max)?;
    let q_max = q_max as i32;
    let mut sum = Complex64::new(0.0, 0.0);
    for (c, q) in coefficients.iter().zip(-q_max..=q_max) {
        if local.distance == 0.0 {
            if q == 0 {
                sum += c;
            }
            continue;
        }
        let j = bessel_j(q, k * local.distance)?;
        sum += c * j * Complex64::from_polar(1.0, q as f64 * local.angle);
    }
    Ok(sum)
}

pub(crate) fn parity(n: i32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

//! Faddeeva function `w(z) = exp(-z^2) erfc(-i z)` and the boundary-loss
//! function `F(w) = 1 + i sqrt(pi) w exp(-w^2) erfc(-i w)`.
//!
//! Upper half-plane:
//! - `|z| >= 8`: Laplace continued fraction, 40 levels.
//! - `|z| < 8`: Weideman's rational expansion with 40 terms.
//!
//! The lower half-plane follows from `w(z) = 2 exp(-z^2) - w(-z)`, which
//! grows like `exp(y^2 - x^2)`. Results whose exponent would exceed
//! [`MAX_EXPONENT`] are reported as overflow.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::SpecfunError;

/// Largest `Re(-z^2)` accepted in the lower half-plane.
pub const MAX_EXPONENT: f64 = 700.0;

const CONTINUED_FRACTION_RADIUS: f64 = 8.0;
const CONTINUED_FRACTION_DEPTH: usize = 40;
const WEIDEMAN_TERMS: usize = 40;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;
const SQRT_PI: f64 = 1.772_453_850_905_516;

struct Weideman {
    scale: f64,
    coefficients: [f64; WEIDEMAN_TERMS],
}

fn weideman() -> &'static Weideman {
    static TABLE: OnceLock<Weideman> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = WEIDEMAN_TERMS;
        let m = 2 * n;
        let scale = (n as f64 / std::f64::consts::SQRT_2).sqrt();
        let samples: Vec<(f64, f64)> = (-(m as i64) + 1..m as i64)
            .map(|k| {
                let t = scale * (k as f64 * PI / (2 * m) as f64).tan();
                (k as f64, (-t * t).exp() * (scale * scale + t * t))
            })
            .collect();
        let mut coefficients = [0.0; WEIDEMAN_TERMS];
        for (j, c) in coefficients.iter_mut().enumerate() {
            let order = (j + 1) as f64;
            let sum: f64 = samples
                .iter()
                .map(|&(k, f)| f * (PI * order * k / m as f64).cos())
                .sum();
            *c = sum / (2 * m) as f64;
        }
        Weideman {
            scale,
            coefficients,
        }
    })
}

fn weideman_w(z: Complex64) -> Complex64 {
    let table = weideman();
    let i = Complex64::i();
    let denominator = table.scale - i * z;
    let ratio = (table.scale + i * z) / denominator;
    let p = table
        .coefficients
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * ratio + c);
    2.0 * p / (denominator * denominator) + FRAC_1_SQRT_PI / denominator
}

/// Tail `T` of the continued fraction `w(z) = (i / sqrt(pi)) / (z - T)`.
fn continued_fraction_tail(z: Complex64) -> Complex64 {
    (1..=CONTINUED_FRACTION_DEPTH)
        .rev()
        .fold(Complex64::new(0.0, 0.0), |tail, k| (0.5 * k as f64) / (z - tail))
}

fn upper_w(z: Complex64) -> Complex64 {
    if z.norm() >= CONTINUED_FRACTION_RADIUS {
        Complex64::new(0.0, FRAC_1_SQRT_PI) / (z - continued_fraction_tail(z))
    } else {
        weideman_w(z)
    }
}

fn upper_boundary_loss(z: Complex64) -> Complex64 {
    if z.norm() >= CONTINUED_FRACTION_RADIUS {
        // 1 + i sqrt(pi) z w(z) = -T / (z - T) without the cancellation.
        let tail = continued_fraction_tail(z);
        -tail / (z - tail)
    } else {
        1.0 + Complex64::new(0.0, SQRT_PI) * z * weideman_w(z)
    }
}

fn reflection_term(z: Complex64) -> Result<Complex64, SpecfunError> {
    let exponent = -z * z;
    if exponent.re > MAX_EXPONENT {
        return Err(SpecfunError::Overflow {
            function: "faddeeva",
            arg: format!("{z}"),
        });
    }
    Ok(exponent.exp())
}

fn check_finite(function: &'static str, z: Complex64) -> Result<(), SpecfunError> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(SpecfunError::Overflow {
            function,
            arg: format!("{z}"),
        })
    }
}

/// Faddeeva function `w(z) = exp(-z^2) erfc(-i z)`.
pub fn faddeeva(z: Complex64) -> Result<Complex64, SpecfunError> {
    check_finite("faddeeva", z)?;
    if z.im >= 0.0 {
        Ok(upper_w(z))
    } else {
        Ok(2.0 * reflection_term(z)? - upper_w(-z))
    }
}

/// Boundary-loss function `F(w) = 1 + i sqrt(pi) w exp(-w^2) erfc(-i w)`.
pub fn f_boundary_loss(w: Complex64) -> Result<Complex64, SpecfunError> {
    check_finite("f_boundary_loss", w)?;
    if w.im >= 0.0 {
        Ok(upper_boundary_loss(w))
    } else {
        // F(w) = F(-w) + 2 i sqrt(pi) w exp(-w^2)
        let growth = reflection_term(w).map_err(|_| SpecfunError::Overflow {
            function: "f_boundary_loss",
            arg: format!("{w}"),
        })?;
        Ok(upper_boundary_loss(-w) + Complex64::new(0.0, 2.0 * SQRT_PI) * w * growth)
    }
}

//! Integer-order Bessel and Hankel functions of positive real argument.
//!
//! Three regimes:
//! - `x < 2`: Maclaurin series for `J_n` (no zeros there, no cancellation).
//! - `2 <= x < 25`: Miller backward recurrence normalised with
//!   `1 = J_0 + 2 sum J_2k`.
//! - `x >= 25`: Hankel asymptotic expansions for `J_0, J_1, Y_0, Y_1`,
//!   forward recurrence for `J_n` while `n <= x`, Miller above that.
//!
//! `Y_0` and `Y_1` below the asymptotic threshold come from the Neumann
//! series over the Miller-normalised `J_2k`; higher `Y_n` always follow by
//! forward recurrence, which is stable in increasing `n`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::SpecfunError;

/// Largest supported order magnitude. Accuracy is verified up to 60.
pub const MAX_ORDER: usize = 100;

const SERIES_LIMIT: f64 = 2.0;
const ASYMPTOTIC_LIMIT: f64 = 25.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const RESCALE_THRESHOLD: f64 = 1e250;

fn check_argument(function: &'static str, x: f64) -> Result<(), SpecfunError> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(SpecfunError::Domain { function, arg: x })
    }
}

fn check_order(function: &'static str, order: i64) -> Result<usize, SpecfunError> {
    let magnitude = order.unsigned_abs() as usize;
    if magnitude > MAX_ORDER {
        return Err(SpecfunError::Order {
            function,
            order,
            max: MAX_ORDER,
        });
    }
    Ok(magnitude)
}

fn parity(n: i64) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `J_0(x) .. J_nmax(x)`.
pub fn bessel_j_seq(nmax: usize, x: f64) -> Result<Vec<f64>, SpecfunError> {
    check_argument("bessel_j", x)?;
    check_order("bessel_j", nmax as i64)?;
    Ok(j_sequence(nmax, x))
}

/// `Y_0(x) .. Y_nmax(x)`.
pub fn bessel_y_seq(nmax: usize, x: f64) -> Result<Vec<f64>, SpecfunError> {
    check_argument("bessel_y", x)?;
    check_order("bessel_y", nmax as i64)?;
    let (y0, y1) = y01(x);
    y_sequence(nmax, x, y0, y1)
}

fn j_sequence(nmax: usize, x: f64) -> Vec<f64> {
    if x < SERIES_LIMIT {
        j_series(nmax, x)
    } else if x < ASYMPTOTIC_LIMIT {
        let start = miller_start(nmax, x);
        let mut values = miller_sum_normalized(x, start);
        values.truncate(nmax + 1);
        values
    } else {
        let (j0, _) = hankel_asymptotic(0, x);
        let (j1, _) = hankel_asymptotic(1, x);
        if (nmax as f64) <= x {
            let mut values = Vec::with_capacity(nmax + 1);
            values.push(j0);
            if nmax >= 1 {
                values.push(j1);
            }
            for k in 1..nmax {
                let next = (2.0 * k as f64 / x) * values[k] - values[k - 1];
                values.push(next);
            }
            values
        } else {
            let start = miller_start(nmax, x);
            let mut values = miller_backward(x, start);
            // J_0 and J_1 cannot vanish together; normalise on the larger.
            let scale = if j0.abs() >= j1.abs() {
                j0 / values[0]
            } else {
                j1 / values[1]
            };
            values.truncate(nmax + 1);
            values.iter_mut().for_each(|v| *v *= scale);
            values
        }
    }
}

fn j_series(nmax: usize, x: f64) -> Vec<f64> {
    let half = 0.5 * x;
    let quarter_sq = half * half;
    let mut lead = 1.0;
    let mut values = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        if n > 0 {
            lead *= half / n as f64;
        }
        let mut term = lead;
        let mut sum = lead;
        let mut k = 0usize;
        loop {
            k += 1;
            term *= -quarter_sq / (k as f64 * (n + k) as f64);
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() || k > 200 {
                break;
            }
        }
        values.push(sum);
    }
    values
}

fn miller_start(nmax: usize, x: f64) -> usize {
    let top = (nmax as f64).max(x.ceil());
    let start = top as usize + 20 + (160.0 * top).sqrt() as usize;
    start + start % 2
}

/// Unnormalised backward recurrence from `start` down to 0.
fn miller_backward(x: f64, start: usize) -> Vec<f64> {
    let mut values = vec![0.0; start + 1];
    let mut next = 0.0;
    let mut current = 1.0;
    values[start] = current;
    for k in (1..=start).rev() {
        let previous = (2.0 * k as f64 / x) * current - next;
        values[k - 1] = previous;
        next = current;
        current = previous;
        if previous.abs() > RESCALE_THRESHOLD {
            let factor = 1.0 / RESCALE_THRESHOLD;
            values[k - 1..].iter_mut().for_each(|v| *v *= factor);
            next *= factor;
            current *= factor;
        }
    }
    values
}

fn miller_sum_normalized(x: f64, start: usize) -> Vec<f64> {
    let mut values = miller_backward(x, start);
    let norm = values[0] + 2.0 * values.iter().skip(2).step_by(2).sum::<f64>();
    values.iter_mut().for_each(|v| *v /= norm);
    values
}

/// Hankel large-argument expansion for order 0 or 1: returns `(J, Y)`.
fn hankel_asymptotic(nu: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (nu * nu) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0f64;
    let mut previous = f64::INFINITY;
    for k in 1..60u32 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * x);
        if term.abs() > previous {
            break;
        }
        previous = term.abs();
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let (s, c) = x.sin_cos();
    // cos/sin of x - (nu/2 + 1/4) pi, formed from sin x and cos x directly.
    let (cos_chi, sin_chi) = if nu == 0 {
        ((c + s) * FRAC_1_SQRT_2, (s - c) * FRAC_1_SQRT_2)
    } else {
        ((s - c) * FRAC_1_SQRT_2, -(s + c) * FRAC_1_SQRT_2)
    };
    let amplitude = (2.0 / (PI * x)).sqrt();
    (
        amplitude * (p * cos_chi - q * sin_chi),
        amplitude * (p * sin_chi + q * cos_chi),
    )
}

fn y01(x: f64) -> (f64, f64) {
    if x >= ASYMPTOTIC_LIMIT {
        let (_, y0) = hankel_asymptotic(0, x);
        let (_, y1) = hankel_asymptotic(1, x);
        return (y0, y1);
    }
    let start = miller_start(1, x);
    let j = miller_sum_normalized(x, start);
    let log_term = (0.5 * x).ln() + EULER_GAMMA;

    let mut sum0 = 0.0;
    let mut sum1 = 0.0;
    let mut k = 1;
    while 2 * k < start {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum0 += sign * j[2 * k] / k as f64;
        sum1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
        k += 1;
    }
    let y0 = (2.0 / PI) * log_term * j[0] - (4.0 / PI) * sum0;
    let y1 = (2.0 / PI) * log_term * j[1] - 2.0 / (PI * x) * j[0] + (2.0 / PI) * sum1;
    (y0, y1)
}

fn y_sequence(nmax: usize, x: f64, y0: f64, y1: f64) -> Result<Vec<f64>, SpecfunError> {
    let mut values = Vec::with_capacity(nmax + 1);
    values.push(y0);
    if nmax >= 1 {
        values.push(y1);
    }
    for k in 1..nmax {
        let next = (2.0 * k as f64 / x) * values[k] - values[k - 1];
        if !next.is_finite() {
            return Err(SpecfunError::Overflow {
                function: "bessel_y",
                arg: format!("n = {}, x = {x}", k + 1),
            });
        }
        values.push(next);
    }
    Ok(values)
}

/// `J_n(x)` for integer `n`, `x > 0`.
pub fn bessel_j(n: i32, x: f64) -> Result<f64, SpecfunError> {
    let magnitude = check_order("bessel_j", n as i64)?;
    let values = bessel_j_seq(magnitude, x)?;
    Ok(parity(n.min(0) as i64) * values[magnitude])
}

/// `Y_n(x)` for integer `n`, `x > 0`.
pub fn bessel_y(n: i32, x: f64) -> Result<f64, SpecfunError> {
    let magnitude = check_order("bessel_y", n as i64)?;
    let values = bessel_y_seq(magnitude, x)?;
    Ok(parity(n.min(0) as i64) * values[magnitude])
}

/// `H_n^(1)(x) = J_n(x) + i Y_n(x)`.
pub fn hankel1(n: i32, x: f64) -> Result<Complex64, SpecfunError> {
    let table = CylinderTable::new(n.unsigned_abs() as usize, x)?;
    Ok(table.h1(n))
}

/// `d/dx J_n(x)`.
pub fn bessel_j_prime(n: i32, x: f64) -> Result<f64, SpecfunError> {
    let table = CylinderTable::new(n.unsigned_abs() as usize + 1, x)?;
    Ok(table.j_prime(n))
}

/// `d/dx H_n^(1)(x)`.
pub fn hankel1_prime(n: i32, x: f64) -> Result<Complex64, SpecfunError> {
    let table = CylinderTable::new(n.unsigned_abs() as usize + 1, x)?;
    Ok(table.h1_prime(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CylinderFunction {
    J,
    H1,
}

/// Argument derivative `(C_{n-1}(x) - C_{n+1}(x)) / 2` of `J_n` or `H_n^(1)`.
///
/// A radial derivative of `C_n(k r)` is `k` times this value; callers apply
/// the factor.
pub fn dr_bessel(kind: CylinderFunction, n: i32, x: f64) -> Result<Complex64, SpecfunError> {
    match kind {
        CylinderFunction::J => bessel_j_prime(n, x).map(|v| Complex64::new(v, 0.0)),
        CylinderFunction::H1 => hankel1_prime(n, x),
    }
}

/// `J_n(x)` and `Y_n(x)` for `n = 0..=nmax` at one argument, with accessors
/// for negative orders and argument derivatives.
///
/// Derivatives are available up to order `nmax - 1`.
#[derive(Debug, Clone)]
pub struct CylinderTable {
    x: f64,
    j: Vec<f64>,
    y: Vec<f64>,
}

impl CylinderTable {
    pub fn new(nmax: usize, x: f64) -> Result<Self, SpecfunError> {
        let j = bessel_j_seq(nmax, x)?;
        let y = bessel_y_seq(nmax, x)?;
        Ok(Self { x, j, y })
    }

    pub fn argument(&self) -> f64 {
        self.x
    }

    pub fn max_order(&self) -> usize {
        self.j.len() - 1
    }

    pub fn j(&self, n: i32) -> f64 {
        parity(n.min(0) as i64) * self.j[n.unsigned_abs() as usize]
    }

    pub fn y(&self, n: i32) -> f64 {
        parity(n.min(0) as i64) * self.y[n.unsigned_abs() as usize]
    }

    pub fn h1(&self, n: i32) -> Complex64 {
        let sign = parity(n.min(0) as i64);
        let index = n.unsigned_abs() as usize;
        Complex64::new(sign * self.j[index], sign * self.y[index])
    }

    pub fn j_prime(&self, n: i32) -> f64 {
        0.5 * (self.j(n - 1) - self.j(n + 1))
    }

    pub fn h1_prime(&self, n: i32) -> Complex64 {
        0.5 * (self.h1(n - 1) - self.h1(n + 1))
    }
}

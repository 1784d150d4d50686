//! Dense complex LU factorisation with partial pivoting and a one-norm
//! condition estimate. Matrices are row-major `n x n` slices.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularMatrix {
    /// Elimination step at which no usable pivot was found.
    pub column: usize,
}

#[derive(Debug, Clone)]
pub struct LuFactorization {
    n: usize,
    lu: Vec<Complex64>,
    pivots: Vec<usize>,
}

impl LuFactorization {
    pub fn new(matrix: &[Complex64], n: usize) -> Result<Self, SingularMatrix> {
        assert_eq!(matrix.len(), n * n, "matrix must be n x n");
        let mut lu = matrix.to_vec();
        let mut pivots = Vec::with_capacity(n);
        for col in 0..n {
            let (pivot_row, pivot_size) = (col..n)
                .map(|r| (r, lu[r * n + col].norm()))
                .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if !(pivot_size > 0.0) || !pivot_size.is_finite() {
                return Err(SingularMatrix { column: col });
            }
            pivots.push(pivot_row);
            if pivot_row != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot_row * n + j);
                }
            }
            let inv_pivot = 1.0 / lu[col * n + col];
            let (upper, lower) = lu.split_at_mut((col + 1) * n);
            let pivot_tail = &upper[col * n + col + 1..col * n + n];
            for row in lower.chunks_exact_mut(n) {
                let factor = row[col] * inv_pivot;
                row[col] = factor;
                if factor != ZERO {
                    for (dst, &src) in row[col + 1..].iter_mut().zip(pivot_tail) {
                        *dst -= factor * src;
                    }
                }
            }
        }
        Ok(Self { n, lu, pivots })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x = b.to_vec();
        for (col, &p) in self.pivots.iter().enumerate() {
            x.swap(col, p);
        }
        for i in 0..n {
            let row = &self.lu[i * n..i * n + i];
            let s: Complex64 = row.iter().zip(&x[..i]).map(|(a, b)| a * b).sum();
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let row = &self.lu[i * n + i + 1..i * n + n];
            let s: Complex64 = row.iter().zip(&x[i + 1..]).map(|(a, b)| a * b).sum();
            x[i] = (x[i] - s) / self.lu[i * n + i];
        }
        x
    }

    /// Solves `A^H x = b`.
    pub fn solve_adjoint(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x = b.to_vec();
        // U^H y = b (forward, column access of U).
        for i in 0..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[j * n + i].conj() * x[j];
            }
            x[i] = s / self.lu[i * n + i].conj();
        }
        // L^H z = y (backward, unit diagonal).
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu[j * n + i].conj() * x[j];
            }
            x[i] = s;
        }
        for (col, &p) in self.pivots.iter().enumerate().rev() {
            x.swap(col, p);
        }
        x
    }

    /// Estimate of `||A^-1||_1` (Hager's method as refined by Higham).
    pub fn inverse_norm_estimate(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 0.0;
        }
        let mut x = vec![Complex64::new(1.0 / n as f64, 0.0); n];
        let mut estimate = 0.0;
        let mut last_index = usize::MAX;
        for _ in 0..5 {
            let y = self.solve(&x);
            estimate = one_norm_vec(&y);
            let signs: Vec<Complex64> = y
                .iter()
                .map(|v| {
                    let m = v.norm();
                    if m == 0.0 {
                        Complex64::new(1.0, 0.0)
                    } else {
                        v / m
                    }
                })
                .collect();
            let z = self.solve_adjoint(&signs);
            let (index, largest) = z
                .iter()
                .enumerate()
                .map(|(i, v)| (i, v.norm()))
                .fold((0, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            let projection: f64 = z.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
            if largest <= projection || index == last_index {
                break;
            }
            last_index = index;
            x.iter_mut().for_each(|v| *v = ZERO);
            x[index] = Complex64::new(1.0, 0.0);
        }
        // Alternating test vector guards against unlucky sign patterns.
        let denom = (n.max(2) - 1) as f64;
        let alt: Vec<Complex64> = (0..n)
            .map(|i| {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                Complex64::new(sign * (1.0 + i as f64 / denom), 0.0)
            })
            .collect();
        let alt_estimate = 2.0 * one_norm_vec(&self.solve(&alt)) / (3.0 * n as f64);
        estimate.max(alt_estimate)
    }
}

fn one_norm_vec(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm()).sum()
}

/// Maximum absolute column sum.
pub fn one_norm(matrix: &[Complex64], n: usize) -> f64 {
    let mut sums = vec![0.0; n];
    for row in matrix.chunks_exact(n) {
        for (s, v) in sums.iter_mut().zip(row) {
            *s += v.norm();
        }
    }
    sums.into_iter().fold(0.0, f64::max)
}

pub fn mat_vec(matrix: &[Complex64], n: usize, x: &[Complex64]) -> Vec<Complex64> {
    matrix
        .chunks_exact(n)
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn euclidean_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

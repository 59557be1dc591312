//! Minimal dense linear algebra for finite sections: square complex
//! matrices, products, powers by repeated squaring, and power iteration for
//! the largest singular value.
//!
//! The operator matrices in this crate are real whenever the symbol is real,
//! so products and matrix-vector kernels switch to packed f64 arithmetic
//! when no entry has an imaginary part.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            for col in 0..dim {
                data.push(entry(row, col));
            }
        }
        DenseMatrix { dim, data }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| {
            if r == c {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    fn real_data(&self) -> Option<Vec<f64>> {
        if self.data.iter().all(|z| z.im == 0.0) {
            Some(self.data.iter().map(|z| z.re).collect())
        } else {
            None
        }
    }

    /// y = A x.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim);
        (0..self.dim)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum::<Complex64>()
            })
            .collect()
    }

    /// y = Aᴴ x (conjugate transpose), streamed row-wise.
    pub fn adjoint_matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim);
        let mut y = vec![Complex64::ZERO; self.dim];
        for (r, &xr) in x.iter().enumerate() {
            for (c, a) in self.row(r).iter().enumerate() {
                y[c] += a.conj() * xr;
            }
        }
        y
    }

    /// Matrix product; falls back to packed real arithmetic when both
    /// operands are real.
    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        if let (Some(a), Some(b)) = (self.real_data(), other.real_data()) {
            let mut out = vec![0.0f64; n * n];
            for i in 0..n {
                let arow = &a[i * n..(i + 1) * n];
                let orow = &mut out[i * n..(i + 1) * n];
                for (k, &aik) in arow.iter().enumerate() {
                    if aik == 0.0 {
                        continue;
                    }
                    let brow = &b[k * n..(k + 1) * n];
                    for (o, &bkj) in orow.iter_mut().zip(brow) {
                        *o += aik * bkj;
                    }
                }
            }
            return DenseMatrix {
                dim: n,
                data: out.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
            };
        }
        let mut out = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            let arow = self.row(i);
            let orow = &mut out[i * n..(i + 1) * n];
            for (k, &aik) in arow.iter().enumerate() {
                if aik == Complex64::ZERO {
                    continue;
                }
                let brow = other.row(k);
                for (o, &bkj) in orow.iter_mut().zip(brow) {
                    *o += aik * bkj;
                }
            }
        }
        DenseMatrix { dim: n, data: out }
    }

    /// A^k by binary exponentiation (k = 0 gives the identity).
    pub fn power(&self, k: usize) -> DenseMatrix {
        let mut result = DenseMatrix::identity(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.matmul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base);
            }
        }
        result
    }
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest singular value by power iteration on AᴴA.
///
/// Deterministic: seeded with the all-ones vector (falling back to basis
/// vectors if that seed lies in the kernel). Converges when the estimate
/// moves by less than `tol·σ` between iterations; errors with
/// [`Error::NoConvergence`] at the iteration cap.
pub fn largest_singular_value(matrix: &DenseMatrix, tol: f64, max_iter: usize) -> Result<f64> {
    let n = matrix.dim();
    if n == 0 || matrix.is_zero() {
        return Ok(0.0);
    }
    let scale = 1.0 / (n as f64).sqrt();
    let mut v = vec![Complex64::new(scale, 0.0); n];
    if norm(&matrix.matvec(&v)) == 0.0 {
        // the all-ones seed sits in the kernel; pick the first basis
        // vector with a nonzero image (one exists, the matrix is nonzero)
        let j = (0..n)
            .find(|&j| (0..n).any(|i| matrix.get(i, j) != Complex64::ZERO))
            .expect("nonzero matrix has a nonzero column");
        v = vec![Complex64::ZERO; n];
        v[j] = Complex64::ONE;
    }
    let mut estimate = 0.0f64;
    for _ in 0..max_iter {
        let w = matrix.matvec(&v);
        let sigma = norm(&w);
        if sigma == 0.0 {
            return Ok(0.0);
        }
        let u = matrix.adjoint_matvec(&w);
        let unorm = norm(&u);
        if unorm == 0.0 {
            return Ok(sigma);
        }
        let inv = 1.0 / unorm;
        for z in u.iter().zip(v.iter_mut()) {
            *z.1 = z.0 * inv;
        }
        if (sigma - estimate).abs() <= tol * sigma {
            return Ok(sigma);
        }
        estimate = sigma;
    }
    Err(Error::NoConvergence { max_iter })
}

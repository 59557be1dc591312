//! The operator kernels as coefficient-to-coefficient transforms, and their
//! dense finite-section matrices.
//!
//! The generalized Cesàro action on a coefficient sequence x is
//! `y_n = (tⁿx_0 + t^{n−1}x_1 + … + x_n)/(n+1)`, computed here with the O(N)
//! prefix recursion `S_n = t·S_{n−1} + x_n`, `y_n = S_n/(n+1)`. The shift,
//! multiplication and Volterra-type kernels follow the same
//! coefficient-level conventions, so compositions hold coefficient-wise:
//! `C_t = C_0 ∘ M_t = V_{g_t}` and `S_t = T_{g_t} = S ∘ C_t`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::series::{cauchy_product, derivative, TaylorSeries, DEFAULT_DEGREE_CAP};

/// A named, parameterized coefficient transform.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorKernel {
    /// Generalized Cesàro operator C_t, t ∈ [0, 1).
    CesaroT { t: f64 },
    /// The Hardy operator C_0 (diagonal 1/(n+1)).
    HardyC0,
    /// Classical Cesàro averaging operator C_1.
    CesaroC1,
    /// Forward shift S: f(z) ↦ z·f(z).
    FwdShift,
    /// Backward shift B: f(z) ↦ (f(z) − f(0))/z.
    BackShift,
    /// Multiplication by the geometric kernel, M_t f = h_t·f.
    MultHt { t: f64 },
    /// Volterra operator T_g f = ∫₀ᶻ f g′.
    VolterraTg { g: TaylorSeries },
    /// Volterra operator V_g f = (1/z) ∫₀ᶻ f g′.
    VolterraVg { g: TaylorSeries },
    /// S_t = S ∘ C_t, the shifted Cesàro operator.
    St { t: f64 },
}

impl OperatorKernel {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKernel::CesaroT { .. } => "cesaro",
            OperatorKernel::HardyC0 => "c0",
            OperatorKernel::CesaroC1 => "c1",
            OperatorKernel::FwdShift => "shift",
            OperatorKernel::BackShift => "backshift",
            OperatorKernel::MultHt { .. } => "mult",
            OperatorKernel::VolterraTg { .. } => "tg",
            OperatorKernel::VolterraVg { .. } => "vg",
            OperatorKernel::St { .. } => "st",
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            OperatorKernel::CesaroT { t }
            | OperatorKernel::MultHt { t }
            | OperatorKernel::St { t } => check_t(*t),
            _ => Ok(()),
        }
    }

    /// Applies the kernel to a coefficient sequence.
    pub fn apply(&self, f: &TaylorSeries) -> Result<TaylorSeries> {
        match self {
            OperatorKernel::CesaroT { t } => apply_ct(*t, f),
            OperatorKernel::HardyC0 => Ok(apply_c0(f)),
            OperatorKernel::CesaroC1 => Ok(apply_c1(f)),
            OperatorKernel::FwdShift => Ok(apply_shift(f)),
            OperatorKernel::BackShift => Ok(apply_backshift(f)),
            OperatorKernel::MultHt { t } => apply_mult_ht(*t, f),
            OperatorKernel::VolterraTg { g } => Ok(apply_tg(g, f)),
            OperatorKernel::VolterraVg { g } => Ok(apply_vg(g, f)),
            OperatorKernel::St { t } => apply_st(*t, f),
        }
    }
}

fn check_t(t: f64) -> Result<()> {
    if (0.0..1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::domain("t", t, "[0, 1)"))
    }
}

/// C_t: y_n = (Σ_{k≤n} t^{n−k} f̂(k))/(n+1) via the prefix recursion.
pub fn apply_ct(t: f64, f: &TaylorSeries) -> Result<TaylorSeries> {
    check_t(t)?;
    let mut out = Vec::with_capacity(f.degree() + 1);
    let mut prefix = Complex64::ZERO;
    for (n, c) in f.coeffs().iter().enumerate() {
        prefix = prefix * t + c;
        out.push(prefix / (n as f64 + 1.0));
    }
    Ok(TaylorSeries::from_parts(out, f.truncated()))
}

/// C_0: the diagonal operator y_n = f̂(n)/(n+1).
pub fn apply_c0(f: &TaylorSeries) -> TaylorSeries {
    let out = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c / (n as f64 + 1.0))
        .collect();
    TaylorSeries::from_parts(out, f.truncated())
}

/// C_1: the classical Cesàro average y_n = (Σ_{k≤n} f̂(k))/(n+1).
pub fn apply_c1(f: &TaylorSeries) -> TaylorSeries {
    let mut out = Vec::with_capacity(f.degree() + 1);
    let mut sum = Complex64::ZERO;
    for (n, c) in f.coeffs().iter().enumerate() {
        sum += c;
        out.push(sum / (n as f64 + 1.0));
    }
    TaylorSeries::from_parts(out, f.truncated())
}

/// Forward shift S: y_0 = 0, y_{n+1} = f̂(n). Degree grows by one up to the
/// cap; past it the last coefficient is dropped and the result flagged.
pub fn apply_shift(f: &TaylorSeries) -> TaylorSeries {
    let mut coeffs = Vec::with_capacity(f.degree() + 2);
    coeffs.push(Complex64::ZERO);
    coeffs.extend_from_slice(f.coeffs());
    let mut truncated = f.truncated();
    if coeffs.len() > DEFAULT_DEGREE_CAP + 1 {
        coeffs.pop();
        truncated = true;
    }
    TaylorSeries::from_parts(coeffs, truncated)
}

/// Backward shift B: y_n = f̂(n+1).
pub fn apply_backshift(f: &TaylorSeries) -> TaylorSeries {
    if f.degree() == 0 {
        return TaylorSeries::zero(0);
    }
    TaylorSeries::from_parts(f.coeffs()[1..].to_vec(), f.truncated())
}

/// M_t: multiplication by h_t, y_n = Σ_{k≤n} t^{n−k} f̂(k); the Cesàro
/// recursion without the 1/(n+1) division.
pub fn apply_mult_ht(t: f64, f: &TaylorSeries) -> Result<TaylorSeries> {
    check_t(t)?;
    let mut out = Vec::with_capacity(f.degree() + 1);
    let mut prefix = Complex64::ZERO;
    for c in f.coeffs() {
        prefix = prefix * t + c;
        out.push(prefix);
    }
    Ok(TaylorSeries::from_parts(out, f.truncated()))
}

fn volterra_integrand(g: &TaylorSeries, f: &TaylorSeries) -> TaylorSeries {
    cauchy_product(f, &derivative(g))
}

/// T_g f = ∫₀ᶻ f(ξ)g′(ξ)dξ: with c = f·g′, y_0 = 0 and y_n = c_{n−1}/n.
pub fn apply_tg(g: &TaylorSeries, f: &TaylorSeries) -> TaylorSeries {
    apply_shift(&apply_vg(g, f))
}

/// V_g f = (1/z)∫₀ᶻ f(ξ)g′(ξ)dξ: y_n = c_n/(n+1) with c = f·g′.
///
/// Coefficient 0 is the analytic limit f̂(0)·ĝ(1) of the integral mean at
/// the origin; for g = g_t (where ĝ(1) = 1) this agrees with (C_tf)(0) = f(0).
pub fn apply_vg(g: &TaylorSeries, f: &TaylorSeries) -> TaylorSeries {
    apply_c0(&volterra_integrand(g, f))
}

/// S_t = S ∘ C_t: forward shift of the Cesàro image, so y_0 = 0.
pub fn apply_st(t: f64, f: &TaylorSeries) -> Result<TaylorSeries> {
    Ok(apply_shift(&apply_ct(t, f)?))
}

/// The leading (N+1)×(N+1) block of an operator's coefficient matrix.
#[derive(Clone, Debug)]
pub struct FiniteSection {
    matrix: DenseMatrix,
    op: OperatorKernel,
    degree: usize,
}

impl FiniteSection {
    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn op(&self) -> &OperatorKernel {
        &self.op
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Applies the section matrix to a coefficient vector of length N+1.
    pub fn apply(&self, coeffs: &[Complex64]) -> Vec<Complex64> {
        self.matrix.matvec(coeffs)
    }
}

/// Builds the dense finite section of a kernel at truncation degree N.
pub fn finite_section(op: &OperatorKernel, degree: usize) -> Result<FiniteSection> {
    op.check()?;
    let dim = degree + 1;
    let matrix = match op {
        OperatorKernel::CesaroT { t } => {
            lower_triangular(dim, |n, k| t.powi((n - k) as i32) / (n as f64 + 1.0))
        }
        OperatorKernel::HardyC0 => {
            lower_triangular(
                dim,
                |n, k| if n == k { 1.0 / (n as f64 + 1.0) } else { 0.0 },
            )
        }
        OperatorKernel::CesaroC1 => lower_triangular(dim, |n, _| 1.0 / (n as f64 + 1.0)),
        OperatorKernel::FwdShift => DenseMatrix::from_fn(dim, |n, k| {
            if n == k + 1 {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        }),
        OperatorKernel::BackShift => DenseMatrix::from_fn(dim, |n, k| {
            if k == n + 1 {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        }),
        OperatorKernel::MultHt { t } => lower_triangular(dim, |n, k| t.powi((n - k) as i32)),
        OperatorKernel::VolterraTg { g } => {
            let gp = derivative(g);
            DenseMatrix::from_fn(dim, |n, k| {
                if k < n {
                    gp.coeff(n - 1 - k) / (n as f64)
                } else {
                    Complex64::ZERO
                }
            })
        }
        OperatorKernel::VolterraVg { g } => {
            let gp = derivative(g);
            DenseMatrix::from_fn(dim, |n, k| {
                if k <= n {
                    gp.coeff(n - k) / (n as f64 + 1.0)
                } else {
                    Complex64::ZERO
                }
            })
        }
        OperatorKernel::St { t } => DenseMatrix::from_fn(dim, |n, k| {
            if k < n {
                Complex64::new(t.powi((n - 1 - k) as i32) / (n as f64), 0.0)
            } else {
                Complex64::ZERO
            }
        }),
    };
    Ok(FiniteSection {
        matrix,
        op: op.clone(),
        degree,
    })
}

fn lower_triangular(dim: usize, entry: impl Fn(usize, usize) -> f64) -> DenseMatrix {
    DenseMatrix::from_fn(dim, |n, k| {
        if k <= n {
            Complex64::new(entry(n, k), 0.0)
        } else {
            Complex64::ZERO
        }
    })
}

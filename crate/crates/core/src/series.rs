//! Truncated Taylor series: the coefficient-sequence model of a holomorphic
//! function on the unit disc, plus the two special kernels this crate is
//! built around.
//!
//! A [`TaylorSeries`] holds coefficients `f̂(0) .. f̂(N)` of
//! `f(z) = Σ f̂(n) zⁿ` in double-precision complex arithmetic. Everything is
//! immutable after construction; operations return fresh values.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Default truncation degree for kernels built without an explicit degree.
pub const DEFAULT_DEGREE: usize = 4096;

/// Cap on degree growth under products and shifts. Results that would exceed
/// it are chopped and flagged via [`TaylorSeries::truncated`].
pub const DEFAULT_DEGREE_CAP: usize = 2 * DEFAULT_DEGREE;

/// A polynomial truncation of a holomorphic function on the unit disc,
/// stored densely from coefficient 0.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorSeries {
    coeffs: Vec<Complex64>,
    truncated: bool,
}

impl TaylorSeries {
    /// Builds a series from raw coefficients; the degree is `len - 1`.
    ///
    /// Rejects empty input and any NaN/Inf coefficient.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("len", 0.0, "nonempty coefficient list"));
        }
        for (index, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFiniteCoefficient { index });
            }
        }
        Ok(TaylorSeries {
            coeffs,
            truncated: false,
        })
    }

    /// Builds a series from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub(crate) fn from_parts(coeffs: Vec<Complex64>, truncated: bool) -> Self {
        debug_assert!(!coeffs.is_empty());
        TaylorSeries { coeffs, truncated }
    }

    /// The constant function 𝟙 padded with zeros up to `degree`.
    pub fn one(degree: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; degree + 1];
        coeffs[0] = Complex64::ONE;
        TaylorSeries {
            coeffs,
            truncated: false,
        }
    }

    /// The monomial z^m padded with zeros up to `degree` (requires m ≤ degree).
    pub fn monomial(m: usize, degree: usize) -> Result<Self> {
        if m > degree {
            return Err(Error::domain("m", m as f64, "0..=degree"));
        }
        let mut coeffs = vec![Complex64::ZERO; degree + 1];
        coeffs[m] = Complex64::ONE;
        Ok(TaylorSeries {
            coeffs,
            truncated: false,
        })
    }

    /// The zero polynomial of the given degree.
    pub fn zero(degree: usize) -> Self {
        TaylorSeries {
            coeffs: vec![Complex64::ZERO; degree + 1],
            truncated: false,
        }
    }

    /// Truncation degree N; the series has exactly N+1 coefficients.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient f̂(n), zero beyond the truncation degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(Complex64::ZERO)
    }

    /// Whether some operation dropped coefficients against the degree cap.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// f(0), i.e. the constant coefficient.
    pub fn value_at_zero(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Horner evaluation of the truncated polynomial at `z`, |z| ≤ 1.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        // small slack so boundary points built from cos/sin pass
        if z.norm_sqr() > 1.0 + 16.0 * f64::EPSILON {
            return Err(Error::domain("|z|", z.norm(), "closed unit disc"));
        }
        let mut acc = *self.coeffs.last().expect("nonempty");
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * z + c;
        }
        Ok(acc)
    }

    /// Keeps coefficients 0..=degree, zero-padding if the series is shorter.
    /// The flag is set only when nonzero coefficients are dropped.
    pub fn truncate(&self, degree: usize) -> Self {
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().take(degree + 1).copied().collect();
        let dropped = self
            .coeffs
            .iter()
            .skip(degree + 1)
            .any(|c| *c != Complex64::ZERO);
        coeffs.resize(degree + 1, Complex64::ZERO);
        TaylorSeries {
            coeffs,
            truncated: self.truncated || dropped,
        }
    }

    /// Coefficient-wise sum; the result takes the larger degree.
    pub fn add(&self, other: &TaylorSeries) -> TaylorSeries {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        TaylorSeries {
            coeffs,
            truncated: self.truncated || other.truncated,
        }
    }

    /// Coefficient-wise difference; the result takes the larger degree.
    pub fn sub(&self, other: &TaylorSeries) -> TaylorSeries {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        TaylorSeries {
            coeffs,
            truncated: self.truncated || other.truncated,
        }
    }

    pub fn scale(&self, factor: Complex64) -> TaylorSeries {
        TaylorSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
            truncated: self.truncated,
        }
    }
}

/// Largest coefficient-wise distance |f̂(n) − ĝ(n)|, zero-extending the
/// shorter series.
pub fn max_coeff_distance(f: &TaylorSeries, g: &TaylorSeries) -> f64 {
    let n = f.coeffs.len().max(g.coeffs.len());
    (0..n)
        .map(|i| (f.coeff(i) - g.coeff(i)).norm())
        .fold(0.0, f64::max)
}

/// Cauchy product with the default degree cap.
///
/// Coefficient n of the result is `Σ_{k≤n} f̂(k) ĝ(n−k)`; the full product
/// degree is `deg f + deg g`, chopped at the cap with the truncation flag set.
pub fn cauchy_product(f: &TaylorSeries, g: &TaylorSeries) -> TaylorSeries {
    cauchy_product_with_cap(f, g, DEFAULT_DEGREE_CAP)
}

pub fn cauchy_product_with_cap(f: &TaylorSeries, g: &TaylorSeries, cap: usize) -> TaylorSeries {
    let nf = f.degree();
    let ng = g.degree();
    let full = nf + ng;
    let out_deg = full.min(cap);
    let mut coeffs = vec![Complex64::ZERO; out_deg + 1];
    for (n, c) in coeffs.iter_mut().enumerate() {
        let lo = n.saturating_sub(ng);
        let hi = n.min(nf);
        let mut acc = Complex64::ZERO;
        for k in lo..=hi {
            acc += f.coeffs[k] * g.coeffs[n - k];
        }
        *c = acc;
    }
    TaylorSeries {
        coeffs,
        truncated: f.truncated || g.truncated || full > cap,
    }
}

/// Coefficient-wise derivative: coefficient n of f′ is (n+1)·f̂(n+1).
pub fn derivative(f: &TaylorSeries) -> TaylorSeries {
    if f.degree() == 0 {
        return TaylorSeries::from_parts(vec![Complex64::ZERO], f.truncated);
    }
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * (n as f64))
        .collect();
    TaylorSeries {
        coeffs,
        truncated: f.truncated,
    }
}

/// The geometric kernel h_t(z) = 1/(1−tz) truncated at `degree`: coefficients tⁿ.
///
/// h_t is the fixed point of the generalized Cesàro operator and the
/// eigenvector for eigenvalue 1.
pub fn geometric_kernel(t: f64, degree: usize) -> Result<TaylorSeries> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::domain("t", t, "[0, 1)"));
    }
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut pw = 1.0;
    for _ in 0..=degree {
        coeffs.push(Complex64::new(pw, 0.0));
        pw *= t;
    }
    Ok(TaylorSeries {
        coeffs,
        truncated: false,
    })
}

/// The logarithmic kernel g_t(z) = −log(1−tz)/t truncated at `degree`.
///
/// The expansion is `Σ_{n≥0} tⁿ/(n+1) · z^{n+1}`: coefficient 0 vanishes and
/// coefficient n+1 is tⁿ/(n+1). Its derivative is exactly h_t, which is what
/// makes C_t a Volterra operator with symbol g_t.
pub fn log_kernel(t: f64, degree: usize) -> Result<TaylorSeries> {
    if t <= 0.0 || t >= 1.0 {
        return Err(Error::domain("t", t, "(0, 1)"));
    }
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(Complex64::ZERO);
    let mut pw = 1.0; // t^(n-1) at index n
    for n in 1..=degree {
        coeffs.push(Complex64::new(pw / n as f64, 0.0));
        pw *= t;
    }
    Ok(TaylorSeries {
        coeffs,
        truncated: false,
    })
}

/// Random polynomial with coefficients uniform in the unit square of ℂ.
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> TaylorSeries {
    let coeffs = (0..=degree)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    TaylorSeries {
        coeffs,
        truncated: false,
    }
}

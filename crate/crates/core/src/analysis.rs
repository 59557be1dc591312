//! Integral means M_p(r,f) by uniform circle quadrature, Hardy and sup
//! norms, closed-form operator-norm bounds for C_t, and norm estimation.
//!
//! The p-th mean over the circle of radius r is computed from the values
//! `f(r·e^{2πij/K})`, obtained in one unnormalized inverse FFT of the
//! radius-scaled coefficients. The uniform rule is exact for trigonometric
//! polynomials of degree < K, so the p = 2 means are exact (Parseval) once
//! K exceeds the truncation degree; for other p the report carries an
//! empirical refinement error obtained by doubling K.

use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{largest_singular_value, DenseMatrix};
use crate::operators::{apply_ct, FiniteSection};
use crate::series::{geometric_kernel, TaylorSeries};

/// Convergence tolerance for the power iteration behind [`h2_opnorm`].
pub const OPNORM_TOL: f64 = 1e-10;
/// Iteration cap for the power iteration behind [`h2_opnorm`].
pub const OPNORM_MAX_ITER: usize = 2000;

/// Hardy exponent: a real p ≥ 1 or ∞.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Inf,
}

impl Exponent {
    pub fn validate(self) -> Result<()> {
        match self {
            Exponent::Finite(p) if p.is_finite() && p >= 1.0 => Ok(()),
            Exponent::Finite(p) => Err(Error::domain("p", p, "[1, inf)")),
            Exponent::Inf => Ok(()),
        }
    }

    pub fn is_inf(self) -> bool {
        matches!(self, Exponent::Inf)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Inf => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Exponent::Inf);
        }
        let p: f64 = s
            .parse()
            .map_err(|_| Error::domain("p", f64::NAN, "number or 'inf'"))?;
        let e = Exponent::Finite(p);
        e.validate()?;
        Ok(e)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => serializer.serialize_f64(*p),
            Exponent::Inf => serializer.serialize_str("inf"),
        }
    }
}

struct ExponentVisitor;

impl Visitor<'_> for ExponentVisitor {
    type Value = Exponent;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a number >= 1 or the string \"inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exponent, E> {
        Ok(Exponent::Finite(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exponent, E> {
        Ok(Exponent::Finite(v as f64))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exponent, E> {
        Ok(Exponent::Finite(v as f64))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Exponent, E> {
        Exponent::from_str(v).map_err(|_| E::custom("expected a number or \"inf\""))
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(ExponentVisitor)
    }
}

/// An estimated integral mean or norm, with quadrature metadata.
#[derive(Clone, Debug, Serialize)]
pub struct NormReport {
    pub value: f64,
    pub p: Exponent,
    pub r: f64,
    pub quadrature_nodes: usize,
    /// Empirical refinement error from doubling the node count.
    pub tail_bound: f64,
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn plan(len: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft(len, FftDirection::Inverse))
}

/// Samples `f(r·e^{2πij/K})` for j = 0..K; K must be at least N+1.
fn circle_values(f: &TaylorSeries, r: f64, nodes: usize) -> Vec<Complex64> {
    debug_assert!(nodes > f.degree());
    let mut buf = vec![Complex64::ZERO; nodes];
    let mut pw = 1.0;
    for (slot, c) in buf.iter_mut().zip(f.coeffs()) {
        *slot = c * pw;
        pw *= r;
    }
    plan(nodes).process(&mut buf);
    buf
}

fn mean_from_values(values: &[Complex64], p: Exponent) -> f64 {
    let k = values.len() as f64;
    match p {
        Exponent::Inf => values.iter().map(|v| v.norm()).fold(0.0, f64::max),
        Exponent::Finite(p) => {
            // p = 2 stays in norm_sqr (Parseval-exact), p = 1 avoids powf
            if p == 2.0 {
                (values.iter().map(|v| v.norm_sqr()).sum::<f64>() / k).sqrt()
            } else if p == 1.0 {
                values.iter().map(|v| v.norm()).sum::<f64>() / k
            } else {
                (values
                    .iter()
                    .map(|v| v.norm_sqr().powf(0.5 * p))
                    .sum::<f64>()
                    / k)
                    .powf(1.0 / p)
            }
        }
    }
}

fn effective_nodes(requested: usize, degree: usize) -> usize {
    requested.max(degree + 2).max(2).next_power_of_two()
}

/// The p-th integral mean M_p(r, f) over the circle of radius r, by the
/// uniform K-node rule (K is rounded up to a power of two covering the
/// degree). For p = ∞ this is the maximum modulus over the nodes.
pub fn mp_mean(f: &TaylorSeries, r: f64, p: Exponent, nodes: usize) -> Result<NormReport> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain("r", r, "[0, 1]"));
    }
    p.validate()?;
    let k = effective_nodes(nodes, f.degree());
    let coarse = mean_from_values(&circle_values(f, r, k), p);
    let fine = mean_from_values(&circle_values(f, r, 2 * k), p);
    Ok(NormReport {
        value: coarse,
        p,
        r,
        quadrature_nodes: k,
        tail_bound: (fine - coarse).abs(),
    })
}

/// Default node count: max(4096, 4(N+1)) rounded up to a power of two.
pub fn default_nodes(degree: usize) -> usize {
    4096_usize.max(4 * (degree + 1)).next_power_of_two()
}

/// The Hardy norm ‖f‖_p of a truncated polynomial.
///
/// M_p(r, f) increases with r and polynomials are continuous on the closed
/// disc, so the supremum is the boundary mean at r = 1.
pub fn hardy_norm(f: &TaylorSeries, p: Exponent) -> Result<NormReport> {
    mp_mean(f, 1.0, p, default_nodes(f.degree()))
}

/// Sup norm ‖f‖_∞, attained on the boundary circle by the maximum principle.
pub fn sup_norm(f: &TaylorSeries) -> Result<NormReport> {
    hardy_norm(f, Exponent::Inf)
}

/// Closed-form upper bound for ‖C_t‖ on H^p, with the coarse companion
/// bound 1/(1−t).
#[derive(Copy, Clone, Debug, Serialize)]
pub struct CtNormBound {
    /// For p = ∞ the exact operator norm −log(1−t)/t on the disc algebra;
    /// for p = 1 the same expression as an upper bound; for 1 < p < ∞ the
    /// refined bound [((1−t)^{1−p} − 1)/(t(p−1))]^{1/p}.
    pub value: f64,
    /// The factorization bound ‖C_0‖·‖M_t‖ = 1/(1−t).
    pub coarse: f64,
}

pub fn upper_bound_ct(t: f64, p: Exponent) -> Result<CtNormBound> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::domain("t", t, "[0, 1)"));
    }
    p.validate()?;
    let coarse = 1.0 / (1.0 - t);
    if t == 0.0 {
        return Ok(CtNormBound { value: 1.0, coarse });
    }
    let value = match p {
        Exponent::Inf => -(1.0 - t).ln() / t,
        Exponent::Finite(p) => {
            if p == 1.0 {
                -(1.0 - t).ln() / t
            } else {
                (((1.0 - t).powf(1.0 - p) - 1.0) / (t * (p - 1.0))).powf(1.0 / p)
            }
        }
    };
    Ok(CtNormBound { value, coarse })
}

/// Lower bound for ‖C_t‖ on H^p from a test set of polynomials; the set is
/// always augmented with h_t and 𝟙, whose ratios witness 1 and (for p = ∞)
/// the exact disc-algebra norm.
pub fn opnorm_lower(t: f64, p: Exponent, testset: &[TaylorSeries]) -> Result<f64> {
    if testset.is_empty() {
        return Err(Error::EmptyTestSet);
    }
    p.validate()?;
    let max_degree = testset.iter().map(TaylorSeries::degree).max().unwrap_or(0);
    let mut best = 0.0f64;
    let implicit = [
        geometric_kernel(t, max_degree)?,
        TaylorSeries::one(max_degree),
    ];
    for f in testset.iter().chain(implicit.iter()) {
        let denom = hardy_norm(f, p)?.value;
        if denom == 0.0 {
            continue;
        }
        let num = hardy_norm(&apply_ct(t, f)?, p)?.value;
        best = best.max(num / denom);
    }
    Ok(best)
}

/// Largest singular value of a finite section: the exact H² → H² operator
/// norm of the truncated operator, by Parseval.
pub fn h2_opnorm(section: &FiniteSection) -> Result<f64> {
    h2_opnorm_matrix(section.matrix())
}

pub(crate) fn h2_opnorm_matrix(matrix: &DenseMatrix) -> Result<f64> {
    largest_singular_value(matrix, OPNORM_TOL, OPNORM_MAX_ITER)
}

/// Evaluates both sides of the integral Jensen inequality
/// |∫h|^p ≤ ∫|h|^p on a uniform grid of samples; returns (lhs, rhs).
pub fn jensen_check(samples: &[Complex64], p: f64) -> (f64, f64) {
    if samples.is_empty() {
        return (0.0, 0.0);
    }
    let k = samples.len() as f64;
    let mean = samples.iter().sum::<Complex64>() / k;
    let lhs = mean.norm().powf(p);
    let rhs = samples.iter().map(|s| s.norm().powf(p)).sum::<f64>() / k;
    debug_assert!(lhs <= rhs + 1e-12);
    (lhs, rhs)
}

/// γ(t) = [1 − (1−t)^α](1−t) − αt, the remainder whose negativity for
/// α > 0 makes the refined bound beat the coarse one.
pub fn gamma_remainder(t: f64, alpha: f64) -> f64 {
    (1.0 - (1.0 - t).powf(alpha)) * (1.0 - t) - alpha * t
}

/// One comparison row: an inequality `lower ≤ upper` with a tag naming it.
#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    pub t: f64,
    pub p: Exponent,
    pub lower: f64,
    pub upper: f64,
    pub formula_id: &'static str,
}

/// Comparison table of refined vs. coarse norm bounds.
#[derive(Clone, Debug, Serialize)]
pub struct BoundTable {
    pub rows: Vec<BoundRow>,
}

impl BoundTable {
    /// All rows satisfy lower ≤ upper within the given slack.
    pub fn all_hold(&self, tol: f64) -> bool {
        self.rows.iter().all(|row| row.lower <= row.upper + tol)
    }
}

/// For every grid cell, pits the refined bound against the coarse bound
/// 1/(1−t), and (for finite p > 1, with α = p−1) records the γ remainder
/// against zero.
pub fn bound_comparison(t_grid: &[f64], p_grid: &[Exponent]) -> Result<BoundTable> {
    let mut rows = Vec::new();
    for &t in t_grid {
        if !(0.0 < t && t < 1.0) {
            return Err(Error::domain("t", t, "(0, 1)"));
        }
        for &p in p_grid {
            let bound = upper_bound_ct(t, p)?;
            rows.push(BoundRow {
                t,
                p,
                lower: bound.value,
                upper: bound.coarse,
                formula_id: "refined-vs-coarse",
            });
            if let Exponent::Finite(pf) = p {
                if pf > 1.0 {
                    rows.push(BoundRow {
                        t,
                        p,
                        lower: gamma_remainder(t, pf - 1.0),
                        upper: 0.0,
                        formula_id: "gamma-negative",
                    });
                }
            }
        }
    }
    Ok(BoundTable { rows })
}

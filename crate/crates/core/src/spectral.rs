//! Spectra and eigenvectors of C_t and S_t at finite-section level,
//! power-boundedness and mean-ergodic iteration, compactness tail evidence,
//! and the power-bounded/mean-ergodic certificate.
//!
//! The finite sections of C_t are lower triangular with diagonal 1/(n+1),
//! so the section spectrum is read off the diagonal for every t. The
//! eigenvector for eigenvalue 1/(m+1) is built by the coefficient recursion
//! `(n−m)·x_n = t·n·x_{n−1}` seeded with x_m = 1, which is the series of
//! z^m (1−tz)^{−(m+1)}.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::analysis::{h2_opnorm_matrix, hardy_norm, Exponent};
use crate::error::{Error, Result};
use crate::operators::{apply_ct, apply_st, finite_section, OperatorKernel};
use crate::series::{geometric_kernel, TaylorSeries};

/// Trailing coefficients ignored when comparing a truncated image against a
/// truncated eigenvector.
pub const RESIDUAL_BUFFER: usize = 64;

/// Outcome of the three hypotheses behind the power-bounded / uniformly
/// mean ergodic conclusion: spectrum inside the closed disc, 1 the only
/// spectral point on the circle (next point at 1/2), and trivial
/// intersection of Ker(I−C_t) with Im(I−C_t).
#[derive(Copy, Clone, Debug, Serialize)]
pub struct Certificate {
    pub spectrum_in_disc: bool,
    pub one_on_circle: bool,
    pub ker_im_trivial: bool,
}

impl Certificate {
    pub fn all_hold(&self) -> bool {
        self.spectrum_in_disc && self.one_on_circle && self.ker_im_trivial
    }
}

/// Aggregated spectral evidence for one parameter value.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    /// Diagonal eigenvalues 1/(m+1) of the finite section.
    pub eigenvalues: Vec<f64>,
    /// Pairs (m, relative eigen-residual).
    pub eigen_residuals: Vec<(usize, f64)>,
    /// Pairs (n, ‖opⁿ‖ estimate in H²).
    pub power_norms: Vec<(usize, f64)>,
    /// Pairs (n, ‖T_[n]f − Pf‖).
    pub ergodic_errors: Vec<(usize, f64)>,
    pub certificate: Certificate,
    /// The diagonal accumulates at 0, the remaining spectral point.
    pub accumulates_at_zero: bool,
}

/// Eigenvector of C_t for eigenvalue 1/(m+1), truncated at `degree`:
/// x_n = 0 below m, x_m = 1, then (n−m)·x_n = t·n·x_{n−1}.
pub fn eigenvector(t: f64, m: usize, degree: usize) -> Result<TaylorSeries> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::domain("t", t, "[0, 1)"));
    }
    if m > degree {
        return Err(Error::domain("m", m as f64, "0..=degree"));
    }
    let mut coeffs = vec![Complex64::ZERO; degree + 1];
    coeffs[m] = Complex64::ONE;
    let mut x = 1.0f64;
    for (n, c) in coeffs.iter_mut().enumerate().skip(m + 1) {
        x = t * n as f64 * x / (n - m) as f64;
        *c = Complex64::new(x, 0.0);
    }
    TaylorSeries::new(coeffs)
}

/// Relative residual ‖C_t x − x/(m+1)‖_p / ‖x‖_p of the truncated
/// eigenvector, with the trailing buffer zeroed before measuring.
pub fn eigen_residual(t: f64, m: usize, p: Exponent, degree: usize) -> Result<f64> {
    let x = eigenvector(t, m, degree)?;
    let image = apply_ct(t, &x)?;
    let scale = 1.0 / (m as f64 + 1.0);
    let residual = image.sub(&x.scale(Complex64::new(scale, 0.0)));
    let kept = residual.truncate(degree.saturating_sub(RESIDUAL_BUFFER));
    let num = hardy_norm(&kept, p)?.value;
    let den = hardy_norm(&x, p)?.value;
    Ok(num / den)
}

/// The diagonal of the triangular finite section: [1, 1/2, …, 1/(N+1)].
/// Independent of t; accumulates at the remaining spectral point 0.
pub fn diagonal_spectrum(degree: usize) -> Vec<f64> {
    (0..=degree).map(|n| 1.0 / (n as f64 + 1.0)).collect()
}

/// Cesàro means T_[n] f = (1/n) Σ_{m=1..n} opᵐ f, accumulated incrementally.
pub fn cesaro_means(op: &OperatorKernel, f: &TaylorSeries, n: usize) -> Result<TaylorSeries> {
    if n == 0 {
        return Err(Error::domain("n", 0.0, "n >= 1"));
    }
    let mut iterate = op.apply(f)?;
    let mut sum = iterate.clone();
    for _ in 2..=n {
        iterate = op.apply(&iterate)?;
        sum = sum.add(&iterate);
    }
    Ok(sum.scale(Complex64::new(1.0 / n as f64, 0.0)))
}

/// ‖T_[n]f − Pf‖_p for the Cesàro means of C_t, where the mean ergodic
/// limit is the projection P f = f(0)·h_t.
pub fn ergodic_limit_error(t: f64, f: &TaylorSeries, n: usize, p: Exponent) -> Result<f64> {
    let means = cesaro_means(&OperatorKernel::CesaroT { t }, f, n)?;
    let limit = geometric_kernel(t, means.degree())?.scale(f.value_at_zero());
    Ok(hardy_norm(&means.sub(&limit), p)?.value)
}

/// H² norms of section powers for n = 1, 2, 4, …, nmax, the powers computed
/// by repeated squaring.
pub fn power_norms(op: &OperatorKernel, nmax: usize, degree: usize) -> Result<Vec<(usize, f64)>> {
    if nmax == 0 {
        return Err(Error::domain("nmax", 0.0, "nmax >= 1"));
    }
    let section = finite_section(op, degree)?;
    let mut out = Vec::new();
    let mut power = section.matrix().clone();
    let mut n = 1;
    loop {
        out.push((n, h2_opnorm_matrix(&power)?));
        if 2 * n > nmax {
            break;
        }
        power = power.matmul(&power);
        n *= 2;
    }
    Ok(out)
}

/// H² distance from the C_t section at degree `n_large` to its finite-rank
/// truncation at degree `n_small`: the norm of the section with the leading
/// block zeroed. Decreasing in `n_small`, which is the compactness evidence.
pub fn compact_tail(t: f64, n_small: usize, n_large: usize) -> Result<f64> {
    if n_small > n_large {
        return Err(Error::domain("n_small", n_small as f64, "0..=n_large"));
    }
    let section = finite_section(&OperatorKernel::CesaroT { t }, n_large)?;
    let mut tail = section.matrix().clone();
    for row in 0..=n_small {
        for col in 0..=n_small {
            tail.set(row, col, Complex64::ZERO);
        }
    }
    h2_opnorm_matrix(&tail)
}

/// Number of random probes used for the kernel/range triviality flag.
const CERTIFICATE_PROBES: usize = 100;

/// Checks the three hypotheses for C_t at finite-section level.
///
/// The kernel/range check uses that (C_t f)(0) = f(0) for every f, so each
/// element of Im(I−C_t) vanishes at 0, while the eigenvector h_t has
/// h_t(0) = 1: random probes confirm ((I−C_t)f)(0) = 0 exactly.
pub fn ergodic_certificate<R: Rng + ?Sized>(
    t: f64,
    p: Exponent,
    degree: usize,
    rng: &mut R,
) -> Result<Certificate> {
    p.validate()?;
    let diag = diagonal_spectrum(degree);
    let spectrum_in_disc = diag.iter().all(|&v| v > 0.0 && v <= 1.0);
    let one_on_circle = diag[0] == 1.0 && diag.iter().skip(1).all(|&v| v <= 0.5);

    let h = geometric_kernel(t, degree)?;
    let mut ker_im_trivial = h.value_at_zero() == Complex64::ONE;
    for _ in 0..CERTIFICATE_PROBES {
        let f = crate::series::random_polynomial(rng, degree.min(256));
        let image = apply_ct(t, &f)?;
        let at_zero = f.value_at_zero() - image.value_at_zero();
        if at_zero != Complex64::ZERO {
            ker_im_trivial = false;
            break;
        }
    }
    Ok(Certificate {
        spectrum_in_disc,
        one_on_circle,
        ker_im_trivial,
    })
}

/// Assembles the standard spectral evidence for one t: section eigenvalues,
/// H² eigen-residuals for m ≤ 10, C_t power norms up to n = 256 (section
/// degree capped at 512 to keep the dense powers cheap), and the
/// mean-ergodic errors of f = 𝟙 at n = 16, 32, …, 256.
pub fn spectral_report<R: Rng + ?Sized>(
    t: f64,
    p: Exponent,
    degree: usize,
    rng: &mut R,
) -> Result<SpectralReport> {
    let eigenvalues = diagonal_spectrum(degree);
    let mut eigen_residuals = Vec::new();
    for m in 0..=10.min(degree) {
        eigen_residuals.push((m, eigen_residual(t, m, Exponent::Finite(2.0), degree)?));
    }
    let norms = power_norms(&OperatorKernel::CesaroT { t }, 256, degree.min(512))?;
    let one = TaylorSeries::one(degree);
    let mut ergodic_errors = Vec::new();
    for n in [16usize, 32, 64, 128, 256] {
        ergodic_errors.push((n, ergodic_limit_error(t, &one, n, p)?));
    }
    let certificate = ergodic_certificate(t, p, degree, rng)?;
    Ok(SpectralReport {
        eigenvalues,
        eigen_residuals,
        power_norms: norms,
        ergodic_errors,
        certificate,
        accumulates_at_zero: true,
    })
}

/// Verifies the orbit-containment relation for S_t: every iterate
/// S_tⁿ f (n ≥ 1) lies in the hyperplane {g : g(0) = 0}.
pub fn orbit_containment_st(t: f64, f: &TaylorSeries, nmax: usize) -> Result<bool> {
    if nmax == 0 {
        return Err(Error::domain("nmax", 0.0, "nmax >= 1"));
    }
    let mut iterate = f.clone();
    for _ in 1..=nmax {
        iterate = apply_st(t, &iterate)?;
        if iterate.value_at_zero() != Complex64::ZERO {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{max_coeff_distance, random_polynomial};
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Independent closed form: x_{m+j} = t^j · C(m+j, m), via the
    /// multiplicative binomial recurrence.
    fn eigenvector_closed_form(t: f64, m: usize, degree: usize) -> TaylorSeries {
        let mut coeffs = vec![Complex64::ZERO; degree + 1];
        let mut binom = 1.0f64;
        let mut tpow = 1.0f64;
        for j in 0..=degree - m {
            if j > 0 {
                binom *= (m + j) as f64 / j as f64;
                tpow *= t;
            }
            coeffs[m + j] = Complex64::new(tpow * binom, 0.0);
        }
        TaylorSeries::new(coeffs).unwrap()
    }

    #[test]
    fn eigenvector_special_cases() {
        let t = 0.5;
        let x0 = eigenvector(t, 0, 64).unwrap();
        assert!(max_coeff_distance(&x0, &geometric_kernel(t, 64).unwrap()) <= 1e-13);

        let x5 = eigenvector(0.0, 5, 16).unwrap();
        assert!(max_coeff_distance(&x5, &TaylorSeries::monomial(5, 16).unwrap()) == 0.0);

        let x1 = eigenvector(0.5, 1, 8).unwrap();
        assert_relative_eq!(x1.coeff(2).re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(x1.coeff(3).re, 0.75, epsilon = 1e-15);

        assert!(eigenvector(0.5, 9, 8).is_err());
        assert!(eigenvector(1.0, 0, 8).is_err());
    }

    #[test]
    fn eigenvector_recursion_matches_binomial_form() {
        for &t in &[0.1, 0.5, 0.9] {
            for m in [0usize, 1, 5, 20] {
                let rec = eigenvector(t, m, 512).unwrap();
                let closed = eigenvector_closed_form(t, m, 512);
                for n in 0..=512 {
                    let a = rec.coeff(n).re;
                    let b = closed.coeff(n).re;
                    assert!(
                        (a - b).abs() <= 1e-12 * (1.0 + b.abs()),
                        "t={t} m={m} n={n}: {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn eigen_residuals_small() {
        assert!(eigen_residual(0.7, 0, Exponent::Finite(2.0), 1024).unwrap() <= 1e-13);
        // diagonal case: exact
        assert_eq!(
            eigen_residual(0.0, 5, Exponent::Finite(2.0), 256).unwrap(),
            0.0
        );
        for m in 0..=10 {
            let r = eigen_residual(0.5, m, Exponent::Finite(2.0), 2048).unwrap();
            assert!(r <= 1e-10, "m={m}: {r}");
        }
    }

    #[test]
    fn diagonal_spectrum_values() {
        let d = diagonal_spectrum(2);
        assert_eq!(d, vec![1.0, 0.5, 1.0 / 3.0]);
        let d = diagonal_spectrum(999);
        assert!(d.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(d[0], 1.0);
        assert!(d.last().unwrap() < &1.1e-3);
    }

    #[test]
    fn cesaro_means_basics() {
        let t = 0.6;
        let op = OperatorKernel::CesaroT { t };
        let h = geometric_kernel(t, 128).unwrap();
        for n in [1usize, 7, 32] {
            let m = cesaro_means(&op, &h, n).unwrap();
            assert!(max_coeff_distance(&m, &h) <= 1e-12);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let f = random_polynomial(&mut rng, 32);
        let m1 = cesaro_means(&op, &f, 1).unwrap();
        assert!(max_coeff_distance(&m1, &op.apply(&f).unwrap()) == 0.0);
        assert!(cesaro_means(&op, &f, 0).is_err());
    }

    #[test]
    fn cesaro_means_telescoping_relation() {
        // opⁿ f / n = T_[n] f − ((n−1)/n) T_[n−1] f
        let t = 0.4;
        let op = OperatorKernel::CesaroT { t };
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        let f = random_polynomial(&mut rng, 64);
        for n in [2usize, 5, 16] {
            let mut iterate = f.clone();
            for _ in 0..n {
                iterate = op.apply(&iterate).unwrap();
            }
            let lhs = iterate.scale(Complex64::new(1.0 / n as f64, 0.0));
            let tn = cesaro_means(&op, &f, n).unwrap();
            let tn1 = cesaro_means(&op, &f, n - 1).unwrap();
            let rhs = tn.sub(&tn1.scale(Complex64::new((n as f64 - 1.0) / n as f64, 0.0)));
            assert!(max_coeff_distance(&lhs, &rhs) <= 1e-13);
        }
    }

    #[test]
    fn ergodic_error_vanishes_on_fixed_point() {
        let t = 0.5;
        let h = geometric_kernel(t, 256).unwrap();
        for n in [1usize, 8, 64] {
            assert!(ergodic_limit_error(t, &h, n, Exponent::Finite(2.0)).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn ergodic_error_decays_for_zero_mean_functions() {
        // P f = 0 when f(0) = 0, so the error is ‖T_[n] f‖ and must decay
        let t = 0.5;
        let z = TaylorSeries::monomial(1, 256).unwrap();
        let mut last = f64::INFINITY;
        for n in [8usize, 16, 32, 64, 128] {
            let e = ergodic_limit_error(t, &z, n, Exponent::Finite(2.0)).unwrap();
            assert!(e <= last);
            last = e;
        }
        assert!(last < 0.05);
    }

    #[test]
    fn ergodic_error_halves_for_constant_input() {
        let t = 0.5;
        let one = TaylorSeries::one(512);
        let mut errors = Vec::new();
        for n in [8usize, 16, 32, 64, 128, 256] {
            errors.push(ergodic_limit_error(t, &one, n, Exponent::Finite(2.0)).unwrap());
        }
        for pair in errors.windows(2) {
            assert!(pair[1] <= pair[0], "{errors:?}");
        }
    }

    #[test]
    fn power_norms_of_diagonal_and_nilpotent() {
        let c0 = power_norms(&OperatorKernel::HardyC0, 64, 128).unwrap();
        for (n, v) in &c0 {
            assert!((v - 1.0).abs() <= 1e-9, "n={n}");
        }

        let st = power_norms(&OperatorKernel::St { t: 0.5 }, 64, 128).unwrap();
        let at = |n: usize| st.iter().find(|(k, _)| *k == n).unwrap().1;
        let r8 = at(8).powf(1.0 / 8.0);
        let r64 = at(64).powf(1.0 / 64.0);
        assert!(r64 < r8, "roots must decay: {r8} vs {r64}");
        assert!(r64 < 0.5);
    }

    #[test]
    fn st_section_is_nilpotent() {
        let n = 64;
        let section = finite_section(&OperatorKernel::St { t: 0.5 }, n).unwrap();
        let dead = section.matrix().power(n + 2);
        assert!(dead.is_zero());
        let alive = section.matrix().power(n);
        assert!(!alive.is_zero());
    }

    #[test]
    fn st_has_no_point_spectrum_at_section_level() {
        // strict triangularity: the only candidate eigenvalue is 0, and the
        // recursion is injective: f is recoverable from S_t f
        let t = 0.5;
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let f = random_polynomial(&mut rng, 64);
        let y = apply_st(t, &f).unwrap();
        assert!(y.coeffs().iter().any(|c| *c != Complex64::ZERO));

        // back-substitution: f̂(n−1) = n·y_n − t·(n−1)·y_{n−1}
        let mut recovered = Vec::new();
        for n in 1..=y.degree() {
            let val = y.coeff(n) * n as f64 - y.coeff(n - 1) * (t * (n as f64 - 1.0));
            recovered.push(val);
        }
        let rec = TaylorSeries::new(recovered).unwrap();
        assert!(max_coeff_distance(&rec, &f) <= 1e-13);
    }

    #[test]
    fn compact_tail_decreases() {
        // diagonal case has the exact tail 1/(n_small + 2)
        let v = compact_tail(0.0, 10, 200).unwrap();
        assert_relative_eq!(v, 1.0 / 12.0, epsilon = 1e-9);

        let t = 0.5;
        let mut last = f64::INFINITY;
        for n_small in [8usize, 16, 32, 64] {
            let v = compact_tail(t, n_small, 256).unwrap();
            assert!(v < last, "tail must strictly decrease");
            last = v;
        }
        assert_eq!(compact_tail(0.5, 64, 64).unwrap(), 0.0);
        assert!(compact_tail(0.5, 65, 64).is_err());
    }

    #[test]
    fn certificate_holds_across_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for &t in &[0.0, 0.3, 0.7, 0.95] {
            let cert = ergodic_certificate(t, Exponent::Finite(2.0), 512, &mut rng).unwrap();
            assert!(cert.all_hold(), "t={t}: {cert:?}");
        }
    }

    #[test]
    fn report_assembles_consistent_evidence() {
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        let report = spectral_report(0.5, Exponent::Finite(2.0), 256, &mut rng).unwrap();
        assert_eq!(report.eigenvalues[0], 1.0);
        assert!(report.eigenvalues.windows(2).all(|w| w[0] > w[1]));
        assert!(report
            .eigen_residuals
            .iter()
            .all(|(_, r)| *r >= 0.0 && *r <= 1e-10));
        assert!(report.power_norms.iter().all(|(_, v)| v.is_finite()));
        assert!(report.ergodic_errors.windows(2).all(|w| w[1].1 <= w[0].1));
        assert!(report.certificate.all_hold());
        assert!(report.accumulates_at_zero);
    }

    #[test]
    fn orbit_stays_in_hyperplane() {
        let t = 0.7;
        let one = TaylorSeries::one(64);
        assert!(orbit_containment_st(t, &one, 32).unwrap());
        let h = geometric_kernel(t, 64).unwrap();
        assert!(orbit_containment_st(t, &h, 32).unwrap());
        assert!(orbit_containment_st(t, &h, 0).is_err());
    }
}

//! Numerical laboratory for generalized Cesàro operators C_t, t ∈ [0, 1),
//! acting on truncated Taylor series.
//!
//! The crate provides:
//!
//! * [`series`]: the truncated-series data model, Cauchy products, and the
//!   geometric/logarithmic kernels h_t and g_t;
//! * [`operators`]: C_t, the Hardy operator C_0, the classical average C_1,
//!   shifts, the multiplication operator M_t, the Volterra-type operators
//!   T_g and V_g, S_t = S∘C_t, and their dense finite sections;
//! * [`analysis`]: circle-quadrature integral means M_p(r, f), Hardy and
//!   sup norms, closed-form operator-norm bounds and sandwich estimates;
//! * [`spectral`]: eigenvectors and section spectra, power norms, Cesàro
//!   means, mean-ergodic errors, compactness tails, and the
//!   power-bounded/mean-ergodic certificate.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything is safe to use from parallel sweeps.

pub mod analysis;
pub mod error;
pub mod linalg;
pub mod operators;
pub mod series;
pub mod spectral;

pub use analysis::{
    bound_comparison, default_nodes, gamma_remainder, h2_opnorm, hardy_norm, jensen_check, mp_mean,
    opnorm_lower, sup_norm, upper_bound_ct, BoundRow, BoundTable, CtNormBound, Exponent,
    NormReport,
};
pub use error::{Error, Result};
pub use linalg::DenseMatrix;
pub use num_complex::Complex64;
pub use operators::{
    apply_backshift, apply_c0, apply_c1, apply_ct, apply_mult_ht, apply_shift, apply_st, apply_tg,
    apply_vg, finite_section, FiniteSection, OperatorKernel,
};
pub use series::{
    cauchy_product, cauchy_product_with_cap, derivative, geometric_kernel, log_kernel,
    max_coeff_distance, random_polynomial, TaylorSeries, DEFAULT_DEGREE, DEFAULT_DEGREE_CAP,
};
pub use spectral::{
    cesaro_means, compact_tail, diagonal_spectrum, eigen_residual, eigenvector,
    ergodic_certificate, ergodic_limit_error, orbit_containment_st, power_norms, spectral_report,
    Certificate, SpectralReport,
};

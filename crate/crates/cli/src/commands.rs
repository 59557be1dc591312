//! The report-producing commands: each walks the (t, p) grid, records every
//! measured quantity as a row, and asserts the sandwich/trend inequalities.

use cesaro_core::{
    diagonal_spectrum, eigen_residual, ergodic_certificate, ergodic_limit_error, gamma_remainder,
    opnorm_lower, power_norms, random_polynomial, upper_bound_ct, Exponent, OperatorKernel,
    TaylorSeries,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::{SystemTime, UNIX_EPOCH};

use crate::report::{ConfigEcho, Report, ReportRow};
use crate::CliError;

pub struct Settings {
    pub t_values: Vec<f64>,
    pub p_values: Vec<Exponent>,
    pub degree: usize,
    pub seed: u64,
}

/// Dense matrix powers get expensive; power studies are capped here no
/// matter how large the requested degree is.
const POWER_STUDY_DEGREE_CAP: usize = 2048;
/// Size of the random test set behind the operator-norm lower bounds.
const TESTSET_SIZE: usize = 10;
const EIGEN_RESIDUAL_MAX_INDEX: usize = 10;
const EIGEN_RESIDUAL_TOL: f64 = 1e-10;
const SANDWICH_TOL: f64 = 1e-9;
const ERGODIC_STEPS: [usize; 5] = [16, 32, 64, 128, 256];

/// Operator-norm sandwich rows plus the refined-vs-coarse comparison.
pub fn cmd_norms(settings: &Settings, config: ConfigEcho) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let testset: Vec<TaylorSeries> = (0..TESTSET_SIZE)
        .map(|_| random_polynomial(&mut rng, settings.degree))
        .collect();
    let mut rows = Vec::new();
    for &t in &settings.t_values {
        for &p in &settings.p_values {
            let bound = upper_bound_ct(t, p)?;
            let lower_est = opnorm_lower(t, p, &testset)?;
            rows.push(
                ReportRow::new("opnorm-lower", lower_est)
                    .with_t(t)
                    .with_p(p)
                    .with_tol(SANDWICH_TOL)
                    .above(1.0)
                    .below(bound.value),
            );
            if t > 0.0 {
                rows.push(
                    ReportRow::new("bound-refined-lt-coarse", bound.value)
                        .with_t(t)
                        .with_p(p)
                        .below(bound.coarse),
                );
                if let Exponent::Finite(pf) = p {
                    if pf > 1.0 {
                        rows.push(
                            ReportRow::new("gamma-negative", gamma_remainder(t, pf - 1.0))
                                .with_t(t)
                                .with_p(p)
                                .below(0.0),
                        );
                    }
                }
            }
        }
    }
    Ok(Report::new(config, rows))
}

/// Eigenvalues, eigen-residuals, S_t norm-root decay and the certificate.
pub fn cmd_spectrum(settings: &Settings, config: ConfigEcho) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    let mut rows = Vec::new();

    for (m, lambda) in diagonal_spectrum(settings.degree.min(15))
        .iter()
        .enumerate()
    {
        rows.push(ReportRow::new("eigenvalue", *lambda).with_index(m));
    }

    let p = settings
        .p_values
        .first()
        .copied()
        .unwrap_or(Exponent::Finite(2.0));
    let st_degree = settings.degree.min(POWER_STUDY_DEGREE_CAP);
    for &t in &settings.t_values {
        for m in 0..=EIGEN_RESIDUAL_MAX_INDEX.min(settings.degree) {
            let r = eigen_residual(t, m, Exponent::Finite(2.0), settings.degree)?;
            rows.push(
                ReportRow::new("eigen-residual", r)
                    .with_t(t)
                    .with_index(m)
                    .below(EIGEN_RESIDUAL_TOL),
            );
        }

        let cert = ergodic_certificate(t, p, settings.degree, &mut rng)?;
        let flags = [
            ("certificate-spectrum-in-disc", cert.spectrum_in_disc),
            ("certificate-one-on-circle", cert.one_on_circle),
            ("certificate-ker-im-trivial", cert.ker_im_trivial),
        ];
        for (name, ok) in flags {
            let value = if ok { 1.0 } else { 0.0 };
            rows.push(ReportRow::new(name, value).with_t(t).flag(ok));
        }

        let st = power_norms(&OperatorKernel::St { t }, 64, st_degree)?;
        let root = |n: usize| {
            st.iter()
                .find(|(k, _)| *k == n)
                .map(|(_, v)| v.powf(1.0 / n as f64))
                .expect("power present")
        };
        for (n, v) in &st {
            rows.push(
                ReportRow::new("st-norm-root", v.powf(1.0 / *n as f64))
                    .with_t(t)
                    .with_index(*n),
            );
        }
        rows.push(
            ReportRow::new("st-root-decay", root(64))
                .with_t(t)
                .with_index(64)
                .below(root(8)),
        );
        rows.push(
            ReportRow::new("st-root-small", root(64))
                .with_t(t)
                .with_index(64)
                .below(0.5),
        );
    }
    Ok(Report::new(config, rows))
}

/// Power-norm tables for C_t and S_t plus the mean-ergodic error decay.
pub fn cmd_ergodic(settings: &Settings, config: ConfigEcho) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let power_degree = settings.degree.min(POWER_STUDY_DEGREE_CAP);
    for &t in &settings.t_values {
        let ct = power_norms(&OperatorKernel::CesaroT { t }, 256, power_degree)?;
        for (n, v) in &ct {
            rows.push(ReportRow::new("ct-power-norm", *v).with_t(t).with_index(*n));
        }
        let max_all = ct.iter().map(|(_, v)| *v).fold(0.0, f64::max);
        let max_small = ct
            .iter()
            .filter(|(n, _)| *n <= 32)
            .map(|(_, v)| *v)
            .fold(0.0, f64::max);
        rows.push(
            ReportRow::new("ct-power-stabilization", max_all)
                .with_t(t)
                .below(1.05 * max_small),
        );

        let st = power_norms(&OperatorKernel::St { t }, 64, power_degree)?;
        for (n, v) in &st {
            rows.push(ReportRow::new("st-power-norm", *v).with_t(t).with_index(*n));
        }
        let at = |n: usize| st.iter().find(|(k, _)| *k == n).map(|(_, v)| *v).unwrap();
        rows.push(
            ReportRow::new("st-power-decay", at(64))
                .with_t(t)
                .with_index(64)
                .below(at(8)),
        );

        let one = TaylorSeries::one(settings.degree);
        let mut errors = Vec::new();
        for &n in &ERGODIC_STEPS {
            let e = ergodic_limit_error(t, &one, n, Exponent::Finite(2.0))?;
            rows.push(ReportRow::new("ergodic-error", e).with_t(t).with_index(n));
            errors.push((n, e));
        }
        for pair in errors.windows(2) {
            let e_prev = pair[0].1;
            let (n_next, e_next) = pair[1];
            rows.push(
                ReportRow::new("ergodic-decay", e_next)
                    .with_t(t)
                    .with_index(n_next)
                    .with_tol(1e-12)
                    .below(e_prev),
            );
        }
    }
    Ok(Report::new(config, rows))
}

#[derive(Serialize)]
pub struct ApplyResult {
    pub kernel: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    pub truncated: bool,
    pub coeffs: Vec<[f64; 2]>,
}

#[derive(Serialize)]
pub struct ApplyReport {
    pub version: &'static str,
    pub generated_unix: u64,
    pub config: ConfigEcho,
    pub results: Vec<ApplyResult>,
}

impl ApplyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kernel,t,n,re,im\n");
        for r in &self.results {
            let t = r.t.map(|t| t.to_string()).unwrap_or_default();
            for (n, c) in r.coeffs.iter().enumerate() {
                out.push_str(&format!("{},{},{},{},{}\n", r.kernel, t, n, c[0], c[1]));
            }
        }
        out
    }
}

fn to_pairs(f: &TaylorSeries) -> Vec<[f64; 2]> {
    f.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

/// Applies one kernel kind to the input series, once per t for the
/// t-parameterized kinds.
pub fn cmd_apply(
    settings: &Settings,
    config: ConfigEcho,
    input: &TaylorSeries,
    kernel: crate::KernelArg,
    symbol: Option<&TaylorSeries>,
) -> Result<ApplyReport, CliError> {
    use crate::KernelArg;

    let f = input.truncate(input.degree().max(settings.degree));
    let mut results = Vec::new();
    let run = |op: OperatorKernel,
               t: Option<f64>,
               results: &mut Vec<ApplyResult>|
     -> Result<(), CliError> {
        let image = op.apply(&f)?;
        results.push(ApplyResult {
            kernel: op.name(),
            t,
            truncated: image.truncated(),
            coeffs: to_pairs(&image),
        });
        Ok(())
    };

    match kernel {
        KernelArg::Cesaro => {
            for &t in &settings.t_values {
                run(OperatorKernel::CesaroT { t }, Some(t), &mut results)?;
            }
        }
        KernelArg::Mult => {
            for &t in &settings.t_values {
                run(OperatorKernel::MultHt { t }, Some(t), &mut results)?;
            }
        }
        KernelArg::St => {
            for &t in &settings.t_values {
                run(OperatorKernel::St { t }, Some(t), &mut results)?;
            }
        }
        KernelArg::C0 => run(OperatorKernel::HardyC0, None, &mut results)?,
        KernelArg::C1 => run(OperatorKernel::CesaroC1, None, &mut results)?,
        KernelArg::Shift => run(OperatorKernel::FwdShift, None, &mut results)?,
        KernelArg::Backshift => run(OperatorKernel::BackShift, None, &mut results)?,
        KernelArg::Tg | KernelArg::Vg => {
            let g = symbol
                .ok_or_else(|| CliError::Usage("--g-file is required for tg/vg".into()))?
                .clone();
            let op = if matches!(kernel, KernelArg::Tg) {
                OperatorKernel::VolterraTg { g }
            } else {
                OperatorKernel::VolterraVg { g }
            };
            run(op, None, &mut results)?;
        }
    }

    Ok(ApplyReport {
        version: env!("CARGO_PKG_VERSION"),
        generated_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        config,
        results,
    })
}

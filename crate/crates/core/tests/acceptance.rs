//! Acceptance suite: one test per quantitative claim the library is built
//! to verify, each at its stated tolerance. Run with
//! `cargo test -p cesaro-core --test acceptance`; every test prints a
//! [PASS] line with the measured values once its assertions hold.

use cesaro_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Exact disc-algebra norm: ‖C_t‖ = −log(1−t)/t, attained at 𝟙, and no
/// test function beats it.
#[test]
fn criterion_01_exact_disc_algebra_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (t, degree) in [(0.25, 4096), (0.5, 4096), (0.75, 8192), (0.9, 20_000)] {
        let target = -(1.0f64 - t).ln() / t;
        let attained = sup_norm(&apply_ct(t, &TaylorSeries::one(degree)).unwrap())
            .unwrap()
            .value;
        let rel = (attained - target).abs() / target;
        assert!(rel <= 1e-6, "t={t}: attained {attained} vs {target}");

        let testset: Vec<TaylorSeries> = (0..50)
            .map(|_| {
                let f = random_polynomial(&mut rng, 64);
                let norm = sup_norm(&f).unwrap().value;
                f.scale(real(1.0 / norm))
            })
            .collect();
        let lower = opnorm_lower(t, Exponent::Inf, &testset).unwrap();
        assert!(
            lower <= target + 1e-9,
            "t={t}: lower bound {lower} exceeds exact norm {target}"
        );
        println!(
            "[PASS] criterion 1 (t={t}): sup norm {attained:.9} = -log(1-t)/t, lower {lower:.9}"
        );
    }
}

/// The Hardy operator is a contraction of norm exactly 1 on each H^p.
#[test]
fn criterion_02_hardy_operator_norm_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let ps = [
        Exponent::Finite(1.0),
        Exponent::Finite(2.0),
        Exponent::Finite(4.0),
    ];
    for _ in 0..100 {
        let f = random_polynomial(&mut rng, 96);
        for &p in &ps {
            let before = hardy_norm(&f, p).unwrap().value;
            let after = hardy_norm(&apply_c0(&f), p).unwrap().value;
            assert!(after <= before + 1e-10, "p={p}: {after} > {before}");
        }
    }
    for &p in &ps {
        let one = TaylorSeries::one(64);
        let image_norm = hardy_norm(&apply_c0(&one), p).unwrap().value;
        let norm = hardy_norm(&one, p).unwrap().value;
        assert!((image_norm - norm).abs() <= 1e-12);
        assert!((norm - 1.0).abs() <= 1e-12);
    }
    println!(
        "[PASS] criterion 2: C_0 contracts 100 random polynomials on p in {{1,2,4}}, equality at 1"
    );
}

/// H² sandwich for the finite section at N = 2000.
#[test]
fn criterion_03_h2_sandwich() {
    for t in [0.3, 0.5, 0.7] {
        let section = finite_section(&OperatorKernel::CesaroT { t }, 2000).unwrap();
        let value = h2_opnorm(&section).unwrap();
        let upper = (1.0 - t).powf(-0.5);
        assert!(value >= 1.0 - 1e-8, "t={t}: {value} below 1");
        assert!(value <= upper + 1e-8, "t={t}: {value} above {upper}");
        println!("[PASS] criterion 3 (t={t}): h2 opnorm {value:.9} in [1, {upper:.9}]");
    }
}

/// The refined H^p bounds beat 1/(1−t) on the whole grid, and the γ
/// remainder is strictly negative for α = p−1 > 0 (zero at the boundary).
#[test]
fn criterion_04_bound_comparison() {
    let t_grid: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
    let p_grid = [
        Exponent::Finite(1.0),
        Exponent::Finite(1.5),
        Exponent::Finite(2.0),
        Exponent::Finite(3.0),
        Exponent::Finite(4.0),
    ];
    let table = bound_comparison(&t_grid, &p_grid).unwrap();
    for row in &table.rows {
        match row.formula_id {
            "refined-vs-coarse" => assert!(
                row.lower < row.upper,
                "refined bound not strictly better at t={} p={}",
                row.t,
                row.p
            ),
            "gamma-negative" => assert!(
                row.lower < 0.0,
                "gamma not negative at t={} p={}",
                row.t,
                row.p
            ),
            other => panic!("unexpected row tag {other}"),
        }
    }
    // boundary case is exactly zero
    for &p in &p_grid[1..] {
        if let Exponent::Finite(pf) = p {
            assert_eq!(gamma_remainder(0.0, pf - 1.0), 0.0);
        }
    }
    println!(
        "[PASS] criterion 4: {} comparison rows strict on 9x5 grid, gamma(0) = 0 exact",
        table.rows.len()
    );
}

/// Independent closed form for the eigenvector coefficients:
/// x_{m+j} = t^j · C(m+j, m).
fn eigenvector_binomial_oracle(t: f64, m: usize, degree: usize) -> Vec<f64> {
    let mut coeffs = vec![0.0; degree + 1];
    let mut binom = 1.0f64;
    let mut tpow = 1.0f64;
    for j in 0..=degree - m {
        if j > 0 {
            binom *= (m + j) as f64 / j as f64;
            tpow *= t;
        }
        coeffs[m + j] = tpow * binom;
    }
    coeffs
}

/// Section spectrum {1/(m+1)} and eigenvector quality.
#[test]
fn criterion_05_spectrum_and_eigenvectors() {
    let diag = diagonal_spectrum(512);
    for (m, &lambda) in diag.iter().enumerate() {
        assert_eq!(lambda, 1.0 / (m as f64 + 1.0));
    }

    for &t in &[0.0, 0.5, 0.9] {
        for m in 0..=10 {
            let r = eigen_residual(t, m, Exponent::Finite(2.0), 4096).unwrap();
            assert!(r <= 1e-10, "t={t} m={m}: residual {r}");
        }
    }

    for &t in &[0.1, 0.5, 0.9] {
        for m in [0usize, 1, 2, 5, 10, 20] {
            let rec = eigenvector(t, m, 512).unwrap();
            let oracle = eigenvector_binomial_oracle(t, m, 512);
            for (n, &expected) in oracle.iter().enumerate() {
                let got = rec.coeff(n).re;
                assert!(
                    (got - expected).abs() <= 1e-12 * (1.0 + expected.abs()),
                    "t={t} m={m} n={n}"
                );
            }
        }
    }
    println!("[PASS] criterion 5: diagonal exact, residuals <= 1e-10 (m <= 10), recursion = closed form to 1e-12");
}

/// Quasinilpotence of S_t: norm roots collapse and the section power N+2
/// is exactly the zero matrix.
#[test]
fn criterion_06_st_spectrum_trivial() {
    let t = 0.5;
    let degree = 1024;
    let norms = power_norms(&OperatorKernel::St { t }, 64, degree).unwrap();
    let norm_at = |n: usize| norms.iter().find(|(k, _)| *k == n).unwrap().1;
    let root8 = norm_at(8).powf(1.0 / 8.0);
    let root64 = norm_at(64).powf(1.0 / 64.0);
    assert!(root64 < 0.5, "root at 64: {root64}");
    assert!(root64 < root8, "{root64} !< {root8}");

    let section = finite_section(&OperatorKernel::St { t }, degree).unwrap();
    assert!(section.matrix().power(degree + 2).is_zero());
    println!("[PASS] criterion 6: norm roots {root8:.6} -> {root64:.6}, section^(N+2) = 0 exactly");
}

/// Brute-force mean-ergodic oracle: materialize the iterates, average them,
/// and measure the distance to f(0)·h_t coefficient-wise (Parseval).
fn ergodic_error_bruteforce(t: f64, f: &TaylorSeries, n: usize) -> f64 {
    let op = OperatorKernel::CesaroT { t };
    let mut iterates = Vec::with_capacity(n);
    let mut g = f.clone();
    for _ in 0..n {
        g = op.apply(&g).unwrap();
        iterates.push(g.clone());
    }
    let degree = f.degree();
    let limit = geometric_kernel(t, degree)
        .unwrap()
        .scale(f.value_at_zero());
    let mut sum_sq = 0.0;
    for k in 0..=degree {
        let mean: Complex64 = iterates.iter().map(|it| it.coeff(k)).sum::<Complex64>() / n as f64;
        sum_sq += (mean - limit.coeff(k)).norm_sqr();
    }
    sum_sq.sqrt()
}

/// Power-boundedness of C_t and decay of the mean-ergodic error.
#[test]
fn criterion_07_power_bounded_mean_ergodic() {
    for t in [0.0, 0.5] {
        let norms = power_norms(&OperatorKernel::CesaroT { t }, 256, 512).unwrap();
        let max_all = norms.iter().map(|(_, v)| *v).fold(0.0, f64::max);
        let max_small = norms
            .iter()
            .filter(|(n, _)| *n <= 32)
            .map(|(_, v)| *v)
            .fold(0.0, f64::max);
        assert!(max_all.is_finite());
        assert!(
            max_all <= 1.05 * max_small,
            "t={t}: {max_all} vs 1.05 * {max_small}"
        );
        if t == 0.0 {
            for (n, v) in &norms {
                assert!((v - 1.0).abs() <= 1e-9, "‖C_0^{n}‖ = {v}");
            }
        }
    }

    let t = 0.5;
    let one = TaylorSeries::one(1024);
    let mut last = f64::INFINITY;
    let mut final_error = f64::NAN;
    for n in [16usize, 32, 64, 128, 256] {
        let e = ergodic_limit_error(t, &one, n, Exponent::Finite(2.0)).unwrap();
        let brute = ergodic_error_bruteforce(t, &one, n);
        assert!(
            (e - brute).abs() <= 1e-12 * (1.0 + brute),
            "n={n}: quadrature {e} vs brute force {brute}"
        );
        assert!(e < last, "error not decreasing at n={n}");
        last = e;
        final_error = e;
    }
    assert!(final_error < 0.02, "error at n=256: {final_error}");
    println!(
        "[PASS] criterion 7: powers stabilize, ergodic error {final_error:.6} < 0.02 at n=256"
    );
}

/// All three certificate flags hold with the spectral gap delta = 1/2.
#[test]
fn criterion_08_ergodic_certificate() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for &t in &[0.0, 0.3, 0.7, 0.95] {
        let cert = ergodic_certificate(t, Exponent::Finite(2.0), 512, &mut rng).unwrap();
        assert!(cert.spectrum_in_disc, "t={t}");
        assert!(cert.one_on_circle, "t={t}");
        assert!(cert.ker_im_trivial, "t={t}");
    }
    println!("[PASS] criterion 8: certificate flags all true for t in {{0, 0.3, 0.7, 0.95}}");
}

/// C_t, V_{g_t} and C_0∘M_t are the same transform, coefficient-wise.
#[test]
fn criterion_09_three_way_agreement() {
    let degree = 512;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let f = random_polynomial(&mut rng, degree);
        for &t in &[0.3, 0.7, 0.95] {
            let via_ct = apply_ct(t, &f).unwrap();
            let g = log_kernel(t, degree + 1).unwrap();
            let via_vg = apply_vg(&g, &f).truncate(degree);
            let via_factorization = apply_c0(&apply_mult_ht(t, &f).unwrap());
            worst = worst
                .max(max_coeff_distance(&via_ct, &via_vg))
                .max(max_coeff_distance(&via_ct, &via_factorization));
        }
    }
    assert!(worst <= 1e-12, "max discrepancy {worst}");
    println!("[PASS] criterion 9: three-way agreement within {worst:.3e} <= 1e-12");
}

/// C_1 𝟙 escapes H^∞: its circle maxima grow without bound as r → 1.
#[test]
fn criterion_10_c1_divergence() {
    let image = apply_c1(&TaylorSeries::one(1 << 16));
    let nodes = default_nodes(image.degree());
    let mut last = -f64::INFINITY;
    let mut crossed = None;
    for j in 0..=16 {
        let r = 1.0 - 0.5f64.powi(j);
        let value = mp_mean(&image, r, Exponent::Inf, nodes).unwrap().value;
        assert!(value > last, "not increasing at j={j}");
        if value > 5.0 && crossed.is_none() {
            crossed = Some((j, value));
        }
        last = value;
    }
    let (j, value) = crossed.expect("M_inf(r_j, C_1 1) never exceeded 5");
    println!(
        "[PASS] criterion 10: M_inf crosses 5 at j={j} (value {value:.4}), increasing through j=16"
    );
}

/// Compactness evidence: the sup norms of C_t zⁿ obey the 1/((n+1)(1−t))
/// bound and decrease in n.
#[test]
fn criterion_11_condition_star_evidence() {
    for &t in &[0.3, 0.7] {
        let mut last = f64::INFINITY;
        for n in [1usize, 4, 16, 64, 256] {
            let zn = TaylorSeries::monomial(n, n + 8192).unwrap();
            let value = sup_norm(&apply_ct(t, &zn).unwrap()).unwrap().value;
            let bound = 1.0 / ((n as f64 + 1.0) * (1.0 - t));
            assert!(value <= bound, "t={t} n={n}: {value} > {bound}");
            assert!(value < last, "t={t} n={n}: not decreasing");
            last = value;
        }
    }
    println!("[PASS] criterion 11: sup norms of C_t z^n below 1/((n+1)(1-t)) and decreasing");
}
